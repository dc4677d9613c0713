#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "hsg/generator.hpp"
#include "oracles.hpp"

using hsg::Complex;
using hsg::HerglotzTriplet;
using hsg::Measure;
using hsg::Verdict;

namespace {

HerglotzTriplet inverse(double m) { return {0.0, 0.0, Measure::atom(0.0, m)}; }
HerglotzTriplet two_atom() { return {0.0, 0.0, Measure::atom(-1.0, 0.5) + Measure::atom(1.0, 0.5)}; }
HerglotzTriplet cauchy_unit() { return {0.0, 0.0, Measure::cauchy(0.0, 1.0)}; }

std::vector<HerglotzTriplet> test_triplets() {
    return {
        inverse(0.5),
        inverse(2.0),
        two_atom(),
        cauchy_unit(),
        {0.0, 1.0, Measure{}},
        {1.5, 0.0, Measure{}},
        {0.0, 1.0, Measure::gaussian(1.0, 0.5)},
        {0.0, 0.3, Measure::gaussian(0.0, 1.0)},
        {0.0, 0.5, Measure::uniform(-1.0, 1.0) + Measure::atom(2.0, 0.25)},
        {0.7, -0.2, Measure::cauchy(1.0, 0.5, 2.0) + Measure::atom(-1.0, 0.3)},
    };
}

}  // namespace

TEST(Generator, EvaluationExamples) {
    const Complex z{0.3, 1.7};
    EXPECT_LE(std::abs(hsg::eval_G(inverse(0.8), z) - oracle::G_inverse(0.8, z)), 1e-15);
    EXPECT_LE(std::abs(hsg::eval_G({2.5, 0.0, Measure{}}, z) - 2.5 * z), 1e-15);
    EXPECT_LE(std::abs(hsg::eval_G(two_atom(), z) - oracle::G_two_atom(z)), 1e-14);
}

TEST(Generator, CauchyDensityMatchesPoissonIntegral) {
    std::mt19937_64 rng(4242);
    for (int k = 0; k < 25; ++k) {
        const Complex z = oracle::random_upper(rng, 20.0, 0.05, 100.0);
        const HerglotzTriplet t{0.0, 0.4, Measure::cauchy(1.5, 0.3, 2.0)};
        const Complex ref = oracle::G_cauchy(0.4, 1.5, 0.3, 2.0, z);
        EXPECT_LE(std::abs(hsg::eval_G(t, z) - ref), 1e-9 * (1.0 + std::abs(ref))) << z;
    }
    EXPECT_LE(std::abs(hsg::eval_G(cauchy_unit(), {3.0, 0.01}) - hsg::kI), 1e-9);
    // Brute force in theta with s = c + gamma tan(theta).
    const HerglotzTriplet t{0.0, 0.0, Measure::cauchy(1.5, 0.3, 2.0)};
    for (Complex z : {Complex{0.5, 1.0}, Complex{-2.0, 3.0}}) {
        const Complex ref = oracle::simpson(
            [z](double th) {
                const double s = 1.5 + 0.3 * std::tan(th);
                return 2.0 / std::numbers::pi * (1.0 + s * z) / (s - z);
            },
            -0.5 * std::numbers::pi + 1e-9, 0.5 * std::numbers::pi - 1e-9, 400000);
        EXPECT_LE(std::abs(hsg::eval_G(t, z) - ref), 1e-7 * std::abs(ref)) << z;
    }
}

TEST(Generator, GaussianMatchesBruteForceAtModerateAndLargeArguments) {
    const HerglotzTriplet t{0.0, 0.2, Measure::gaussian(0.5, 0.7)};
    for (Complex z : {Complex{0.2, 0.9}, Complex{-3.0, 2.0}}) {
        const Complex ref = 0.2 + oracle::gaussian_integral([z](double s) { return (1.0 + s * z) / (s - z); }, 0.5, 0.7, 1.0);
        EXPECT_LE(std::abs(hsg::eval_G(t, z) - ref), 1e-10 * std::abs(ref));
    }
    // Far out the generator is beta - m1 - int(1 + s^2) dmu / z + O(1/z^2).
    const Complex z{0.0, 1e7};
    const double m1 = 0.5, m2 = 0.25 + 0.49;
    const Complex expected = 0.2 - m1 - (1.0 + m2) / z;
    EXPECT_LE(std::abs(hsg::eval_G(t, z) - expected), 1e-12);
}

TEST(Generator, RejectsBoundaryPoints) {
    EXPECT_THROW(hsg::eval_G(inverse(1.0), {1.0, 0.0}), hsg::DomainError);
    EXPECT_THROW(hsg::eval_G(inverse(1.0), {1.0, -1.0}), hsg::DomainError);
    EXPECT_THROW((HerglotzTriplet{-1.0, 0.0, Measure{}}), hsg::DomainError);
    EXPECT_THROW((HerglotzTriplet{0.0, INFINITY, Measure{}}), hsg::DomainError);
}

TEST(Generator, TrivialFlag) {
    EXPECT_TRUE(HerglotzTriplet{}.is_trivial());
    EXPECT_FALSE(inverse(1.0).is_trivial());
    EXPECT_EQ(hsg::classify_algebraic(HerglotzTriplet{}).kind, hsg::Kind::trivial);
}

TEST(Generator, ImaginaryPartNonNegativeProperty) {
    std::mt19937_64 rng(99);
    for (const HerglotzTriplet& t : test_triplets()) {
        for (int k = 0; k < 40; ++k) {
            const Complex z = oracle::random_upper(rng, 10.0, 1e-3, 1e3);
            EXPECT_GE(hsg::eval_G(t, z).imag(), -1e-12) << z;
        }
    }
}

TEST(Generator, CoefficientsCheckExamples) {
    const auto lin = hsg::coefficients_check({1.3, 0.0, Measure{}});
    EXPECT_NEAR(lin.alpha_est, 1.3, 1e-12);
    EXPECT_NEAR(lin.beta_est, 0.0, 1e-15);
    const auto pair = hsg::coefficients_check(two_atom());
    EXPECT_EQ(pair.alpha_est, 0.0);
    EXPECT_NEAR(pair.beta_est, 0.0, 1e-14);
    const auto shifted = hsg::coefficients_check({0.0, 0.6, Measure::atom(0.0, 2.0)});
    EXPECT_NEAR(shifted.beta_est, 0.6, 1e-14);
    EXPECT_TRUE(shifted.alpha_matches && shifted.beta_matches);
}

TEST(Generator, CoefficientsCheckReproducesStoredFieldsProperty) {
    for (const HerglotzTriplet& t : test_triplets()) {
        const auto c = hsg::coefficients_check(t);
        EXPECT_TRUE(c.alpha_matches) << "alpha " << t.alpha << " est " << c.alpha_est;
        EXPECT_TRUE(c.beta_matches) << "beta " << t.beta << " est " << c.beta_est;
    }
}

TEST(Generator, ClassifyAlgebraicExamples) {
    const auto hyp = hsg::classify_algebraic({2.0, 0.0, Measure{}});
    EXPECT_EQ(hyp.kind, hsg::Kind::hyperbolic);
    EXPECT_EQ(hyp.spectral_value, 2.0);
    const auto shift = hsg::classify_algebraic({0.0, 1.0, Measure{}});
    EXPECT_EQ(shift.kind, hsg::Kind::parabolic);
    EXPECT_EQ(shift.step, hsg::Step::positive);
    const auto inv = hsg::classify_algebraic(inverse(1.0));
    EXPECT_EQ(inv.kind, hsg::Kind::parabolic);
    EXPECT_EQ(inv.step, hsg::Step::undetermined);
    EXPECT_EQ(inv.extremal.moments, Verdict::yes);
}

TEST(Generator, MomentCriterionExamples) {
    const auto inv = hsg::extremal_zero_hs_test(inverse(0.7));
    EXPECT_EQ(inv.verdict, Verdict::yes);
    ASSERT_TRUE(inv.predicted_limit);
    EXPECT_NEAR(std::abs(*inv.predicted_limit - hsg::kI * std::sqrt(1.4)), 0.0, 1e-15);
    const auto pair = hsg::extremal_zero_hs_test(two_atom());
    EXPECT_EQ(pair.verdict, Verdict::yes);
    EXPECT_NEAR(std::abs(*pair.predicted_limit - 2.0 * hsg::kI), 0.0, 1e-15);
    EXPECT_EQ(hsg::extremal_zero_hs_test(cauchy_unit()).verdict, Verdict::no);
    EXPECT_EQ(hsg::extremal_zero_hs_test({0.0, 0.1, Measure::atom(0.0, 1.0)}).verdict, Verdict::no);
    EXPECT_THROW(hsg::extremal_zero_hs_test({1.0, 0.0, Measure{}}), hsg::DomainError);
}

TEST(Generator, ZgLimitExamples) {
    const auto pair = hsg::zG_angular_limit(two_atom());
    EXPECT_EQ(pair.verdict, Verdict::yes);
    EXPECT_NEAR(std::abs(pair.limit.value + 2.0), 0.0, 1e-6);
    EXPECT_NEAR(*pair.rate, 2.0, 1e-6);
    const auto inv = hsg::zG_angular_limit(inverse(0.9));
    EXPECT_NEAR(std::abs(inv.limit.value + 0.9), 0.0, 1e-12);
    EXPECT_NEAR(*inv.rate, std::sqrt(1.8), 1e-12);
    const auto constant = hsg::zG_angular_limit({0.0, 1.0, Measure{}});
    EXPECT_EQ(constant.verdict, Verdict::no);
    EXPECT_TRUE(constant.limit.infinite);
    EXPECT_EQ(hsg::zG_angular_limit(cauchy_unit()).verdict, Verdict::no);
    EXPECT_THROW(hsg::zG_angular_limit({1.0, 0.0, Measure{}}), hsg::DomainError);
}

TEST(Generator, ZgAndMomentCriteriaAgreeProperty) {
    for (const HerglotzTriplet& t : test_triplets()) {
        if (!t.is_parabolic()) continue;
        const auto m = hsg::extremal_zero_hs_test(t);
        const auto z = hsg::zG_angular_limit(t);
        if (m.verdict == Verdict::undetermined || z.verdict == Verdict::undetermined) continue;
        EXPECT_EQ(m.verdict, z.verdict);
        if (m.verdict == Verdict::yes) {
            // -2 lim zG = 2 int (1 + s^2) dmu
            const double expected = 2.0 * (hsg::mass(t.mu) + hsg::moment(t.mu, 2).value);
            EXPECT_NEAR(-2.0 * z.limit.value.real(), expected, 1e-6 * expected);
        }
    }
}

TEST(Generator, VerdictConsistencyHelper) {
    hsg::ExtremalVerdicts v{Verdict::yes, Verdict::undetermined, Verdict::yes};
    EXPECT_TRUE(v.consistent());
    v.zg_limit = Verdict::no;
    EXPECT_FALSE(v.consistent());
}
