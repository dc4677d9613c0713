#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "hsg/rates.hpp"
#include "oracles.hpp"

using hsg::Complex;
using hsg::HerglotzTriplet;
using hsg::Measure;
using hsg::Normalization;
using hsg::Verdict;

namespace {

HerglotzTriplet inverse(double m) { return {0.0, 0.0, Measure::atom(0.0, m)}; }
HerglotzTriplet two_atom() { return {0.0, 0.0, Measure::atom(-1.0, 0.5) + Measure::atom(1.0, 0.5)}; }
HerglotzTriplet vertical() { return {0.0, 0.0, Measure::cauchy(0.0, 1.0)}; }

hsg::Orbit long_orbit(const HerglotzTriplet& t, Complex z0 = hsg::kI, double horizon = 1e8) {
    return hsg::integrate_orbit(t, z0, hsg::Schedule::geometric(horizon));
}

const hsg::CriterionResult& criterion(const hsg::ValidationReport& r, const std::string& name) {
    for (const auto& c : r.criteria)
        if (c.name == name) return c;
    throw std::runtime_error("missing criterion " + name);
}

}  // namespace

TEST(RateNormalization, Values) {
    EXPECT_DOUBLE_EQ((hsg::RateNormalization{Normalization::sqrt_t})(4.0), 2.0);
    EXPECT_DOUBLE_EQ((hsg::RateNormalization{Normalization::linear_t})(4.0), 4.0);
    EXPECT_DOUBLE_EQ((hsg::RateNormalization{Normalization::exp_lambda, 0.5})(2.0), std::exp(1.0));
}

TEST(RateEstimate, ClosedFormInverseOrbit) {
    for (double m : {0.5, 1.0, 2.0}) {
        const auto orbit = hsg::closed_form_orbit({hsg::ClosedForm::inverse, m}, hsg::kI, hsg::Schedule::geometric(1e8));
        const auto r = hsg::rate_estimate(orbit, {Normalization::sqrt_t});
        ASSERT_TRUE(r.limit.converged) << m;
        const Complex expected = hsg::kI * std::sqrt(2.0 * m);
        EXPECT_LE(std::abs(r.limit.value - expected), 1e-3 * std::abs(expected));
    }
}

TEST(RateEstimate, ShortOrbitIsUndeterminedInSqrtMode) {
    const auto orbit = long_orbit(inverse(1.0), hsg::kI, 1e4);
    const auto r = hsg::rate_estimate(orbit, {Normalization::sqrt_t});
    EXPECT_FALSE(r.limit.converged);
    EXPECT_EQ(r.limit.status, hsg::LimitStatus::undetermined);
}

TEST(RateEstimate, ControlDivergesInSqrtMode) {
    const auto r = hsg::rate_estimate(long_orbit(vertical(), hsg::kI, 1e8), {Normalization::sqrt_t});
    EXPECT_FALSE(r.limit.converged);
    EXPECT_GT(r.tail_max, 100.0);
}

TEST(RateEstimate, ExpNormalizationNeedsPositiveLambda) {
    const auto orbit = long_orbit(inverse(1.0), hsg::kI, 10.0);
    EXPECT_THROW(hsg::rate_estimate(orbit, {Normalization::exp_lambda, 0.0}), hsg::DomainError);
}

TEST(RateEstimate, HyperbolicLimitIsFiniteAndNonzero) {
    // phi_t / e^{lambda t} tends to a nonzero point for linear generators.
    const HerglotzTriplet lin{1.0, 0.0, Measure{}};
    const auto orbit = hsg::integrate_orbit(lin, {1.0, 2.0}, hsg::Schedule::uniform(50.0, 200));
    const auto r = hsg::rate_estimate(orbit, {Normalization::exp_lambda, 1.0});
    ASSERT_TRUE(r.limit.converged);
    EXPECT_LE(std::abs(r.limit.value - Complex{1.0, 2.0}), 1e-6);
}

TEST(RateEstimate, LimitDoesNotDependOnStartPoint) {
    for (const auto& t : {inverse(1.0), two_atom()}) {
        const auto a = hsg::rate_estimate(long_orbit(t, hsg::kI), {Normalization::sqrt_t});
        const auto b = hsg::rate_estimate(long_orbit(t, {2.0, 0.5}), {Normalization::sqrt_t});
        ASSERT_TRUE(a.limit.converged && b.limit.converged);
        EXPECT_LE(std::abs(a.limit.value - b.limit.value), 1e-3 * std::abs(a.limit.value));
    }
}

TEST(RateEstimate, PositiveStepLimitIsReal) {
    // For G = c the orbit moves parallel to the real axis: phi_t / t -> c.
    const HerglotzTriplet shift{0.0, 1.5, Measure{}};
    const auto r = hsg::rate_estimate(long_orbit(shift, hsg::kI, 1e6), {Normalization::linear_t});
    ASSERT_TRUE(r.limit.converged);
    EXPECT_NEAR(r.limit.value.real(), 1.5, 1e-4);
    EXPECT_NEAR(r.limit.value.imag(), 0.0, 1e-4);
}

TEST(Slope, Examples) {
    for (const auto& t : {inverse(1.0), two_atom()}) {
        for (Complex z0 : {hsg::kI, Complex{3.0, 0.2}}) {
            const auto s = hsg::slope(long_orbit(t, z0));
            ASSERT_TRUE(s.limit.converged) << z0;
            EXPECT_NEAR(s.limit.value.real(), std::numbers::pi / 2.0, 1e-3);
            EXPECT_TRUE(s.orthogonal);
        }
    }
    const auto flat = hsg::slope(long_orbit({0.0, 1.0, Measure{}}, hsg::kI, 1e6));
    ASSERT_TRUE(flat.limit.converged);
    EXPECT_NEAR(flat.limit.value.real(), 0.0, 1e-3);
    EXPECT_FALSE(flat.orthogonal);
}

TEST(CrossValidate, InverseTwoAgreesOnAllCriteria) {
    const auto rep = hsg::cross_validate(inverse(2.0), long_orbit(inverse(2.0)));
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.consensus, Verdict::yes);
    ASSERT_EQ(rep.criteria.size(), 4u);
    for (const auto& c : rep.criteria) {
        EXPECT_EQ(c.verdict, Verdict::yes) << c.name;
        ASSERT_TRUE(c.constant) << c.name;
        EXPECT_LE(std::abs(*c.constant - 2.0 * hsg::kI), 1e-3 * 2.0) << c.name;
    }
}

TEST(CrossValidate, TwoAtom) {
    const auto rep = hsg::cross_validate(two_atom(), long_orbit(two_atom()));
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.consensus, Verdict::yes);
    ASSERT_TRUE(rep.measured_constant);
    EXPECT_LE(std::abs(*rep.measured_constant - 2.0 * hsg::kI), 2e-3);
}

TEST(CrossValidate, ControlIsNotExtremal) {
    const auto rep = hsg::cross_validate(vertical(), long_orbit(vertical()));
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.consensus, Verdict::no);
    for (const char* name : {"moments", "zg_limit", "sqrt_koenigs", "orbit_rate"})
        EXPECT_EQ(criterion(rep, name).verdict, Verdict::no) << name;
}

TEST(CrossValidate, RejectsHyperbolicAndTrivial) {
    const auto orbit = long_orbit(inverse(1.0), hsg::kI, 10.0);
    EXPECT_THROW(hsg::cross_validate({1.0, 0.0, Measure{}}, orbit), hsg::DomainError);
    EXPECT_THROW(hsg::cross_validate(HerglotzTriplet{}, orbit), hsg::DomainError);
}

TEST(CrossValidate, DetectsConstantMismatch) {
    // An orbit of m = 1 checked against the m = 2 triplet: verdicts agree, constants do not.
    const auto rep = hsg::cross_validate(inverse(2.0), long_orbit(inverse(1.0)));
    EXPECT_TRUE(rep.verdicts_agree);
    EXPECT_FALSE(rep.constants_agree);
    EXPECT_FALSE(rep.ok());
    EXPECT_FALSE(rep.diagnostics.empty());
}
