#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "hsg/operators.hpp"
#include "oracles.hpp"

using hsg::CayleyDirection;
using hsg::Complex;
using hsg::FunctionSpace;
using hsg::HerglotzTriplet;
using hsg::Measure;
using hsg::Verdict;

namespace {

HerglotzTriplet inverse(double m) { return {0.0, 0.0, Measure::atom(0.0, m)}; }
HerglotzTriplet two_atom() { return {0.0, 0.0, Measure::atom(-1.0, 0.5) + Measure::atom(1.0, 0.5)}; }
HerglotzTriplet vertical() { return {0.0, 0.0, Measure::cauchy(0.0, 1.0)}; }

hsg::Orbit orbit_from_i(const HerglotzTriplet& t, double horizon) {
    return hsg::integrate_orbit(t, hsg::kI, hsg::Schedule::geometric(horizon));
}

hsg::LimitEstimate tail_of(const hsg::DiscOrbit& disc, double (*f)(const hsg::DiscSample&)) {
    std::vector<double> ts;
    std::vector<Complex> vs;
    for (const auto& s : disc.samples) {
        if (s.t < 1.0) continue;
        ts.push_back(s.t);
        vs.emplace_back(f(s), 0.0);
    }
    hsg::TailOptions opts;
    opts.rel_tol = 1e-3;
    return hsg::estimate_tail_limit(ts, vs, opts);
}

}  // namespace

TEST(Cayley, Examples) {
    const Complex one{1.0, 0.0};
    EXPECT_LE(std::abs(hsg::cayley(one, CayleyDirection::to_half_plane, 0.0) - hsg::kI), 1e-15);
    EXPECT_LE(std::abs(hsg::cayley(one, CayleyDirection::to_disc, hsg::kI)), 1e-15);
    const double r5 = std::sqrt(5.0);
    EXPECT_LE(std::abs(hsg::cayley(one, CayleyDirection::to_disc, {0.0, r5}) - (r5 - 1.0) / (r5 + 1.0)), 1e-15);
}

TEST(Cayley, RejectsBoundaryPoints) {
    const Complex one{1.0, 0.0};
    EXPECT_THROW(hsg::cayley(one, CayleyDirection::to_half_plane, one), hsg::DomainError);
    EXPECT_THROW(hsg::cayley(one, CayleyDirection::to_half_plane, Complex{0.0, 1.5}), hsg::DomainError);
    EXPECT_THROW(hsg::cayley(one, CayleyDirection::to_disc, Complex{2.0, 0.0}), hsg::DomainError);
    EXPECT_THROW(hsg::cayley(Complex{2.0, 0.0}, CayleyDirection::to_disc, hsg::kI), hsg::DomainError);
}

TEST(Cayley, RoundTripProperty) {
    std::mt19937_64 rng(9090);
    std::uniform_real_distribution<double> angle(-3.14, 3.14);
    std::uniform_real_distribution<double> radius(0.0, 0.99);
    for (int k = 0; k < 500; ++k) {
        const Complex tau = std::polar(1.0, angle(rng));
        const Complex z = std::polar(radius(rng), angle(rng));
        const Complex back = hsg::cayley(tau, CayleyDirection::to_disc, hsg::cayley(tau, CayleyDirection::to_half_plane, z));
        EXPECT_LE(std::abs(back - z), 1e-13) << z;
        const Complex w = oracle::random_upper(rng, 5.0, 0.1, 5.0);
        const Complex again = hsg::cayley(tau, CayleyDirection::to_half_plane, hsg::cayley(tau, CayleyDirection::to_disc, w));
        EXPECT_LE(std::abs(again - w), 1e-13 * std::abs(w)) << w;
    }
}

TEST(ConjugateOrbit, IdentitySampleAndFormulas) {
    const auto orbit = orbit_from_i(inverse(0.5), 1e4);
    const auto disc = hsg::conjugate_orbit(orbit);
    ASSERT_EQ(disc.samples.size(), orbit.samples.size());
    EXPECT_LE(std::abs(disc.samples.front().psi), 1e-15);
    EXPECT_LE(std::abs(disc.z0), 1e-15);
    for (const auto& s : disc.samples) {
        EXPECT_NEAR(s.one_minus_abs, 1.0 - std::abs(s.psi), 1e-12);
        EXPECT_NEAR(s.distance_to_tau, std::abs(s.psi - 1.0), 1e-12);
    }
}

TEST(ProductCheck, TendsToTwo) {
    for (const auto& t : {inverse(0.5), inverse(2.0), two_atom(), vertical(), HerglotzTriplet{0.0, 1.0, Measure{}}}) {
        const auto pc = hsg::product_check(hsg::conjugate_orbit(orbit_from_i(t, 1e8)));
        ASSERT_TRUE(pc.limit.converged) << hsg::to_string(pc.limit.status) << " " << pc.series.back().second;
        EXPECT_NEAR(pc.limit.value.real(), 2.0, 1e-3);
    }
}

TEST(NormBounds, Examples) {
    for (double p : {1.0, 2.0, 7.5}) {
        const auto h = hsg::hardy_bounds(0.0, p);
        EXPECT_DOUBLE_EQ(h.lower, 1.0);
        EXPECT_DOUBLE_EQ(h.upper, 1.0);
    }
    const auto h = hsg::hardy_bounds(0.5, 1.0);
    EXPECT_NEAR(h.lower, 4.0 / 3.0, 1e-15);
    EXPECT_NEAR(h.upper, 3.0, 1e-15);
    const auto b = hsg::bergman_bounds(0.5, 2.0);
    EXPECT_NEAR(b.lower, 4.0 / 3.0, 1e-15);
    EXPECT_NEAR(b.upper, 3.0, 1e-15);
    EXPECT_THROW(hsg::hardy_bounds(1.0, 2.0), hsg::DomainError);
    EXPECT_THROW(hsg::bergman_bounds(0.5, 0.5), hsg::DomainError);
}

TEST(NormBounds, OrderingProperty) {
    for (int i = 0; i < 100; ++i) {
        const double r = i / 100.0;
        for (double p : {1.0, 1.5, 2.0, 4.0, 10.0}) {
            const auto h = hsg::hardy_bounds(r, p);
            const auto b = hsg::bergman_bounds(r, p);
            EXPECT_LE(h.lower, h.upper * (1.0 + 1e-15));
            EXPECT_LE(b.lower, b.upper * (1.0 + 1e-15));
            EXPECT_GE(h.lower, 1.0);
        }
    }
}

TEST(NormGrowth, ExtremalInverseIsBounded) {
    const auto disc = hsg::conjugate_orbit(orbit_from_i(inverse(0.5), 1e6));
    for (double p : {1.0, 2.0, 4.0}) {
        const auto hardy = hsg::norm_growth_check(disc, p, FunctionSpace::hardy);
        EXPECT_EQ(hardy.bounded, Verdict::yes);
        if (p == 2.0) {
            EXPECT_GE(hardy.min_ratio, 0.1);
            EXPECT_LE(hardy.max_ratio, 10.0);
        }
        EXPECT_EQ(hsg::norm_growth_check(disc, p, FunctionSpace::bergman).bounded, Verdict::yes);
    }
}

TEST(NormGrowth, ControlGrows) {
    const auto disc = hsg::conjugate_orbit(orbit_from_i(vertical(), 1e6));
    const auto hardy = hsg::norm_growth_check(disc, 2.0, FunctionSpace::hardy);
    EXPECT_EQ(hardy.bounded, Verdict::no);
    EXPECT_GT(hardy.max_ratio, 100.0);
}

TEST(NormGrowth, ShortOrbitUndeterminedAndStartChecked) {
    const auto disc = hsg::conjugate_orbit(orbit_from_i(inverse(0.5), 100.0));
    EXPECT_EQ(hsg::norm_growth_check(disc, 1.0, FunctionSpace::hardy).bounded, Verdict::undetermined);
    const auto shifted = hsg::conjugate_orbit(hsg::integrate_orbit(inverse(0.5), {1.0, 1.0}, hsg::Schedule::geometric(10.0)));
    EXPECT_THROW(hsg::norm_growth_check(shifted, 1.0, FunctionSpace::hardy), hsg::DomainError);
    EXPECT_THROW(hsg::norm_growth_check(disc, 0.5, FunctionSpace::hardy), hsg::DomainError);
}

TEST(NormGrowth, RotationInvariance) {
    const auto orbit = orbit_from_i(two_atom(), 1e6);
    const auto a = hsg::conjugate_orbit(orbit, {1.0, 0.0});
    const auto b = hsg::conjugate_orbit(orbit, std::polar(1.0, 2.0));
    const auto na = hsg::norm_growth_check(a, 2.0, FunctionSpace::hardy);
    const auto nb = hsg::norm_growth_check(b, 2.0, FunctionSpace::hardy);
    EXPECT_EQ(na.bounded, nb.bounded);
    EXPECT_NEAR(na.min_ratio, nb.min_ratio, 1e-12 * na.min_ratio);
    EXPECT_NEAR(na.max_ratio, nb.max_ratio, 1e-12 * na.max_ratio);
    const auto pa = hsg::product_check(a);
    const auto pb = hsg::product_check(b);
    EXPECT_NEAR(pa.limit.value.real(), pb.limit.value.real(), 1e-12);
}

TEST(DiscRate, ConvergesExactlyWhenExtremal) {
    const auto scaled_distance = [](const hsg::DiscSample& s) { return std::sqrt(s.t) * s.distance_to_tau; };
    const auto scaled_gap = [](const hsg::DiscSample& s) { return std::sqrt(s.t) * s.one_minus_abs; };
    const auto angle = [](const hsg::DiscSample& s) { return s.one_minus_abs / s.distance_to_tau; };
    for (const auto& t : {inverse(0.5), inverse(1.0), inverse(2.0), two_atom()}) {
        const auto disc = hsg::conjugate_orbit(orbit_from_i(t, 1e8));
        EXPECT_TRUE(tail_of(disc, +scaled_distance).converged);
        EXPECT_TRUE(tail_of(disc, +scaled_gap).converged);
        const auto ratio = tail_of(disc, +angle);
        ASSERT_TRUE(ratio.converged);
        EXPECT_NEAR(ratio.value.real(), 1.0, 1e-3);
    }
    const auto control = hsg::conjugate_orbit(orbit_from_i(vertical(), 1e8));
    EXPECT_FALSE(tail_of(control, +scaled_distance).converged);
    EXPECT_FALSE(tail_of(control, +scaled_gap).converged);
}
