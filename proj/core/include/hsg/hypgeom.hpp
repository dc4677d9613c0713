#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hsg/flow.hpp"
#include "hsg/limit.hpp"

namespace hsg {

/// Hyperbolic distance in the upper half-plane,
///   d(z, w) = 1/2 log((1 + rho) / (1 - rho)),  rho = |z - w| / |z - conj(w)|.
/// Small distances use atanh(rho); large ones the form
///   log((|z - conj w| + |z - w|) / (2 sqrt(Im z Im w)))
/// which avoids the cancellation in 1 - rho.
double dist_H(Complex z, Complex w);

/// Chart w -> i sqrt(w) from the slit plane C \ (-inf, 0] onto the upper half-plane.
Complex slit_to_half_plane(Complex w);

/// Hyperbolic distance in the slit plane C \ (-inf, 0].
double dist_K(Complex a, Complex b);

enum class SpeedMode {
    zero_hs,     ///< subtract (1/4) log t
    phs,         ///< subtract log t
    hyperbolic   ///< subtract lambda t / 2
};

std::string_view to_string(SpeedMode m);

struct SpeedNormalizer {
    SpeedMode mode = SpeedMode::zero_hs;
    double lambda = 0.0;

    double operator()(double t) const;
};

struct SpeedDeviationSeries {
    SpeedNormalizer normalizer;
    /// (t, d_H(i, phi_t(z)) - normalizer(t)) for t >= 1.
    std::vector<std::pair<double, double>> points;
};

enum class SpeedVerdict { converges, diverges, undetermined };
std::string_view to_string(SpeedVerdict v);

struct SpeedOptions {
    int window = 8;
    double abs_tol = 1e-3;
    double min_horizon = 1e4;
    /// Diverging tails keep at least this fraction of their early increments.
    double divergence_increment_ratio = 0.5;
};

struct SpeedResult {
    SpeedDeviationSeries series;
    LimitEstimate limit;
    SpeedVerdict verdict = SpeedVerdict::undetermined;
    /// (1/2) log(lim |phi_t| / sqrt t) estimated from the same orbit (zero_hs mode).
    std::optional<double> rate_prediction;
};

SpeedResult total_speed_deviation(const Orbit& orbit, SpeedNormalizer normalizer,
                                  const SpeedOptions& opts = {});

} // namespace hsg
