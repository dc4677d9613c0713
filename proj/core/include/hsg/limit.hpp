#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "hsg/types.hpp"

namespace hsg {

enum class LimitStatus {
    converged,    ///< Cauchy test passed on the tail
    diverged,     ///< modulus grows without bound (power-law growth on the tail)
    vanishing,    ///< modulus decays to zero (power-law decay on the tail)
    undetermined
};

std::string_view to_string(LimitStatus s);

/// Numerically estimated limit of a sequence.
///
/// `converged` implies `error_indicator <= tolerance`. A diverging sequence is
/// reported with `infinite = true`; a vanishing one keeps `value = 0` but is not
/// flagged converged, since relative Cauchy tests cannot certify a zero limit.
struct LimitEstimate {
    Complex value{};
    bool infinite = false;
    bool converged = false;
    LimitStatus status = LimitStatus::undetermined;
    double error_indicator = 0.0;
    double tolerance = 0.0;
    std::vector<std::pair<double, Complex>> tail;
};

/// Geometric grid y0, y0*ratio, ... not exceeding y_max.
struct RayGrid {
    double y0 = 1.0;
    double y_max = 1e8;
    double ratio = 2.0;

    std::vector<double> points() const;
};

struct RayLimitOptions {
    double rel_tol = 1e-6;
    int window = 4;
    bool richardson = true;
    /// Exponent threshold separating power-law growth/decay from a plateau.
    double power_threshold = 0.1;
};

/// Limit as y -> infinity of samples v(y) taken on a geometric grid.
/// One Richardson step (error ~ 1/y) is applied before the Cauchy test, which
/// requires the last `window` extrapolated values to agree pairwise to rel_tol.
LimitEstimate estimate_ray_limit(std::span<const double> y, std::span<const Complex> values,
                                 const RayLimitOptions& opts = {});

LimitEstimate estimate_ray_limit(const std::function<Complex(double)>& f, const RayGrid& grid,
                                 const RayLimitOptions& opts = {});

struct TailOptions {
    int window = 8;
    double rel_tol = 1e-3;
    double abs_tol = 0.0;
    /// Modulus above which a monotone increasing tail is declared divergent.
    double infinity_threshold = 1e3;
};

/// Limit of a time series from its last `window` samples (no extrapolation).
LimitEstimate estimate_tail_limit(std::span<const double> t, std::span<const Complex> values,
                                  const TailOptions& opts = {});

} // namespace hsg
