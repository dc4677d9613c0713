#pragma once

#include <utility>
#include <vector>

#include "hsg/flow.hpp"
#include "hsg/limit.hpp"

namespace hsg {

enum class CayleyDirection { to_half_plane, to_disc };

/// S(z) = i (tau + z) / (tau - z) from the disc onto the upper half-plane and its
/// inverse S^{-1}(w) = tau (w - i) / (w + i). |tau| must be 1.
Complex cayley(Complex tau, CayleyDirection direction, Complex point);

struct DiscSample {
    double t = 0.0;
    Complex psi{};
    double one_minus_abs = 0.0;     ///< 1 - |psi|, computed from the half-plane value
    double distance_to_tau = 0.0;   ///< |psi - tau|
    double half_plane_abs = 0.0;    ///< |phi_t(w)|
};

struct DiscOrbit {
    Complex tau{1.0, 0.0};
    Complex z0{};
    std::vector<DiscSample> samples;
};

/// psi_t = S^{-1} o phi_t o S sampled along an orbit in the half-plane.
DiscOrbit conjugate_orbit(const Orbit& orbit, Complex tau = {1.0, 0.0});

struct ProductCheck {
    std::vector<std::pair<double, double>> series;  ///< (t, |psi_t - tau| |phi_t|)
    LimitEstimate limit;
};

/// The product approaches 2 like 1/|phi_t|, i.e. like t^{-1/2} on extremal orbits, so
/// the Cauchy test looks at the last four geometric samples only.
ProductCheck product_check(const DiscOrbit& disc, int window = 4, double abs_tol = 1e-3);

struct NormEnvelope {
    double lower = 1.0;
    double upper = 1.0;
};

/// Bounds on ||C_g|| on H^p from r = |g(0)|.
NormEnvelope hardy_bounds(double r, double p);
/// Bounds on ||C_g|| on A^p from r = |g(0)|.
NormEnvelope bergman_bounds(double r, double p);

enum class FunctionSpace { hardy, bergman };
std::string_view to_string(FunctionSpace s);

struct NormGrowthRow {
    double t = 0.0;
    double one_minus_abs_psi = 0.0;
    double envelope_lower = 0.0;
    double envelope_upper = 0.0;
    double ratio_lower = 0.0;
    double ratio_upper = 0.0;
};

struct NormGrowthOptions {
    double t_min = 10.0;
    double t_max = 1e300;
    double bound = 20.0;    ///< verdict bounded iff ratios stay in [1/bound, bound]
    double min_horizon = 1e3;
};

struct NormGrowth {
    FunctionSpace space = FunctionSpace::hardy;
    double p = 1.0;
    std::vector<NormGrowthRow> rows;
    Verdict bounded = Verdict::undetermined;
    double min_ratio = 0.0;
    double max_ratio = 0.0;
};

/// envelope^p / sqrt(t) (Hardy) or envelope^p / t (Bergman) along psi_t(0).
/// The disc orbit must start at 0.
NormGrowth norm_growth_check(const DiscOrbit& disc, double p, FunctionSpace space,
                             const NormGrowthOptions& opts = {});

} // namespace hsg
