#include "hsg/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hsg {

namespace {

void require_unimodular(Complex tau) {
    if (!(std::abs(std::abs(tau) - 1.0) <= 1e-12)) throw DomainError("cayley: tau must have modulus 1");
}

// Envelope powers written in terms of delta = 1 - r so that r close to 1 keeps
// full relative accuracy.
double lower_power(double delta) { return 1.0 / (delta * (2.0 - delta)); }
double upper_power(double delta) { return (2.0 - delta) / delta; }

double checked_delta(double r, double p) {
    if (!(r >= 0.0) || !(r < 1.0)) throw DomainError("norm envelope: need 0 <= r < 1");
    if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("norm envelope: need p >= 1");
    return 1.0 - r;
}

} // namespace

Complex cayley(Complex tau, CayleyDirection direction, Complex point) {
    require_unimodular(tau);
    if (direction == CayleyDirection::to_half_plane) {
        if (!(std::abs(point) < 1.0)) throw DomainError("cayley: point must lie in the open unit disc");
        return kI * (tau + point) / (tau - point);
    }
    require_upper_half_plane(point, "cayley point");
    return tau * (point - kI) / (point + kI);
}

DiscOrbit conjugate_orbit(const Orbit& orbit, Complex tau) {
    require_unimodular(tau);
    DiscOrbit disc;
    disc.tau = tau;
    disc.z0 = cayley(tau, CayleyDirection::to_disc, orbit.z0);
    disc.samples.reserve(orbit.samples.size());
    for (const OrbitSample& s : orbit.samples) {
        const Complex w = s.value;
        const double denom = std::abs(w + kI);
        DiscSample d;
        d.t = s.t;
        d.psi = cayley(tau, CayleyDirection::to_disc, w);
        // 1 - |psi|^2 = 4 Im w / |w + i|^2 and |psi - tau| = 2 / |w + i|.
        const double one_minus_sq = 4.0 * w.imag() / (denom * denom);
        d.one_minus_abs = one_minus_sq / (1.0 + std::abs(d.psi));
        d.distance_to_tau = 2.0 / denom;
        d.half_plane_abs = std::abs(w);
        disc.samples.push_back(d);
    }
    return disc;
}

ProductCheck product_check(const DiscOrbit& disc, int window, double abs_tol) {
    ProductCheck pc;
    std::vector<double> ts;
    std::vector<Complex> vs;
    for (const DiscSample& s : disc.samples) {
        if (s.t < 1.0) continue;
        const double v = s.distance_to_tau * s.half_plane_abs;
        pc.series.emplace_back(s.t, v);
        ts.push_back(s.t);
        vs.emplace_back(v, 0.0);
    }
    TailOptions tail;
    tail.window = window;
    tail.rel_tol = 0.0;
    tail.abs_tol = abs_tol;
    pc.limit = estimate_tail_limit(ts, vs, tail);
    return pc;
}

NormEnvelope hardy_bounds(double r, double p) {
    const double delta = checked_delta(r, p);
    return {std::pow(lower_power(delta), 1.0 / p), std::pow(upper_power(delta), 1.0 / p)};
}

NormEnvelope bergman_bounds(double r, double p) {
    const double delta = checked_delta(r, p);
    return {std::pow(lower_power(delta), 2.0 / p), std::pow(upper_power(delta), 2.0 / p)};
}

std::string_view to_string(FunctionSpace s) {
    switch (s) {
    case FunctionSpace::hardy: return "hardy";
    case FunctionSpace::bergman: return "bergman";
    }
    return "unknown";
}

NormGrowth norm_growth_check(const DiscOrbit& disc, double p, FunctionSpace space, const NormGrowthOptions& opts) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("norm_growth_check: need p >= 1");
    if (disc.samples.empty() || std::abs(disc.samples.front().psi) > 1e-12) {
        throw DomainError("norm_growth_check: the disc orbit must start at 0 (half-plane orbit from i)");
    }
    NormGrowth ng;
    ng.space = space;
    ng.p = p;
    ng.min_ratio = std::numeric_limits<double>::infinity();
    ng.max_ratio = 0.0;
    const double exponent = space == FunctionSpace::hardy ? 1.0 / p : 2.0 / p;
    for (const DiscSample& s : disc.samples) {
        if (s.t < opts.t_min || s.t > opts.t_max) continue;
        const double delta = s.one_minus_abs;
        NormGrowthRow row;
        row.t = s.t;
        row.one_minus_abs_psi = delta;
        row.envelope_lower = std::pow(lower_power(delta), exponent);
        row.envelope_upper = std::pow(upper_power(delta), exponent);
        // envelope^p directly, avoiding the round trip through the 1/p power.
        const double scale = space == FunctionSpace::hardy ? std::sqrt(s.t) : s.t;
        const double k = space == FunctionSpace::hardy ? 1.0 : 2.0;
        row.ratio_lower = std::pow(lower_power(delta), k) / scale;
        row.ratio_upper = std::pow(upper_power(delta), k) / scale;
        ng.min_ratio = std::min({ng.min_ratio, row.ratio_lower, row.ratio_upper});
        ng.max_ratio = std::max({ng.max_ratio, row.ratio_lower, row.ratio_upper});
        ng.rows.push_back(row);
    }
    const double last_t = disc.samples.back().t;
    if (ng.rows.empty() || last_t < opts.min_horizon) return ng;
    const bool inside = ng.min_ratio >= 1.0 / opts.bound && ng.max_ratio <= opts.bound;
    ng.bounded = inside ? Verdict::yes : Verdict::no;
    return ng;
}

} // namespace hsg
