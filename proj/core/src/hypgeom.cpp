#include "hsg/hypgeom.hpp"

#include <cmath>

namespace hsg {

double dist_H(Complex z, Complex w) {
    require_upper_half_plane(z, "dist_H first argument");
    require_upper_half_plane(w, "dist_H second argument");
    const double far = std::abs(z - std::conj(w));
    const double near = std::abs(z - w);
    const double rho = near / far;
    if (rho < 0.5) return std::atanh(rho);
    // far^2 - near^2 = 4 Im z Im w exactly, so 1 - rho never has to be formed.
    return std::log((far + near) / (2.0 * std::sqrt(z.imag() * w.imag())));
}

Complex slit_to_half_plane(Complex w) {
    if (w.imag() == 0.0 && w.real() <= 0.0) throw DomainError("slit chart: point lies on (-inf, 0]");
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) throw DomainError("slit chart: non-finite point");
    return kI * std::sqrt(w);
}

double dist_K(Complex a, Complex b) { return dist_H(slit_to_half_plane(a), slit_to_half_plane(b)); }

std::string_view to_string(SpeedMode m) {
    switch (m) {
    case SpeedMode::zero_hs: return "zero_hs";
    case SpeedMode::phs: return "phs";
    case SpeedMode::hyperbolic: return "hyperbolic";
    }
    return "unknown";
}

double SpeedNormalizer::operator()(double t) const {
    switch (mode) {
    case SpeedMode::zero_hs: return 0.25 * std::log(t);
    case SpeedMode::phs: return std::log(t);
    case SpeedMode::hyperbolic: return 0.5 * lambda * t;
    }
    return 0.0;
}

std::string_view to_string(SpeedVerdict v) {
    switch (v) {
    case SpeedVerdict::converges: return "converges";
    case SpeedVerdict::diverges: return "diverges";
    case SpeedVerdict::undetermined: return "undetermined";
    }
    return "undetermined";
}

SpeedResult total_speed_deviation(const Orbit& orbit, SpeedNormalizer normalizer, const SpeedOptions& opts) {
    if (normalizer.mode == SpeedMode::hyperbolic && !(normalizer.lambda > 0.0)) {
        throw DomainError("total_speed_deviation: hyperbolic mode needs lambda > 0");
    }
    SpeedResult r;
    r.series.normalizer = normalizer;
    std::vector<double> ts;
    std::vector<Complex> devs;
    std::vector<Complex> scaled;
    for (const OrbitSample& s : orbit.samples) {
        if (s.t < 1.0) continue;
        const double d = dist_H(kI, s.value) - normalizer(s.t);
        r.series.points.emplace_back(s.t, d);
        ts.push_back(s.t);
        devs.emplace_back(d, 0.0);
        scaled.emplace_back(std::abs(s.value) / std::sqrt(s.t), 0.0);
    }

    TailOptions tail;
    tail.window = opts.window;
    tail.abs_tol = opts.abs_tol;
    tail.rel_tol = 0.0;
    r.limit = estimate_tail_limit(ts, devs, tail);

    if (normalizer.mode == SpeedMode::zero_hs) {
        TailOptions rate_tail;
        rate_tail.window = opts.window;
        const LimitEstimate rate = estimate_tail_limit(ts, scaled, rate_tail);
        if (rate.converged && rate.value.real() > 0.0) r.rate_prediction = 0.5 * std::log(rate.value.real());
    }

    if (orbit.horizon() < opts.min_horizon || devs.size() < static_cast<std::size_t>(opts.window)) return r;
    if (r.limit.converged) {
        r.verdict = SpeedVerdict::converges;
        return r;
    }
    // Divergence: the tail keeps increasing and its increments do not die out.
    const std::size_t n = devs.size();
    const std::size_t w = static_cast<std::size_t>(opts.window);
    bool increasing = true;
    for (std::size_t k = n - w + 1; k < n; ++k) increasing = increasing && devs[k].real() > devs[k - 1].real();
    // Increments per unit of log t, so an uneven final grid step does not matter.
    const auto rate_of_increase = [&](std::size_t k) {
        return (devs[k].real() - devs[k - 1].real()) / std::log(ts[k] / ts[k - 1]);
    };
    const double first_inc = rate_of_increase(n - w + 1);
    const double last_inc = rate_of_increase(n - 1);
    if (increasing && last_inc >= opts.divergence_increment_ratio * first_inc) {
        r.verdict = SpeedVerdict::diverges;
        r.limit.infinite = true;
        r.limit.status = LimitStatus::diverged;
    }
    return r;
}

} // namespace hsg
