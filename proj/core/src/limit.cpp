#include "hsg/limit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hsg {

std::string_view to_string(LimitStatus s) {
    switch (s) {
    case LimitStatus::converged: return "converged";
    case LimitStatus::diverged: return "diverged";
    case LimitStatus::vanishing: return "vanishing";
    case LimitStatus::undetermined: return "undetermined";
    }
    return "undetermined";
}

std::vector<double> RayGrid::points() const {
    if (!(y0 > 0.0) || !(ratio > 1.0) || !(y_max >= y0)) {
        throw DomainError("RayGrid: need y0 > 0, ratio > 1 and y_max >= y0");
    }
    std::vector<double> ys;
    for (double y = y0; y <= y_max * (1.0 + 1e-12); y *= ratio) ys.push_back(y);
    return ys;
}

namespace {

double max_pairwise_spread(std::span<const Complex> v) {
    double spread = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) spread = std::max(spread, std::abs(v[i] - v[j]));
    return spread;
}

bool monotone_modulus(std::span<const Complex> v, bool increasing) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        const double a = std::abs(v[i - 1]);
        const double b = std::abs(v[i]);
        if (increasing ? !(b > a) : !(b < a)) return false;
    }
    return true;
}

} // namespace

LimitEstimate estimate_ray_limit(std::span<const double> y, std::span<const Complex> values,
                                 const RayLimitOptions& opts) {
    if (y.size() != values.size()) throw DomainError("estimate_ray_limit: size mismatch");
    LimitEstimate est;
    est.tolerance = opts.rel_tol;
    const std::size_t n = values.size();
    const std::size_t w = static_cast<std::size_t>(std::max(opts.window, 2));
    if (n < w + 1) {
        est.error_indicator = std::numeric_limits<double>::infinity();
        return est;
    }

    std::vector<Complex> extrapolated(n);
    extrapolated[0] = values[0];
    for (std::size_t k = 1; k < n; ++k) {
        if (opts.richardson) {
            const double q = y[k] / y[k - 1];
            extrapolated[k] = (q * values[k] - values[k - 1]) / (q - 1.0);
        } else {
            extrapolated[k] = values[k];
        }
    }

    const std::span<const Complex> tail_r(extrapolated.data() + n - w, w);
    const std::span<const Complex> tail_v(values.data() + n - w, w);
    for (std::size_t k = n - w; k < n; ++k) est.tail.emplace_back(y[k], values[k]);

    if (std::all_of(tail_v.begin(), tail_v.end(), [](Complex v) { return v == Complex{}; })) {
        est.converged = true;
        est.status = LimitStatus::converged;
        return est;
    }

    const double scale = std::abs(tail_r.back());
    const double spread = max_pairwise_spread(tail_r);
    est.value = tail_r.back();
    est.error_indicator = scale > 0.0 ? spread / scale : std::numeric_limits<double>::infinity();
    if (scale > 0.0 && spread <= opts.rel_tol * scale) {
        est.converged = true;
        est.status = LimitStatus::converged;
        return est;
    }

    const double first = std::abs(tail_v.front());
    const double last = std::abs(tail_v.back());
    if (first > 0.0 && last > 0.0) {
        const double exponent = std::log(last / first) / std::log(y[n - 1] / y[n - w]);
        if (exponent >= opts.power_threshold && monotone_modulus(tail_v, true)) {
            est.status = LimitStatus::diverged;
            est.infinite = true;
            est.value = tail_v.back();
        } else if (exponent <= -opts.power_threshold && monotone_modulus(tail_v, false)) {
            est.status = LimitStatus::vanishing;
            est.value = Complex{};
            est.error_indicator = last;
        }
    }
    return est;
}

LimitEstimate estimate_ray_limit(const std::function<Complex(double)>& f, const RayGrid& grid,
                                 const RayLimitOptions& opts) {
    const std::vector<double> ys = grid.points();
    std::vector<Complex> values;
    values.reserve(ys.size());
    for (double y : ys) values.push_back(f(y));
    return estimate_ray_limit(ys, values, opts);
}

LimitEstimate estimate_tail_limit(std::span<const double> t, std::span<const Complex> values,
                                  const TailOptions& opts) {
    if (t.size() != values.size()) throw DomainError("estimate_tail_limit: size mismatch");
    LimitEstimate est;
    const std::size_t n = values.size();
    const std::size_t w = static_cast<std::size_t>(std::max(opts.window, 2));
    if (n < w) {
        est.error_indicator = std::numeric_limits<double>::infinity();
        return est;
    }
    const std::span<const Complex> tail(values.data() + n - w, w);
    for (std::size_t k = n - w; k < n; ++k) est.tail.emplace_back(t[k], values[k]);

    est.value = tail.back();
    est.error_indicator = max_pairwise_spread(tail);
    est.tolerance = std::max(opts.abs_tol, opts.rel_tol * std::abs(tail.back()));
    if (est.error_indicator <= est.tolerance) {
        est.converged = true;
        est.status = LimitStatus::converged;
    } else if (std::abs(tail.back()) > opts.infinity_threshold && monotone_modulus(tail, true)) {
        est.status = LimitStatus::diverged;
        est.infinite = true;
    }
    return est;
}

} // namespace hsg
