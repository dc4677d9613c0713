#include "hsg/koenigs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace hsg {

std::string_view to_string(ChartKind k) {
    switch (k) {
    case ChartKind::parabolic: return "parabolic";
    case ChartKind::hyperbolic: return "hyperbolic";
    }
    return "unknown";
}

KoenigsChart make_chart(const HerglotzTriplet& triplet, Complex base_point) {
    require_upper_half_plane(base_point, "chart base point");
    if (triplet.is_trivial()) throw DomainError("make_chart: trivial generator has no Koenigs function");
    KoenigsChart chart;
    chart.base_point = base_point;
    if (triplet.alpha > 0.0) {
        chart.kind = ChartKind::hyperbolic;
        chart.lambda = triplet.alpha;
        chart.normalization = kI;
    } else {
        chart.kind = ChartKind::parabolic;
        chart.normalization = 1.0;
    }
    return chart;
}

namespace {

QuadratureResult integrate_segment(const Generator& g, Complex a, Complex b, const KoenigsOptions& opts) {
    QuadratureResult total;
    const double length = std::abs(b - a);
    if (length == 0.0) return total;
    const Complex dir = (b - a) / length;
    const auto integrand = [&](Complex p) {
        return [&g, &opts, p, dir](double s) {
            const Complex w = p + s * dir;
            const Complex gw = g(w);
            if (std::abs(gw) * (1.0 + std::abs(w)) < opts.zero_guard) {
                throw NumericalError("Koenigs path passes within the zero guard of a zero of G");
            }
            return dir / gw;
        };
    };
    // Pieces no longer than the smallest Im on them keep the integrand smooth
    // relative to the piece and make vertical rays geometric.
    double done = 0.0;
    Complex p = a;
    while (done < length) {
        const double y = p.imag();
        double piece = dir.imag() >= 0.0 ? y : y / (1.0 - dir.imag());
        bool last = false;
        if (piece >= length - done) {
            piece = length - done;
            last = true;
        }
        total += integrate_interval(integrand(p), 0.0, piece, opts.path);
        done += piece;
        p = last ? b : a + done * dir;
    }
    return total;
}

std::vector<Complex> make_path(Complex from, Complex to, PathShape shape) {
    if (shape == PathShape::straight) return {from, to};
    const double top = 2.0 * std::max({from.imag(), to.imag(), std::abs(to.real() - from.real())});
    return {from, Complex{from.real(), top}, Complex{to.real(), top}, to};
}

void require_kind(const KoenigsChart& chart, ChartKind kind, const char* who) {
    if (chart.kind != kind) throw DomainError(std::string(who) + ": chart has the wrong kind");
}

Complex checked(const QuadratureResult& r) {
    if (!r.converged && r.error > 1e-8 * (1.0 + std::abs(r.value))) {
        throw NumericalError("Koenigs quadrature did not converge");
    }
    return r.value;
}

double slit_distance(Complex w) { return w.real() <= 0.0 ? std::abs(w.imag()) : std::abs(w); }

} // namespace

QuadratureResult integrate_inverse_generator(const Generator& g, std::span<const Complex> polyline,
                                             const KoenigsOptions& opts) {
    for (Complex v : polyline) require_upper_half_plane(v, "Koenigs path vertex");
    QuadratureResult total;
    for (std::size_t k = 1; k < polyline.size(); ++k) total += integrate_segment(g, polyline[k - 1], polyline[k], opts);
    return total;
}

Complex koenigs_parabolic(const HerglotzTriplet& triplet, const KoenigsChart& chart, Complex z,
                          const KoenigsOptions& opts) {
    require_kind(chart, ChartKind::parabolic, "koenigs_parabolic");
    require_upper_half_plane(z, "Koenigs argument");
    const Generator g(triplet, opts.generator);
    const std::vector<Complex> path = make_path(chart.base_point, z, opts.shape);
    return chart.normalization + checked(integrate_inverse_generator(g, path, opts));
}

Complex koenigs_hyperbolic(const HerglotzTriplet& triplet, const KoenigsChart& chart, Complex z,
                           const KoenigsOptions& opts) {
    require_kind(chart, ChartKind::hyperbolic, "koenigs_hyperbolic");
    require_upper_half_plane(z, "Koenigs argument");
    const Generator g(triplet, opts.generator);
    const std::vector<Complex> path = make_path(chart.base_point, z, opts.shape);
    return chart.normalization * std::exp(chart.lambda * checked(integrate_inverse_generator(g, path, opts)));
}

double abel_residual(const HerglotzTriplet& triplet, const KoenigsChart& chart, Complex z, double t,
                     const KoenigsOptions& opts, const FlowOptions& flow) {
    const Complex moved = flow_map(triplet, z, t, flow);
    const Complex lhs = koenigs_parabolic(triplet, chart, moved, opts);
    const Complex rhs = koenigs_parabolic(triplet, chart, z, opts) + t;
    return std::abs(lhs - rhs) / (1.0 + t);
}

double schroeder_residual(const HerglotzTriplet& triplet, const KoenigsChart& chart, Complex z, double t,
                          const KoenigsOptions& opts, const FlowOptions& flow) {
    const Complex moved = flow_map(triplet, z, t, flow);
    const Complex lhs = koenigs_hyperbolic(triplet, chart, moved, opts);
    const Complex rhs = std::exp(chart.lambda * t) * koenigs_hyperbolic(triplet, chart, z, opts);
    return std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
}

LimitEstimate angular_ratio_limit(const std::function<Complex(double)>& f, const RayGrid& grid,
                                  const RayLimitOptions& opts) {
    return estimate_ray_limit([&f](double y) { return f(y) / Complex{0.0, y}; }, grid, opts);
}

SqrtConformality sqrt_conformality(const HerglotzTriplet& triplet, const KoenigsChart& chart, const RayGrid& grid,
                                   const RayLimitOptions& limit, const KoenigsOptions& opts) {
    require_kind(chart, ChartKind::parabolic, "sqrt_conformality");
    const Generator g(triplet, opts.generator);
    const std::vector<double> ys = grid.points();

    SqrtConformality out;
    out.min_slit_distance = std::numeric_limits<double>::infinity();
    std::vector<Complex> tilde;
    std::vector<Complex> plain;
    // Walk up the imaginary axis, integrating only the new stretch each time.
    Complex h = chart.normalization;
    Complex at = chart.base_point;
    for (double y : ys) {
        const Complex target{0.0, y};
        const std::vector<Complex> path = make_path(at, target, opts.shape);
        h += checked(integrate_inverse_generator(g, path, opts));
        at = target;
        out.samples.emplace_back(y, h);
        const double dist = slit_distance(h);
        out.min_slit_distance = std::min(out.min_slit_distance, dist);
        if (dist <= 1e-12 * (1.0 + std::abs(h))) {
            throw ChartError("Koenigs value h(iy) = (" + std::to_string(h.real()) + ", " + std::to_string(h.imag()) +
                             ") at y = " + std::to_string(y) + " lies on the cut (-inf, 0]");
        }
        tilde.push_back(kI * std::sqrt(h) / target);
        plain.push_back(std::sqrt(h) / target);
    }

    out.ratio = estimate_ray_limit(ys, tilde, limit);
    if (out.ratio.status == LimitStatus::converged && std::abs(out.ratio.value) > 0.0) {
        out.verdict = Verdict::yes;
        out.predicted_rate = kI / out.ratio.value;
        const LimitEstimate p = estimate_ray_limit(ys, plain, limit);
        if (p.status == LimitStatus::converged && std::abs(p.value) > 0.0) out.predicted_rate_plain_sqrt = kI / p.value;
    } else if (out.ratio.status == LimitStatus::vanishing || out.ratio.status == LimitStatus::diverged) {
        out.verdict = Verdict::no;
    }
    return out;
}

} // namespace hsg
