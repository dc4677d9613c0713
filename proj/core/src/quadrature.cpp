#include "hsg/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace hsg {

namespace {

// Kronrod abscissae on [-1, 1] (positive half, descending); odd indices are the
// 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a;
    double b;
    Complex value;
    double error;

    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod(const RealToComplex& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const Complex fc = f(center);
    Complex kronrod = fc * kWgk[7];
    Complex gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const Complex sum = f(center - dx) + f(center + dx);
        kronrod += kWgk[j] * sum;
        if (j % 2 == 1) gauss += kWg[j / 2] * sum;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

} // namespace

QuadratureResult& QuadratureResult::operator+=(const QuadratureResult& other) {
    value += other.value;
    error += other.error;
    converged = converged && other.converged;
    evaluations += other.evaluations;
    return *this;
}

QuadratureResult integrate_interval(const RealToComplex& f, double a, double b,
                                    const QuadratureOptions& opts) {
    QuadratureResult result;
    if (a == b) return result;

    std::priority_queue<Segment> active;
    std::vector<Segment> frozen;  // too narrow to bisect further

    Segment first = gauss_kronrod(f, a, b);
    result.evaluations = 15;
    Complex total = first.value;
    double total_error = first.error;
    active.push(first);

    const double width_floor = 64.0 * std::numeric_limits<double>::epsilon() *
                               std::max(std::abs(a), std::abs(b));
    int intervals = 1;
    while (!active.empty()) {
        if (total_error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(total))) break;
        if (intervals >= opts.max_intervals) {
            result.converged = false;
            break;
        }
        Segment worst = active.top();
        active.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (worst.b - worst.a <= width_floor || mid <= worst.a || mid >= worst.b) {
            frozen.push_back(worst);
            continue;
        }
        const Segment left = gauss_kronrod(f, worst.a, mid);
        const Segment right = gauss_kronrod(f, mid, worst.b);
        result.evaluations += 30;
        ++intervals;
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        active.push(left);
        active.push(right);
    }

    // Re-sum to shed drift from the incremental updates.
    Complex sum{};
    double err = 0.0;
    while (!active.empty()) {
        sum += active.top().value;
        err += active.top().error;
        active.pop();
    }
    for (const auto& s : frozen) {
        sum += s.value;
        err += s.error;
    }
    result.value = sum;
    result.error = err;
    if (err > std::max(opts.abs_tol, opts.rel_tol * std::abs(sum))) result.converged = false;
    return result;
}

} // namespace hsg
