#include "hsg/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace hsg {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b - b_hat, the embedded error weights.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

bool admissible(Complex y, bool upper) {
    return std::isfinite(y.real()) && std::isfinite(y.imag()) && (!upper || y.imag() > 0.0);
}

} // namespace

IntegratorStats& IntegratorStats::operator+=(const IntegratorStats& other) {
    steps += other.steps;
    rejections += other.rejections;
    evaluations += other.evaluations;
    max_local_error = std::max(max_local_error, other.max_local_error);
    return *this;
}

DormandPrince::DormandPrince(ComplexField f, OdeOptions opts) : f_(std::move(f)), opts_(opts) {
    if (!(opts_.rel_tol > 0.0) || !(opts_.abs_tol >= 0.0)) throw DomainError("ode: tolerances must be positive");
    h_ = opts_.initial_step;
}

void DormandPrince::advance(double& x, Complex& y, double x_end) {
    if (x_end < x) throw DomainError("ode: backward integration is not supported");
    if (!admissible(y, opts_.keep_upper_half_plane)) throw DomainError("ode: initial state outside the domain");

    long taken = 0;
    while (x < x_end) {
        if (taken++ > opts_.max_steps) throw NumericalError("ode: maximum number of steps exceeded");
        const double remaining = x_end - x;
        bool last = false;
        double h = h_;
        if (h >= remaining) {
            h = remaining;
            last = true;
        }
        const double h_min = 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x));
        if (h < h_min && !last) {
            throw NumericalError("ode: step size underflow at x = " + std::to_string(x));
        }

        Complex k1, k2, k3, k4, k5, k6, k7, y5;
        bool ok = true;
        try {
            auto stage = [&](double cx, Complex arg) {
                if (!admissible(arg, opts_.keep_upper_half_plane)) {
                    ok = false;
                    return Complex{};
                }
                ++stats_.evaluations;
                return f_(x + cx * h, arg);
            };
            k1 = stage(0.0, y);
            if (ok) k2 = stage(c2, y + h * (a21 * k1));
            if (ok) k3 = stage(c3, y + h * (a31 * k1 + a32 * k2));
            if (ok) k4 = stage(c4, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
            if (ok) k5 = stage(c5, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
            if (ok) k6 = stage(1.0, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
            if (ok) {
                y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
                ok = admissible(y5, opts_.keep_upper_half_plane);
            }
            if (ok) k7 = stage(1.0, y5);
        } catch (const DomainError&) {
            ok = false;
        }

        if (!ok) {
            ++stats_.rejections;
            h_ = 0.25 * h;
            continue;
        }

        const Complex err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
        const double scale = opts_.abs_tol + opts_.rel_tol * std::max(std::abs(y), std::abs(y5));
        const double ratio = std::abs(err) / scale;
        if (!std::isfinite(ratio)) {
            ++stats_.rejections;
            h_ = 0.25 * h;
            continue;
        }
        const double factor = ratio == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(ratio, -0.2), 0.2, 5.0);
        if (ratio <= 1.0) {
            x = last ? x_end : x + h;
            y = y5;
            ++stats_.steps;
            stats_.max_local_error = std::max(stats_.max_local_error, ratio);
            // Keep the proposed step when the final step was clipped to the target.
            if (!last || h == h_) h_ = h * factor;
        } else {
            ++stats_.rejections;
            h_ = h * std::min(1.0, factor);
        }
    }
}

} // namespace hsg
