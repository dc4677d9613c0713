#pragma once

#include <functional>

#include "hsg/types.hpp"

namespace hsg {

struct IntegratorStats {
    long steps = 0;
    long rejections = 0;
    long evaluations = 0;
    double max_local_error = 0.0;  ///< largest accepted error/scale ratio

    IntegratorStats& operator+=(const IntegratorStats& other);
};

struct OdeOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    double initial_step = 1e-3;
    long max_steps = 5'000'000;
    /// Reject trial states with Im <= 0 and keep the state in the upper half-plane.
    bool keep_upper_half_plane = true;
};

using ComplexField = std::function<Complex(double, Complex)>;

/// Adaptive Dormand-Prince 5(4) stepper for a scalar complex ODE y' = f(x, y).
/// `advance` integrates to an exact target abscissa, reusing the step size
/// across calls.
class DormandPrince {
public:
    DormandPrince(ComplexField f, OdeOptions opts = {});

    /// Integrates from (x, y) to x_end in place. Throws NumericalError on step
    /// size underflow or when max_steps is exceeded.
    void advance(double& x, Complex& y, double x_end);

    const IntegratorStats& stats() const { return stats_; }

private:
    ComplexField f_;
    OdeOptions opts_;
    double h_ = 0.0;
    IntegratorStats stats_;
};

} // namespace hsg
