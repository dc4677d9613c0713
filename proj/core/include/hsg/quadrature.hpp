#pragma once

#include <functional>

#include "hsg/types.hpp"

namespace hsg {

struct QuadratureOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_intervals = 4000;
};

struct QuadratureResult {
    Complex value{};
    double error = 0.0;
    bool converged = true;
    int evaluations = 0;

    QuadratureResult& operator+=(const QuadratureResult& other);
};

using RealToComplex = std::function<Complex(double)>;

/// Globally adaptive 15-point Gauss-Kronrod quadrature of a complex-valued
/// integrand on a finite interval. The integrand is never sampled at the
/// endpoints, so integrable endpoint singularities of a substitution are fine.
QuadratureResult integrate_interval(const RealToComplex& f, double a, double b,
                                    const QuadratureOptions& opts = {});

} // namespace hsg
