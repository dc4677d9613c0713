#pragma once

#include <vector>

#include "hsg/generator.hpp"
#include "hsg/ode.hpp"

namespace hsg {

/// Sample times for an orbit; strictly increasing and starting at 0.
struct Schedule {
    std::vector<double> times;

    /// 0, 1, ratio, ratio^2, ..., capped by (and ending at) t_max.
    static Schedule geometric(double t_max, double ratio = 2.0);
    /// n + 1 equally spaced times on [0, t_max].
    static Schedule uniform(double t_max, int n);
    static Schedule from_times(std::vector<double> times);

    double horizon() const { return times.empty() ? 0.0 : times.back(); }
};

struct FlowOptions {
    OdeOptions ode{};
    QuadratureOptions quadrature{};
    /// Integrate in u = log(1 + t), i.e. dphi/du = (1 + t) G(phi).
    bool log_time = true;
};

struct OrbitSample {
    double t = 0.0;
    Complex value{};
};

/// Samples of t -> phi_t(z0). samples[0] is (0, z0).
struct Orbit {
    Complex z0{};
    std::vector<OrbitSample> samples;
    Schedule schedule;
    IntegratorStats stats;
    /// Sample indices where an implicit closed-form solve did not converge.
    std::vector<std::size_t> unconverged;

    double horizon() const { return samples.empty() ? 0.0 : samples.back().t; }
};

Orbit integrate_orbit(const HerglotzTriplet& triplet, Complex z0, const Schedule& schedule,
                      const FlowOptions& opts = {});

/// phi_t(z) for a single time.
Complex flow_map(const HerglotzTriplet& triplet, Complex z, double t, const FlowOptions& opts = {});

/// Semigroups with explicit (or implicitly solvable) orbits.
enum class ClosedForm {
    linear,    ///< G(z) = lambda z,            phi_t = e^{lambda t} z
    constant,  ///< G(z) = c (real),            phi_t = z + c t
    inverse,   ///< G(z) = -m / z,              phi_t = sqrt(z^2 - 2 m t)
    two_atom   ///< G(z) = 2z / (1 - z^2),      (1/2) log phi - phi^2/4 = (1/2) log z - z^2/4 + t
};

std::string_view to_string(ClosedForm f);
ClosedForm closed_form_from_string(std::string_view name);

struct ClosedFormFamily {
    ClosedForm kind = ClosedForm::inverse;
    double param = 1.0;  ///< lambda, c or m; unused for two_atom
};

HerglotzTriplet to_triplet(const ClosedFormFamily& family);

/// Exact orbit (two_atom: Newton solve of the implicit relation to ~1e-13).
Orbit closed_form_orbit(const ClosedFormFamily& family, Complex z0, const Schedule& schedule);

/// |phi_{t+s}(z) - phi_t(phi_s(z))| / (1 + |phi_{t+s}(z)|).
double semigroup_residual(const HerglotzTriplet& triplet, Complex z, double s, double t,
                          const FlowOptions& opts = {});

struct StepOptions {
    double threshold = 1e-4;
    double min_horizon = 1e4;
    int window = 4;
    double stable_rel_tol = 1e-3;
};

struct StepEstimate {
    LimitEstimate limit;
    Step verdict = Step::undetermined;
    /// (t, d_H(phi_{t+1}(z), phi_t(z))) for every sample t.
    std::vector<std::pair<double, double>> sequence;
};

/// Hyperbolic step from unit-time re-integrations started at each orbit sample.
StepEstimate hyperbolic_step_estimate(const Orbit& orbit, const HerglotzTriplet& triplet,
                                      const StepOptions& opts = {}, const FlowOptions& flow = {});

struct ShiftOptions {
    double finite_rel_tol = 1e-6;
    double growth_rel_tol = 1e-2;
};

struct ShiftEstimate {
    Shift verdict = Shift::undetermined;
    double sup_im = 0.0;
    /// Relative growth of Im phi_t over the last decade of the orbit.
    double last_decade_growth = 0.0;
};

ShiftEstimate shift_classify(const Orbit& orbit, const ShiftOptions& opts = {});

} // namespace hsg
