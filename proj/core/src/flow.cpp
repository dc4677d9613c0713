#include "hsg/flow.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hsg/hypgeom.hpp"

namespace hsg {

Schedule Schedule::geometric(double t_max, double ratio) {
    if (!(t_max > 0.0) || !std::isfinite(t_max)) throw DomainError("schedule: t_max must be positive and finite");
    if (!(ratio > 1.0)) throw DomainError("schedule: ratio must exceed 1");
    Schedule s;
    s.times.push_back(0.0);
    for (double t = 1.0; t < t_max * (1.0 - 1e-12); t *= ratio) s.times.push_back(t);
    s.times.push_back(t_max);
    return s;
}

Schedule Schedule::uniform(double t_max, int n) {
    if (!(t_max > 0.0) || !std::isfinite(t_max)) throw DomainError("schedule: t_max must be positive and finite");
    if (n < 1) throw DomainError("schedule: need at least one interval");
    Schedule s;
    for (int k = 0; k <= n; ++k) s.times.push_back(t_max * k / n);
    return s;
}

Schedule Schedule::from_times(std::vector<double> times) {
    for (std::size_t k = 0; k < times.size(); ++k) {
        if (!std::isfinite(times[k]) || times[k] < 0.0) throw DomainError("schedule: times must be finite and >= 0");
        if (k > 0 && !(times[k] > times[k - 1])) throw DomainError("schedule: times must be strictly increasing");
    }
    if (times.empty() || times.front() != 0.0) times.insert(times.begin(), 0.0);
    return Schedule{std::move(times)};
}

Orbit integrate_orbit(const HerglotzTriplet& triplet, Complex z0, const Schedule& schedule, const FlowOptions& opts) {
    require_upper_half_plane(z0, "orbit start point");
    if (triplet.is_trivial()) throw DomainError("integrate_orbit: trivial generator (identity semigroup)");
    if (schedule.times.empty() || schedule.times.front() != 0.0) throw DomainError("integrate_orbit: schedule must start at 0");

    const Generator g(triplet, opts.quadrature);
    ComplexField field;
    if (opts.log_time) {
        field = [&g](double u, Complex y) { return std::exp(u) * g(y); };
    } else {
        field = [&g](double, Complex y) { return g(y); };
    }
    DormandPrince stepper(field, opts.ode);

    Orbit orbit;
    orbit.z0 = z0;
    orbit.schedule = schedule;
    orbit.samples.reserve(schedule.times.size());
    orbit.samples.push_back({0.0, z0});
    double x = 0.0;
    Complex y = z0;
    for (std::size_t k = 1; k < schedule.times.size(); ++k) {
        const double t = schedule.times[k];
        stepper.advance(x, y, opts.log_time ? std::log1p(t) : t);
        orbit.samples.push_back({t, y});
    }
    orbit.stats = stepper.stats();
    return orbit;
}

Complex flow_map(const HerglotzTriplet& triplet, Complex z, double t, const FlowOptions& opts) {
    if (t < 0.0) throw DomainError("flow_map: t must be >= 0");
    require_upper_half_plane(z, "flow_map argument");
    if (t == 0.0) return z;
    return integrate_orbit(triplet, z, Schedule{{0.0, t}}, opts).samples.back().value;
}

std::string_view to_string(ClosedForm f) {
    switch (f) {
    case ClosedForm::linear: return "linear";
    case ClosedForm::constant: return "constant";
    case ClosedForm::inverse: return "inverse";
    case ClosedForm::two_atom: return "two_atom";
    }
    return "unknown";
}

ClosedForm closed_form_from_string(std::string_view name) {
    if (name == "linear") return ClosedForm::linear;
    if (name == "constant") return ClosedForm::constant;
    if (name == "inverse") return ClosedForm::inverse;
    if (name == "two_atom") return ClosedForm::two_atom;
    throw DomainError("unknown closed-form family '" + std::string(name) + "'");
}

HerglotzTriplet to_triplet(const ClosedFormFamily& family) {
    const double p = family.param;
    switch (family.kind) {
    case ClosedForm::linear:
        if (!(p > 0.0)) throw DomainError("linear family: lambda must be positive");
        return {p, 0.0, Measure{}};
    case ClosedForm::constant:
        if (p == 0.0 || !std::isfinite(p)) throw DomainError("constant family: c must be a nonzero real");
        return {0.0, p, Measure{}};
    case ClosedForm::inverse:
        if (!(p > 0.0)) throw DomainError("inverse family: m must be positive");
        return {0.0, 0.0, Measure::atom(0.0, p)};
    case ClosedForm::two_atom:
        return {0.0, 0.0, Measure::atom(-1.0, 0.5) + Measure::atom(1.0, 0.5)};
    }
    throw DomainError("unknown closed-form family");
}

namespace {

// Root of w^2 with positive imaginary part, for w off [0, inf).
Complex upper_sqrt(Complex w) { return kI * std::sqrt(-w); }

struct TwoAtomSolver {
    Complex z0;
    Complex rhs0;  // (1/2) log z0 - z0^2 / 4

    Complex residual(Complex phi, double t) const { return 0.5 * std::log(phi) - 0.25 * phi * phi - rhs0 - t; }

    bool newton(Complex& phi, double t) const {
        for (int it = 0; it < 60; ++it) {
            const Complex gen = 2.0 * phi / (1.0 - phi * phi);
            Complex step = residual(phi, t) * gen;
            Complex next = phi - step;
            for (int damp = 0; damp < 30 && !(next.imag() > 0.0); ++damp) {
                step *= 0.5;
                next = phi - step;
            }
            if (!(next.imag() > 0.0) || !std::isfinite(next.real()) || !std::isfinite(next.imag())) return false;
            phi = next;
            if (std::abs(step) <= 1e-14 * std::max(1.0, std::abs(phi))) {
                // One more step polishes the last digits.
                phi -= residual(phi, t) * (2.0 * phi / (1.0 - phi * phi));
                return phi.imag() > 0.0;
            }
        }
        return false;
    }

    // Solve at time t starting from a solution prev at time t_prev, halving the
    // time step when Newton fails to converge.
    bool solve(Complex prev, double t_prev, double t, Complex& out, int depth = 0) const {
        Complex phi = upper_sqrt(prev * prev - 4.0 * (t - t_prev));
        // One fixed-point sweep of phi^2 = 2 log phi - 4 (rhs0 + t).
        phi = upper_sqrt(2.0 * std::log(phi) - 4.0 * (rhs0 + t));
        if (newton(phi, t)) {
            out = phi;
            return true;
        }
        if (depth >= 40) return false;
        const double mid = 0.5 * (t_prev + t);
        Complex half;
        if (!solve(prev, t_prev, mid, half, depth + 1)) return false;
        return solve(half, mid, t, out, depth + 1);
    }
};

} // namespace

Orbit closed_form_orbit(const ClosedFormFamily& family, Complex z0, const Schedule& schedule) {
    require_upper_half_plane(z0, "orbit start point");
    if (schedule.times.empty() || schedule.times.front() != 0.0) throw DomainError("closed_form_orbit: schedule must start at 0");
    to_triplet(family);  // parameter validation

    Orbit orbit;
    orbit.z0 = z0;
    orbit.schedule = schedule;
    const double p = family.param;
    const TwoAtomSolver solver{z0, 0.5 * std::log(z0) - 0.25 * z0 * z0};
    Complex prev = z0;
    double t_prev = 0.0;
    for (std::size_t k = 0; k < schedule.times.size(); ++k) {
        const double t = schedule.times[k];
        Complex v = z0;
        if (t > 0.0) {
            switch (family.kind) {
            case ClosedForm::linear: v = std::exp(p * t) * z0; break;
            case ClosedForm::constant: v = z0 + p * t; break;
            case ClosedForm::inverse: v = upper_sqrt(z0 * z0 - 2.0 * p * t); break;
            case ClosedForm::two_atom:
                if (!solver.solve(prev, t_prev, t, v)) {
                    orbit.unconverged.push_back(k);
                    v = prev;
                }
                break;
            }
        }
        orbit.samples.push_back({t, v});
        prev = v;
        t_prev = t;
    }
    return orbit;
}

double semigroup_residual(const HerglotzTriplet& triplet, Complex z, double s, double t, const FlowOptions& opts) {
    if (s < 0.0 || t < 0.0) throw DomainError("semigroup_residual: times must be >= 0");
    const Complex direct = flow_map(triplet, z, s + t, opts);
    const Complex composed = flow_map(triplet, flow_map(triplet, z, s, opts), t, opts);
    return std::abs(direct - composed) / (1.0 + std::abs(direct));
}

StepEstimate hyperbolic_step_estimate(const Orbit& orbit, const HerglotzTriplet& triplet, const StepOptions& opts,
                                      const FlowOptions& flow) {
    StepEstimate est;
    std::vector<double> ts;
    std::vector<Complex> ds;
    // A unit step gains nothing from the log-time substitution, and in plain time
    // the stepper is exact for constant fields.
    FlowOptions unit = flow;
    unit.log_time = false;
    for (const OrbitSample& s : orbit.samples) {
        if (s.t < 1.0) continue;
        const double d = dist_H(s.value, flow_map(triplet, s.value, 1.0, unit));
        est.sequence.emplace_back(s.t, d);
        ts.push_back(s.t);
        ds.emplace_back(d, 0.0);
    }
    TailOptions tail;
    tail.window = opts.window;
    tail.rel_tol = opts.stable_rel_tol;
    est.limit = estimate_tail_limit(ts, ds, tail);
    if (orbit.horizon() < opts.min_horizon || ds.size() < static_cast<std::size_t>(opts.window)) return est;

    const std::size_t n = ds.size();
    const std::size_t w = static_cast<std::size_t>(opts.window);
    bool decreasing = true;
    for (std::size_t k = n - w + 1; k < n; ++k) decreasing = decreasing && ds[k].real() < ds[k - 1].real();
    const double last = ds.back().real();
    if (last < opts.threshold && decreasing) {
        est.verdict = Step::zero;
        est.limit.value = Complex{};
        est.limit.status = LimitStatus::vanishing;
    } else if (last >= opts.threshold && est.limit.converged) {
        est.verdict = Step::positive;
    }
    return est;
}

ShiftEstimate shift_classify(const Orbit& orbit, const ShiftOptions& opts) {
    ShiftEstimate est;
    if (orbit.samples.empty()) return est;
    for (const OrbitSample& s : orbit.samples) est.sup_im = std::max(est.sup_im, s.value.imag());
    const double horizon = orbit.horizon();
    if (horizon < 10.0) return est;
    const OrbitSample* earlier = nullptr;
    for (const OrbitSample& s : orbit.samples)
        if (s.t <= horizon / 10.0) earlier = &s;
    const double last_im = orbit.samples.back().value.imag();
    est.last_decade_growth = (last_im - earlier->value.imag()) / last_im;
    if (est.last_decade_growth < opts.finite_rel_tol) {
        est.verdict = Shift::finite;
    } else if (est.last_decade_growth > opts.growth_rel_tol) {
        est.verdict = Shift::infinite;
    }
    return est;
}

} // namespace hsg
