#include "hsg/generator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace hsg {

HerglotzTriplet::HerglotzTriplet(double a, double b, Measure m) : alpha(a), beta(b), mu(std::move(m)) {
    if (!std::isfinite(alpha) || alpha < 0.0) throw DomainError("triplet: alpha must be finite and >= 0");
    if (!std::isfinite(beta)) throw DomainError("triplet: beta must be finite");
}

Generator::Generator(HerglotzTriplet triplet, QuadratureOptions opts)
    : triplet_(std::move(triplet)), opts_(opts) {
    std::vector<AcPart> rest;
    for (const AcPart& part : triplet_.mu.ac_parts()) {
        (part.family == AcFamily::cauchy ? cauchy_parts_ : rest).push_back(part);
    }
    finite_part_ = Measure(triplet_.mu.atoms(), std::move(rest));
    drift_ = triplet_.beta - (finite_part_.is_null() ? 0.0 : moment(finite_part_, 1).value);
}

QuadratureResult Generator::evaluate(Complex z) const {
    require_upper_half_plane(z, "generator argument");
    QuadratureResult r;
    if (!finite_part_.is_null()) {
        r = integrate(finite_part_, [z](double s) { return (1.0 + s * s) / (s - z); }, opts_);
    }
    r.value += drift_;
    for (const AcPart& part : cauchy_parts_) {
        // (1 + a z)/(a - z) written as -a + (1 + a^2)/(a - z), which stays accurate for large z.
        const Complex a{part.p1, -part.p2};
        r.value += part.weight * (-a + (1.0 + a * a) / (a - z));
    }
    r.value += triplet_.alpha * z;
    return r;
}

Complex Generator::operator()(Complex z) const {
    const QuadratureResult r = evaluate(z);
    if (!r.converged && r.error > 1e-6 * (1.0 + std::abs(r.value))) {
        throw NumericalError("generator: quadrature did not converge at z = (" + std::to_string(z.real()) + ", " +
                             std::to_string(z.imag()) + ")");
    }
    return r.value;
}

Complex eval_G(const HerglotzTriplet& triplet, Complex z, const QuadratureOptions& opts) {
    return Generator(triplet, opts)(z);
}

CoefficientEstimate coefficients_check(const HerglotzTriplet& triplet, const RayGrid& grid, double rel_tol) {
    const Generator g(triplet);
    CoefficientEstimate est;
    RayLimitOptions ray;
    ray.rel_tol = rel_tol;
    est.alpha_limit = estimate_ray_limit([&](double y) { return g(Complex{0.0, y}) / Complex{0.0, y}; }, grid, ray);
    if (est.alpha_limit.status == LimitStatus::converged) {
        est.alpha_est = est.alpha_limit.value.real();
    } else if (est.alpha_limit.status == LimitStatus::vanishing) {
        est.alpha_est = 0.0;
    } else {
        est.alpha_est = std::numeric_limits<double>::quiet_NaN();
    }
    est.beta_est = g(kI).real();
    const auto close = [rel_tol](double a, double b) { return std::abs(a - b) <= rel_tol * std::max(1.0, std::abs(b)); };
    est.alpha_matches = std::isfinite(est.alpha_est) && close(est.alpha_est, triplet.alpha);
    est.beta_matches = close(est.beta_est, triplet.beta);
    return est;
}

std::string_view to_string(Kind k) {
    switch (k) {
    case Kind::hyperbolic: return "hyperbolic";
    case Kind::parabolic: return "parabolic";
    case Kind::trivial: return "trivial";
    }
    return "unknown";
}

std::string_view to_string(Step s) {
    switch (s) {
    case Step::positive: return "positive";
    case Step::zero: return "zero";
    case Step::undetermined: return "undetermined";
    }
    return "undetermined";
}

std::string_view to_string(Shift s) {
    switch (s) {
    case Shift::finite: return "finite";
    case Shift::infinite: return "infinite";
    case Shift::undetermined: return "undetermined";
    }
    return "undetermined";
}

bool ExtremalVerdicts::consistent() const {
    Verdict seen = Verdict::undetermined;
    for (Verdict v : {moments, zg_limit, sqrt_koenigs}) {
        if (v == Verdict::undetermined) continue;
        if (seen != Verdict::undetermined && v != seen) return false;
        seen = v;
    }
    return true;
}

ClassificationReport classify_algebraic(const HerglotzTriplet& triplet) {
    ClassificationReport r;
    r.spectral_value = triplet.alpha;
    if (triplet.is_trivial()) {
        r.kind = Kind::trivial;
        return r;
    }
    if (triplet.alpha > 0.0) {
        // Hyperbolic orbits leave every horizontal strip exponentially fast.
        r.kind = Kind::hyperbolic;
        r.step = Step::positive;
        r.shift = Shift::infinite;
        return r;
    }
    r.kind = Kind::parabolic;
    if (triplet.is_real_constant()) {
        r.step = Step::positive;
        r.shift = Shift::finite;
    }
    const ExtremalTest test = extremal_zero_hs_test(triplet);
    r.extremal.moments = test.verdict;
    r.predicted_rate_constant = test.predicted_limit;
    return r;
}

ExtremalTest extremal_zero_hs_test(const HerglotzTriplet& triplet, double beta_tol) {
    if (triplet.alpha > 0.0) throw DomainError("extremal_zero_hs_test: triplet is hyperbolic (alpha > 0)");
    ExtremalTest t;
    t.second_moment = moment(triplet.mu, 2);
    t.first_moment = moment(triplet.mu, 1).value;
    t.drift = triplet.beta - t.first_moment;
    if (!t.second_moment.infinite && std::abs(t.drift) <= beta_tol) {
        t.verdict = Verdict::yes;
        t.predicted_limit = kI * std::sqrt(2.0 * (mass(triplet.mu) + t.second_moment.value));
    } else {
        t.verdict = Verdict::no;
    }
    return t;
}

ZgLimit zG_angular_limit(const HerglotzTriplet& triplet, const RayGrid& grid, const RayLimitOptions& opts,
                         const QuadratureOptions& quad) {
    if (triplet.alpha > 0.0) throw DomainError("zG_angular_limit: triplet is hyperbolic (alpha > 0)");
    if (triplet.is_trivial()) throw DomainError("zG_angular_limit: trivial generator");
    const Generator g(triplet, quad);
    ZgLimit out;
    out.limit = estimate_ray_limit(
        [&](double y) {
            const Complex z{0.0, y};
            return z * g(z);
        },
        grid, opts);
    const LimitEstimate& L = out.limit;
    if (L.status == LimitStatus::converged) {
        const double re = L.value.real();
        const double im = L.value.imag();
        const bool negative_real = re < 0.0 && std::abs(im) <= opts.rel_tol * std::abs(re) + 1e-12;
        if (negative_real) {
            out.verdict = Verdict::yes;
            out.rate = std::sqrt(-2.0 * re);
        } else {
            out.verdict = Verdict::no;
        }
    } else if (L.status == LimitStatus::diverged || L.status == LimitStatus::vanishing) {
        out.verdict = Verdict::no;
    }
    return out;
}

} // namespace hsg
