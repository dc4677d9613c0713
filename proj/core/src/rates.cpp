#include "hsg/rates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hsg/koenigs.hpp"

namespace hsg {

std::string_view to_string(Normalization n) {
    switch (n) {
    case Normalization::sqrt_t: return "sqrt_t";
    case Normalization::linear_t: return "t";
    case Normalization::exp_lambda: return "exp_lambda";
    }
    return "unknown";
}

double RateNormalization::operator()(double t) const {
    switch (kind) {
    case Normalization::sqrt_t: return std::sqrt(t);
    case Normalization::linear_t: return t;
    case Normalization::exp_lambda: return std::exp(lambda * t);
    }
    return 1.0;
}

RateEstimate rate_estimate(const Orbit& orbit, RateNormalization normalization, const RateOptions& opts) {
    if (normalization.kind == Normalization::exp_lambda && !(normalization.lambda > 0.0)) {
        throw DomainError("rate_estimate: exp_lambda normalization needs lambda > 0");
    }
    RateEstimate r;
    r.normalization = normalization;
    std::vector<double> ts;
    std::vector<Complex> scaled;
    std::vector<Complex> moduli;
    std::vector<Complex> args;
    for (const OrbitSample& s : orbit.samples) {
        if (s.t < 1.0) continue;
        const double n = normalization(s.t);
        if (!std::isfinite(n) || n == 0.0) break;
        ts.push_back(s.t);
        scaled.push_back(s.value / n);
        moduli.emplace_back(std::abs(s.value) / n, 0.0);
        args.emplace_back(std::arg(s.value), 0.0);
    }
    TailOptions tail;
    tail.window = opts.window;
    tail.rel_tol = opts.rel_tol;
    tail.infinity_threshold = opts.infinity_threshold;
    r.limit = estimate_tail_limit(ts, scaled, tail);
    r.modulus = estimate_tail_limit(ts, moduli, tail);
    const std::size_t w = std::min<std::size_t>(opts.window, moduli.size());
    for (std::size_t k = moduli.size() - w; k < moduli.size(); ++k) r.tail_max = std::max(r.tail_max, moduli[k].real());

    TailOptions arg_tail;
    arg_tail.window = opts.window;
    arg_tail.rel_tol = 0.0;
    arg_tail.abs_tol = opts.arg_tol;
    const bool arg_settled = estimate_tail_limit(ts, args, arg_tail).converged;
    if (r.limit.converged && !(r.modulus.converged && arg_settled)) {
        r.limit.converged = false;
        r.limit.status = LimitStatus::undetermined;
    }

    const bool too_short = normalization.kind == Normalization::sqrt_t && orbit.horizon() < opts.min_horizon_sqrt;
    if (too_short) {
        for (LimitEstimate* e : {&r.limit, &r.modulus}) {
            e->converged = false;
            e->infinite = false;
            e->status = LimitStatus::undetermined;
        }
    }
    return r;
}

SlopeEstimate slope(const Orbit& orbit, const RateOptions& opts) {
    std::vector<double> ts;
    std::vector<Complex> args;
    for (const OrbitSample& s : orbit.samples) {
        if (s.t < 1.0) continue;
        ts.push_back(s.t);
        args.emplace_back(std::arg(s.value), 0.0);
    }
    TailOptions tail;
    tail.window = opts.window;
    tail.rel_tol = 0.0;
    tail.abs_tol = opts.arg_tol;
    SlopeEstimate est;
    est.limit = estimate_tail_limit(ts, args, tail);
    est.orthogonal = est.limit.converged && std::abs(est.limit.value.real() - 0.5 * std::numbers::pi) <= opts.arg_tol;
    return est;
}

namespace {

std::string describe(const LimitEstimate& e) {
    std::ostringstream os;
    os << "status=" << to_string(e.status) << " value=(" << e.value.real() << "," << e.value.imag()
       << ") error=" << e.error_indicator;
    return os.str();
}

} // namespace

ValidationReport cross_validate(const HerglotzTriplet& triplet, const Orbit& orbit, const ValidationOptions& opts) {
    if (!triplet.is_parabolic() || triplet.is_trivial()) {
        throw DomainError("cross_validate: needs a non-trivial parabolic triplet");
    }
    ValidationReport rep;
    rep.constant_rel_tol = opts.constant_rel_tol;

    {
        const ExtremalTest t = extremal_zero_hs_test(triplet);
        std::ostringstream os;
        os << "second_moment=" << (t.second_moment.infinite ? std::string("inf") : std::to_string(t.second_moment.value))
           << " drift=" << t.drift;
        rep.criteria.push_back({"moments", t.verdict, t.predicted_limit, os.str()});
    }
    {
        const ZgLimit z = zG_angular_limit(triplet, opts.grid, opts.ray);
        std::optional<Complex> c;
        if (z.rate) c = kI * *z.rate;
        rep.criteria.push_back({"zg_limit", z.verdict, c, describe(z.limit)});
    }
    {
        CriterionResult cr{"sqrt_koenigs", Verdict::undetermined, std::nullopt, ""};
        try {
            const SqrtConformality s = sqrt_conformality(triplet, make_chart(triplet), opts.grid, opts.ray);
            cr.verdict = s.verdict;
            cr.constant = s.predicted_rate;
            cr.detail = describe(s.ratio);
        } catch (const ChartError& e) {
            cr.detail = e.what();
        } catch (const NumericalError& e) {
            cr.detail = e.what();
        }
        rep.criteria.push_back(cr);
    }
    {
        const RateEstimate r = rate_estimate(orbit, {Normalization::sqrt_t, 0.0}, opts.rate);
        CriterionResult cr{"orbit_rate", Verdict::undetermined, std::nullopt, describe(r.limit)};
        if (r.limit.converged && std::abs(r.limit.value) > 0.0) {
            cr.verdict = Verdict::yes;
            cr.constant = r.limit.value;
            rep.measured_constant = r.limit.value;
        } else if (r.limit.infinite || r.modulus.infinite) {
            cr.verdict = Verdict::no;
        }
        rep.criteria.push_back(cr);
    }

    int determined = 0;
    for (const CriterionResult& c : rep.criteria) {
        if (c.verdict == Verdict::undetermined) {
            rep.diagnostics.push_back(c.name + ": undetermined (" + c.detail + ")");
            continue;
        }
        ++determined;
        if (rep.consensus == Verdict::undetermined) {
            rep.consensus = c.verdict;
        } else if (c.verdict != rep.consensus) {
            rep.verdicts_agree = false;
        }
    }
    if (!rep.verdicts_agree) {
        rep.consensus = Verdict::undetermined;
        for (const CriterionResult& c : rep.criteria)
            rep.diagnostics.push_back(c.name + ": " + std::string(to_string(c.verdict)) + " (" + c.detail + ")");
    }
    if (determined < 2 && rep.verdicts_agree) rep.consensus = Verdict::undetermined;

    if (rep.verdicts_agree && rep.consensus == Verdict::yes) {
        if (!rep.measured_constant) {
            rep.constants_agree = false;
            rep.diagnostics.push_back("no measured rate constant to compare against");
        } else {
            const Complex m = *rep.measured_constant;
            for (const CriterionResult& c : rep.criteria) {
                if (!c.constant) continue;
                const double rel = std::abs(*c.constant - m) / std::abs(m);
                if (rel > opts.constant_rel_tol) {
                    rep.constants_agree = false;
                    std::ostringstream os;
                    os << c.name << ": constant (" << c.constant->real() << "," << c.constant->imag()
                       << ") differs from measured (" << m.real() << "," << m.imag() << ") by " << rel;
                    rep.diagnostics.push_back(os.str());
                }
            }
        }
    }
    return rep;
}

} // namespace hsg
