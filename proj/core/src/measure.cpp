#include "hsg/measure.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace hsg {

namespace {

// Gaussian tails beyond this many standard deviations are below double underflow
// relative to the peak.
constexpr double kGaussianCutoff = 40.0;

void check_weight(double w, const char* what) {
    if (!(w > 0.0) || !std::isfinite(w)) {
        throw DomainError(std::string(what) + ": weight must be positive and finite");
    }
}

void check_part(const AcPart& part) {
    check_weight(part.weight, "ac part");
    if (!std::isfinite(part.p1) || !std::isfinite(part.p2)) throw DomainError("ac part: non-finite parameter");
    switch (part.family) {
    case AcFamily::cauchy:
        if (!(part.p2 > 0.0)) throw DomainError("cauchy: scale must be positive");
        break;
    case AcFamily::gaussian:
        if (!(part.p2 > 0.0)) throw DomainError("gaussian: sigma must be positive");
        break;
    case AcFamily::uniform:
        if (!(part.p1 < part.p2)) throw DomainError("uniform: need a < b");
        break;
    }
}

QuadratureResult integrate_part(const AcPart& part, const RealToComplex& f, const QuadratureOptions& opts) {
    const double w = part.weight;
    switch (part.family) {
    case AcFamily::cauchy: {
        const double c = part.p1;
        const double gamma = part.p2;
        // density * ds = dtheta / pi under s = c + gamma tan(theta)
        auto g = [&](double theta) { return f(c + gamma * std::tan(theta)) * (w / std::numbers::pi); };
        return integrate_interval(g, -0.5 * std::numbers::pi, 0.5 * std::numbers::pi, opts);
    }
    case AcFamily::gaussian: {
        const double mean = part.p1;
        const double sigma = part.p2;
        const double norm = w / std::sqrt(2.0 * std::numbers::pi);
        auto g = [&](double theta) {
            const double u = std::tan(theta);
            return f(mean + sigma * u) * (norm * std::exp(-0.5 * u * u) * (1.0 + u * u));
        };
        const double edge = std::atan(kGaussianCutoff);
        return integrate_interval(g, -edge, edge, opts);
    }
    case AcFamily::uniform: {
        const double density = w / (part.p2 - part.p1);
        auto g = [&](double s) { return f(s) * density; };
        return integrate_interval(g, part.p1, part.p2, opts);
    }
    }
    return {};
}

} // namespace

std::string_view to_string(AcFamily f) {
    switch (f) {
    case AcFamily::cauchy: return "cauchy";
    case AcFamily::gaussian: return "gaussian";
    case AcFamily::uniform: return "uniform";
    }
    return "unknown";
}

AcFamily ac_family_from_string(std::string_view name) {
    if (name == "cauchy") return AcFamily::cauchy;
    if (name == "gaussian") return AcFamily::gaussian;
    if (name == "uniform") return AcFamily::uniform;
    throw DomainError("unknown measure family '" + std::string(name) + "'");
}

Measure::Measure(std::vector<Atom> atoms, std::vector<AcPart> ac_parts)
    : atoms_(std::move(atoms)), ac_parts_(std::move(ac_parts)) {
    for (const Atom& a : atoms_) {
        check_weight(a.weight, "atom");
        if (!std::isfinite(a.location)) throw DomainError("atom: non-finite location");
    }
    for (const AcPart& p : ac_parts_) check_part(p);
}

Measure Measure::atom(double location, double weight) { return Measure({{location, weight}}, {}); }

Measure Measure::cauchy(double center, double scale, double weight) {
    return Measure({}, {{AcFamily::cauchy, center, scale, weight}});
}

Measure Measure::gaussian(double mean, double sigma, double weight) {
    return Measure({}, {{AcFamily::gaussian, mean, sigma, weight}});
}

Measure Measure::uniform(double a, double b, double weight) {
    return Measure({}, {{AcFamily::uniform, a, b, weight}});
}

Measure Measure::operator+(const Measure& other) const {
    std::vector<Atom> atoms = atoms_;
    atoms.insert(atoms.end(), other.atoms_.begin(), other.atoms_.end());
    std::vector<AcPart> parts = ac_parts_;
    parts.insert(parts.end(), other.ac_parts_.begin(), other.ac_parts_.end());
    return Measure(std::move(atoms), std::move(parts));
}

bool Measure::finite_second_moment() const {
    for (const AcPart& p : ac_parts_)
        if (!p.finite_second_moment()) return false;
    return true;
}

double mass(const Measure& mu) {
    double total = 0.0;
    for (const Atom& a : mu.atoms()) total += a.weight;
    for (const AcPart& p : mu.ac_parts()) total += p.weight;
    return total;
}

MomentValue moment(const Measure& mu, int k) {
    if (k != 1 && k != 2) throw DomainError("moment: order must be 1 or 2");
    MomentValue m;
    for (const Atom& a : mu.atoms()) m.value += a.weight * (k == 1 ? a.location : a.location * a.location);
    for (const AcPart& p : mu.ac_parts()) {
        switch (p.family) {
        case AcFamily::cauchy:
            if (k == 1) m.value += p.weight * p.p1;  // principal value about the center
            else m.infinite = true;
            break;
        case AcFamily::gaussian:
            m.value += p.weight * (k == 1 ? p.p1 : p.p1 * p.p1 + p.p2 * p.p2);
            break;
        case AcFamily::uniform: {
            const double a = p.p1;
            const double b = p.p2;
            m.value += p.weight * (k == 1 ? 0.5 * (a + b) : (a * a + a * b + b * b) / 3.0);
            break;
        }
        }
    }
    if (m.infinite) m.value = std::numeric_limits<double>::infinity();
    return m;
}

QuadratureResult integrate(const Measure& mu, const RealToComplex& f, const QuadratureOptions& opts) {
    QuadratureResult total;
    for (const Atom& a : mu.atoms()) total.value += a.weight * f(a.location);
    total.evaluations = static_cast<int>(mu.atoms().size());
    for (const AcPart& p : mu.ac_parts()) total += integrate_part(p, f, opts);
    return total;
}

} // namespace hsg
