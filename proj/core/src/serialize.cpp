#include "hsg/serialize.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

namespace hsg {

using nlohmann::json;

SchemaError::SchemaError(std::string field, const std::string& message)
    : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

namespace {

double number_at(const json& j, const std::string& path) {
    if (!j.is_number()) throw SchemaError(path, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw SchemaError(path, "expected a finite number");
    return v;
}

void reject_unknown_keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : allowed) known = known || it.key() == k;
        if (!known) throw SchemaError(path + "." + it.key(), "unknown field");
    }
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json optional_complex(const std::optional<Complex>& z) { return z ? complex_to_json(*z) : json(nullptr); }

} // namespace

json complex_to_json(Complex z) { return json::array({finite_or_null(z.real()), finite_or_null(z.imag())}); }

Complex complex_from_json(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) throw SchemaError(path, "expected [re, im]");
    return {number_at(j[0], path + "[0]"), number_at(j[1], path + "[1]")};
}

json measure_to_json(const Measure& mu) {
    json atoms = json::array();
    for (const Atom& a : mu.atoms()) atoms.push_back({a.location, a.weight});
    json ac = json::array();
    for (const AcPart& p : mu.ac_parts()) {
        ac.push_back({{"family", std::string(to_string(p.family))}, {"params", {p.p1, p.p2}}, {"weight", p.weight}});
    }
    return {{"atoms", atoms}, {"ac", ac}};
}

Measure measure_from_json(const json& j, const std::string& path) {
    if (j.is_null()) return {};
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    reject_unknown_keys(j, path, {"atoms", "ac"});
    std::vector<Atom> atoms;
    std::vector<AcPart> parts;
    if (j.contains("atoms")) {
        const json& a = j["atoms"];
        if (!a.is_array()) throw SchemaError(path + ".atoms", "expected an array");
        for (std::size_t k = 0; k < a.size(); ++k) {
            const std::string p = path + ".atoms[" + std::to_string(k) + "]";
            if (!a[k].is_array() || a[k].size() != 2) throw SchemaError(p, "expected [location, weight]");
            const Atom atom{number_at(a[k][0], p + "[0]"), number_at(a[k][1], p + "[1]")};
            if (!(atom.weight > 0.0)) throw SchemaError(p + "[1]", "weight must be positive");
            atoms.push_back(atom);
        }
    }
    if (j.contains("ac")) {
        const json& a = j["ac"];
        if (!a.is_array()) throw SchemaError(path + ".ac", "expected an array");
        for (std::size_t k = 0; k < a.size(); ++k) {
            const std::string p = path + ".ac[" + std::to_string(k) + "]";
            const json& e = a[k];
            if (!e.is_object()) throw SchemaError(p, "expected an object");
            reject_unknown_keys(e, p, {"family", "params", "weight"});
            if (!e.contains("family") || !e["family"].is_string()) throw SchemaError(p + ".family", "expected a string");
            AcPart part;
            try {
                part.family = ac_family_from_string(e["family"].get<std::string>());
            } catch (const DomainError& err) {
                throw SchemaError(p + ".family", err.what());
            }
            if (!e.contains("params") || !e["params"].is_array() || e["params"].size() != 2) {
                throw SchemaError(p + ".params", "expected two parameters");
            }
            part.p1 = number_at(e["params"][0], p + ".params[0]");
            part.p2 = number_at(e["params"][1], p + ".params[1]");
            part.weight = e.contains("weight") ? number_at(e["weight"], p + ".weight") : 1.0;
            try {
                Measure({}, {part});
            } catch (const DomainError& err) {
                throw SchemaError(p, err.what());
            }
            parts.push_back(part);
        }
    }
    return Measure(std::move(atoms), std::move(parts));
}

json triplet_to_json(const HerglotzTriplet& t) {
    return {{"alpha", t.alpha}, {"beta", t.beta}, {"mu", measure_to_json(t.mu)}};
}

HerglotzTriplet triplet_from_json(const json& j, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    reject_unknown_keys(j, path, {"alpha", "beta", "mu"});
    const double alpha = j.contains("alpha") ? number_at(j["alpha"], path + ".alpha") : 0.0;
    const double beta = j.contains("beta") ? number_at(j["beta"], path + ".beta") : 0.0;
    if (alpha < 0.0) throw SchemaError(path + ".alpha", "must be >= 0");
    Measure mu = j.contains("mu") ? measure_from_json(j["mu"], path + ".mu") : Measure{};
    return {alpha, beta, std::move(mu)};
}

json to_json(const LimitEstimate& e) {
    json tail = json::array();
    for (const auto& [x, v] : e.tail) tail.push_back({x, finite_or_null(v.real()), finite_or_null(v.imag())});
    return {{"value", e.infinite ? json(nullptr) : complex_to_json(e.value)},
            {"infinite", e.infinite},
            {"converged", e.converged},
            {"status", std::string(to_string(e.status))},
            {"error_indicator", finite_or_null(e.error_indicator)},
            {"tolerance", finite_or_null(e.tolerance)},
            {"tail", tail}};
}

json to_json(const ClassificationReport& r) {
    return {{"kind", std::string(to_string(r.kind))},
            {"spectral_value", r.spectral_value},
            {"step", std::string(to_string(r.step))},
            {"shift", std::string(to_string(r.shift))},
            {"extremal",
             {{"moments", std::string(to_string(r.extremal.moments))},
              {"zg_limit", std::string(to_string(r.extremal.zg_limit))},
              {"sqrt_koenigs", std::string(to_string(r.extremal.sqrt_koenigs))},
              {"consistent", r.extremal.consistent()}}},
            {"predicted_rate_constant", optional_complex(r.predicted_rate_constant)}};
}

json to_json(const ValidationReport& r) {
    json criteria = json::array();
    for (const CriterionResult& c : r.criteria) {
        criteria.push_back({{"name", c.name},
                            {"verdict", std::string(to_string(c.verdict))},
                            {"constant", optional_complex(c.constant)},
                            {"detail", c.detail}});
    }
    return {{"criteria", criteria},
            {"measured_constant", optional_complex(r.measured_constant)},
            {"consensus", std::string(to_string(r.consensus))},
            {"verdicts_agree", r.verdicts_agree},
            {"constants_agree", r.constants_agree},
            {"constant_rel_tol", r.constant_rel_tol},
            {"diagnostics", r.diagnostics},
            {"ok", r.ok()}};
}

json to_json(const KoenigsChart& chart) {
    return {{"kind", std::string(to_string(chart.kind))},
            {"lambda", chart.lambda},
            {"base_point", complex_to_json(chart.base_point)},
            {"normalization", complex_to_json(chart.normalization)}};
}

namespace {

struct PrecisionGuard {
    std::ostream& os;
    std::streamsize old;
    explicit PrecisionGuard(std::ostream& s) : os(s), old(s.precision(17)) {}
    ~PrecisionGuard() { os.precision(old); }
};

} // namespace

void write_orbit_csv(std::ostream& os, const Orbit& orbit) {
    PrecisionGuard guard(os);
    os << "t,re,im,abs,arg\n";
    for (const OrbitSample& s : orbit.samples) {
        os << s.t << ',' << s.value.real() << ',' << s.value.imag() << ',' << std::abs(s.value) << ','
           << std::arg(s.value) << '\n';
    }
}

void write_speed_csv(std::ostream& os, const SpeedDeviationSeries& s) {
    PrecisionGuard guard(os);
    os << "t,deviation\n";
    for (const auto& [t, d] : s.points) os << t << ',' << d << '\n';
}

void write_norm_growth_csv(std::ostream& os, const NormGrowth& g) {
    PrecisionGuard guard(os);
    os << "t,one_minus_abs,envelope_lower,envelope_upper,ratio_lower,ratio_upper\n";
    for (const NormGrowthRow& r : g.rows) {
        os << r.t << ',' << r.one_minus_abs_psi << ',' << r.envelope_lower << ',' << r.envelope_upper << ','
           << r.ratio_lower << ',' << r.ratio_upper << '\n';
    }
}

} // namespace hsg
