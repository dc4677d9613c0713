#include "hsg/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "hsg/serialize.hpp"

namespace hsg {

using nlohmann::json;

std::string_view to_string(Analysis a) {
    switch (a) {
    case Analysis::classify: return "classify";
    case Analysis::rate: return "rate";
    case Analysis::koenigs: return "koenigs";
    case Analysis::speed: return "speed";
    case Analysis::operators: return "operators";
    case Analysis::cross_validate: return "cross_validate";
    }
    return "unknown";
}

namespace {

double positive_number(const json& j, const std::string& path) {
    if (!j.is_number()) throw SchemaError(path, "expected a number");
    const double v = j.get<double>();
    if (!(v > 0.0) || !std::isfinite(v)) throw SchemaError(path, "expected a positive finite number");
    return v;
}

std::string string_at(const json& j, const std::string& path) {
    if (!j.is_string()) throw SchemaError(path, "expected a string");
    return j.get<std::string>();
}

Analysis analysis_from_string(const std::string& s, const std::string& path) {
    for (Analysis a : {Analysis::classify, Analysis::rate, Analysis::koenigs, Analysis::speed, Analysis::operators,
                       Analysis::cross_validate}) {
        if (to_string(a) == s) return a;
    }
    throw SchemaError(path, "unknown analysis '" + s + "'");
}

bool valid_name(const std::string& name) {
    if (name.empty() || name == "." || name == "..") return false;
    for (char c : name) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
                        c == '-' || c == '.';
        if (!ok) return false;
    }
    return true;
}

} // namespace

Scenario parse_scenario(const json& j, const ScenarioDefaults& defaults) {
    if (!j.is_object()) throw SchemaError("<root>", "expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        static const char* const known[] = {"schema",  "name",      "description", "triplet", "family", "start_points",
                                            "horizon", "tolerances", "analyses",   "tau",     "p_values", "seed"};
        bool found = false;
        for (const char* k : known) found = found || it.key() == k;
        if (!found) throw SchemaError(it.key(), "unknown field");
    }

    Scenario s;
    if (!j.contains("schema") || !j["schema"].is_number_integer()) throw SchemaError("schema", "expected an integer");
    s.schema = j["schema"].get<int>();
    if (s.schema != kScenarioSchema) throw SchemaError("schema", "unsupported schema version " + std::to_string(s.schema));

    if (!j.contains("name")) throw SchemaError("name", "missing");
    s.name = string_at(j["name"], "name");
    if (!valid_name(s.name)) throw SchemaError("name", "must be non-empty and use only letters, digits, '_', '-', '.'");
    if (j.contains("description")) s.description = string_at(j["description"], "description");

    const bool has_triplet = j.contains("triplet");
    const bool has_family = j.contains("family");
    if (has_triplet == has_family) throw SchemaError("triplet", "give exactly one of 'triplet' and 'family'");
    if (has_triplet) {
        s.triplet = triplet_from_json(j["triplet"], "triplet");
    } else {
        const json& f = j["family"];
        if (!f.is_object()) throw SchemaError("family", "expected an object");
        for (auto it = f.begin(); it != f.end(); ++it) {
            if (it.key() != "name" && it.key() != "param") throw SchemaError("family." + it.key(), "unknown field");
        }
        if (!f.contains("name")) throw SchemaError("family.name", "missing");
        ClosedFormFamily fam;
        try {
            fam.kind = closed_form_from_string(string_at(f["name"], "family.name"));
        } catch (const DomainError& e) {
            throw SchemaError("family.name", e.what());
        }
        if (f.contains("param")) {
            if (!f["param"].is_number()) throw SchemaError("family.param", "expected a number");
            fam.param = f["param"].get<double>();
        } else if (fam.kind != ClosedForm::two_atom) {
            throw SchemaError("family.param", "missing");
        }
        try {
            s.triplet = to_triplet(fam);
        } catch (const DomainError& e) {
            throw SchemaError("family.param", e.what());
        }
        s.family = fam;
    }
    if (s.triplet.is_trivial()) throw SchemaError("triplet", "G == 0 generates the identity semigroup");

    if (!j.contains("start_points")) throw SchemaError("start_points", "missing");
    const json& sp = j["start_points"];
    if (!sp.is_array() || sp.empty()) throw SchemaError("start_points", "expected a non-empty array");
    for (std::size_t k = 0; k < sp.size(); ++k) {
        const std::string p = "start_points[" + std::to_string(k) + "]";
        const Complex z = complex_from_json(sp[k], p);
        if (!(z.imag() > 0.0)) throw SchemaError(p, "start point must have positive imaginary part");
        s.start_points.push_back(z);
    }

    if (j.contains("horizon")) {
        s.horizon = positive_number(j["horizon"], "horizon");
    } else if (defaults.horizon) {
        s.horizon = *defaults.horizon;
    }
    if (!(s.horizon >= 1.0) || !std::isfinite(s.horizon)) throw SchemaError("horizon", "must be >= 1");

    if (defaults.tol) {
        if (!(*defaults.tol > 0.0)) throw SchemaError("tol", "must be positive");
        s.tolerances.ode_rel = *defaults.tol;
        s.tolerances.quad_rel = *defaults.tol;
    }
    if (j.contains("tolerances")) {
        const json& t = j["tolerances"];
        if (!t.is_object()) throw SchemaError("tolerances", "expected an object");
        for (auto it = t.begin(); it != t.end(); ++it) {
            const std::string p = "tolerances." + it.key();
            if (it.key() == "ode_rel") s.tolerances.ode_rel = positive_number(*it, p);
            else if (it.key() == "quad_rel") s.tolerances.quad_rel = positive_number(*it, p);
            else if (it.key() == "limit_rel") s.tolerances.limit_rel = positive_number(*it, p);
            else if (it.key() == "rate_rel") s.tolerances.rate_rel = positive_number(*it, p);
            else throw SchemaError(p, "unknown field");
        }
    }

    if (j.contains("analyses")) {
        const json& a = j["analyses"];
        if (!a.is_array()) throw SchemaError("analyses", "expected an array");
        for (std::size_t k = 0; k < a.size(); ++k) {
            const std::string p = "analyses[" + std::to_string(k) + "]";
            s.analyses.push_back(analysis_from_string(string_at(a[k], p), p));
        }
    }

    if (j.contains("tau")) {
        s.tau = complex_from_json(j["tau"], "tau");
        if (std::abs(std::abs(s.tau) - 1.0) > 1e-12) throw SchemaError("tau", "must have modulus 1");
    }
    if (j.contains("p_values")) {
        const json& p = j["p_values"];
        if (!p.is_array() || p.empty()) throw SchemaError("p_values", "expected a non-empty array");
        s.p_values.clear();
        for (std::size_t k = 0; k < p.size(); ++k) {
            const std::string path = "p_values[" + std::to_string(k) + "]";
            const double v = positive_number(p[k], path);
            if (v < 1.0) throw SchemaError(path, "p must be >= 1");
            s.p_values.push_back(v);
        }
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) throw SchemaError("seed", "expected a non-negative integer");
        s.seed = j["seed"].get<std::uint64_t>();
    }
    return s;
}

Scenario load_scenario(const std::filesystem::path& file, const ScenarioDefaults& defaults) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw SchemaError(file.string(), "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        std::size_t col = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t k = 0; k < end; ++k) {
            if (text[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw SchemaError(file.string() + ":" + std::to_string(line) + ":" + std::to_string(col), "JSON syntax error");
    }
    try {
        return parse_scenario(j, defaults);
    } catch (const SchemaError& e) {
        throw SchemaError(file.string() + ": " + e.field(),
                          std::string(e.what()).substr(e.field().size() + 2));
    }
}

} // namespace hsg
