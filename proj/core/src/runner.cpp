#include "hsg/runner.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "hsg/serialize.hpp"

namespace hsg {

using nlohmann::json;

namespace {

// Keeps e^{lambda t} inside double range for hyperbolic orbits.
constexpr double kMaxExponent = 600.0;
constexpr int kHyperbolicSamples = 200;

class Pipeline {
public:
    Pipeline(const Scenario& s, const RunOptions& o) : sc_(s), opts_(o), dir_(o.out_dir / s.name) {
        flow_.ode.rel_tol = s.tolerances.ode_rel;
        flow_.quadrature.rel_tol = s.tolerances.quad_rel;
        koenigs_.generator.rel_tol = s.tolerances.quad_rel;
        ray_.rel_tol = s.tolerances.limit_rel;
        rate_.rel_tol = s.tolerances.rate_rel;
        horizon_ = s.horizon;
        if (s.triplet.alpha > 0.0) horizon_ = std::min(horizon_, kMaxExponent / s.triplet.alpha);
    }

    RunOutcome execute() {
        std::filesystem::create_directories(dir_);
        if (horizon_ < sc_.horizon) {
            std::ostringstream os;
            os << "horizon capped at " << horizon_ << " to keep e^{lambda t} finite";
            out_.messages.push_back(os.str());
        }
        for (Analysis a : sc_.analyses) {
            switch (a) {
            case Analysis::classify: classify(); break;
            case Analysis::rate: rate(); break;
            case Analysis::koenigs: koenigs(); break;
            case Analysis::speed: speed(); break;
            case Analysis::operators: operators(); break;
            case Analysis::cross_validate: cross_validate_all(); break;
            }
        }
        write_orbits();
        out_.summary["scenario"] = sc_.name;
        out_.summary["exit_code"] = out_.exit_code;
        out_.summary["messages"] = out_.messages;
        return out_;
    }

private:
    const Orbit& orbit(std::size_t k) {
        auto it = orbits_.find(k);
        if (it != orbits_.end()) return it->second;
        const Complex z0 = k < sc_.start_points.size() ? sc_.start_points[k] : kI;
        // Hyperbolic orbits settle exponentially fast, so an even grid shows the tail best.
        const Schedule schedule =
            sc_.triplet.alpha > 0.0 ? Schedule::uniform(horizon_, kHyperbolicSamples) : Schedule::geometric(horizon_);
        Orbit o = integrate_orbit(sc_.triplet, z0, schedule, flow_);
        return orbits_.emplace(k, std::move(o)).first->second;
    }

    // Orbit from i, needed for the disc picture at psi_t(0).
    const Orbit& orbit_from_i() {
        for (std::size_t k = 0; k < sc_.start_points.size(); ++k)
            if (sc_.start_points[k] == kI) return orbit(k);
        return orbit(sc_.start_points.size());
    }

    const ClassificationReport& report() {
        if (report_) return *report_;
        ClassificationReport r = classify_algebraic(sc_.triplet);
        if (r.kind == Kind::parabolic) {
            if (r.step == Step::undetermined) r.step = hyperbolic_step_estimate(orbit(0), sc_.triplet, {}, flow_).verdict;
            if (r.shift == Shift::undetermined) r.shift = shift_classify(orbit(0)).verdict;
            r.extremal.zg_limit = zG_angular_limit(sc_.triplet, {}, ray_, flow_.quadrature).verdict;
            try {
                r.extremal.sqrt_koenigs = sqrt_conformality(sc_.triplet, make_chart(sc_.triplet), {}, ray_, koenigs_).verdict;
            } catch (const ChartError& e) {
                out_.messages.push_back(std::string("sqrt-Koenigs test: ") + e.what());
            }
        }
        report_ = r;
        return *report_;
    }

    void write(const std::string& name, const std::string& text) {
        const std::filesystem::path p = dir_ / name;
        std::ofstream os(p, std::ios::binary);
        if (!os) throw std::runtime_error("cannot write " + p.string());
        os << text;
        out_.files.push_back(p);
    }

    void write_json(const std::string& name, const json& j) { write(name, j.dump(2) + "\n"); }

    static json orbit_json(const Orbit& o) {
        json rows = json::array();
        for (const OrbitSample& s : o.samples)
            rows.push_back({{"t", s.t}, {"re", s.value.real()}, {"im", s.value.imag()}, {"abs", std::abs(s.value)},
                            {"arg", std::arg(s.value)}});
        return rows;
    }

    // Every orbit integrated for the requested analyses is exported.
    void write_orbits() {
        for (std::size_t k = 0; k < sc_.start_points.size(); ++k) {
            if (!orbits_.count(k)) continue;
            const std::string stem = "orbit_" + std::to_string(k);
            if (opts_.format == OutputFormat::csv) {
                std::ostringstream os;
                write_orbit_csv(os, orbit(k));
                write(stem + ".csv", os.str());
            } else {
                write_json(stem + ".json", orbit_json(orbit(k)));
            }
        }
    }

    void classify() {
        json j = to_json(report());
        j["triplet"] = triplet_to_json(sc_.triplet);
        write_json("classification.json", j);
    }

    void rate() {
        json per_point = json::array();
        for (std::size_t k = 0; k < sc_.start_points.size(); ++k) {
            const Orbit& o = orbit(k);
            json entry;
            entry["start_point"] = complex_to_json(sc_.start_points[k]);
            if (sc_.triplet.alpha > 0.0) {
                const RateEstimate r = rate_estimate(o, {Normalization::exp_lambda, sc_.triplet.alpha}, rate_);
                entry["exp_lambda"] = {{"limit", to_json(r.limit)}, {"modulus", to_json(r.modulus)}};
            } else {
                for (Normalization n : {Normalization::sqrt_t, Normalization::linear_t}) {
                    const RateEstimate r = rate_estimate(o, {n, 0.0}, rate_);
                    entry[std::string(to_string(n))] = {
                        {"limit", to_json(r.limit)}, {"modulus", to_json(r.modulus)}, {"tail_max", r.tail_max}};
                }
                const SlopeEstimate sl = slope(o, rate_);
                entry["slope"] = {{"limit", to_json(sl.limit)}, {"orthogonal", sl.orthogonal}};
            }
            per_point.push_back(entry);
        }
        write_json("rate.json", {{"horizon", horizon_}, {"orbits", per_point}});
    }

    void koenigs() {
        const KoenigsChart chart = make_chart(sc_.triplet);
        json chart_j = to_json(chart);
        json values = json::array();
        json residuals = json::array();
        for (const Complex z : sc_.start_points) {
            const Complex h = chart.kind == ChartKind::parabolic ? koenigs_parabolic(sc_.triplet, chart, z, koenigs_)
                                                                 : koenigs_hyperbolic(sc_.triplet, chart, z, koenigs_);
            values.push_back({{"z", complex_to_json(z)}, {"h", complex_to_json(h)}});
            for (double t : {1.0, 10.0, 100.0}) {
                if (chart.kind == ChartKind::hyperbolic && chart.lambda * t > kMaxExponent) continue;
                const double res = chart.kind == ChartKind::parabolic
                                       ? abel_residual(sc_.triplet, chart, z, t, koenigs_, flow_)
                                       : schroeder_residual(sc_.triplet, chart, z, t, koenigs_, flow_);
                residuals.push_back({{"z", complex_to_json(z)}, {"t", t}, {"residual", res}});
            }
        }
        chart_j["samples"] = values;
        json k;
        k["chart"] = to_json(chart);
        k["functional_equation"] = chart.kind == ChartKind::parabolic ? "abel" : "schroeder";
        k["residuals"] = residuals;
        if (chart.kind == ChartKind::parabolic) {
            try {
                const SqrtConformality s = sqrt_conformality(sc_.triplet, chart, {}, ray_, koenigs_);
                json samples = json::array();
                for (const auto& [y, h] : s.samples) samples.push_back({{"y", y}, {"h", complex_to_json(h)}});
                chart_j["ray_samples"] = samples;
                chart_j["min_slit_distance"] = s.min_slit_distance;
                k["sqrt_conformality"] = {{"verdict", std::string(to_string(s.verdict))},
                                          {"ratio", to_json(s.ratio)},
                                          {"predicted_rate", s.predicted_rate ? complex_to_json(*s.predicted_rate) : json(nullptr)},
                                          {"predicted_rate_plain_sqrt", s.predicted_rate_plain_sqrt
                                                                            ? complex_to_json(*s.predicted_rate_plain_sqrt)
                                                                            : json(nullptr)}};
            } catch (const ChartError& e) {
                chart_j["chart_violation"] = e.what();
                k["sqrt_conformality"] = {{"verdict", "undetermined"}, {"error", e.what()}};
            }
        }
        write_json("chart.json", chart_j);
        write_json("koenigs.json", k);
    }

    SpeedNormalizer normalizer() {
        if (sc_.triplet.alpha > 0.0) return {SpeedMode::hyperbolic, sc_.triplet.alpha};
        return report().step == Step::positive ? SpeedNormalizer{SpeedMode::phs, 0.0} : SpeedNormalizer{SpeedMode::zero_hs, 0.0};
    }

    void speed() {
        const SpeedNormalizer n = normalizer();
        json per_point = json::array();
        for (std::size_t k = 0; k < sc_.start_points.size(); ++k) {
            SpeedOptions so;
            if (n.mode == SpeedMode::hyperbolic) so.min_horizon = std::min(so.min_horizon, horizon_);
            const SpeedResult r = total_speed_deviation(orbit(k), n, so);
            const std::string stem = "speed_" + std::to_string(k);
            if (opts_.format == OutputFormat::csv) {
                std::ostringstream os;
                write_speed_csv(os, r.series);
                write(stem + ".csv", os.str());
            } else {
                json rows = json::array();
                for (const auto& [t, d] : r.series.points) rows.push_back({{"t", t}, {"deviation", d}});
                write_json(stem + ".json", rows);
            }
            per_point.push_back({{"start_point", complex_to_json(sc_.start_points[k])},
                                 {"verdict", std::string(to_string(r.verdict))},
                                 {"limit", to_json(r.limit)},
                                 {"rate_prediction", r.rate_prediction ? json(*r.rate_prediction) : json(nullptr)}});
        }
        write_json("speed.json", {{"mode", std::string(to_string(n.mode))}, {"lambda", n.lambda}, {"orbits", per_point}});
    }

    void operators() {
        const DiscOrbit disc = conjugate_orbit(orbit_from_i(), sc_.tau);
        const ProductCheck pc = product_check(disc);
        json growth = json::array();
        for (FunctionSpace space : {FunctionSpace::hardy, FunctionSpace::bergman}) {
            for (double p : sc_.p_values) {
                const NormGrowth g = norm_growth_check(disc, p, space);
                std::ostringstream name;
                name << "operators_" << to_string(space) << "_p" << p;
                if (opts_.format == OutputFormat::csv) {
                    std::ostringstream os;
                    write_norm_growth_csv(os, g);
                    write(name.str() + ".csv", os.str());
                } else {
                    json rows = json::array();
                    for (const NormGrowthRow& r : g.rows)
                        rows.push_back({{"t", r.t}, {"one_minus_abs", r.one_minus_abs_psi},
                                        {"envelope_lower", r.envelope_lower}, {"envelope_upper", r.envelope_upper},
                                        {"ratio_lower", r.ratio_lower}, {"ratio_upper", r.ratio_upper}});
                    write_json(name.str() + ".json", rows);
                }
                growth.push_back({{"space", std::string(to_string(space))},
                                  {"p", p},
                                  {"bounded", std::string(to_string(g.bounded))},
                                  {"min_ratio", g.rows.empty() ? json(nullptr) : json(g.min_ratio)},
                                  {"max_ratio", g.rows.empty() ? json(nullptr) : json(g.max_ratio)}});
            }
        }
        write_json("operators.json",
                   {{"tau", complex_to_json(sc_.tau)}, {"product_limit", to_json(pc.limit)}, {"norm_growth", growth}});
    }

    void cross_validate_all() {
        if (!sc_.triplet.is_parabolic()) {
            out_.messages.push_back("cross_validate skipped: the extremal-rate criteria apply to parabolic triplets only");
            return;
        }
        json per_point = json::array();
        bool all_ok = true;
        ValidationOptions vo;
        vo.ray = ray_;
        vo.rate = rate_;
        vo.constant_rel_tol = sc_.tolerances.rate_rel;
        for (std::size_t k = 0; k < sc_.start_points.size(); ++k) {
            const ValidationReport r = cross_validate(sc_.triplet, orbit(k), vo);
            json j = to_json(r);
            j["start_point"] = complex_to_json(sc_.start_points[k]);
            per_point.push_back(j);
            if (!r.ok()) {
                all_ok = false;
                for (const std::string& d : r.diagnostics) out_.messages.push_back("cross_validate: " + d);
            }
        }
        write_json("validation.json", {{"ok", all_ok}, {"reports", per_point}});
        if (!all_ok) out_.exit_code = kExitDisagreement;
    }

    const Scenario& sc_;
    RunOptions opts_;
    std::filesystem::path dir_;
    FlowOptions flow_;
    KoenigsOptions koenigs_;
    RayLimitOptions ray_;
    RateOptions rate_;
    double horizon_ = 0.0;
    std::map<std::size_t, Orbit> orbits_;
    std::optional<ClassificationReport> report_;
    RunOutcome out_;
};

} // namespace

RunOutcome run(const Scenario& scenario, const RunOptions& opts) { return Pipeline(scenario, opts).execute(); }

} // namespace hsg
