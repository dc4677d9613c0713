#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hsg/flow.hpp"

namespace hsg {

inline constexpr int kScenarioSchema = 1;

enum class Analysis { classify, rate, koenigs, speed, operators, cross_validate };
std::string_view to_string(Analysis a);

struct Tolerances {
    double ode_rel = 1e-10;
    double quad_rel = 1e-10;
    double limit_rel = 1e-6;
    double rate_rel = 1e-3;
};

/// Values supplied on the command line; fields present in a scenario file win.
struct ScenarioDefaults {
    std::optional<double> horizon;
    std::optional<double> tol;  ///< overrides ode_rel and quad_rel
};

struct Scenario {
    int schema = kScenarioSchema;
    std::string name;
    std::string description;
    HerglotzTriplet triplet;
    std::optional<ClosedFormFamily> family;
    std::vector<Complex> start_points;
    double horizon = 1e8;
    Tolerances tolerances;
    std::vector<Analysis> analyses;
    Complex tau{1.0, 0.0};
    std::vector<double> p_values{1.0, 2.0, 4.0};
    /// Seed for randomized property checks run against this scenario in tests.
    std::uint64_t seed = 0;
};

/// Validates and converts scenario JSON. Throws SchemaError with a field path.
Scenario parse_scenario(const nlohmann::json& j, const ScenarioDefaults& defaults = {});

/// Reads a scenario file. JSON syntax errors are reported with line and column.
Scenario load_scenario(const std::filesystem::path& file, const ScenarioDefaults& defaults = {});

} // namespace hsg
