#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hsg/scenario.hpp"

namespace hsg {

enum class OutputFormat { csv, json };

struct RunOptions {
    std::filesystem::path out_dir = "out";
    OutputFormat format = OutputFormat::csv;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitDisagreement = 2;

struct RunOutcome {
    int exit_code = kExitOk;
    std::vector<std::filesystem::path> files;
    std::vector<std::string> messages;
    nlohmann::json summary;
};

/// Runs the requested analyses and writes reports to <out_dir>/<scenario.name>/.
/// Deterministic: identical inputs produce byte-identical files.
RunOutcome run(const Scenario& scenario, const RunOptions& opts = {});

} // namespace hsg
