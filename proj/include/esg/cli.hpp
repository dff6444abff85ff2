#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace esg::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kBudgetExceeded = 2,
    kInvariantBreach = 3,
};

struct RunConfig {
    std::string verb;
    std::vector<std::string> gen;
    std::string graph_file;
    std::string group;
    std::string strategy;
    std::uint64_t budget_nodes = 0;
    double budget_secs = 0;
    unsigned workers = 1;
    std::uint64_t seed = 1;
    std::string format = "json";

    std::uint64_t max_value = 0;
    bool planar = false;
    bool directed = false;
    bool exact = true;
    std::string partition;
    std::uint64_t prime = 0;
    std::string anchor;
    std::string labeling_file;
    std::string c_grid = "0";
};

struct RunResult {
    int exit_code = kOk;
    std::string out;
    std::string err;
};

/// Parses args (without the program name) and runs the verb.
RunResult run(const std::vector<std::string>& args);

/// Runs an already-parsed configuration.
RunResult run(const RunConfig& config);

}  // namespace esg::cli
