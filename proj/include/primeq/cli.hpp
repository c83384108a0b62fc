#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace primeq::cli {

enum class Command {
    none,
    state,
    entropy_scan,
    qubit_density,
    bias_scan,
    grover_fig,
    oracle_verify,
    count_sim,
    rh_scan,
};

struct RunConfig {
    Command command = Command::none;
    int n = 0;
    int l_min = -1, l_max = -1;
    int i = 0;
    bool odd = false;
    uint64_t limit = 0;
    uint64_t step = 0;
    int n_min = 0, n_max = 0;
    std::vector<uint64_t> witnesses;
    int prob_k = 0;  // > 0 selects probabilistic witnesses
    double c = 0.0;
    int t = 0;
    int samples = 1;
    uint64_t seed = 0;
    std::string format;  // empty picks the per-command default
    std::string pi_table_path;
};

// Aggregated precondition violations, empty when the config is runnable.
std::vector<std::string> validate(const RunConfig& config);

// Parse argv and dispatch. Data on `out`, diagnostics and progress on
// `err`. Exit code 0 on success, 2 on usage or validation errors, 1 on
// internal failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Numeric formatting used for all emitted values: 12 significant digits.
std::string fmt(double v);

}  // namespace primeq::cli
