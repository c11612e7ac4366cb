#pragma once

#include <optional>

#include "memwalk/cli/config.hpp"
#include "memwalk/cli/table.hpp"

namespace memwalk::cli {

struct SimulateResult {
    Table distribution;           // x, probability
    std::optional<Table> trace;   // t, p0 (when cfg.trace is set)
};

SimulateResult run_simulate(const RunConfig& cfg);

// x, even_limit, odd_limit over [-xmax, xmax]; meta carries p0, delta and the
// closed-form atom for comparison.
Table run_stationary(const RunConfig& cfg);

// x, density on an odd-sized grid strictly inside (-1/sqrt2, 1/sqrt2) that
// contains 0; meta carries delta, c0, c1, c2.
Table run_limit(const RunConfig& cfg);

// x, density_2state, density_4state, delta_2state, delta_4state.
Table run_compare2(const RunConfig& cfg);

// Sample points used by run_limit and run_compare2.
std::vector<double> density_grid(std::int64_t points);

// Runs cfg.command and writes its artifacts. Returns the process exit code.
int dispatch(const RunConfig& cfg);

}  // namespace memwalk::cli
