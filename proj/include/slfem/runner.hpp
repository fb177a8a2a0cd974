#ifndef SLFEM_RUNNER_HPP
#define SLFEM_RUNNER_HPP

#include <optional>
#include <string>
#include <vector>

#include "slfem/config.hpp"
#include "slfem/output.hpp"

namespace slfem {

struct RunResult {
    int exit_status = 1;  // 0 iff converged and all files written
    SolveReport report;
    std::optional<TipProbe> probe;  // absent on uncracked geometry
};

/// One benchmark run: solve, recover fields, write
/// `<prefix>_probe.csv` (cracked only), `<prefix>_fields.vtk`, and
/// `<prefix>_report.txt`.
RunResult run_single(const RunConfig& cfg);

/// One run per value of the swept key (alpha, beta, load_c, or fiber), each
/// with its own file prefix, plus `<prefix>_sweep.csv` collecting the
/// crack-tip trends. Non-converged runs are recorded and skipped in the
/// trend flags. Returns 0 iff every run converged.
int run_sweep(const RunConfig& base, const std::string& key,
              const std::vector<std::string>& values);

/// Fast built-in invariant checks (tensor algebra, constitutive round trip,
/// mesh bookkeeping, patch test). Prints one line per check; returns 0 iff
/// all pass.
int run_selftest();

}  // namespace slfem

#endif
