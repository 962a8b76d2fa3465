#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cli/config.hpp"

namespace apfnav::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitNavigationFailure = 1;
inline constexpr int kExitUsage = 2;

/// One trial. env_path empty samples a fresh environment from cfg.env (the
/// run then replays trial 0 of a benchmark with the same config and seed);
/// otherwise the stored environment is loaded. The run document JSON goes to
/// out_path, or to `out` when the path is empty. Returns 0 on Success, 1 on
/// any other outcome, 2 on I/O errors.
int cmd_run(const CliConfig& cfg, const std::string& env_path, const std::string& out_path,
            std::ostream& out, std::ostream& err);

struct BenchRequest {
    std::vector<PlannerKind> algos;
    std::vector<std::pair<int, int>> bands;
    std::string out_csv;    ///< empty = write the CSV to `out`
    std::string trials_out; ///< optional JSON-lines dump; single algo and band only
    bool with_trajectories = false;
};

/// Monte Carlo per band x algorithm (bands outer), one CSV row each:
/// algo,n_lower,n_upper,trials,R_s,M_s_bar,S,T_a_ms. The optional columns are
/// empty when no trial qualifies. Progress goes to `err`.
int cmd_bench(const CliConfig& cfg, const BenchRequest& req, std::ostream& out,
              std::ostream& err);

struct SweepRequest {
    std::vector<PlannerKind> algos; ///< typically {Bapf, CrBapfStar}
    std::vector<double> grid;       ///< mu_o values, benchmarked in the given order
    std::string out_csv;            ///< empty = write the CSV to `out`
    std::string trace_path;         ///< nonempty switches to single-run trace mode
};

/// Sweep mode: one CSV row algo,mu_o,trials,R_s per grid point x algorithm
/// (grid outer). Trace mode (trace_path set): runs one adaptive-decay trial
/// and writes the per-step decay series as step,mu_hat CSV instead.
int cmd_sweep_mu(const CliConfig& cfg, const SweepRequest& req, std::ostream& out,
                 std::ostream& err);

/// Renders a cmd_bench CSV as an aligned text table, grouped by density band
/// in order of first appearance, best R_s rows marked with '*'. Deterministic:
/// equal input bytes give equal output bytes. Throws std::runtime_error on
/// malformed input.
std::string render_comparison(const std::string& csv_text);

/// render_comparison over a file, printed to `out`; malformed or unreadable
/// input reports to `err` and returns 2.
int cmd_compare(const std::string& csv_path, std::ostream& out, std::ostream& err);

} // namespace apfnav::cli
