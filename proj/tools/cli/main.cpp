#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/config.hpp"

using namespace apfnav;
using namespace apfnav::cli;

namespace {

std::vector<PlannerKind> parse_algos(const std::vector<std::string>& names)
{
    std::vector<PlannerKind> kinds;
    for (const std::string& name : names)
        kinds.push_back(planner_kind_from_string(name));
    return kinds;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"potential-field navigation benchmark"};
    app.require_subcommand(1);

    std::string config_path;
    std::string algo;
    std::vector<std::string> algo_list;
    std::string env_path;
    std::string out_path;
    std::string strategy;
    std::string densities = "20:45,45:70,70:95";
    std::string mu_grid = "100,300,500,700,1000";
    std::string trace_path;
    std::string trials_out;
    std::string csv_path;
    int trials = 0;
    int jobs = 0;
    std::uint64_t seed = 0;
    bool with_trajectories = false;

    CLI::App* run = app.add_subcommand("run", "navigate one trial and export the run document");
    CLI::Option* run_config = run->add_option("--config", config_path, "configuration file");
    CLI::Option* run_algo =
        run->add_option("--algo", algo, "capf|bapf|abapf|crbapf|crbapf-star");
    CLI::Option* run_seed = run->add_option("--seed", seed, "base rng seed");
    CLI::Option* run_strategy =
        run->add_option("--mu-strategy", strategy, "literal-argmin|min-feasible");
    run->add_option("--env", env_path, "replay a stored environment JSON");
    run->add_option("--out", out_path, "run document path (default stdout)");

    CLI::App* bench = app.add_subcommand("bench", "Monte Carlo benchmark, CSV summary");
    CLI::Option* bench_config = bench->add_option("--config", config_path, "configuration file");
    CLI::Option* bench_algo = bench->add_option(
        "--algo", algo_list, "algorithms to benchmark (default: the four reference planners)");
    CLI::Option* bench_trials = bench->add_option("--trials", trials, "trials per run");
    CLI::Option* bench_seed = bench->add_option("--seed", seed, "base rng seed");
    CLI::Option* bench_jobs = bench->add_option("--jobs", jobs, "worker threads (0 = hardware)");
    CLI::Option* bench_strategy =
        bench->add_option("--mu-strategy", strategy, "literal-argmin|min-feasible");
    bench->add_option("--densities", densities, "obstacle-count bands, e.g. 20:45,45:70");
    bench->add_option("--out", out_path, "summary CSV path (default stdout)");
    bench->add_option("--trials-out", trials_out,
                      "per-trial JSON-lines path (single algorithm and band)");
    bench->add_flag("--trajectories", with_trajectories, "include trajectories in --trials-out");

    CLI::App* sweep = app.add_subcommand("sweep-mu", "success rate across repulsive decays");
    CLI::Option* sweep_config = sweep->add_option("--config", config_path, "configuration file");
    CLI::Option* sweep_algo =
        sweep->add_option("--algo", algo_list, "algorithms to sweep (default: bapf crbapf-star)");
    CLI::Option* sweep_trials = sweep->add_option("--trials", trials, "trials per grid point");
    CLI::Option* sweep_seed = sweep->add_option("--seed", seed, "base rng seed");
    CLI::Option* sweep_jobs = sweep->add_option("--jobs", jobs, "worker threads (0 = hardware)");
    CLI::Option* sweep_strategy =
        sweep->add_option("--mu-strategy", strategy, "literal-argmin|min-feasible");
    sweep->add_option("--mu-grid", mu_grid, "comma-separated mu_o values");
    sweep->add_option("--out", out_path, "sweep CSV path (default stdout)");
    sweep->add_option("--trace", trace_path,
                      "write a single-run per-step adaptive decay trace instead");

    CLI::App* compare = app.add_subcommand("compare", "render a bench CSV as an aligned table");
    compare->add_option("csv", csv_path, "bench summary CSV")->required();
    compare->add_option("--out", out_path, "table path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        CliConfig cfg;
        CLI::Option* config_opt = app.got_subcommand(run)     ? run_config
                                  : app.got_subcommand(bench) ? bench_config
                                  : app.got_subcommand(sweep) ? sweep_config
                                                              : nullptr;
        if (config_opt != nullptr && config_opt->count() > 0)
            cfg = load_config(config_path);

        if (app.got_subcommand(run)) {
            if (run_algo->count() > 0)
                cfg.planner.kind = planner_kind_from_string(algo);
            if (run_seed->count() > 0)
                cfg.sim.seed = seed;
            if (run_strategy->count() > 0)
                cfg.planner.mu_strategy = mu_strategy_from_string(strategy);
            return cmd_run(cfg, env_path, out_path, std::cout, std::cerr);
        }

        if (app.got_subcommand(bench)) {
            if (bench_trials->count() > 0)
                cfg.sim.trials = trials;
            if (bench_seed->count() > 0)
                cfg.sim.seed = seed;
            if (bench_jobs->count() > 0)
                cfg.jobs = jobs;
            if (bench_strategy->count() > 0)
                cfg.planner.mu_strategy = mu_strategy_from_string(strategy);
            BenchRequest req;
            req.algos = bench_algo->count() > 0
                            ? parse_algos(algo_list)
                            : std::vector<PlannerKind>{PlannerKind::Capf, PlannerKind::Bapf,
                                                       PlannerKind::CrBapf,
                                                       PlannerKind::CrBapfStar};
            req.bands = parse_density_bands(densities);
            req.out_csv = out_path;
            req.trials_out = trials_out;
            req.with_trajectories = with_trajectories;
            return cmd_bench(cfg, req, std::cout, std::cerr);
        }

        if (app.got_subcommand(sweep)) {
            if (sweep_trials->count() > 0)
                cfg.sim.trials = trials;
            if (sweep_seed->count() > 0)
                cfg.sim.seed = seed;
            if (sweep_jobs->count() > 0)
                cfg.jobs = jobs;
            if (sweep_strategy->count() > 0)
                cfg.planner.mu_strategy = mu_strategy_from_string(strategy);
            SweepRequest req;
            req.algos = sweep_algo->count() > 0
                            ? parse_algos(algo_list)
                            : std::vector<PlannerKind>{PlannerKind::Bapf,
                                                       PlannerKind::CrBapfStar};
            req.grid = parse_mu_grid(mu_grid);
            req.out_csv = out_path;
            req.trace_path = trace_path;
            return cmd_sweep_mu(cfg, req, std::cout, std::cerr);
        }

        if (out_path.empty())
            return cmd_compare(csv_path, std::cout, std::cerr);
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << '\n';
            return kExitUsage;
        }
        return cmd_compare(csv_path, out, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
