#include "cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "apfnav/io.hpp"
#include "apfnav/rng.hpp"
#include "apfnav/simulation.hpp"

namespace apfnav::cli {

namespace {

const char* kBenchHeader = "algo,n_lower,n_upper,trials,R_s,M_s_bar,S,T_a_ms";

/// Writes text to path, or to fallback when the path is empty.
int deliver_text(const std::string& text, const std::string& path, std::ostream& fallback,
                 std::ostream& err)
{
    if (path.empty()) {
        fallback << text;
        return kExitSuccess;
    }
    std::ofstream f(path);
    if (!f) {
        err << "error: cannot write " << path << '\n';
        return kExitUsage;
    }
    f << text;
    return kExitSuccess;
}

std::string optional_field(const std::optional<double>& v)
{
    return v ? format_double(*v) : std::string{};
}

} // namespace

int cmd_run(const CliConfig& cfg, const std::string& env_path, const std::string& out_path,
            std::ostream& out, std::ostream& err)
{
    Environment env;
    try {
        cfg.validate();
        std::mt19937_64 rng = make_trial_rng(cfg.sim.seed, 0);
        env = env_path.empty() ? sample_environment(cfg.env, rng) : load_environment(env_path);
        TrialResult trial = run_trial(env, cfg.planner, cfg.sim, rng);
        int rc = deliver_text(run_document_json(env, trial) + "\n", out_path, out, err);
        if (rc != kExitSuccess)
            return rc;
        err << "outcome " << to_string(trial.outcome) << " steps " << trial.steps << '\n';
        return trial.outcome == Outcome::Success ? kExitSuccess : kExitNavigationFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int cmd_bench(const CliConfig& cfg, const BenchRequest& req, std::ostream& out,
              std::ostream& err)
{
    if (req.algos.empty() || req.bands.empty()) {
        err << "error: bench needs at least one algorithm and one density band\n";
        return kExitUsage;
    }
    if (!req.trials_out.empty() && req.algos.size() * req.bands.size() != 1) {
        err << "error: --trials-out is only valid for a single algorithm and band\n";
        return kExitUsage;
    }

    std::ostringstream csv;
    csv << kBenchHeader << '\n';
    try {
        for (auto [lo, hi] : req.bands) {
            for (PlannerKind algo : req.algos) {
                CliConfig c = cfg;
                c.env.n_lower = lo;
                c.env.n_upper = hi;
                c.planner.kind = algo;
                c.validate();
                MonteCarloResult res = run_monte_carlo(c.env, c.planner, c.sim, c.jobs);
                csv << to_string(algo) << ',' << lo << ',' << hi << ',' << c.sim.trials << ','
                    << format_double(res.summary.success_rate) << ','
                    << optional_field(res.summary.avg_steps) << ','
                    << optional_field(res.summary.safety) << ','
                    << format_double(res.summary.avg_runtime_s * 1e3) << '\n';
                err << "bench " << to_string(algo) << ' ' << lo << ':' << hi << " R_s "
                    << format_double(res.summary.success_rate) << '\n';
                if (!req.trials_out.empty()) {
                    std::ofstream f(req.trials_out);
                    if (!f) {
                        err << "error: cannot write " << req.trials_out << '\n';
                        return kExitUsage;
                    }
                    write_trials_jsonl(f, res.trials, req.with_trajectories);
                }
            }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return deliver_text(csv.str(), req.out_csv, out, err);
}

int cmd_sweep_mu(const CliConfig& cfg, const SweepRequest& req, std::ostream& out,
                 std::ostream& err)
{
    try {
        if (!req.trace_path.empty()) {
            CliConfig c = cfg;
            c.planner.kind = PlannerKind::Abapf;
            c.validate();
            std::mt19937_64 rng = make_trial_rng(c.sim.seed, 0);
            Environment env = sample_environment(c.env, rng);
            std::vector<double> trace;
            TrialResult trial = run_trial(env, c.planner, c.sim, rng, &trace);
            std::ostringstream csv;
            csv << "step,mu_hat\n";
            for (std::size_t i = 0; i < trace.size(); ++i)
                csv << i + 1 << ',' << format_double(trace[i]) << '\n';
            err << "trace outcome " << to_string(trial.outcome) << " steps " << trial.steps
                << '\n';
            return deliver_text(csv.str(), req.trace_path, out, err);
        }

        if (req.algos.empty() || req.grid.empty()) {
            err << "error: sweep-mu needs at least one algorithm and one grid value\n";
            return kExitUsage;
        }
        std::ostringstream csv;
        csv << "algo,mu_o,trials,R_s\n";
        for (double mu : req.grid) {
            for (PlannerKind algo : req.algos) {
                CliConfig c = cfg;
                c.planner.kind = algo;
                c.planner.potential.mu_o = mu;
                c.validate();
                MonteCarloResult res = run_monte_carlo(c.env, c.planner, c.sim, c.jobs);
                csv << to_string(algo) << ',' << format_double(mu) << ',' << c.sim.trials
                    << ',' << format_double(res.summary.success_rate) << '\n';
                err << "sweep " << to_string(algo) << " mu_o " << format_double(mu) << " R_s "
                    << format_double(res.summary.success_rate) << '\n';
            }
        }
        return deliver_text(csv.str(), req.out_csv, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

namespace {

struct BenchRow {
    std::vector<std::string> fields; // the 8 raw CSV fields
    int lo = 0;
    int hi = 0;
    double rs = 0.0;
};

std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ','))
        fields.push_back(field);
    if (!line.empty() && line.back() == ',')
        fields.push_back("");
    return fields;
}

double parse_csv_double(const std::string& s, int line_no)
{
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::runtime_error("comparison: line " + std::to_string(line_no) +
                                 ": bad number '" + s + "'");
    return v;
}

} // namespace

std::string render_comparison(const std::string& csv_text)
{
    std::istringstream in(csv_text);
    std::string line;
    if (!std::getline(in, line) || line != kBenchHeader)
        throw std::runtime_error(std::string("comparison: expected header ") + kBenchHeader);

    std::vector<std::pair<int, int>> band_order;
    std::map<std::pair<int, int>, std::vector<BenchRow>> bands;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        BenchRow row;
        row.fields = split_csv_line(line);
        if (row.fields.size() != 8)
            throw std::runtime_error("comparison: line " + std::to_string(line_no) +
                                     ": expected 8 fields, got " +
                                     std::to_string(row.fields.size()));
        row.lo = static_cast<int>(parse_csv_double(row.fields[1], line_no));
        row.hi = static_cast<int>(parse_csv_double(row.fields[2], line_no));
        row.rs = parse_csv_double(row.fields[4], line_no);
        std::pair<int, int> key{row.lo, row.hi};
        if (bands.find(key) == bands.end())
            band_order.push_back(key);
        bands[key].push_back(std::move(row));
    }
    if (band_order.empty())
        throw std::runtime_error("comparison: no data rows");

    // display columns: algo, trials, R_s, M_s_bar, S, T_a_ms
    const int kSource[] = {0, 3, 4, 5, 6, 7};
    const char* kLabel[] = {"algo", "trials", "R_s", "M_s_bar", "S", "T_a_ms"};
    const int n_cols = 6;

    auto cell = [&](const BenchRow& row, int col) -> std::string {
        const std::string& raw = row.fields[static_cast<std::size_t>(kSource[col])];
        return raw.empty() ? "-" : raw;
    };

    std::vector<std::size_t> width(n_cols);
    for (int col = 0; col < n_cols; ++col)
        width[static_cast<std::size_t>(col)] = std::string(kLabel[col]).size();
    for (const auto& key : band_order)
        for (const BenchRow& row : bands[key])
            for (int col = 0; col < n_cols; ++col)
                width[static_cast<std::size_t>(col)] =
                    std::max(width[static_cast<std::size_t>(col)], cell(row, col).size());

    auto emit_row = [&](std::ostream& os, const std::string& mark, auto text_of) {
        os << mark;
        for (int col = 0; col < n_cols; ++col) {
            std::string text = text_of(col);
            if (col + 1 == n_cols) {
                os << text;
            } else {
                os << text
                   << std::string(width[static_cast<std::size_t>(col)] - text.size() + 2, ' ');
            }
        }
        os << '\n';
    };

    std::ostringstream out;
    bool first = true;
    for (const auto& key : band_order) {
        if (!first)
            out << '\n';
        first = false;
        out << '[' << key.first << ':' << key.second << "]\n";
        emit_row(out, "  ", [&](int col) { return std::string(kLabel[col]); });
        const std::vector<BenchRow>& rows = bands[key];
        double best = rows[0].rs;
        for (const BenchRow& row : rows)
            best = std::max(best, row.rs);
        for (const BenchRow& row : rows)
            emit_row(out, row.rs == best ? "* " : "  ",
                     [&](int col) { return cell(row, col); });
    }
    return out.str();
}

int cmd_compare(const std::string& csv_path, std::ostream& out, std::ostream& err)
{
    std::ifstream f(csv_path);
    if (!f) {
        err << "error: cannot open " << csv_path << '\n';
        return kExitUsage;
    }
    std::ostringstream buffer;
    buffer << f.rdbuf();
    try {
        out << render_comparison(buffer.str());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitSuccess;
}

} // namespace apfnav::cli
