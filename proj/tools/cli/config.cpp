#include "cli/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace apfnav::cli {

namespace {

std::string trim(const std::string& s)
{
    const char* ws = " \t\r";
    std::size_t begin = s.find_first_not_of(ws);
    if (begin == std::string::npos)
        return {};
    std::size_t end = s.find_last_not_of(ws);
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void bad_value(const std::string& where, const std::string& value,
                            const char* expected)
{
    throw std::runtime_error("config: " + where + ": expected " + expected + ", got '" +
                             value + "'");
}

double parse_double(const std::string& value, const std::string& where)
{
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        bad_value(where, value, "a number");
    return v;
}

int parse_int(const std::string& value, const std::string& where)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        bad_value(where, value, "an integer");
    return v;
}

std::uint64_t parse_u64(const std::string& value, const std::string& where)
{
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        bad_value(where, value, "an unsigned integer");
    return v;
}

void apply_env_key(EnvGenConfig& env, const std::string& key, const std::string& value,
                   const std::string& where)
{
    if (key == "length_x")
        env.length_x = parse_double(value, where);
    else if (key == "length_y")
        env.length_y = parse_double(value, where);
    else if (key == "start_x")
        env.start.x = parse_double(value, where);
    else if (key == "start_y")
        env.start.y = parse_double(value, where);
    else if (key == "target_x")
        env.target.x = parse_double(value, where);
    else if (key == "target_y")
        env.target.y = parse_double(value, where);
    else if (key == "n_lower")
        env.n_lower = parse_int(value, where);
    else if (key == "n_upper")
        env.n_upper = parse_int(value, where);
    else if (key == "spawn_clearance")
        env.spawn_clearance = parse_double(value, where);
    else
        throw std::runtime_error("config: unknown key " + where);
}

void apply_planner_key(PlannerConfig& pc, const std::string& key, const std::string& value,
                       const std::string& where)
{
    if (key == "algo") {
        try {
            pc.kind = planner_kind_from_string(value);
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error("config: " + where + ": " + e.what());
        }
    } else if (key == "n_b")
        pc.n_b = parse_int(value, where);
    else if (key == "step")
        pc.step = parse_double(value, where);
    else if (key == "alpha_t")
        pc.potential.alpha_t = parse_double(value, where);
    else if (key == "mu_t")
        pc.potential.mu_t = parse_double(value, where);
    else if (key == "alpha_o")
        pc.potential.alpha_o = parse_double(value, where);
    else if (key == "mu_o")
        pc.potential.mu_o = parse_double(value, where);
    else if (key == "rho_l")
        pc.potential.rho_l = parse_double(value, where);
    else if (key == "rho_u")
        pc.potential.rho_u = parse_double(value, where);
    else if (key == "mu_min")
        pc.potential.mu_min = parse_double(value, where);
    else if (key == "mu_max")
        pc.potential.mu_max = parse_double(value, where);
    else if (key == "mu_strategy") {
        try {
            pc.mu_strategy = mu_strategy_from_string(value);
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error("config: " + where + ": " + e.what());
        }
    } else if (key == "random_walk_max_attempts")
        pc.random_walk_max_attempts = parse_int(value, where);
    else
        throw std::runtime_error("config: unknown key " + where);
}

void apply_sim_key(CliConfig& cfg, const std::string& key, const std::string& value,
                   const std::string& where)
{
    SimConfig& sim = cfg.sim;
    if (key == "detection_range")
        sim.detection_range = parse_double(value, where);
    else if (key == "goal_radius")
        sim.goal_radius = parse_double(value, where);
    else if (key == "collision_radius")
        sim.collision_radius = parse_double(value, where);
    else if (key == "noise_variance")
        sim.noise_variance = parse_double(value, where);
    else if (key == "max_steps")
        sim.max_steps = parse_int(value, where);
    else if (key == "trials")
        sim.trials = parse_int(value, where);
    else if (key == "seed")
        sim.seed = parse_u64(value, where);
    else if (key == "jobs")
        cfg.jobs = parse_int(value, where);
    else
        throw std::runtime_error("config: unknown key " + where);
}

} // namespace

void CliConfig::validate() const
{
    env.validate();
    planner.validate();
    sim.validate();
}

CliConfig parse_config_text(const std::string& text)
{
    CliConfig cfg;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#')
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::runtime_error("config line " + std::to_string(line_no) +
                                         ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "env" && section != "planner" && section != "sim")
                throw std::runtime_error("config line " + std::to_string(line_no) +
                                         ": unknown section [" + section + "]");
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": expected 'key = value'");
        if (section.empty())
            throw std::runtime_error("config line " + std::to_string(line_no) + ": key '" +
                                     key + "' appears before any section header");
        std::string where = section + "." + key;
        if (section == "env")
            apply_env_key(cfg.env, key, value, where);
        else if (section == "planner")
            apply_planner_key(cfg.planner, key, value, where);
        else
            apply_sim_key(cfg, key, value, where);
    }
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("config: ") + e.what());
    }
    return cfg;
}

CliConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

std::string format_double(double v)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

std::string emit_config(const CliConfig& cfg)
{
    std::ostringstream out;
    out << "[env]\n";
    out << "length_x = " << format_double(cfg.env.length_x) << '\n';
    out << "length_y = " << format_double(cfg.env.length_y) << '\n';
    out << "start_x = " << format_double(cfg.env.start.x) << '\n';
    out << "start_y = " << format_double(cfg.env.start.y) << '\n';
    out << "target_x = " << format_double(cfg.env.target.x) << '\n';
    out << "target_y = " << format_double(cfg.env.target.y) << '\n';
    out << "n_lower = " << cfg.env.n_lower << '\n';
    out << "n_upper = " << cfg.env.n_upper << '\n';
    out << "spawn_clearance = " << format_double(cfg.env.spawn_clearance) << '\n';
    out << '\n';
    out << "[planner]\n";
    out << "algo = " << to_string(cfg.planner.kind) << '\n';
    out << "n_b = " << cfg.planner.n_b << '\n';
    out << "step = " << format_double(cfg.planner.step) << '\n';
    out << "alpha_t = " << format_double(cfg.planner.potential.alpha_t) << '\n';
    out << "mu_t = " << format_double(cfg.planner.potential.mu_t) << '\n';
    out << "alpha_o = " << format_double(cfg.planner.potential.alpha_o) << '\n';
    out << "mu_o = " << format_double(cfg.planner.potential.mu_o) << '\n';
    out << "rho_l = " << format_double(cfg.planner.potential.rho_l) << '\n';
    out << "rho_u = " << format_double(cfg.planner.potential.rho_u) << '\n';
    out << "mu_min = " << format_double(cfg.planner.potential.mu_min) << '\n';
    out << "mu_max = " << format_double(cfg.planner.potential.mu_max) << '\n';
    out << "mu_strategy = " << to_string(cfg.planner.mu_strategy) << '\n';
    out << "random_walk_max_attempts = " << cfg.planner.random_walk_max_attempts << '\n';
    out << '\n';
    out << "[sim]\n";
    out << "detection_range = " << format_double(cfg.sim.detection_range) << '\n';
    out << "goal_radius = " << format_double(cfg.sim.goal_radius) << '\n';
    out << "collision_radius = " << format_double(cfg.sim.collision_radius) << '\n';
    out << "noise_variance = " << format_double(cfg.sim.noise_variance) << '\n';
    out << "max_steps = " << cfg.sim.max_steps << '\n';
    out << "trials = " << cfg.sim.trials << '\n';
    out << "seed = " << cfg.sim.seed << '\n';
    out << "jobs = " << cfg.jobs << '\n';
    return out.str();
}

std::vector<std::pair<int, int>> parse_density_bands(const std::string& text)
{
    std::vector<std::pair<int, int>> bands;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw std::runtime_error("density band '" + item + "' is not of the form lo:hi");
        int lo = parse_int(trim(item.substr(0, colon)), "densities");
        int hi = parse_int(trim(item.substr(colon + 1)), "densities");
        bands.emplace_back(lo, hi);
    }
    if (bands.empty())
        throw std::runtime_error("densities: no bands given");
    return bands;
}

std::vector<double> parse_mu_grid(const std::string& text)
{
    std::vector<double> grid;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        grid.push_back(parse_double(trim(item), "mu-grid"));
    }
    if (grid.empty())
        throw std::runtime_error("mu-grid: no values given");
    return grid;
}

} // namespace apfnav::cli
