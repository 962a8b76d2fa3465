#pragma once

#include <string>
#include <utility>
#include <vector>

#include "apfnav/geometry.hpp"
#include "apfnav/planners.hpp"
#include "apfnav/simulation.hpp"

namespace apfnav::cli {

/// Everything a command needs: environment generation, planner choice and
/// simulation setup, plus the worker cap. The defaults reproduce the reference
/// benchmark setup.
struct CliConfig {
    EnvGenConfig env;
    PlannerConfig planner;
    SimConfig sim;
    int jobs = 0; ///< Monte Carlo workers; <= 0 picks the hardware concurrency

    /// Delegates to the component validators.
    void validate() const;

    friend bool operator==(const CliConfig&, const CliConfig&) = default;
};

/// Parses flat INI-style text: [env]/[planner]/[sim] sections, key = value
/// lines, full-line # comments. Unknown sections or keys and malformed values
/// throw std::runtime_error naming the offender; unspecified keys keep their
/// defaults. The result is validated.
CliConfig parse_config_text(const std::string& text);

/// parse_config_text over a file; throws std::runtime_error when the file
/// cannot be read.
CliConfig load_config(const std::string& path);

/// The effective configuration as config-file text; parsing it back yields an
/// identical configuration.
std::string emit_config(const CliConfig& cfg);

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double v);

/// "20:45,45:70" -> {{20, 45}, {45, 70}}. Throws std::runtime_error on empty
/// input or syntax errors.
std::vector<std::pair<int, int>> parse_density_bands(const std::string& text);

/// "100,300,1000" -> {100, 300, 1000}. Throws std::runtime_error on empty
/// input or syntax errors.
std::vector<double> parse_mu_grid(const std::string& text);

} // namespace apfnav::cli
