#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "apfnav/geometry.hpp"
#include "apfnav/simulation.hpp"

namespace apfnav {

/// Environment as a JSON document:
/// {"length_x": .., "length_y": .., "start": [x, y], "target": [x, y],
///  "obstacles": [[x, y], ...]}
std::string environment_to_json(const Environment& env);

/// Parses and validates the schema above. Throws std::runtime_error on
/// malformed input or invariant violations.
Environment environment_from_json(const std::string& text);

Environment load_environment(const std::string& path);
void save_environment(const Environment& env, const std::string& path);

/// One trial as a single JSON line. The trajectory is included only on request.
std::string trial_to_json_line(const TrialResult& trial, int trial_index, bool with_trajectory);

/// One line per trial.
void write_trials_jsonl(std::ostream& out, std::span<const TrialResult> trials,
                        bool with_trajectories);

/// Self-contained record of a single run: environment, outcome, steps,
/// trajectory.
std::string run_document_json(const Environment& env, const TrialResult& trial);

} // namespace apfnav
