#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "apfnav/geometry.hpp"
#include "apfnav/planners.hpp"

namespace apfnav {

struct SimConfig {
    double detection_range = 8.0;  ///< sensor radius rho_rn (m)
    double goal_radius = 0.4;      ///< success when within this of the target (m)
    double collision_radius = 0.4; ///< failure when within this of any obstacle (m)
    double noise_variance = 0.01;  ///< actuation noise variance per axis (m^2)
    int max_steps = 1000;
    int trials = 4000;
    std::uint64_t seed = 1;

    /// Throws std::invalid_argument naming the offending field unless
    /// detection_range > 0, goal_radius > 0, collision_radius >= 0,
    /// noise_variance >= 0, max_steps >= 1 and trials >= 1.
    void validate() const;

    friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

/// Obstacles within detection_range of pos (closed boundary: distance equal to
/// the range is detected), as (environment index, exact position) pairs in
/// index order.
std::vector<std::pair<int, Point2>> sense(const Environment& env, Point2 pos,
                                          double detection_range);

/// Executes a commanded waypoint: waypoint + i.i.d. zero-mean Gaussian noise
/// of the given variance per axis (x drawn first, then y). Zero variance
/// returns the waypoint exactly.
Point2 apply_motion(Point2 waypoint, double noise_variance, std::mt19937_64& rng);

enum class Outcome { Success, LocalMinima, Collision, Timeout };

std::string to_string(Outcome o);
/// Parses "success|local_minima|collision|timeout"; throws std::invalid_argument otherwise.
Outcome outcome_from_string(const std::string& s);

struct TrialResult {
    Outcome outcome = Outcome::Timeout;
    int steps = 0;                       ///< executed moves; trajectory.size() == steps + 1
    std::vector<Point2> trajectory;      ///< start position first, then one point per move
    std::vector<int> detected_obstacles; ///< sorted unique env indices seen at any step
    double wall_time_s = 0.0;            ///< sense/plan/move loop only
};

/// Runs one navigation trial. Loop order per step: success check, sense, plan
/// (deadlock -> LocalMinima), move with noise, collision check against all
/// obstacles, step cap check (-> Timeout). When mu_trace is non-null and the
/// planner is Abapf, the per-move adaptive decay is appended to it.
TrialResult run_trial(const Environment& env, const PlannerConfig& pc, const SimConfig& sc,
                      std::mt19937_64& rng, std::vector<double>* mu_trace = nullptr);

struct MetricsSummary {
    double success_rate = 0.0;        ///< successful / total trials
    std::optional<double> avg_steps;  ///< mean steps over successful trials
    std::optional<double> safety;     ///< mean per-trial safety over successful trials (m)
    double avg_runtime_s = 0.0;       ///< mean loop wall time over all trials

    friend bool operator==(const MetricsSummary&, const MetricsSummary&) = default;
};

/// Per-trial safety: the average over that trial's detected obstacles of the
/// minimum distance from any trajectory point to the obstacle. Trials that
/// detected nothing have no safety value.
std::optional<double> trial_safety(const TrialResult& trial, const Environment& env);

/// Pure fold of the per-trial results; avg_steps and safety are absent when no
/// trial qualifies. trials and environments run in parallel (trial i ran in
/// environments[i]).
MetricsSummary compute_metrics(std::span<const TrialResult> trials,
                               std::span<const Environment> environments);

struct MonteCarloResult {
    MetricsSummary summary;
    std::vector<TrialResult> trials;
    std::vector<Environment> environments;
};

/// Runs sc.trials independent trials. Trial i derives its stream from
/// (sc.seed, i), samples a fresh environment from env_cfg, then runs the
/// trial, so results are identical regardless of how many workers execute
/// them. jobs <= 0 uses the hardware concurrency.
MonteCarloResult run_monte_carlo(const EnvGenConfig& env_cfg, const PlannerConfig& pc,
                                 const SimConfig& sc, int jobs = 0);

} // namespace apfnav
