#pragma once

#include <optional>
#include <random>
#include <span>
#include <string>

#include "apfnav/geometry.hpp"
#include "apfnav/potentials.hpp"

namespace apfnav {

enum class PlannerKind {
    Capf,       ///< gradient descent on the smooth field
    Bapf,       ///< candidate-ring scan on the smooth field
    Abapf,      ///< candidate-ring scan with adaptive repulsive decay
    CrBapf,     ///< candidate-ring scan on the constrained (hard-wall) field
    CrBapfStar, ///< CrBapf plus a random-walk escape on deadlock
};

std::string to_string(PlannerKind k);
/// Parses "capf|bapf|abapf|crbapf|crbapf-star"; throws std::invalid_argument otherwise.
PlannerKind planner_kind_from_string(const std::string& s);

struct PlannerConfig {
    PlannerKind kind = PlannerKind::Bapf;
    int n_b = 60;      ///< candidate points per ring
    double step = 0.4; ///< ring radius = commanded step length (m)
    PotentialParams potential;
    MuStrategy mu_strategy = MuStrategy::MinFeasible;
    /// Reserved per-trial cap on random-walk escapes; 0 = no explicit cap.
    /// The simulation step limit is what bounds repeated escapes in practice.
    int random_walk_max_attempts = 0;

    /// Throws std::invalid_argument naming the offending field unless
    /// n_b >= 3, step > 0, random_walk_max_attempts >= 0 and the potential
    /// parameters validate.
    void validate() const;

    friend bool operator==(const PlannerConfig&, const PlannerConfig&) = default;
};

/// One planning decision: the next waypoint, or nullopt when the planner is
/// deadlocked (no admissible move).
using StepDecision = std::optional<Point2>;

/// CAPF deadlock threshold: the planner reports Stuck only when the field
/// gradient vanishes identically. Any nonzero (even subnormal) gradient still
/// defines a descent direction.
inline constexpr double kCapfGradientEpsilon = 0.0;

/// Analytic gradient of agent_total_potential at r.
Point2 potential_gradient(Point2 r, Point2 target, std::span<const Point2> obstacles,
                          const PotentialParams& p);

/// Fixed-step steepest descent: pos - step * g/||g||, or Stuck when
/// ||g|| <= kCapfGradientEpsilon.
StepDecision plan_step_capf(Point2 pos, Point2 target, std::span<const Point2> obstacles,
                            const PlannerConfig& cfg);

/// Scans the candidate ring in ascending distance-to-target order (ties to the
/// lower index) and returns the first candidate whose total potential is
/// strictly below the agent's; Stuck when none passes.
StepDecision plan_step_bapf(Point2 pos, Point2 target, std::span<const Point2> obstacles,
                            const PlannerConfig& cfg);

/// Like plan_step_bapf, but a candidate is admissible as soon as some decay in
/// [mu_min, mu_max] satisfies the criterion (equivalently, the objective at
/// mu_max does; the objective is nonincreasing in mu). The agent-side
/// potential keeps the fixed mu_o. optimize_mu runs on the selected candidate
/// with the configured strategy; when mu_hat_out is non-null the chosen decay
/// is written there on Move.
StepDecision plan_step_abapf(Point2 pos, Point2 target, std::span<const Point2> obstacles,
                             const PlannerConfig& cfg, double* mu_hat_out = nullptr);

/// plan_step_bapf with the constrained (hard-wall, outer-cutoff) repulsive
/// field on both the agent and the candidates.
StepDecision plan_step_crbapf(Point2 pos, Point2 target, std::span<const Point2> obstacles,
                              const PlannerConfig& cfg);

/// plan_step_crbapf, escaping deadlock with one uniform draw from the
/// admissible random-walk set; Stuck only when that set is empty. Consumes
/// randomness only on deadlock.
StepDecision plan_step_crbapf_star(Point2 pos, Point2 target, std::span<const Point2> obstacles,
                                   const PlannerConfig& cfg, std::mt19937_64& rng);

/// Dispatch on cfg.kind. rng is consumed only by CrBapfStar on deadlock;
/// mu_hat_out is written only by Abapf on Move.
StepDecision plan_step(Point2 pos, Point2 target, std::span<const Point2> obstacles,
                       const PlannerConfig& cfg, std::mt19937_64& rng,
                       double* mu_hat_out = nullptr);

} // namespace apfnav
