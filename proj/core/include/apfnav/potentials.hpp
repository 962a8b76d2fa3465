#pragma once

#include <span>
#include <string>
#include <vector>

#include "apfnav/geometry.hpp"

namespace apfnav {

/// Potential values are plain doubles. +infinity is a legal value (it encodes
/// the inner hard-wall branch of the constrained repulsive term and propagates
/// through sums); NaN never is.
using PotentialValue = double;

struct PotentialParams {
    double alpha_t = 1e4;   ///< attractive amplitude
    double mu_t = 1.0;      ///< attractive decay (per squared metre)
    double alpha_o = 1.0;   ///< repulsive amplitude per obstacle
    double mu_o = 1000.0;   ///< repulsive decay (per squared metre)
    double rho_l = 0.4;     ///< hard lower clearance of the constrained term (m)
    double rho_u = 4.5;     ///< outer cutoff of the constrained term (m)
    double mu_min = 1.0;    ///< lower bound of the adaptive mu search range
    double mu_max = 1000.0; ///< upper bound of the adaptive mu search range

    /// Throws std::invalid_argument naming the offending field unless
    /// alpha_t > 0, mu_t > 0, alpha_o > 0, mu_o > 0, 0 < rho_l < rho_u and
    /// 0 < mu_min <= mu_o <= mu_max.
    void validate() const;

    friend bool operator==(const PotentialParams&, const PotentialParams&) = default;
};

/// Attractive well: -alpha_t * exp(-mu_t * ||r - target||^2).
PotentialValue target_potential(Point2 r, Point2 target, const PotentialParams& p);

/// Single-obstacle repulsive bump: alpha_o * exp(-mu_o * ||r - obstacle||^2).
PotentialValue obstacle_potential(Point2 r, Point2 obstacle, double alpha_o, double mu_o);

/// Sum of obstacle_potential over all detected obstacles, in input order.
PotentialValue total_repulsive(Point2 r, std::span<const Point2> obstacles, double alpha_o, double mu_o);

/// target_potential + total_repulsive; the field both the agent position and
/// the candidate points are scored with.
PotentialValue agent_total_potential(Point2 r, Point2 target, std::span<const Point2> obstacles,
                                     const PotentialParams& p);

/// Constrained repulsive term of one obstacle at distance d:
///   0                        if d > rho_u
///   alpha_o * exp(-mu_o*d^2) if rho_l <= d <= rho_u   (closed annulus)
///   +infinity                if d < rho_l
PotentialValue branching_obstacle_potential(Point2 r, Point2 obstacle, const PotentialParams& p);

/// Sum of branching_obstacle_potential over all detected obstacles; +infinity
/// as soon as any obstacle is closer than rho_l.
PotentialValue branching_total_repulsive(Point2 r, std::span<const Point2> obstacles,
                                         const PotentialParams& p);

/// Movement acceptance: candidate potential strictly below the agent's.
/// A +infinity candidate is never accepted.
inline bool movement_criterion(PotentialValue j_candidate, PotentialValue j_agent)
{
    return j_candidate - j_agent < 0.0;
}

/// Candidate objective as a function of the adaptive decay mu:
/// target_potential(r_b) + sum_n alpha_o * exp(-mu * ||r_b - o_n||^2).
/// Monotone nonincreasing in mu (strictly decreasing while no term underflows
/// and at least one obstacle sits at nonzero distance).
PotentialValue adaptive_objective(Point2 bacteria_point, Point2 target,
                                  std::span<const Point2> obstacles,
                                  const PotentialParams& p, double mu);

enum class MuStrategy {
    LiteralArgmin, ///< argmin of the objective over [mu_min, mu_max]
    MinFeasible,   ///< smallest grid mu whose objective beats j_agent
};

std::string to_string(MuStrategy s);
/// Parses "literal-argmin" / "min-feasible"; throws std::invalid_argument otherwise.
MuStrategy mu_strategy_from_string(const std::string& s);

/// Coarse grid size for LiteralArgmin before golden-section refinement.
inline constexpr int kArgminCoarseGrid = 64;
/// LiteralArgmin refinement stops once the bracket shrinks below this
/// fraction of (mu_max - mu_min).
inline constexpr double kArgminRelWidth = 1e-4;
/// Grid size for MinFeasible; for the default range [1, 1000] this scans the
/// integers 1..1000.
inline constexpr int kMinFeasibleGrid = 1000;

struct MuResult {
    double mu = 0.0;            ///< chosen decay
    PotentialValue objective = 0.0; ///< objective value at mu
    bool feasible = false;      ///< objective - j_agent < 0 at the chosen mu
};

/// Picks the adaptive decay for one candidate point.
///
/// LiteralArgmin scans kArgminCoarseGrid points, refines the best bracket by
/// golden section to kArgminRelWidth relative width, and breaks ties (a
/// constant objective) toward mu_min. MinFeasible returns the smallest of
/// kMinFeasibleGrid grid points satisfying the movement criterion against
/// j_agent; when none does (the objective even at mu_max fails), the result
/// carries mu = mu_max and feasible = false.
MuResult optimize_mu(Point2 bacteria_point, Point2 target, std::span<const Point2> obstacles,
                     const PotentialParams& p, MuStrategy strategy, PotentialValue j_agent);

/// Indices of the candidate points whose distance to every detected obstacle
/// is at least rho_l; the admissible set for a random-walk escape. Ascending
/// order. With no detected obstacles every index is admissible.
std::vector<int> random_walk_candidates(std::span<const Point2> points,
                                        std::span<const Point2> obstacles, double rho_l);

} // namespace apfnav
