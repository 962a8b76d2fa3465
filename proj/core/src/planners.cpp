#include "apfnav/planners.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace apfnav {

std::string to_string(PlannerKind k)
{
    switch (k) {
    case PlannerKind::Capf: return "capf";
    case PlannerKind::Bapf: return "bapf";
    case PlannerKind::Abapf: return "abapf";
    case PlannerKind::CrBapf: return "crbapf";
    case PlannerKind::CrBapfStar: return "crbapf-star";
    }
    throw std::invalid_argument("bad PlannerKind");
}

PlannerKind planner_kind_from_string(const std::string& s)
{
    if (s == "capf") return PlannerKind::Capf;
    if (s == "bapf") return PlannerKind::Bapf;
    if (s == "abapf") return PlannerKind::Abapf;
    if (s == "crbapf") return PlannerKind::CrBapf;
    if (s == "crbapf-star") return PlannerKind::CrBapfStar;
    throw std::invalid_argument("unknown algorithm: " + s
                                + " (expected capf|bapf|abapf|crbapf|crbapf-star)");
}

void PlannerConfig::validate() const
{
    if (n_b < 3)
        throw std::invalid_argument("n_b must be >= 3, got " + std::to_string(n_b));
    if (!(step > 0.0))
        throw std::invalid_argument("step must be > 0, got " + std::to_string(step));
    if (random_walk_max_attempts < 0)
        throw std::invalid_argument("random_walk_max_attempts must be >= 0, got "
                                    + std::to_string(random_walk_max_attempts));
    potential.validate();
}

namespace {

// Candidate indices by ascending squared distance to the target, ties broken
// by the lower index. This ordering is the selection tie-break: among
// criterion-equivalent candidates the scan accepts the first.
std::vector<int> scan_order(const std::vector<Point2>& points, Point2 target)
{
    std::vector<int> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> dist(points.size());
    for (std::size_t k = 0; k < points.size(); ++k)
        dist[k] = squared_distance(points[k], target);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (dist[a] != dist[b])
            return dist[a] < dist[b];
        return a < b;
    });
    return order;
}

// Shared ring scan: accept the first candidate (closest-to-target first) whose
// score passes the movement criterion against j_agent.
template <typename Score>
StepDecision scan_ring(Point2 pos, Point2 target, const PlannerConfig& cfg,
                       PotentialValue j_agent, Score&& score, int* selected_index = nullptr)
{
    auto points = bacteria_points(pos, cfg.step, cfg.n_b);
    for (int k : scan_order(points, target)) {
        if (movement_criterion(score(points[k]), j_agent)) {
            if (selected_index)
                *selected_index = k;
            return points[k];
        }
    }
    return std::nullopt;
}

} // namespace

Point2 potential_gradient(Point2 r, Point2 target, std::span<const Point2> obstacles,
                          const PotentialParams& p)
{
    // d/dr [-a_t e^(-m_t |r-t|^2)] = 2 a_t m_t e^(-m_t rho) (r - t)
    double at = 2.0 * p.alpha_t * p.mu_t * std::exp(-p.mu_t * squared_distance(r, target));
    Point2 g{at * (r.x - target.x), at * (r.y - target.y)};
    // d/dr [a_o e^(-m_o |r-o|^2)] = -2 a_o m_o e^(-m_o rho) (r - o)
    for (const Point2& o : obstacles) {
        double ao = -2.0 * p.alpha_o * p.mu_o * std::exp(-p.mu_o * squared_distance(r, o));
        g.x += ao * (r.x - o.x);
        g.y += ao * (r.y - o.y);
    }
    return g;
}

StepDecision plan_step_capf(Point2 pos, Point2 target, std::span<const Point2> obstacles,
                            const PlannerConfig& cfg)
{
    Point2 g = potential_gradient(pos, target, obstacles, cfg.potential);
    // hypot keeps subnormal components meaningful instead of squaring them to 0
    double norm = std::hypot(g.x, g.y);
    if (!(norm > kCapfGradientEpsilon))
        return std::nullopt;
    return Point2{pos.x - cfg.step * g.x / norm, pos.y - cfg.step * g.y / norm};
}

StepDecision plan_step_bapf(Point2 pos, Point2 target, std::span<const Point2> obstacles,
                            const PlannerConfig& cfg)
{
    const PotentialParams& p = cfg.potential;
    PotentialValue j_agent = agent_total_potential(pos, target, obstacles, p);
    return scan_ring(pos, target, cfg, j_agent,
                     [&](Point2 c) { return agent_total_potential(c, target, obstacles, p); });
}

StepDecision plan_step_abapf(Point2 pos, Point2 target, std::span<const Point2> obstacles,
                             const PlannerConfig& cfg, double* mu_hat_out)
{
    const PotentialParams& p = cfg.potential;
    // The agent side keeps the fixed mu_o; only candidates adapt.
    PotentialValue j_agent = agent_total_potential(pos, target, obstacles, p);
    // The objective is nonincreasing in mu, so a candidate admits some feasible
    // mu in [mu_min, mu_max] exactly when mu_max itself is feasible. Deadlock
    // therefore means every candidate fails even at mu_max.
    StepDecision next = scan_ring(pos, target, cfg, j_agent, [&](Point2 c) {
        return adaptive_objective(c, target, obstacles, p, p.mu_max);
    });
    if (next && mu_hat_out) {
        MuResult r = optimize_mu(*next, target, obstacles, p, cfg.mu_strategy, j_agent);
        *mu_hat_out = r.mu;
    }
    return next;
}

StepDecision plan_step_crbapf(Point2 pos, Point2 target, std::span<const Point2> obstacles,
                              const PlannerConfig& cfg)
{
    const PotentialParams& p = cfg.potential;
    PotentialValue j_agent
        = target_potential(pos, target, p) + branching_total_repulsive(pos, obstacles, p);
    return scan_ring(pos, target, cfg, j_agent, [&](Point2 c) {
        return target_potential(c, target, p) + branching_total_repulsive(c, obstacles, p);
    });
}

StepDecision plan_step_crbapf_star(Point2 pos, Point2 target, std::span<const Point2> obstacles,
                                   const PlannerConfig& cfg, std::mt19937_64& rng)
{
    StepDecision next = plan_step_crbapf(pos, target, obstacles, cfg);
    if (next)
        return next;
    auto points = bacteria_points(pos, cfg.step, cfg.n_b);
    std::vector<int> admissible = random_walk_candidates(points, obstacles, cfg.potential.rho_l);
    if (admissible.empty())
        return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, admissible.size() - 1);
    return points[static_cast<std::size_t>(admissible[pick(rng)])];
}

StepDecision plan_step(Point2 pos, Point2 target, std::span<const Point2> obstacles,
                       const PlannerConfig& cfg, std::mt19937_64& rng, double* mu_hat_out)
{
    switch (cfg.kind) {
    case PlannerKind::Capf: return plan_step_capf(pos, target, obstacles, cfg);
    case PlannerKind::Bapf: return plan_step_bapf(pos, target, obstacles, cfg);
    case PlannerKind::Abapf: return plan_step_abapf(pos, target, obstacles, cfg, mu_hat_out);
    case PlannerKind::CrBapf: return plan_step_crbapf(pos, target, obstacles, cfg);
    case PlannerKind::CrBapfStar: return plan_step_crbapf_star(pos, target, obstacles, cfg, rng);
    }
    throw std::invalid_argument("bad PlannerKind");
}

} // namespace apfnav
