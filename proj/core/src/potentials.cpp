#include "apfnav/potentials.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace apfnav {

void PotentialParams::validate() const
{
    if (!(alpha_t > 0.0))
        throw std::invalid_argument("alpha_t must be > 0, got " + std::to_string(alpha_t));
    if (!(mu_t > 0.0))
        throw std::invalid_argument("mu_t must be > 0, got " + std::to_string(mu_t));
    if (!(alpha_o > 0.0))
        throw std::invalid_argument("alpha_o must be > 0, got " + std::to_string(alpha_o));
    if (!(mu_o > 0.0))
        throw std::invalid_argument("mu_o must be > 0, got " + std::to_string(mu_o));
    if (!(rho_l > 0.0))
        throw std::invalid_argument("rho_l must be > 0, got " + std::to_string(rho_l));
    if (!(rho_u > rho_l))
        throw std::invalid_argument("rho_u must be > rho_l, got " + std::to_string(rho_u));
    if (!(mu_min > 0.0))
        throw std::invalid_argument("mu_min must be > 0, got " + std::to_string(mu_min));
    if (!(mu_o >= mu_min && mu_o <= mu_max))
        throw std::invalid_argument("mu_o must lie in [mu_min, mu_max], got " + std::to_string(mu_o));
}

PotentialValue target_potential(Point2 r, Point2 target, const PotentialParams& p)
{
    return -p.alpha_t * std::exp(-p.mu_t * squared_distance(r, target));
}

PotentialValue obstacle_potential(Point2 r, Point2 obstacle, double alpha_o, double mu_o)
{
    return alpha_o * std::exp(-mu_o * squared_distance(r, obstacle));
}

PotentialValue total_repulsive(Point2 r, std::span<const Point2> obstacles, double alpha_o,
                               double mu_o)
{
    PotentialValue sum = 0.0;
    for (const Point2& o : obstacles)
        sum += obstacle_potential(r, o, alpha_o, mu_o);
    return sum;
}

PotentialValue agent_total_potential(Point2 r, Point2 target, std::span<const Point2> obstacles,
                                     const PotentialParams& p)
{
    return target_potential(r, target, p) + total_repulsive(r, obstacles, p.alpha_o, p.mu_o);
}

PotentialValue branching_obstacle_potential(Point2 r, Point2 obstacle, const PotentialParams& p)
{
    double rho = squared_distance(r, obstacle);
    if (rho > p.rho_u * p.rho_u)
        return 0.0;
    if (rho < p.rho_l * p.rho_l)
        return std::numeric_limits<double>::infinity();
    return p.alpha_o * std::exp(-p.mu_o * rho);
}

PotentialValue branching_total_repulsive(Point2 r, std::span<const Point2> obstacles,
                                         const PotentialParams& p)
{
    PotentialValue sum = 0.0;
    for (const Point2& o : obstacles) {
        sum += branching_obstacle_potential(r, o, p);
        if (std::isinf(sum))
            return sum;
    }
    return sum;
}

PotentialValue adaptive_objective(Point2 bacteria_point, Point2 target,
                                  std::span<const Point2> obstacles, const PotentialParams& p,
                                  double mu)
{
    // Same summation shape as agent_total_potential, so at mu == mu_o the two
    // agree bit for bit.
    return target_potential(bacteria_point, target, p)
           + total_repulsive(bacteria_point, obstacles, p.alpha_o, mu);
}

std::string to_string(MuStrategy s)
{
    return s == MuStrategy::LiteralArgmin ? "literal-argmin" : "min-feasible";
}

MuStrategy mu_strategy_from_string(const std::string& s)
{
    if (s == "literal-argmin")
        return MuStrategy::LiteralArgmin;
    if (s == "min-feasible")
        return MuStrategy::MinFeasible;
    throw std::invalid_argument("unknown mu strategy: " + s);
}

namespace {

// Uniform grid over [mu_min, mu_max] whose last point is exactly mu_max.
double grid_point(const PotentialParams& p, int i, int n)
{
    if (i == n - 1)
        return p.mu_max;
    return p.mu_min + static_cast<double>(i) * (p.mu_max - p.mu_min) / static_cast<double>(n - 1);
}

MuResult optimize_mu_argmin(Point2 r, Point2 target, std::span<const Point2> obstacles,
                            const PotentialParams& p, PotentialValue j_agent)
{
    // Coarse scan; ties keep the lowest mu so a constant objective resolves to
    // mu_min.
    auto objective = [&](double mu) { return adaptive_objective(r, target, obstacles, p, mu); };

    int best_i = 0;
    double best_mu = grid_point(p, 0, kArgminCoarseGrid);
    PotentialValue best_val = objective(best_mu);
    for (int i = 1; i < kArgminCoarseGrid; ++i) {
        double mu = grid_point(p, i, kArgminCoarseGrid);
        PotentialValue val = objective(mu);
        if (val < best_val) {
            best_i = i;
            best_mu = mu;
            best_val = val;
        }
    }

    // Golden-section refinement of the bracket around the winner; the incumbent
    // only moves on strict improvement, so refinement can never return a value
    // above the coarse winner's.
    double a = grid_point(p, best_i > 0 ? best_i - 1 : 0, kArgminCoarseGrid);
    double b = grid_point(p, best_i < kArgminCoarseGrid - 1 ? best_i + 1 : kArgminCoarseGrid - 1,
                          kArgminCoarseGrid);
    const double width_goal = kArgminRelWidth * (p.mu_max - p.mu_min);
    constexpr double invphi = 0.6180339887498949;
    while (b - a > width_goal) {
        double c = b - invphi * (b - a);
        double d = a + invphi * (b - a);
        PotentialValue fc = objective(c);
        PotentialValue fd = objective(d);
        if (fc < best_val) {
            best_mu = c;
            best_val = fc;
        }
        if (fd < best_val) {
            best_mu = d;
            best_val = fd;
        }
        if (fc < fd)
            b = d;
        else
            a = c;
    }
    return {best_mu, best_val, movement_criterion(best_val, j_agent)};
}

MuResult optimize_mu_min_feasible(Point2 r, Point2 target, std::span<const Point2> obstacles,
                                  const PotentialParams& p, PotentialValue j_agent)
{
    auto objective = [&](double mu) { return adaptive_objective(r, target, obstacles, p, mu); };

    for (int i = 0; i < kMinFeasibleGrid; ++i) {
        double mu = grid_point(p, i, kMinFeasibleGrid);
        PotentialValue val = objective(mu);
        if (movement_criterion(val, j_agent))
            return {mu, val, true};
    }
    return {p.mu_max, objective(p.mu_max), false};
}

} // namespace

MuResult optimize_mu(Point2 bacteria_point, Point2 target, std::span<const Point2> obstacles,
                     const PotentialParams& p, MuStrategy strategy, PotentialValue j_agent)
{
    if (strategy == MuStrategy::LiteralArgmin)
        return optimize_mu_argmin(bacteria_point, target, obstacles, p, j_agent);
    return optimize_mu_min_feasible(bacteria_point, target, obstacles, p, j_agent);
}

std::vector<int> random_walk_candidates(std::span<const Point2> points,
                                        std::span<const Point2> obstacles, double rho_l)
{
    std::vector<int> admissible;
    const double rho_l_sq = rho_l * rho_l;
    for (std::size_t k = 0; k < points.size(); ++k) {
        bool clear = true;
        for (const Point2& o : obstacles) {
            if (squared_distance(points[k], o) < rho_l_sq) {
                clear = false;
                break;
            }
        }
        if (clear)
            admissible.push_back(static_cast<int>(k));
    }
    return admissible;
}

} // namespace apfnav
