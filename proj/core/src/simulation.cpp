#include "apfnav/simulation.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "apfnav/rng.hpp"

namespace apfnav {

void SimConfig::validate() const
{
    if (!(detection_range > 0.0))
        throw std::invalid_argument("detection_range must be > 0, got "
                                    + std::to_string(detection_range));
    if (!(goal_radius > 0.0))
        throw std::invalid_argument("goal_radius must be > 0, got " + std::to_string(goal_radius));
    if (!(collision_radius >= 0.0))
        throw std::invalid_argument("collision_radius must be >= 0, got "
                                    + std::to_string(collision_radius));
    if (!(noise_variance >= 0.0))
        throw std::invalid_argument("noise_variance must be >= 0, got "
                                    + std::to_string(noise_variance));
    if (max_steps < 1)
        throw std::invalid_argument("max_steps must be >= 1, got " + std::to_string(max_steps));
    if (trials < 1)
        throw std::invalid_argument("trials must be >= 1, got " + std::to_string(trials));
}

std::vector<std::pair<int, Point2>> sense(const Environment& env, Point2 pos,
                                          double detection_range)
{
    std::vector<std::pair<int, Point2>> hits;
    const double range_sq = detection_range * detection_range;
    for (std::size_t i = 0; i < env.obstacles.size(); ++i) {
        if (squared_distance(env.obstacles[i], pos) <= range_sq)
            hits.emplace_back(static_cast<int>(i), env.obstacles[i]);
    }
    return hits;
}

Point2 apply_motion(Point2 waypoint, double noise_variance, std::mt19937_64& rng)
{
    if (noise_variance == 0.0)
        return waypoint;
    std::normal_distribution<double> noise(0.0, std::sqrt(noise_variance));
    double dx = noise(rng);
    double dy = noise(rng);
    return {waypoint.x + dx, waypoint.y + dy};
}

std::string to_string(Outcome o)
{
    switch (o) {
    case Outcome::Success: return "success";
    case Outcome::LocalMinima: return "local_minima";
    case Outcome::Collision: return "collision";
    case Outcome::Timeout: return "timeout";
    }
    throw std::invalid_argument("bad Outcome");
}

Outcome outcome_from_string(const std::string& s)
{
    if (s == "success") return Outcome::Success;
    if (s == "local_minima") return Outcome::LocalMinima;
    if (s == "collision") return Outcome::Collision;
    if (s == "timeout") return Outcome::Timeout;
    throw std::invalid_argument("unknown outcome: " + s);
}

TrialResult run_trial(const Environment& env, const PlannerConfig& pc, const SimConfig& sc,
                      std::mt19937_64& rng, std::vector<double>* mu_trace)
{
    TrialResult result;
    result.trajectory.push_back(env.start);
    std::vector<bool> seen(env.obstacles.size(), false);

    Point2 pos = env.start;
    const double goal_sq = sc.goal_radius * sc.goal_radius;
    const double collision_sq = sc.collision_radius * sc.collision_radius;
    std::vector<Point2> detected;

    auto t0 = std::chrono::steady_clock::now();
    for (;;) {
        if (squared_distance(pos, env.target) <= goal_sq) {
            result.outcome = Outcome::Success;
            break;
        }

        detected.clear();
        for (const auto& [index, position] : sense(env, pos, sc.detection_range)) {
            seen[static_cast<std::size_t>(index)] = true;
            detected.push_back(position);
        }

        double mu_hat = std::numeric_limits<double>::quiet_NaN();
        StepDecision next = plan_step(pos, env.target, detected, pc, rng, &mu_hat);
        if (!next) {
            result.outcome = Outcome::LocalMinima;
            break;
        }

        pos = apply_motion(*next, sc.noise_variance, rng);
        ++result.steps;
        result.trajectory.push_back(pos);
        if (mu_trace && pc.kind == PlannerKind::Abapf)
            mu_trace->push_back(mu_hat);

        bool collided = false;
        for (const Point2& o : env.obstacles) {
            if (squared_distance(pos, o) <= collision_sq) {
                collided = true;
                break;
            }
        }
        if (collided) {
            result.outcome = Outcome::Collision;
            break;
        }

        if (result.steps >= sc.max_steps) {
            result.outcome = Outcome::Timeout;
            break;
        }
    }
    auto t1 = std::chrono::steady_clock::now();
    result.wall_time_s = std::chrono::duration<double>(t1 - t0).count();

    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (seen[i])
            result.detected_obstacles.push_back(static_cast<int>(i));
    }
    return result;
}

std::optional<double> trial_safety(const TrialResult& trial, const Environment& env)
{
    if (trial.detected_obstacles.empty())
        return std::nullopt;
    double sum = 0.0;
    for (int index : trial.detected_obstacles) {
        const Point2& o = env.obstacles[static_cast<std::size_t>(index)];
        double min_sq = std::numeric_limits<double>::infinity();
        for (const Point2& p : trial.trajectory)
            min_sq = std::min(min_sq, squared_distance(p, o));
        sum += std::sqrt(min_sq);
    }
    return sum / static_cast<double>(trial.detected_obstacles.size());
}

MetricsSummary compute_metrics(std::span<const TrialResult> trials,
                               std::span<const Environment> environments)
{
    MetricsSummary m;
    if (trials.empty())
        return m;

    int successes = 0;
    double step_sum = 0.0;
    double safety_sum = 0.0;
    int safety_count = 0;
    double runtime_sum = 0.0;

    for (std::size_t i = 0; i < trials.size(); ++i) {
        const TrialResult& t = trials[i];
        runtime_sum += t.wall_time_s;
        if (t.outcome != Outcome::Success)
            continue;
        ++successes;
        step_sum += static_cast<double>(t.steps);
        if (auto s = trial_safety(t, environments[i])) {
            safety_sum += *s;
            ++safety_count;
        }
    }

    m.success_rate = static_cast<double>(successes) / static_cast<double>(trials.size());
    if (successes > 0)
        m.avg_steps = step_sum / static_cast<double>(successes);
    if (safety_count > 0)
        m.safety = safety_sum / static_cast<double>(safety_count);
    m.avg_runtime_s = runtime_sum / static_cast<double>(trials.size());
    return m;
}

MonteCarloResult run_monte_carlo(const EnvGenConfig& env_cfg, const PlannerConfig& pc,
                                 const SimConfig& sc, int jobs)
{
    env_cfg.validate();
    pc.validate();
    sc.validate();

    MonteCarloResult out;
    out.trials.resize(static_cast<std::size_t>(sc.trials));
    out.environments.resize(static_cast<std::size_t>(sc.trials));

    // Each trial draws its environment and its noise from a stream derived
    // only from (seed, trial index), so the schedule cannot affect results.
    auto run_one = [&](int i) {
        std::mt19937_64 rng = make_trial_rng(sc.seed, static_cast<std::uint64_t>(i));
        Environment env = sample_environment(env_cfg, rng);
        out.trials[static_cast<std::size_t>(i)] = run_trial(env, pc, sc, rng);
        out.environments[static_cast<std::size_t>(i)] = std::move(env);
    };

    int workers = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min(workers, sc.trials));

    if (workers == 1) {
        for (int i = 0; i < sc.trials; ++i)
            run_one(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    int i = next.fetch_add(1);
                    if (i >= sc.trials)
                        return;
                    run_one(i);
                }
            });
        }
        for (std::thread& t : pool)
            t.join();
    }

    out.summary = compute_metrics(out.trials, out.environments);
    return out;
}

} // namespace apfnav
