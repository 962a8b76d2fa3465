#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "apfnav/rng.hpp"
#include "apfnav/simulation.hpp"
#include "support/stats.hpp"

using namespace apfnav;

namespace {

Environment open_environment(Point2 start, Point2 target)
{
    Environment env;
    env.start = start;
    env.target = target;
    env.obstacles.clear();
    return env;
}

PlannerConfig planner(PlannerKind kind)
{
    PlannerConfig cfg;
    cfg.kind = kind;
    return cfg;
}

SimConfig quiet_sim()
{
    SimConfig sc;
    sc.noise_variance = 0.0;
    return sc;
}

} // namespace

TEST_CASE("SimConfig validation names the offending field")
{
    SimConfig sc;
    CHECK_NOTHROW(sc.validate());

    sc.detection_range = 0.0;
    CHECK_THROWS_WITH_AS(sc.validate(), doctest::Contains("detection_range"),
                         std::invalid_argument);

    sc = SimConfig{};
    sc.noise_variance = -0.1;
    CHECK_THROWS_WITH_AS(sc.validate(), doctest::Contains("noise_variance"),
                         std::invalid_argument);

    sc = SimConfig{};
    sc.trials = 0;
    CHECK_THROWS_WITH_AS(sc.validate(), doctest::Contains("trials"), std::invalid_argument);
}

TEST_CASE("sense reports obstacles within the closed detection disk, in index order")
{
    Environment env = open_environment({1, 1}, {25, 25});
    env.obstacles = {{9, 1}, {0.5, 0.5}, {20, 20}};

    auto hits = sense(env, {1, 1}, 8.0);
    REQUIRE(hits.size() == 2);
    CHECK(hits[0].first == 0); // distance exactly 8: boundary included
    CHECK(hits[0].second == Point2{9, 1});
    CHECK(hits[1].first == 1);
    CHECK(hits[1].second == Point2{0.5, 0.5});

    env.obstacles[0].x = 9.1; // just beyond the range
    CHECK(sense(env, {1, 1}, 8.0).size() == 1);
}

TEST_CASE("apply_motion passes the waypoint through exactly at zero variance")
{
    std::mt19937_64 rng(1);
    std::mt19937_64 before = rng;
    Point2 wp{1.2345, -6.789};
    CHECK(apply_motion(wp, 0.0, rng) == wp);
    CHECK(rng == before); // nothing drawn
}

TEST_CASE("apply_motion draws x first, then y, from one gaussian stream")
{
    std::mt19937_64 rng(99);
    std::mt19937_64 replay = rng;
    Point2 moved = apply_motion({2, 3}, 0.01, rng);

    std::normal_distribution<double> noise(0.0, std::sqrt(0.01));
    double dx = noise(replay);
    double dy = noise(replay);
    CHECK(moved.x == 2.0 + dx);
    CHECK(moved.y == 3.0 + dy);
}

TEST_CASE("apply_motion noise has the configured spread")
{
    std::mt19937_64 rng(1234);
    const int n = 20000;
    std::vector<double> dx, dy;
    for (int i = 0; i < n; ++i) {
        Point2 p = apply_motion({0, 0}, 0.01, rng);
        dx.push_back(p.x);
        dy.push_back(p.y);
    }
    CHECK(std::abs(test_support::mean(dx)) < 0.004);  // 4 sigma of the mean
    CHECK(std::abs(test_support::mean(dy)) < 0.004);
    CHECK(test_support::variance(dx) == doctest::Approx(0.01).epsilon(0.05));
    CHECK(test_support::variance(dy) == doctest::Approx(0.01).epsilon(0.05));
}

TEST_CASE("outcome strings round-trip")
{
    for (Outcome o : {Outcome::Success, Outcome::LocalMinima, Outcome::Collision,
                      Outcome::Timeout})
        CHECK(outcome_from_string(to_string(o)) == o);
    CHECK(to_string(Outcome::LocalMinima) == "local_minima");
    CHECK_THROWS_AS(outcome_from_string("crashed"), std::invalid_argument);
}

TEST_CASE("run_trial succeeds immediately inside the goal radius")
{
    Environment env = open_environment({1, 1}, {1.2, 1});
    std::mt19937_64 rng(5);
    TrialResult t = run_trial(env, planner(PlannerKind::Bapf), quiet_sim(), rng);
    CHECK(t.outcome == Outcome::Success);
    CHECK(t.steps == 0);
    REQUIRE(t.trajectory.size() == 1);
    CHECK(t.trajectory[0] == env.start);
    CHECK(t.detected_obstacles.empty()); // the loop exits before sensing
    CHECK(t.wall_time_s >= 0.0);
}

TEST_CASE("capf crosses the open arena in exactly the straight-line step count")
{
    // diagonal length 26.87...: after 66 steps 0.47 m remain, after 67 only
    // 0.07, which is inside the 0.4 goal radius
    Environment env = open_environment({3, 3}, {22, 22});
    std::mt19937_64 rng(5);
    TrialResult t = run_trial(env, planner(PlannerKind::Capf), quiet_sim(), rng);
    CHECK(t.outcome == Outcome::Success);
    CHECK(t.steps == 67);
    CHECK(t.trajectory.size() == 68);
}

TEST_CASE("bapf crosses the open arena on the candidate grid")
{
    // the ring has no candidate exactly on the diagonal, so the path zigzags
    // between the 42 and 48 degree headings and may need a few extra steps
    Environment env = open_environment({3, 3}, {22, 22});
    std::mt19937_64 rng(5);
    TrialResult t = run_trial(env, planner(PlannerKind::Bapf), quiet_sim(), rng);
    CHECK(t.outcome == Outcome::Success);
    CHECK(t.steps >= 67);
    CHECK(t.steps <= 75);
}

TEST_CASE("run_trial reports a collision the moment the agent enters the radius")
{
    // the smooth field cannot wall off the obstacle at (1.7, 1): the first
    // step lands at (1.4, 1), 0.3 m from it
    Environment env = open_environment({1, 1}, {5, 1});
    env.obstacles = {{1.7, 1}};
    std::mt19937_64 rng(5);
    TrialResult t = run_trial(env, planner(PlannerKind::Bapf), quiet_sim(), rng);
    CHECK(t.outcome == Outcome::Collision);
    CHECK(t.steps == 1);
    REQUIRE(t.trajectory.size() == 2);
    CHECK(t.trajectory[1] == Point2{1.4, 1.0});
    CHECK(t.detected_obstacles == std::vector<int>{0});
}

TEST_CASE("run_trial reports local minima when the planner deadlocks")
{
    // start-to-target distance so large the attractive term underflows to 0
    Environment env = open_environment({1, 1}, {29, 29});
    std::mt19937_64 rng(5);
    for (PlannerKind kind : {PlannerKind::Capf, PlannerKind::Bapf, PlannerKind::CrBapf}) {
        TrialResult t = run_trial(env, planner(kind), quiet_sim(), rng);
        CHECK(t.outcome == Outcome::LocalMinima);
        CHECK(t.steps == 0);
        CHECK(t.trajectory.size() == 1);
    }
}

TEST_CASE("run_trial times out at the step cap")
{
    Environment env = open_environment({3, 3}, {22, 22});
    SimConfig sc = quiet_sim();
    sc.max_steps = 5;
    std::mt19937_64 rng(5);
    TrialResult t = run_trial(env, planner(PlannerKind::Bapf), sc, rng);
    CHECK(t.outcome == Outcome::Timeout);
    CHECK(t.steps == 5);
    CHECK(t.trajectory.size() == 6);
}

TEST_CASE("run_trial accumulates detected obstacles sorted and unique")
{
    Environment env = open_environment({1, 1}, {5, 1});
    env.obstacles = {{3, 6}, {3, 20}, {0, 1}}; // near path, far away, behind
    std::mt19937_64 rng(5);
    TrialResult t = run_trial(env, planner(PlannerKind::Bapf), quiet_sim(), rng);
    CHECK(t.outcome == Outcome::Success);
    CHECK(t.detected_obstacles == std::vector<int>{0, 2});
}

TEST_CASE("run_trial records one adaptive decay per executed move")
{
    Environment env = open_environment({3, 3}, {22, 22});
    std::mt19937_64 rng(5);
    std::vector<double> trace;
    TrialResult t = run_trial(env, planner(PlannerKind::Abapf), quiet_sim(), rng, &trace);
    CHECK(t.outcome == Outcome::Success);
    CHECK(trace.size() == static_cast<std::size_t>(t.steps));
    // without obstacles the objective does not depend on mu, so the
    // min-feasible scan stops at the very first grid point
    for (double mu : trace)
        CHECK(mu == 1.0);

    // other planners never write the trace
    std::vector<double> empty_trace;
    std::mt19937_64 rng2(5);
    run_trial(env, planner(PlannerKind::Bapf), quiet_sim(), rng2, &empty_trace);
    CHECK(empty_trace.empty());
}

TEST_CASE("run_trial is deterministic per stream")
{
    EnvGenConfig env_cfg;
    std::mt19937_64 r1 = make_trial_rng(17, 3);
    Environment env = sample_environment(env_cfg, r1);

    std::mt19937_64 r2 = make_trial_rng(17, 3);
    Environment env_b = sample_environment(env_cfg, r2);
    REQUIRE(env.obstacles == env_b.obstacles);

    SimConfig sc; // default noisy sim
    TrialResult a = run_trial(env, planner(PlannerKind::Bapf), sc, r1);
    TrialResult b = run_trial(env_b, planner(PlannerKind::Bapf), sc, r2);
    CHECK(a.outcome == b.outcome);
    CHECK(a.steps == b.steps);
    CHECK(a.trajectory == b.trajectory);
    CHECK(a.detected_obstacles == b.detected_obstacles);

    // a different trial index gives a different stream
    std::mt19937_64 r3 = make_trial_rng(17, 4);
    Environment env_c = sample_environment(env_cfg, r3);
    CHECK(env_c.obstacles != env.obstacles);
}

TEST_CASE("trial_safety averages per-obstacle minimum clearance")
{
    Environment env = open_environment({0, 0}, {9, 9});
    env.obstacles = {{0, 1}, {3, 0}};
    TrialResult t;
    t.trajectory = {{0, 0}, {1, 0}};
    t.detected_obstacles = {0, 1};
    // closest approach: 1.0 to the first obstacle, 2.0 to the second
    auto s = trial_safety(t, env);
    REQUIRE(s.has_value());
    CHECK(*s == 1.5);

    TrialResult blind;
    blind.trajectory = {{0, 0}};
    CHECK_FALSE(trial_safety(blind, env).has_value());
}

TEST_CASE("compute_metrics folds the trial results")
{
    Environment e1 = open_environment({0, 0}, {9, 9});
    e1.obstacles = {{0, 1}};
    Environment e2 = open_environment({0, 0}, {9, 9});
    e2.obstacles = {{0, 2}};
    Environment e3 = open_environment({0, 0}, {9, 9});
    Environment e4 = e3;

    TrialResult t1{Outcome::Success, 10, {{0, 0}}, {0}, 0.1};
    TrialResult t2{Outcome::Success, 20, {{0, 0}}, {0}, 0.2};
    TrialResult t3{Outcome::Success, 30, {{0, 0}}, {}, 0.3}; // nothing detected
    TrialResult t4{Outcome::Collision, 2, {{0, 0}}, {}, 0.4};

    std::vector<TrialResult> trials{t1, t2, t3, t4};
    std::vector<Environment> envs{e1, e2, e3, e4};
    MetricsSummary m = compute_metrics(trials, envs);

    CHECK(m.success_rate == 0.75);
    REQUIRE(m.avg_steps.has_value());
    CHECK(*m.avg_steps == 20.0);
    REQUIRE(m.safety.has_value());
    CHECK(*m.safety == 1.5); // mean of 1.0 and 2.0; the blind success is skipped
    CHECK(m.avg_runtime_s == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("compute_metrics handles all-failure and empty inputs")
{
    MetricsSummary empty = compute_metrics({}, {});
    CHECK(empty.success_rate == 0.0);
    CHECK_FALSE(empty.avg_steps.has_value());
    CHECK_FALSE(empty.safety.has_value());
    CHECK(empty.avg_runtime_s == 0.0);

    TrialResult fail{Outcome::Timeout, 1000, {{0, 0}}, {}, 0.5};
    std::vector<TrialResult> trials{fail};
    std::vector<Environment> envs{open_environment({0, 0}, {9, 9})};
    MetricsSummary m = compute_metrics(trials, envs);
    CHECK(m.success_rate == 0.0);
    CHECK_FALSE(m.avg_steps.has_value());
    CHECK_FALSE(m.safety.has_value());
    CHECK(m.avg_runtime_s == 0.5);
}

TEST_CASE("run_monte_carlo is schedule-independent")
{
    EnvGenConfig env_cfg;
    PlannerConfig pc = planner(PlannerKind::Bapf);
    SimConfig sc;
    sc.trials = 30;
    sc.max_steps = 200;
    sc.seed = 11;

    MonteCarloResult serial = run_monte_carlo(env_cfg, pc, sc, 1);
    MonteCarloResult threaded = run_monte_carlo(env_cfg, pc, sc, 3);

    CHECK(serial.summary.success_rate == threaded.summary.success_rate);
    CHECK(serial.summary.avg_steps == threaded.summary.avg_steps);
    CHECK(serial.summary.safety == threaded.summary.safety);
    REQUIRE(serial.trials.size() == 30);
    REQUIRE(threaded.trials.size() == 30);
    for (std::size_t i = 0; i < serial.trials.size(); ++i) {
        CHECK(serial.trials[i].outcome == threaded.trials[i].outcome);
        CHECK(serial.trials[i].steps == threaded.trials[i].steps);
        CHECK(serial.trials[i].trajectory == threaded.trials[i].trajectory);
        CHECK(serial.trials[i].detected_obstacles == threaded.trials[i].detected_obstacles);
        CHECK(serial.environments[i].obstacles == threaded.environments[i].obstacles);
    }
}

TEST_CASE("run_monte_carlo pairs environments across planners at the same seed")
{
    EnvGenConfig env_cfg;
    SimConfig sc;
    sc.trials = 10;
    sc.max_steps = 50;
    sc.seed = 21;

    MonteCarloResult a = run_monte_carlo(env_cfg, planner(PlannerKind::Bapf), sc, 1);
    MonteCarloResult b = run_monte_carlo(env_cfg, planner(PlannerKind::CrBapfStar), sc, 1);
    REQUIRE(a.environments.size() == b.environments.size());
    for (std::size_t i = 0; i < a.environments.size(); ++i)
        CHECK(a.environments[i].obstacles == b.environments[i].obstacles);
}

TEST_CASE("run_monte_carlo validates its configuration up front")
{
    EnvGenConfig env_cfg;
    PlannerConfig pc = planner(PlannerKind::Bapf);
    SimConfig sc;
    sc.trials = 0;
    CHECK_THROWS_WITH_AS(run_monte_carlo(env_cfg, pc, sc), doctest::Contains("trials"),
                         std::invalid_argument);

    sc = SimConfig{};
    pc.n_b = 1;
    CHECK_THROWS_WITH_AS(run_monte_carlo(env_cfg, pc, sc), doctest::Contains("n_b"),
                         std::invalid_argument);
}
