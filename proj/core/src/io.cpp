#include "apfnav/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace apfnav {

namespace {

using nlohmann::json;

json point_to_json(Point2 p)
{
    return json::array({p.x, p.y});
}

Point2 point_from_json(const json& j, const char* what)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::runtime_error(std::string(what) + " must be a [x, y] number pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

} // namespace

std::string environment_to_json(const Environment& env)
{
    json j;
    j["length_x"] = env.length_x;
    j["length_y"] = env.length_y;
    j["start"] = point_to_json(env.start);
    j["target"] = point_to_json(env.target);
    json obstacles = json::array();
    for (const Point2& o : env.obstacles)
        obstacles.push_back(point_to_json(o));
    j["obstacles"] = obstacles;
    return j.dump();
}

Environment environment_from_json(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("invalid environment JSON: ") + e.what());
    }
    for (const char* key : {"length_x", "length_y", "start", "target", "obstacles"}) {
        if (!j.contains(key))
            throw std::runtime_error(std::string("environment JSON missing key: ") + key);
    }

    Environment env;
    if (!j["length_x"].is_number() || !j["length_y"].is_number())
        throw std::runtime_error("length_x/length_y must be numbers");
    env.length_x = j["length_x"].get<double>();
    env.length_y = j["length_y"].get<double>();
    env.start = point_from_json(j["start"], "start");
    env.target = point_from_json(j["target"], "target");
    if (!j["obstacles"].is_array())
        throw std::runtime_error("obstacles must be an array");
    for (const json& o : j["obstacles"])
        env.obstacles.push_back(point_from_json(o, "obstacle"));

    try {
        env.validate();
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("invalid environment: ") + e.what());
    }
    return env;
}

Environment load_environment(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open environment file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return environment_from_json(buffer.str());
}

void save_environment(const Environment& env, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write environment file: " + path);
    out << environment_to_json(env) << '\n';
}

std::string trial_to_json_line(const TrialResult& trial, int trial_index, bool with_trajectory)
{
    json j;
    j["trial"] = trial_index;
    j["outcome"] = to_string(trial.outcome);
    j["steps"] = trial.steps;
    j["wall_time_ms"] = trial.wall_time_s * 1e3;
    j["detected_obstacles"] = trial.detected_obstacles;
    if (with_trajectory) {
        json traj = json::array();
        for (const Point2& p : trial.trajectory)
            traj.push_back(point_to_json(p));
        j["trajectory"] = traj;
    }
    return j.dump();
}

void write_trials_jsonl(std::ostream& out, std::span<const TrialResult> trials,
                        bool with_trajectories)
{
    for (std::size_t i = 0; i < trials.size(); ++i)
        out << trial_to_json_line(trials[i], static_cast<int>(i), with_trajectories) << '\n';
}

std::string run_document_json(const Environment& env, const TrialResult& trial)
{
    json j;
    j["environment"] = json::parse(environment_to_json(env));
    j["outcome"] = to_string(trial.outcome);
    j["steps"] = trial.steps;
    j["wall_time_ms"] = trial.wall_time_s * 1e3;
    j["detected_obstacles"] = trial.detected_obstacles;
    json traj = json::array();
    for (const Point2& p : trial.trajectory)
        traj.push_back(point_to_json(p));
    j["trajectory"] = traj;
    return j.dump();
}

} // namespace apfnav
