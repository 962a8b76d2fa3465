#include "apfnav/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace apfnav {

double distance(Point2 a, Point2 b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

std::vector<Point2> bacteria_points(Point2 center, double step, int n_b)
{
    if (n_b < 1)
        throw std::invalid_argument("bacteria_points: n_b must be >= 1, got " + std::to_string(n_b));
    if (!(step > 0.0))
        throw std::invalid_argument("bacteria_points: step must be > 0, got " + std::to_string(step));

    std::vector<Point2> points;
    points.reserve(static_cast<std::size_t>(n_b));
    for (int k = 0; k < n_b; ++k) {
        double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_b);
        points.push_back({center.x + step * std::cos(theta), center.y + step * std::sin(theta)});
    }
    return points;
}

void Environment::validate() const
{
    if (!(length_x > 0.0))
        throw std::invalid_argument("length_x must be > 0, got " + std::to_string(length_x));
    if (!(length_y > 0.0))
        throw std::invalid_argument("length_y must be > 0, got " + std::to_string(length_y));
    if (start == target)
        throw std::invalid_argument("start must differ from target");
    for (std::size_t i = 0; i < obstacles.size(); ++i) {
        const Point2& o = obstacles[i];
        if (!(o.x >= 0.0 && o.x <= length_x && o.y >= 0.0 && o.y <= length_y))
            throw std::invalid_argument("obstacles[" + std::to_string(i) + "] out of bounds");
    }
}

void EnvGenConfig::validate() const
{
    if (!(length_x > 0.0))
        throw std::invalid_argument("length_x must be > 0, got " + std::to_string(length_x));
    if (!(length_y > 0.0))
        throw std::invalid_argument("length_y must be > 0, got " + std::to_string(length_y));
    if (start == target)
        throw std::invalid_argument("start must differ from target");
    if (n_lower < 0)
        throw std::invalid_argument("n_lower must be >= 0, got " + std::to_string(n_lower));
    if (n_upper < n_lower)
        throw std::invalid_argument("n_upper must be >= n_lower, got " + std::to_string(n_upper));
    if (!(spawn_clearance >= 0.0))
        throw std::invalid_argument("spawn_clearance must be >= 0, got " + std::to_string(spawn_clearance));
}

Environment sample_environment(const EnvGenConfig& cfg, std::mt19937_64& rng)
{
    cfg.validate();

    Environment env;
    env.length_x = cfg.length_x;
    env.length_y = cfg.length_y;
    env.start = cfg.start;
    env.target = cfg.target;

    std::uniform_int_distribution<int> count_dist(cfg.n_lower, cfg.n_upper);
    int count = count_dist(rng);

    std::uniform_real_distribution<double> x_dist(0.0, cfg.length_x);
    std::uniform_real_distribution<double> y_dist(0.0, cfg.length_y);
    const double clearance_sq = cfg.spawn_clearance * cfg.spawn_clearance;
    constexpr int kMaxAttempts = 10000;

    env.obstacles.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        bool placed = false;
        for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
            Point2 o{x_dist(rng), y_dist(rng)};
            if (squared_distance(o, cfg.start) >= clearance_sq
                && squared_distance(o, cfg.target) >= clearance_sq) {
                env.obstacles.push_back(o);
                placed = true;
                break;
            }
        }
        if (!placed)
            throw std::runtime_error("sample_environment: could not place obstacle "
                                     + std::to_string(i) + " after " + std::to_string(kMaxAttempts)
                                     + " attempts; spawn_clearance leaves no room");
    }
    return env;
}

} // namespace apfnav
