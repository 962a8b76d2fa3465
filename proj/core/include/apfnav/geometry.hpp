#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace apfnav {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
    friend constexpr Point2 operator*(Point2 p, double s) { return {s * p.x, s * p.y}; }
    friend constexpr bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
};

/// Squared Euclidean distance between two points.
constexpr double squared_distance(Point2 a, Point2 b)
{
    double dx = a.x - b.x;
    double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

/// Euclidean distance; overflow/underflow-safe via hypot.
double distance(Point2 a, Point2 b);

/// The n_b candidate points on the circle of radius `step` around `center`.
/// Point k sits at angle 2*pi*k/n_b measured from the +x axis, so k = 0 is due
/// east and indices advance counterclockwise. Throws std::invalid_argument if
/// n_b < 1 or step <= 0.
std::vector<Point2> bacteria_points(Point2 center, double step, int n_b);

/// A rectangular workspace [0, length_x] x [0, length_y] with point obstacles.
struct Environment {
    double length_x = 30.0;
    double length_y = 30.0;
    Point2 start{3.0, 3.0};
    Point2 target{22.0, 22.0};
    std::vector<Point2> obstacles;

    /// Throws std::invalid_argument naming the offending field if the bounds
    /// are non-positive, start == target, or any obstacle lies out of bounds.
    void validate() const;
};

/// Parameters for random environment generation. The obstacle count is drawn
/// uniformly from {n_lower, ..., n_upper}; obstacle positions are i.i.d.
/// uniform over the rectangle, rejection-sampled until each lies at least
/// spawn_clearance from both the start and the target.
struct EnvGenConfig {
    double length_x = 30.0;
    double length_y = 30.0;
    Point2 start{3.0, 3.0};
    Point2 target{22.0, 22.0};
    int n_lower = 20;
    int n_upper = 45;
    double spawn_clearance = 0.4;

    void validate() const;
    friend bool operator==(const EnvGenConfig&, const EnvGenConfig&) = default;
};

/// Draws a random environment. Deterministic given the engine state. Throws
/// std::runtime_error if an obstacle cannot be placed within a bounded number
/// of rejection attempts (pathological spawn_clearance).
Environment sample_environment(const EnvGenConfig& cfg, std::mt19937_64& rng);

} // namespace apfnav
