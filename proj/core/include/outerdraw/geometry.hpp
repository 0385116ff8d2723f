#pragma once

#include <cmath>

namespace outerdraw {

struct point {
    double x = 0, y = 0;
};

inline point operator+(point a, point b) { return {a.x + b.x, a.y + b.y}; }
inline point operator-(point a, point b) { return {a.x - b.x, a.y - b.y}; }
inline point operator*(double k, point a) { return {k * a.x, k * a.y}; }
inline point operator*(point a, double k) { return {k * a.x, k * a.y}; }
inline bool operator==(point a, point b) { return a.x == b.x && a.y == b.y; }

inline double dot(point a, point b) { return a.x * b.x + a.y * b.y; }
inline double cross(point a, point b) { return a.x * b.y - a.y * b.x; }
inline double norm(point a) { return std::hypot(a.x, a.y); }
inline double dist(point a, point b) { return norm(a - b); }
inline point unit(point a) { double l = norm(a); return {a.x / l, a.y / l}; }
inline point perp(point a) { return {-a.y, a.x}; }  // ccw quarter turn
inline point rotate(point a, double t) {
    double c = std::cos(t), s = std::sin(t);
    return {c * a.x - s * a.y, s * a.x + c * a.y};
}
inline point dir_of(double t) { return {std::cos(t), std::sin(t)}; }
inline double angle_of(point a) { return std::atan2(a.y, a.x); }

// unsigned angle between two directions, in [0, pi]
inline double angle_between(point a, point b) {
    return std::atan2(std::fabs(cross(a, b)), dot(a, b));
}
// angle between a segment (undirected) and a direction, in [0, pi/2]
inline double line_angle(point seg, point d) {
    double t = angle_between(seg, d);
    return t > M_PI / 2 ? M_PI - t : t;
}

// exact sign of orient(a, b, c); falls back to rationals when close
int orient_sign(point a, point b, point c);

// closed segments ab and cd share a point
bool segments_intersect(point a, point b, point c, point d);

bool point_in_triangle_strict(point p, point a, point b, point c);

double triangle_area(point a, point b, point c);

inline constexpr double theta0() { return 1.318116071652818; }  // acos(1/4)

}  // namespace outerdraw
