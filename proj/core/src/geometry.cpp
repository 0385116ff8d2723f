#include "outerdraw/geometry.hpp"

#include <gmpxx.h>

#include <algorithm>

namespace outerdraw {

int orient_sign(point a, point b, point c) {
    double l = (a.x - c.x) * (b.y - c.y);
    double r = (a.y - c.y) * (b.x - c.x);
    double det = l - r;
    double bound = 3.3306690738754716e-16 * (std::fabs(l) + std::fabs(r));
    if (det > bound) return 1;
    if (-det > bound) return -1;
    mpq_class ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
    mpq_class e = (ax - cx) * (by - cy) - (ay - cy) * (bx - cx);
    return sgn(e);
}

namespace {
bool within(point a, point b, point p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}
}  // namespace

bool segments_intersect(point a, point b, point c, point d) {
    int o1 = orient_sign(a, b, c), o2 = orient_sign(a, b, d);
    int o3 = orient_sign(c, d, a), o4 = orient_sign(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && within(a, b, c)) return true;
    if (o2 == 0 && within(a, b, d)) return true;
    if (o3 == 0 && within(c, d, a)) return true;
    if (o4 == 0 && within(c, d, b)) return true;
    return false;
}

bool point_in_triangle_strict(point p, point a, point b, point c) {
    int s = orient_sign(a, b, c);
    if (s == 0) return false;
    return orient_sign(a, b, p) == s && orient_sign(b, c, p) == s && orient_sign(c, a, p) == s;
}

double triangle_area(point a, point b, point c) { return 0.5 * std::fabs(cross(b - a, c - a)); }

}  // namespace outerdraw
