#include "hilbertvd/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hilbertvd/error.hpp"

namespace hilbertvd {

double signed_area(const Polygon& ring) {
    double a = 0.0;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) a += cross(ring[i], ring[(i + 1) % n]);
    return 0.5 * a;
}

Point centroid(const Polygon& ring) {
    const std::size_t n = ring.size();
    if (n == 0) return {};
    double a = 0.0;
    Point c{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        const double w = cross(ring[i], ring[(i + 1) % n]);
        a += w;
        c = c + w * (ring[i] + ring[(i + 1) % n]);
    }
    if (a == 0.0) {
        Point s{0.0, 0.0};
        for (const Point& p : ring) s = s + p;
        return s / static_cast<double>(n);
    }
    return c / (3.0 * a);
}

bool contains(const Polygon& ring, Point p) {
    bool inside = false;
    const std::size_t n = ring.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point a = ring[i];
        const Point b = ring[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < x) inside = !inside;
        }
    }
    return inside;
}

bool convex_contains(const Polygon& ring, Point p, double eps) {
    const std::size_t n = ring.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = ring[i];
        const Point e = ring[(i + 1) % n] - a;
        const double len = norm(e);
        if (len == 0.0) continue;
        if (cross(e, p - a) / len < -eps) return false;
    }
    return true;
}

double boundary_distance(const Polygon& ring, Point p) {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        best = std::min(best, segment_distance(p, ring[i], ring[(i + 1) % n]));
    }
    return best;
}

bool is_convex(const Polygon& ring, double eps) {
    const std::size_t n = ring.size();
    if (n < 3) return false;
    bool pos = false;
    bool neg = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point e0 = ring[(i + 1) % n] - ring[i];
        const Point e1 = ring[(i + 2) % n] - ring[(i + 1) % n];
        const double c = cross(e0, e1);
        const double scale = norm(e0) * norm(e1);
        if (c > eps * scale) pos = true;
        if (c < -eps * scale) neg = true;
    }
    return !(pos && neg);
}

Polygon clip_half_plane(const Polygon& poly, Point a, Point b) {
    Polygon out;
    const std::size_t n = poly.size();
    if (n == 0) return out;
    out.reserve(n + 2);
    const Point e = b - a;
    for (std::size_t i = 0; i < n; ++i) {
        const Point p = poly[i];
        const Point q = poly[(i + 1) % n];
        const double sp = cross(e, p - a);
        const double sq = cross(e, q - a);
        if (sp >= 0.0) out.push_back(p);
        if ((sp >= 0.0) != (sq >= 0.0)) {
            const double t = sp / (sp - sq);
            out.push_back(lerp(p, q, t));
        }
    }
    if (out.size() < 3) out.clear();
    return out;
}

Polygon convex_intersection(const Polygon& a, const Polygon& b) {
    Polygon out = a;
    const std::size_t n = b.size();
    for (std::size_t i = 0; i < n && !out.empty(); ++i) {
        out = clip_half_plane(out, b[i], b[(i + 1) % n]);
    }
    return out;
}

std::vector<Polygon> convex_difference(const Polygon& poly, const Polygon& clip) {
    // poly \ clip = union over edges i of
    //   poly ∩ inside(e_0..e_{i-1}) ∩ outside(e_i), pairwise disjoint.
    std::vector<Polygon> pieces;
    if (clip.size() < 3) {
        if (!poly.empty()) pieces.push_back(poly);
        return pieces;
    }
    Polygon rest = poly;
    const std::size_t n = clip.size();
    for (std::size_t i = 0; i < n && !rest.empty(); ++i) {
        const Point a = clip[i];
        const Point b = clip[(i + 1) % n];
        Polygon outside = clip_half_plane(rest, b, a);
        if (!outside.empty() && area(outside) > 0.0) pieces.push_back(std::move(outside));
        rest = clip_half_plane(rest, a, b);
    }
    return pieces;
}

namespace {

int orient(Point a, Point b, Point c) {
    const double v = cross(b - a, c - a);
    return (v > 0.0) - (v < 0.0);
}

bool on_segment(Point a, Point b, Point p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

bool segments_touch(Point a, Point b, Point c, Point d) {
    const int o1 = orient(a, b, c);
    const int o2 = orient(a, b, d);
    const int o3 = orient(c, d, a);
    const int o4 = orient(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

}  // namespace

bool is_simple(const Polygon& ring) {
    const std::size_t n = ring.size();
    if (n < 3) return false;
    struct Box {
        double x0, x1, y0, y1;
    };
    std::vector<Box> boxes(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = ring[i];
        const Point b = ring[(i + 1) % n];
        boxes[i] = {std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y)};
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j == i + 1 || (i == 0 && j == n - 1)) continue;
            if (boxes[i].x1 < boxes[j].x0 || boxes[j].x1 < boxes[i].x0 || boxes[i].y1 < boxes[j].y0 ||
                boxes[j].y1 < boxes[i].y0) {
                continue;
            }
            if (segments_touch(ring[i], ring[(i + 1) % n], ring[j], ring[(j + 1) % n])) return false;
        }
    }
    return true;
}

KernelResult kernel(const Polygon& input, double relative_area) {
    if (!is_simple(input)) fail(ErrorKind::SelfIntersectingInput, "polygon is not simple");
    Polygon ring = input;
    if (signed_area(ring) < 0.0) std::reverse(ring.begin(), ring.end());

    Point lo = ring.front();
    Point hi = ring.front();
    for (const Point& p : ring) {
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
    }
    KernelResult result;
    result.kernel = {lo, {hi.x, lo.y}, hi, {lo.x, hi.y}};
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n && !result.kernel.empty(); ++i) {
        const Point a = ring[i];
        const Point b = ring[(i + 1) % n];
        if (a == b) continue;
        result.kernel = clip_half_plane(result.kernel, a, b);
    }
    result.star_shaped = !result.kernel.empty() && area(result.kernel) > relative_area * area(ring);
    if (!result.star_shaped) result.kernel.clear();
    return result;
}

}  // namespace hilbertvd
