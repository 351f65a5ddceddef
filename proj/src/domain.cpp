#include "hilbertvd/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hilbertvd/error.hpp"

namespace hilbertvd {

namespace {

// Angular comparison of directions measured counterclockwise from `ref`,
// in [0, 2*pi).
struct AngleFrom {
    Point ref;

    bool upper_half(Point u) const {
        const double c = cross(ref, u);
        return c < 0.0 || (c == 0.0 && dot(ref, u) < 0.0);
    }

    bool less(Point a, Point b) const {
        const bool ha = upper_half(a);
        const bool hb = upper_half(b);
        if (ha != hb) return hb;
        return cross(a, b) > 0.0;
    }
};

double segment_param(Point p, Point d, Point v0, Point v1) {
    const Point e = v1 - v0;
    return cross(v0 - p, e) / cross(d, e);
}

}  // namespace

ConvexDomain ConvexDomain::build(std::vector<Point> vertices) {
    const std::size_t m = vertices.size();
    if (m < 3) fail(ErrorKind::TooFewVertices, "a domain needs at least 3 vertices");
    for (const Point& v : vertices) {
        if (!finite(v)) fail(ErrorKind::InvalidArgument, "domain vertex is not finite");
    }

    double extent = 0.0;
    for (const Point& v : vertices) extent = std::max({extent, std::abs(v.x), std::abs(v.y)});
    const double eps = 1e-12 * std::max(extent, 1.0);

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (dist(vertices[i], vertices[j]) <= eps) {
                fail(ErrorKind::DuplicateVertex, "domain has duplicate vertices");
            }
        }
    }

    int positive = 0;
    int negative = 0;
    double turning = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const Point e0 = vertices[(i + 1) % m] - vertices[i];
        const Point e1 = vertices[(i + 2) % m] - vertices[(i + 1) % m];
        const double c = cross(e0, e1);
        if (std::abs(c) <= eps * (norm(e0) + norm(e1))) {
            fail(ErrorKind::NotConvex, "domain has a collinear vertex triple");
        }
        (c > 0.0 ? positive : negative) += 1;
        turning += std::atan2(c, dot(e0, e1));
    }
    if (positive != 0 && negative != 0) fail(ErrorKind::NotConvex, "domain is not convex");
    // A star polygon turns consistently but winds more than once.
    if (std::abs(std::abs(turning) - 2.0 * std::numbers::pi) > 1e-6) {
        fail(ErrorKind::NotConvex, "domain boundary is self-intersecting");
    }
    if (negative != 0) std::reverse(vertices.begin(), vertices.end());

    ConvexDomain d;
    d.vertices_ = std::move(vertices);

    double area2 = 0.0;
    Point c{0.0, 0.0};
    for (std::size_t i = 0; i < m; ++i) {
        const Point a = d.vertices_[i];
        const Point b = d.vertices_[(i + 1) % m];
        const double w = cross(a, b);
        area2 += w;
        c = c + w * (a + b);
    }
    d.area_ = 0.5 * area2;
    d.anchor_ = c / (3.0 * area2);

    d.lo_ = d.hi_ = d.vertices_.front();
    for (const Point& v : d.vertices_) {
        d.lo_ = {std::min(d.lo_.x, v.x), std::min(d.lo_.y, v.y)};
        d.hi_ = {std::max(d.hi_.x, v.x), std::max(d.hi_.y, v.y)};
        for (const Point& w : d.vertices_) d.diameter_ = std::max(d.diameter_, dist(v, w));
    }
    return d;
}

Point ConvexDomain::outward_normal(std::size_t i) const {
    const Point e = edge_vector(i);
    return Point{e.y, -e.x} / norm(e);
}

RayHit ConvexDomain::ray_exit(Point p, Point d) const {
    const std::size_t m = vertices_.size();
    const AngleFrom order{vertices_[0] - p};
    // Largest i with angle(v_i - p) <= angle(d); angle(v_0 - p) == 0.
    std::size_t lo = 0;
    std::size_t hi = m;
    while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        if (order.less(d, vertices_[mid] - p)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return {segment_param(p, d, vertices_[lo], vertex(lo + 1)), lo};
}

RayHit ConvexDomain::ray_exit_linear(Point p, Point d) const {
    const std::size_t m = vertices_.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Point a = vertices_[i] - p;
        const Point b = vertex(i + 1) - p;
        // d within the half-open wedge [a, b) seen from p.
        if (cross(a, d) >= 0.0 && cross(d, b) > 0.0) {
            return {segment_param(p, d, vertices_[i], vertex(i + 1)), i};
        }
    }
    // Only reachable for non-interior p.
    return {segment_param(p, d, vertices_[0], vertex(1)), 0};
}

std::size_t ConvexDomain::anchor_wedge(Point p) const {
    return ray_exit(anchor_, p - anchor_).edge;
}

bool ConvexDomain::contains(Point p) const {
    if (p == anchor_) return true;
    const std::size_t e = anchor_wedge(p);
    return cross(edge_vector(e), p - vertices_[e]) > 0.0;
}

double ConvexDomain::clearance(Point p) const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const Point e = edge_vector(i);
        best = std::min(best, cross(e, p - vertices_[i]) / norm(e));
    }
    return best;
}

double ConvexDomain::boundary_coordinate(Point y, std::size_t edge) const {
    const Point e = edge_vector(edge);
    double f = dot(y - vertex(edge), e) / dot(e, e);
    f = std::clamp(f, 0.0, 1.0);
    return static_cast<double>(edge) + f;
}

void require_interior(const ConvexDomain& domain, Point p, const Tolerances& tol) {
    if (!finite(p)) fail(ErrorKind::InvalidArgument, "point is not finite");
    const double c = domain.clearance(p);
    if (c < -tol.boundary) fail(ErrorKind::OutsideDomain, "point lies outside the domain");
    if (c < tol.boundary) fail(ErrorKind::PointOnBoundary, "point lies on the domain boundary");
}

Chord chord_through(const ConvexDomain& domain, Point p, Point q, const Tolerances& tol) {
    if (p == q) fail(ErrorKind::CoincidentPoints, "chord needs two distinct points");
    require_interior(domain, p, tol);
    require_interior(domain, q, tol);
    const Point d = q - p;
    const RayHit fwd = domain.ray_exit(q, d);
    const RayHit back = domain.ray_exit(p, -d);
    return {p - back.s * d, q + fwd.s * d, back.edge, fwd.edge};
}

}  // namespace hilbertvd
