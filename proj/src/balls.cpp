#include "hilbertvd/balls.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "hilbertvd/bisector.hpp"
#include "hilbertvd/error.hpp"

namespace hilbertvd {

namespace {

struct Extent {
    double funk;
    double reverse_funk;
};

// Radial extents of the Funk and reverse Funk balls along unit direction u:
// with forward boundary distance beta and backward distance alpha,
//   Funk:         t = beta * (1 - e^-r)
//   reverse Funk: t = min(beta, alpha * (e^r - 1))  (bounded metric near the boundary)
//   Hilbert:      t = alpha*beta*(K - 1) / (beta + K*alpha), K = e^(2r)
Extent extents(double alpha, double beta, double r) {
    return {beta * -std::expm1(-r), alpha * std::expm1(r)};
}

double radial(MetricKind metric, double alpha, double beta, double r) {
    switch (metric) {
        case MetricKind::Funk: return beta * -std::expm1(-r);
        case MetricKind::ReverseFunk: return std::min(beta, alpha * std::expm1(r));
        case MetricKind::Thompson: {
            const Extent e = extents(alpha, beta, r);
            return std::min(e.funk, e.reverse_funk);
        }
        case MetricKind::Hilbert: {
            const double km1 = std::expm1(2.0 * r);
            return alpha * beta * km1 / (beta + (km1 + 1.0) * alpha);
        }
    }
    return 0.0;
}

bool line_intersection(Point p0, Point p1, Point q0, Point q1, Point& out) {
    const Point d0 = p1 - p0;
    const Point d1 = q1 - q0;
    const double den = cross(d0, d1);
    if (den == 0.0) return false;
    const double s = cross(q0 - p0, d1) / den;
    out = p0 + s * d0;
    return true;
}

}  // namespace

double ball_radial_extent(const Space& space, Point center, Point u, double radius) {
    const ConvexDomain& dom = space.domain();
    const double beta = dom.ray_exit(center, u).s;
    const double alpha = dom.ray_exit(center, -u).s;
    return radial(space.metric(), alpha, beta, radius);
}

MetricBall ball(const Space& space, Point center, double radius) {
    if (!(radius >= 0.0)) fail(ErrorKind::NegativeRadius, "ball radius must be nonnegative");
    space.require_interior(center);
    MetricBall out{center, radius, space.metric(), {}, false};
    if (radius == 0.0) {
        out.boundary = {center};
        return out;
    }

    const ConvexDomain& dom = space.domain();
    std::vector<double> angles;
    angles.reserve(2 * dom.size());
    for (const Point& v : dom.vertices()) {
        const double a = std::atan2(v.y - center.y, v.x - center.x);
        angles.push_back(a);
        angles.push_back(a > 0.0 ? a - M_PI : a + M_PI);
    }
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end(),
                             [](double a, double b) { return std::abs(a - b) < 1e-15; }),
                 angles.end());

    struct Spoke {
        Point u;
        double alpha, beta;
    };
    std::vector<Spoke> spokes;
    spokes.reserve(angles.size());
    for (double a : angles) {
        // Exact directions toward vertices keep the spoke points on the spokes.
        const Point u{std::cos(a), std::sin(a)};
        spokes.push_back({u, dom.ray_exit(center, -u).s, dom.ray_exit(center, u).s});
    }

    const std::size_t k = spokes.size();
    for (std::size_t i = 0; i < k; ++i) {
        const Spoke& s = spokes[i];
        out.boundary.push_back(center + radial(space.metric(), s.alpha, s.beta, radius) * s.u);
        // Within a sector the ball boundary is the nearer of two straight
        // segments (Thompson: Funk and reverse Funk levels; reverse Funk: its
        // level and the domain edge); they may swap once inside the sector.
        const MetricKind metric = space.metric();
        if (metric != MetricKind::Thompson && metric != MetricKind::ReverseFunk) continue;
        const Spoke& n = spokes[(i + 1) % k];
        const Extent e0 = extents(s.alpha, s.beta, radius);
        const Extent e1 = extents(n.alpha, n.beta, radius);
        const double a0 = metric == MetricKind::Thompson ? e0.funk : s.beta;
        const double a1 = metric == MetricKind::Thompson ? e1.funk : n.beta;
        const double g0 = a0 - e0.reverse_funk;
        const double g1 = a1 - e1.reverse_funk;
        if ((g0 < 0.0 && g1 > 0.0) || (g0 > 0.0 && g1 < 0.0)) {
            Point x;
            if (line_intersection(center + a0 * s.u, center + a1 * n.u, center + e0.reverse_funk * s.u,
                                  center + e1.reverse_funk * n.u, x)) {
                out.boundary.push_back(x);
            }
        }
    }
    return out;
}

InfiniteBallPair infinite_balls(const Space& space, const Bisector& bisector, double eps) {
    if (eps < 0.0) eps = space.tolerances().infinite_ball;
    if (!(eps > 0.0 && eps < 0.5)) fail(ErrorKind::InvalidArgument, "limit offset must be in (0, 0.5)");
    if (bisector.samples().size() < 2 || bisector.length() <= 0.0) {
        fail(ErrorKind::BisectorDegenerate, "bisector has no extent");
    }
    // Balls around a bisector point collect points by their distance *to* the
    // center, which is the outgoing ball of the reversed metric.
    const Space incoming(space.domain(), reversed(space.metric()), space.tolerances());
    InfiniteBallPair pair;
    pair.sites = {bisector.first_site(), bisector.second_site()};
    for (int side = 0; side < 2; ++side) {
        const double t = side == 0 ? eps : 1.0 - eps;
        const Point c = exact_point(space, bisector, t);
        if (space.domain().clearance(c) < space.tolerances().boundary) {
            fail(ErrorKind::BisectorDegenerate, "limit ball center collapsed onto the boundary");
        }
        const double r = space.distance_interior(bisector.first_site(), c);
        MetricBall b = ball(incoming, c, r);
        b.limit = true;
        (side == 0 ? pair.b0 : pair.b1) = std::move(b);
    }
    return pair;
}

}  // namespace hilbertvd
