#include "hilbertvd/circumcenter.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include <boost/math/tools/toms748_solve.hpp>

#include "hilbertvd/error.hpp"
#include "hilbertvd/polygon.hpp"

namespace hilbertvd {

namespace {

constexpr double kCornerInset = 1e-7;

}  // namespace

double endpoint_gap(const Space& space, const Bisector& host, int side, Point third) {
    const Point y = host.endpoint(side);
    const std::size_t e = host.endpoint_edge(side);
    return space.boundary_potential(third, y, e) - space.boundary_potential(host.first_site(), y, e);
}

std::vector<CircumcenterEvent> circumcenters_on(const Space& space, const Bisector& host, Point third,
                                                std::array<int, 3> ids) {
    const Point s1 = host.first_site();
    const Point s2 = host.second_site();
    const double sep = space.tolerances().boundary;
    if (dist(third, s1) <= sep || dist(third, s2) <= sep) {
        fail(ErrorKind::CoincidentSites, "circumcenter needs three distinct sites");
    }
    const auto& samples = host.samples();
    const std::size_t n = samples.size();

    auto gap_at = [&](Point x) {
        return space.distance_interior(third, x) - space.distance_interior(s1, x);
    };
    std::vector<double> g(n);
    // At a domain vertex the boundary limit depends on the approach
    // direction, so sample just inside the curve instead.
    const double corner = space.tolerances().snap * space.scale();
    for (const int side : {0, 1}) {
        const Point y = host.endpoint(side);
        const bool at_vertex = std::any_of(space.domain().vertices().begin(), space.domain().vertices().end(),
                                           [&](Point v) { return dist(v, y) <= corner; });
        const double t = side == 0 ? kCornerInset : 1.0 - kCornerInset;
        (side == 0 ? g.front() : g.back()) =
            at_vertex ? gap_at(exact_point(space, host, t)) : endpoint_gap(space, host, side, third);
    }
    for (std::size_t i = 1; i + 1 < n; ++i) g[i] = gap_at(samples[i].point);

    std::vector<CircumcenterEvent> out;
    const double end_tol = 1e-6;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!std::isfinite(g[i]) || !std::isfinite(g[i + 1]) || (g[i] > 0.0) == (g[i + 1] > 0.0)) continue;
        auto along = [&](double angle) {
            return gap_at(bisector_crossing(space, host.anchor(), host.other(), angle));
        };
        double lo = samples[i].angle;
        double hi = samples[i + 1].angle;
        double glo = g[i];
        double ghi = g[i + 1];
        if (lo > hi) {
            std::swap(lo, hi);
            std::swap(glo, ghi);
        }
        double angle;
        if (glo == 0.0) {
            angle = lo;
        } else if (ghi == 0.0) {
            angle = hi;
        } else {
            std::uintmax_t iterations = 200;
            const auto r = boost::math::tools::toms748_solve(
                along, lo, hi, glo, ghi, boost::math::tools::eps_tolerance<double>(52), iterations);
            angle = 0.5 * (r.first + r.second);
        }
        CircumcenterEvent ev;
        ev.sites = ids;
        ev.angle = angle;
        ev.t = host.t_at_angle(angle);
        ev.point = bisector_crossing(space, host.anchor(), host.other(), angle);
        ev.near_boundary = ev.t < end_tol || ev.t > 1.0 - end_tol ||
                           space.domain().clearance(ev.point) < space.tolerances().boundary;
        ev.radius = ev.near_boundary ? std::numeric_limits<double>::infinity()
                                     : space.distance_interior(s1, ev.point);
        out.push_back(ev);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.t < b.t; });
    return out;
}

std::vector<CircumcenterEvent> circumcenter(const Space& space, Point s1, Point s2, Point s3) {
    space.require_interior(s3);
    return circumcenters_on(space, trace_bisector(space, s1, s2), s3);
}

double OuterRegion::area() const {
    double a = 0.0;
    for (const auto& p : pieces) a += hilbertvd::area(p);
    return a;
}

OverlapRegion overlap_region(const Space& space, const Bisector& bisector) {
    OverlapRegion z;
    z.sites = {bisector.first_site(), bisector.second_site()};
    z.balls = infinite_balls(space, bisector);
    z.polygon = convex_intersection(z.balls.b0.boundary, z.balls.b1.boundary);
    return z;
}

OuterRegion outer_region(const Space& space, const Bisector& bisector) {
    OuterRegion w;
    w.sites = {bisector.first_site(), bisector.second_site()};
    w.balls = infinite_balls(space, bisector);
    const Polygon omega = space.domain().vertices();
    for (const Polygon& piece : convex_difference(omega, w.balls.b0.boundary)) {
        for (Polygon& rest : convex_difference(piece, w.balls.b1.boundary)) {
            w.pieces.push_back(std::move(rest));
        }
    }
    return w;
}

OverlapRegion overlap_region(const Space& space, Point s1, Point s2) {
    return overlap_region(space, trace_bisector(space, s1, s2));
}

OuterRegion outer_region(const Space& space, Point s1, Point s2) {
    return outer_region(space, trace_bisector(space, s1, s2));
}

}  // namespace hilbertvd
