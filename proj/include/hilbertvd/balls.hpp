#pragma once

#include <utility>

#include "hilbertvd/metric.hpp"
#include "hilbertvd/point.hpp"

namespace hilbertvd {

struct MetricBall {
    Point center;
    double radius = 0.0;
    MetricKind metric = MetricKind::Hilbert;
    Polygon boundary;  // counterclockwise; a single point when radius == 0
    bool limit = false;  // stands in for a ball centered on the boundary
};

/// Ball {x : distance(center, x) <= radius}. Polygonal: within each sector
/// cut out by the spokes from the center through the domain vertices, the
/// ball boundary is a straight segment, so its vertices are the radial
/// points on the spokes (plus one crossing per sector for Thompson, where
/// the ball is the intersection of the Funk and reverse Funk balls).
/// Throws OutsideDomain, PointOnBoundary, NegativeRadius.
MetricBall ball(const Space& space, Point center, double radius);

// Distance along unit direction u from `center` to the ball boundary.
double ball_radial_extent(const Space& space, Point center, Point u, double radius);

class Bisector;

struct InfiniteBallPair {
    MetricBall b0;  // centered near bisector parameter 0
    MetricBall b1;  // centered near bisector parameter 1
    std::pair<Point, Point> sites;
};

/// Limit balls through both sites, centered at bisector parameters
/// eps and 1 - eps (eps = tolerances().infinite_ball unless given).
InfiniteBallPair infinite_balls(const Space& space, const Bisector& bisector, double eps = -1.0);

}  // namespace hilbertvd
