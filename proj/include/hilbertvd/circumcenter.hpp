#pragma once

#include <array>
#include <vector>

#include "hilbertvd/balls.hpp"
#include "hilbertvd/bisector.hpp"
#include "hilbertvd/metric.hpp"

namespace hilbertvd {

// A point equidistant from three sites, located on the bisector of the
// first two. `sites` holds caller-supplied indices (host pair, then third).
struct CircumcenterEvent {
    std::array<int, 3> sites{0, 1, 2};
    double t = 0.0;
    double angle = 0.0;
    Point point;
    double radius = 0.0;
    bool near_boundary = false;  // root within endpoint tolerance of t = 0 or 1
};

/// All circumcenters of (first, second, third) on an already traced
/// bisector of the first two sites: sign changes of
/// g = d(third, x) - d(first, x) along the curve, scanned at every sample
/// (including boundary limits at both ends) and solved on the exact curve.
/// An empty result means no circumcenter exists.
std::vector<CircumcenterEvent> circumcenters_on(const Space& space, const Bisector& host, Point third,
                                                std::array<int, 3> ids = {0, 1, 2});

/// Traces the bisector of s1, s2 and returns every circumcenter with s3.
/// Throws CoincidentSites.
std::vector<CircumcenterEvent> circumcenter(const Space& space, Point s1, Point s2, Point s3);

// g at a bisector endpoint, as a boundary limit.
double endpoint_gap(const Space& space, const Bisector& host, int side, Point third);

struct OverlapRegion {
    std::pair<Point, Point> sites;
    InfiniteBallPair balls;
    Polygon polygon;  // B0 ∩ B1
};

struct OuterRegion {
    std::pair<Point, Point> sites;
    InfiniteBallPair balls;
    std::vector<Polygon> pieces;  // Ω \ (B0 ∪ B1) as disjoint convex pieces
    double area() const;
};

OverlapRegion overlap_region(const Space& space, Point s1, Point s2);
OuterRegion outer_region(const Space& space, Point s1, Point s2);
OverlapRegion overlap_region(const Space& space, const Bisector& bisector);
OuterRegion outer_region(const Space& space, const Bisector& bisector);

}  // namespace hilbertvd
