#pragma once

#include <cstddef>
#include <vector>

#include "hilbertvd/metric.hpp"
#include "hilbertvd/point.hpp"

namespace hilbertvd {

// Boundary edges hit by the line through a site and a point: `forward` past
// the point, `backward` behind the site. Distance from the site is smooth
// while both stay fixed.
struct SectorId {
    std::size_t forward = 0;
    std::size_t backward = 0;
    friend bool operator==(const SectorId&, const SectorId&) = default;
};

SectorId sector_of(const ConvexDomain& domain, Point site, Point x);

struct BisectorSample {
    Point point;
    double angle = 0.0;  // direction of the point seen from the tracing anchor
    double t = 0.0;      // normalized arc length
};

struct BisectorPiece {
    double t_lo = 0.0;
    double t_hi = 0.0;
    SectorId first_sector;
    SectorId second_sector;
    std::size_t begin = 0;  // sample range [begin, end]
    std::size_t end = 0;
};

/// Traced bisector {x : d(first, x) = d(second, x)} as a polyline from
/// boundary to boundary, oriented with the first site on its left.
///
/// Each site's cell is star-shaped with respect to that site (straight
/// segments are geodesics), so every ray from a site meets the bisector at
/// most once. The tracer sweeps rays around an anchor site, which is always
/// the lexicographically smaller one so that swapping the sites yields the
/// same point set in reverse.
class Bisector {
public:
    Point first_site() const { return first_; }
    Point second_site() const { return second_; }
    bool anchored_on_first() const { return anchored_on_first_; }
    Point anchor() const { return anchored_on_first_ ? first_ : second_; }
    Point other() const { return anchored_on_first_ ? second_ : first_; }

    const std::vector<BisectorSample>& samples() const { return samples_; }
    const std::vector<BisectorPiece>& pieces() const { return pieces_; }

    Point endpoint(int side) const { return side == 0 ? samples_.front().point : samples_.back().point; }
    std::size_t endpoint_edge(int side) const { return endpoint_edge_[side == 0 ? 0 : 1]; }
    double length() const { return length_; }

    Polyline polyline() const;
    /// Point on the polyline at arc-length parameter t. Throws OutOfRange.
    Point point_at(double t) const;
    double angle_at(double t) const;
    double t_at_angle(double angle) const;

private:
    friend Bisector trace_bisector(const Space& space, Point s1, Point s2);

    Point first_, second_;
    bool anchored_on_first_ = true;
    std::vector<BisectorSample> samples_;
    std::vector<BisectorPiece> pieces_;
    std::size_t endpoint_edge_[2] = {0, 0};
    double length_ = 0.0;
};

/// Throws CoincidentSites, PointOnBoundary, OutsideDomain, BisectorDegenerate.
Bisector trace_bisector(const Space& space, Point s1, Point s2);

/// Bisector point on the ray from `anchor` at `angle`, solved to full
/// precision. Returns the boundary point when the ray does not cross.
Point bisector_crossing(const Space& space, Point anchor, Point other, double angle);

/// True when p and q lie on a line through the meeting point of two edge
/// lines (a common direction, for parallel edges). Cross-ratios measured
/// between those two edges then agree on a whole patch, so the equidistant
/// set can be two-dimensional there; the traced curve is one choice inside it.
bool aligned_with_edges(const ConvexDomain& domain, Point p, Point q, double tolerance = 1e-9);

/// Exact bisector point at parameter t (the polyline only approximates it).
Point exact_point(const Space& space, const Bisector& bisector, double t);

}  // namespace hilbertvd
