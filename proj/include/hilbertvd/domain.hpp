#pragma once

#include <cstddef>
#include <vector>

#include "hilbertvd/point.hpp"
#include "hilbertvd/tolerances.hpp"

namespace hilbertvd {

// Where a ray leaving an interior point meets the boundary: p + s * d.
struct RayHit {
    double s = 0.0;
    std::size_t edge = 0;
};

/// A strictly convex polygon with counterclockwise vertices.
///
/// Edge i runs from vertex i to vertex i+1 and owns its start vertex, so a
/// ray through vertex i is attributed to edge i. Ray queries binary-search
/// the angular order of the vertices around the query point, which is the
/// boundary order for any interior point.
class ConvexDomain {
public:
    /// Validates and normalizes orientation to counterclockwise.
    /// Throws TooFewVertices, DuplicateVertex or NotConvex.
    static ConvexDomain build(std::vector<Point> vertices);

    std::size_t size() const { return vertices_.size(); }
    const std::vector<Point>& vertices() const { return vertices_; }
    Point vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
    Point edge_vector(std::size_t i) const { return vertex(i + 1) - vertex(i); }
    Point outward_normal(std::size_t i) const;

    Point anchor() const { return anchor_; }
    double diameter() const { return diameter_; }
    double area() const { return area_; }
    Point bbox_min() const { return lo_; }
    Point bbox_max() const { return hi_; }

    // O(log m). p must be strictly interior and d nonzero.
    RayHit ray_exit(Point p, Point d) const;
    // O(m) reference scan with the same edge ownership rule.
    RayHit ray_exit_linear(Point p, Point d) const;

    // O(log m) strict containment via the anchor wedge.
    bool contains(Point p) const;
    // Signed Euclidean distance to the boundary, positive inside. O(m).
    double clearance(Point p) const;

    // Position along the boundary: edge index plus fraction of that edge.
    double boundary_coordinate(Point y, std::size_t edge) const;

private:
    ConvexDomain() = default;
    std::size_t anchor_wedge(Point p) const;

    std::vector<Point> vertices_;
    Point anchor_;
    double diameter_ = 0.0;
    double area_ = 0.0;
    Point lo_, hi_;
};

// Boundary intersections of the line through p and q, ordered a, p, q, b.
struct Chord {
    Point a, b;
    std::size_t edge_a = 0;
    std::size_t edge_b = 0;
};

Chord chord_through(const ConvexDomain& domain, Point p, Point q,
                    const Tolerances& tol = Tolerances{});

// Throws PointOnBoundary / OutsideDomain unless p has clearance >= tol.boundary.
void require_interior(const ConvexDomain& domain, Point p, const Tolerances& tol = Tolerances{});

}  // namespace hilbertvd
