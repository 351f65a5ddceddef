#pragma once

#include <vector>

#include "hilbertvd/point.hpp"

namespace hilbertvd {

// Positive for counterclockwise rings.
double signed_area(const Polygon& ring);
inline double area(const Polygon& ring) { return signed_area(ring) < 0 ? -signed_area(ring) : signed_area(ring); }
Point centroid(const Polygon& ring);

// Even-odd point test for a simple ring of any orientation.
bool contains(const Polygon& ring, Point p);
// Containment for a counterclockwise convex ring, with slack `eps` outward.
bool convex_contains(const Polygon& ring, Point p, double eps = 0.0);

double boundary_distance(const Polygon& ring, Point p);
bool is_convex(const Polygon& ring, double eps = 0.0);

// Keeps the part of `poly` on the left of the directed line a->b.
Polygon clip_half_plane(const Polygon& poly, Point a, Point b);
// Intersection of two counterclockwise convex polygons.
Polygon convex_intersection(const Polygon& a, const Polygon& b);
// poly \ clip for convex counterclockwise inputs, as disjoint convex pieces.
std::vector<Polygon> convex_difference(const Polygon& poly, const Polygon& clip);

// True when no two non-adjacent edges touch.
bool is_simple(const Polygon& ring);

struct KernelResult {
    bool star_shaped = false;
    Polygon kernel;
};

/// Kernel of a simple polygon: the intersection of the inner half-planes of
/// its edges. Star-shaped iff the kernel has area above
/// `relative_area * area(ring)`. Throws SelfIntersectingInput.
KernelResult kernel(const Polygon& ring, double relative_area = 1e-9);

}  // namespace hilbertvd
