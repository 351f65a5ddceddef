#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "hilbertvd/domain.hpp"
#include "hilbertvd/point.hpp"
#include "hilbertvd/tolerances.hpp"

namespace hilbertvd {

enum class MetricKind { Hilbert, Funk, ReverseFunk, Thompson };

std::string_view to_string(MetricKind kind);
// The metric whose distance(p, q) equals this one's distance(q, p).
MetricKind reversed(MetricKind kind);
MetricKind parse_metric(std::string_view name);

// Distances are measured from a site (first argument) to a point. With the
// chord a, p, q, b through p and q:
//   Funk(p, q)        = ln(|pb| / |qb|)
//   ReverseFunk(p, q) = Funk(q, p)
//   Hilbert(p, q)     = (Funk(p, q) + Funk(q, p)) / 2
//   Thompson(p, q)    = max(Funk(p, q), Funk(q, p))
class Space {
public:
    Space(ConvexDomain domain, MetricKind metric, Tolerances tol = Tolerances{})
        : domain_(std::move(domain)), metric_(metric), tol_(tol) {}

    const ConvexDomain& domain() const { return domain_; }
    MetricKind metric() const { return metric_; }
    const Tolerances& tolerances() const { return tol_; }
    double scale() const { return domain_.diameter(); }

    /// Validated distance; throws PointOnBoundary or OutsideDomain.
    double distance(Point from, Point to) const;

    /// Unchecked distance for points already known to be interior.
    double distance_interior(Point from, Point to) const;

    /// Finite part of distance(site, x) as x approaches boundary point y on
    /// `edge` along the inward normal. The divergent -c*ln(h) term is common
    /// to all sites, so differences of potentials are limits of distance
    /// differences.
    double boundary_potential(Point site, Point y, std::size_t edge) const;

    void require_interior(Point p) const { hilbertvd::require_interior(domain_, p, tol_); }

private:
    ConvexDomain domain_;
    MetricKind metric_;
    Tolerances tol_;
};

double distance(const ConvexDomain& domain, MetricKind metric, Point p, Point q);

}  // namespace hilbertvd
