#include "hilbertvd/metric.hpp"

#include <algorithm>
#include <cmath>

#include "hilbertvd/error.hpp"

namespace hilbertvd {

std::string_view to_string(MetricKind kind) {
    switch (kind) {
        case MetricKind::Hilbert: return "hilbert";
        case MetricKind::Funk: return "funk";
        case MetricKind::ReverseFunk: return "reverse_funk";
        case MetricKind::Thompson: return "thompson";
    }
    return "hilbert";
}

MetricKind reversed(MetricKind kind) {
    if (kind == MetricKind::Funk) return MetricKind::ReverseFunk;
    if (kind == MetricKind::ReverseFunk) return MetricKind::Funk;
    return kind;
}

MetricKind parse_metric(std::string_view name) {
    if (name == "hilbert") return MetricKind::Hilbert;
    if (name == "funk") return MetricKind::Funk;
    if (name == "reverse_funk") return MetricKind::ReverseFunk;
    if (name == "thompson") return MetricKind::Thompson;
    fail(ErrorKind::InvalidArgument, "unknown metric '" + std::string(name) + "'");
}

double Space::distance(Point from, Point to) const {
    require_interior(from);
    require_interior(to);
    return distance_interior(from, to);
}

double Space::distance_interior(Point from, Point to) const {
    if (from == to) return 0.0;
    const Point d = to - from;
    // b = to + fwd * d lies beyond `to`; a = from - back * d lies behind `from`.
    const double fwd = domain_.ray_exit(to, d).s;
    const double back = domain_.ray_exit(from, -d).s;
    const double forward_funk = std::log1p(1.0 / fwd);   // ln(|from b| / |to b|)
    const double reverse_funk = std::log1p(1.0 / back);  // ln(|to a| / |from a|)
    switch (metric_) {
        case MetricKind::Hilbert: return 0.5 * (forward_funk + reverse_funk);
        case MetricKind::Funk: return forward_funk;
        case MetricKind::ReverseFunk: return reverse_funk;
        case MetricKind::Thompson: return std::max(forward_funk, reverse_funk);
    }
    return 0.0;
}

double Space::boundary_potential(Point site, Point y, std::size_t edge) const {
    const Point w = y - site;
    const double approach = std::log(dot(w, domain_.outward_normal(edge)));
    const double back = domain_.ray_exit(site, -w).s;
    const double reverse_funk = std::log1p(1.0 / back);
    switch (metric_) {
        case MetricKind::Hilbert: return 0.5 * (approach + reverse_funk);
        case MetricKind::Funk: return approach;
        case MetricKind::ReverseFunk: return reverse_funk;
        case MetricKind::Thompson: return approach;
    }
    return 0.0;
}

double distance(const ConvexDomain& domain, MetricKind metric, Point p, Point q) {
    return Space(domain, metric).distance(p, q);
}

}  // namespace hilbertvd
