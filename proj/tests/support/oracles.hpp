#pragma once

// Reference computations for tests. They share no code with the engine:
// chords by clipping a line against every edge, distances by the textbook
// cross-ratio, cells by sorting distances.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "hilbertvd/bisector.hpp"
#include "hilbertvd/domain.hpp"
#include "hilbertvd/metric.hpp"

namespace oracle {

using hilbertvd::MetricKind;
using hilbertvd::Point;

inline double cross2(Point a, Point b) { return a.x * b.y - a.y * b.x; }

// Parameters s_min < 0 < s_max where the line p + s*d leaves a convex
// polygon (either orientation), by Cyrus-Beck clipping.
inline std::pair<double, double> clip(const std::vector<Point>& poly, Point p, Point d) {
    double sign = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        sign += cross2(poly[i], poly[(i + 1) % poly.size()]);
    }
    sign = sign > 0 ? 1.0 : -1.0;
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point a = poly[i], b = poly[(i + 1) % poly.size()];
        // inside: sign * cross(b - a, x - a) >= 0
        const double num = sign * cross2(b - a, p - a);
        const double den = sign * cross2(b - a, d);
        if (den == 0.0) continue;
        const double s = -num / den;
        if (den > 0) {
            lo = std::max(lo, s);
        } else {
            hi = std::min(hi, s);
        }
    }
    return {lo, hi};
}

inline std::pair<Point, Point> chord(const std::vector<Point>& poly, Point p, Point q) {
    const Point d = q - p;
    const auto [lo, hi] = clip(poly, p, d);
    return {p + d * lo, p + d * hi};
}

inline double funk(const std::vector<Point>& poly, Point p, Point q) {
    if (p == q) return 0.0;
    const auto [a, b] = chord(poly, p, q);
    return std::log(hilbertvd::dist(p, b) / hilbertvd::dist(q, b));
}

inline double distance(const std::vector<Point>& poly, MetricKind metric, Point p, Point q) {
    switch (metric) {
        case MetricKind::Funk: return funk(poly, p, q);
        case MetricKind::ReverseFunk: return funk(poly, q, p);
        case MetricKind::Thompson: return std::max(funk(poly, p, q), funk(poly, q, p));
        case MetricKind::Hilbert: break;
    }
    return 0.5 * (funk(poly, p, q) + funk(poly, q, p));
}

// Indices of the k nearest sites of x, with the gap between the k-th and
// (k+1)-th distance (infinite when k == n).
struct Nearest {
    std::vector<int> ids;
    double gap = 0.0;
};

inline Nearest nearest(const std::vector<Point>& poly, MetricKind metric, const std::vector<Point>& sites, int k,
                       Point x) {
    std::vector<std::pair<double, int>> d;
    for (int i = 0; i < static_cast<int>(sites.size()); ++i) d.emplace_back(distance(poly, metric, sites[i], x), i);
    std::sort(d.begin(), d.end());
    Nearest out;
    for (int i = 0; i < k; ++i) out.ids.push_back(d[i].second);
    std::sort(out.ids.begin(), out.ids.end());
    out.gap = k < static_cast<int>(d.size()) ? d[k].first - d[k - 1].first
                                             : std::numeric_limits<double>::infinity();
    return out;
}

// Convex polygon with m vertices on a circle of radius r around the origin:
// jittered equal spacing, so no angle is sharp and no edge is tiny.
inline std::vector<Point> random_domain(std::mt19937_64& rng, int m, double r = 100.0) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double step = 2.0 * std::numbers::pi / m;
    const double jitter = m == 3 ? 0.15 : 0.3;
    const double rotation = std::numbers::pi * u(rng);
    std::vector<Point> poly;
    for (int i = 0; i < m; ++i) {
        const double a = rotation + step * (i + jitter * u(rng));
        poly.push_back({r * std::cos(a), r * std::sin(a)});
    }
    return poly;
}

// n sites well inside the domain, pairwise separated, and with no pair
// nearly aligned with two edge lines (which makes bisectors two-dimensional).
inline std::vector<Point> random_sites(std::mt19937_64& rng, const hilbertvd::ConvexDomain& dom, int n) {
    std::uniform_real_distribution<double> ux(dom.bbox_min().x, dom.bbox_max().x);
    std::uniform_real_distribution<double> uy(dom.bbox_min().y, dom.bbox_max().y);
    const double clearance = 0.04 * dom.diameter();
    const double separation = 0.04 * dom.diameter();
    std::vector<Point> sites;
    int attempts = 0;
    while (static_cast<int>(sites.size()) < n) {
        if (++attempts > 100000) {
            sites.clear();
            attempts = 0;
        }
        const Point p{ux(rng), uy(rng)};
        if (!dom.contains(p) || dom.clearance(p) < clearance) continue;
        bool ok = true;
        for (const Point& s : sites) {
            ok = ok && hilbertvd::dist(s, p) >= separation && !hilbertvd::aligned_with_edges(dom, s, p, 2e-3);
        }
        if (ok) sites.push_back(p);
    }
    return sites;
}

// Naive agglomeration: recompute every inter-cluster distance each round.
inline std::vector<std::pair<std::set<int>, double>> single_linkage(const std::vector<Point>& poly,
                                                                    const std::vector<Point>& sites) {
    const int n = static_cast<int>(sites.size());
    auto d = [&](int a, int b) {
        return std::max(distance(poly, MetricKind::Hilbert, sites[a], sites[b]),
                        distance(poly, MetricKind::Hilbert, sites[b], sites[a]));
    };
    std::vector<std::set<int>> clusters;
    for (int i = 0; i < n; ++i) clusters.push_back({i});
    std::vector<std::pair<std::set<int>, double>> merges;
    while (clusters.size() > 1) {
        double best = INFINITY;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < clusters.size(); ++i) {
            for (std::size_t j = i + 1; j < clusters.size(); ++j) {
                for (int a : clusters[i]) {
                    for (int b : clusters[j]) {
                        if (d(a, b) < best) {
                            best = d(a, b);
                            bi = i;
                            bj = j;
                        }
                    }
                }
            }
        }
        clusters[bi].insert(clusters[bj].begin(), clusters[bj].end());
        merges.push_back({clusters[bi], best});
        clusters.erase(clusters.begin() + static_cast<long>(bj));
    }
    return merges;
}

}  // namespace oracle
