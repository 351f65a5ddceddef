#pragma once

// Property checks shared by the unit and acceptance tests. Distances and
// nearest-site sets come from the oracle, never from the engine.

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hilbertvd/korder.hpp"
#include "hilbertvd/polygon.hpp"
#include "support/oracles.hpp"

namespace checks {

using namespace hilbertvd;

struct LabelReport {
    int events = 0;
    int vertex_violations = 0;  // a circumcenter not in exactly orders k, k+1
    int portions = 0;
    int label_violations = 0;   // portion label != oracle count + 1, or not in exactly one diagram
    int step_violations = 0;    // labels across a single event differ by other than 1
    std::vector<std::string> notes;
};

inline SiteSet to_set(const std::vector<int>& ids) {
    SiteSet s;
    for (int i : ids) s = s.with(i);
    return s;
}

// Needs every order 1..n-1 assembled.
inline LabelReport check_labels(const Space& space, const std::vector<Point>& sites, const VoronoiResult& r) {
    const auto& poly = space.domain().vertices();
    const MetricKind metric = space.metric();
    const int n = static_cast<int>(sites.size());
    LabelReport rep;

    std::map<int, std::set<int>> vertex_orders;
    std::map<std::pair<int, int>, int> portion_diagrams;
    for (const OrderDiagram& d : r.diagrams) {
        for (int v : d.vertices) vertex_orders[v].insert(d.k);
        std::set<std::pair<int, int>> here;
        for (const DiagramEdge& e : d.edges) here.insert({e.bisector, e.portion});
        for (const auto& key : here) ++portion_diagrams[key];
    }

    for (std::size_t b = 0; b < r.bisectors.size(); ++b) {
        const LabeledBisector& lb = r.bisectors[b];
        for (std::size_t e = 0; e < lb.events.size(); ++e) {
            const CircumcenterEvent& ev = lb.events[e];
            if (ev.near_boundary) continue;
            const int v = lb.event_vertex[e];
            if (v < 0 || r.vertices[v].triples.size() != 1) continue;  // merged degeneracies are reported separately
            ++rep.events;
            int nearer = 0;
            for (int s = 0; s < n; ++s) {
                if (s == ev.sites[0] || s == ev.sites[1] || s == ev.sites[2]) continue;
                nearer += oracle::distance(poly, metric, sites[s], ev.point) < ev.radius;
            }
            const std::set<int> expected{nearer + 1, nearer + 2};
            if (vertex_orders[v] != expected) {
                ++rep.vertex_violations;
                std::string got;
                for (int k : vertex_orders[v]) got += std::to_string(k) + " ";
                rep.notes.push_back("vertex " + std::to_string(v) + " in orders { " + got + "} expected " +
                                    std::to_string(nearer + 1) + "," + std::to_string(nearer + 2));
            }
        }
        for (std::size_t p = 0; p < lb.portions.size(); ++p) {
            const LabeledPortion& pr = lb.portions[p];
            ++rep.portions;
            const Point mid = exact_point(space, lb.bisector, 0.5 * (pr.t_lo + pr.t_hi));
            const double d = oracle::distance(poly, metric, sites[lb.first], mid);
            int nearer = 0;
            for (int s = 0; s < n; ++s) {
                if (s != lb.first && s != lb.second) nearer += oracle::distance(poly, metric, sites[s], mid) < d;
            }
            const int in_diagrams = portion_diagrams[{static_cast<int>(b), static_cast<int>(p)}];
            // Portions too short to carry an edge are not drawn anywhere.
            const bool drawn_ok = in_diagrams == 1 || (in_diagrams == 0 && pr.t_hi - pr.t_lo < 1e-6);
            if (pr.order != nearer + 1 || !drawn_ok) {
                ++rep.label_violations;
                rep.notes.push_back("bisector (" + std::to_string(lb.first) + "," + std::to_string(lb.second) +
                                    ") portion " + std::to_string(p) + " label " + std::to_string(pr.order) +
                                    " oracle " + std::to_string(nearer + 1) + " diagrams " +
                                    std::to_string(in_diagrams));
            }
            if (p > 0 && pr.start_event >= 0) {
                const int v = lb.event_vertex[pr.start_event];
                const bool single = v < 0 || r.vertices[v].triples.size() == 1;
                if (single && std::abs(pr.order - lb.portions[p - 1].order) != 1) ++rep.step_violations;
            }
        }
    }
    return rep;
}

struct RasterResult {
    long counted = 0;
    long excluded = 0;
    long mismatched = 0;
    double fraction() const { return counted ? double(mismatched) / double(counted) : 0.0; }
};

// Pixel centers are labeled by the oracle; pixels whose corners disagree
// with their center straddle an edge and are excluded.
inline RasterResult raster_compare(const Space& space, const std::vector<Point>& sites, const OrderDiagram& d,
                                   int resolution) {
    const auto& poly = space.domain().vertices();
    const Point lo = space.domain().bbox_min(), hi = space.domain().bbox_max();
    const double hx = (hi.x - lo.x) / resolution, hy = (hi.y - lo.y) / resolution;
    RasterResult out;
    for (int i = 0; i < resolution; ++i) {
        for (int j = 0; j < resolution; ++j) {
            const Point c{lo.x + (i + 0.5) * hx, lo.y + (j + 0.5) * hy};
            if (!space.domain().contains(c)) continue;
            const auto label = oracle::nearest(poly, space.metric(), sites, d.k, c).ids;
            bool straddles = false;
            for (const Point off : {Point{-0.5, -0.5}, Point{0.5, -0.5}, Point{0.5, 0.5}, Point{-0.5, 0.5}}) {
                const Point x{c.x + off.x * hx, c.y + off.y * hy};
                if (!space.domain().contains(x)) {
                    straddles = true;
                    break;
                }
                if (oracle::nearest(poly, space.metric(), sites, d.k, x).ids != label) {
                    straddles = true;
                    break;
                }
            }
            if (straddles) {
                ++out.excluded;
                continue;
            }
            ++out.counted;
            const auto found = d.locate(c);
            if (!found || *found != to_set(label)) ++out.mismatched;
        }
    }
    return out;
}

// Random points inside each cell (away from its boundary) must have the
// cell's k-set as their oracle k nearest sites. Returns the failures.
inline int spot_check_cells(const Space& space, const std::vector<Point>& sites, const OrderDiagram& d,
                            std::mt19937_64& rng, int per_cell) {
    const auto& poly = space.domain().vertices();
    const double margin = 1e-4 * space.scale();
    int failures = 0;
    for (const auto& [set, regions] : d.cells) {
        for (const CellRegion& cell : regions) {
            Point lo = cell.outer.front(), hi = lo;
            for (const Point& v : cell.outer) {
                lo = {std::min(lo.x, v.x), std::min(lo.y, v.y)};
                hi = {std::max(hi.x, v.x), std::max(hi.y, v.y)};
            }
            std::uniform_real_distribution<double> ux(lo.x, hi.x), uy(lo.y, hi.y);
            int found = 0;
            for (int tries = 0; found < per_cell && tries < 200 * per_cell; ++tries) {
                const Point x{ux(rng), uy(rng)};
                if (!cell.contains(x) || boundary_distance(cell.outer, x) < margin) continue;
                bool near_hole = false;
                for (const Polygon& h : cell.holes) near_hole = near_hole || boundary_distance(h, x) < margin;
                if (near_hole) continue;
                ++found;
                if (to_set(oracle::nearest(poly, space.metric(), sites, d.k, x).ids) != set) ++failures;
            }
        }
    }
    return failures;
}

}  // namespace checks
