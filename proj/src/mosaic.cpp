#include "hilbertvd/mosaic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "hilbertvd/error.hpp"
#include "hilbertvd/parallel.hpp"

namespace hilbertvd {

double frechet_objective(const Space& space, const std::vector<Point>& points, Point x) {
    double sum = 0.0;
    for (const Point& p : points) sum += space.distance_interior(p, x);
    return sum;
}

namespace {

bool in_cell(const std::vector<CellRegion>& cell, Point p) {
    return std::any_of(cell.begin(), cell.end(), [&](const CellRegion& r) { return r.contains(p); });
}

template <class Feasible>
FrechetMean pattern_search(const Space& space, const std::vector<Point>& points, Point start, double step,
                           Feasible&& feasible) {
    const double min_step = 1e-12 * std::max(space.scale(), 1.0);
    const int cap = space.tolerances().frechet_max_iterations;
    FrechetMean out;
    out.point = start;
    out.objective = frechet_objective(space, points, start);
    double rotation = 0.0;
    constexpr double kGolden = 2.399963229728653;  // radians
    while (out.iterations < cap) {
        ++out.iterations;
        Point best = out.point;
        double best_obj = out.objective;
        for (int d = 0; d < 8; ++d) {
            const double a = rotation + d * std::numbers::pi / 4.0;
            const Point cand = out.point + step * Point{std::cos(a), std::sin(a)};
            if (!feasible(cand)) continue;
            const double obj = frechet_objective(space, points, cand);
            if (obj < best_obj) {
                best_obj = obj;
                best = cand;
            }
        }
        if (best_obj < out.objective) {
            out.point = best;
            out.objective = best_obj;
            continue;
        }
        step *= 0.5;
        rotation += kGolden;
        if (step < min_step) {
            out.converged = true;
            break;
        }
    }
    return out;
}

}  // namespace

FrechetMean frechet_mean(const Space& space, const std::vector<Point>& points, const FrechetOptions& options) {
    if (points.empty()) fail(ErrorKind::EmptyInput, "Frechet mean of no points");
    for (const Point& p : points) space.require_interior(p);
    const ConvexDomain& dom = space.domain();
    const double margin = std::max(space.tolerances().boundary, 1e-9 * space.scale());
    auto inside = [&](Point p) { return dom.contains(p) && dom.clearance(p) > margin; };

    FrechetMean out;
    if (points.size() == 1) {
        out.point = points.front();
        out.converged = true;
    } else if (points.size() == 2 && !options.start) {
        // Every point of the segment is optimal; take its midpoint.
        out.point = lerp(points[0], points[1], 0.5);
        out.objective = frechet_objective(space, points, out.point);
        out.converged = true;
    } else {
        Point start = options.start.value_or(Point{0.0, 0.0});
        if (!options.start) {
            for (const Point& p : points) start = start + p;
            start = start / static_cast<double>(points.size());
        }
        double spread = 0.0;
        for (const Point& p : points) spread = std::max(spread, dist(p, start));
        const double step = spread > 0.0 ? 0.25 * spread : 0.05 * space.scale();
        out = pattern_search(space, points, start, step, inside);
    }

    if (options.cell && !options.cell->empty() && !in_cell(*options.cell, out.point)) {
        // Best grid point inside the cell, then search without leaving it.
        Point lo = options.cell->front().outer.front();
        Point hi = lo;
        for (const auto& region : *options.cell) {
            for (const Point& p : region.outer) {
                lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
                hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
            }
        }
        constexpr int kGrid = 32;
        std::optional<Point> best;
        double best_obj = 0.0;
        for (int j = 0; j < kGrid; ++j) {
            for (int i = 0; i < kGrid; ++i) {
                const Point c{lo.x + (i + 0.5) * (hi.x - lo.x) / kGrid, lo.y + (j + 0.5) * (hi.y - lo.y) / kGrid};
                if (!inside(c) || !in_cell(*options.cell, c)) continue;
                const double obj = frechet_objective(space, points, c);
                if (!best || obj < best_obj) {
                    best = c;
                    best_obj = obj;
                }
            }
        }
        if (!best) {
            const auto& ring = options.cell->front().outer;
            best = centroid(ring);
        }
        const double step = 0.5 * std::max(hi.x - lo.x, hi.y - lo.y) / kGrid;
        out = pattern_search(space, points, *best, step,
                             [&](Point p) { return inside(p) && in_cell(*options.cell, p); });
        out.clamped = true;
    }
    return out;
}

Mosaic delaunay_mosaic(const Space& space, const std::vector<Point>& sites, const OrderDiagram& diagram) {
    Mosaic mosaic;
    mosaic.k = diagram.k;
    std::map<SiteSet, std::size_t> index;
    std::vector<const std::vector<CellRegion>*> regions;
    for (const auto& [set, cell] : diagram.cells) {
        index.emplace(set, mosaic.nodes.size());
        mosaic.nodes.push_back({set, {}});
        regions.push_back(&cell);
    }
    parallel_for(mosaic.nodes.size(), [&](std::size_t i) {
        std::vector<Point> pts;
        for (int s : mosaic.nodes[i].cell.members()) pts.push_back(sites[s]);
        FrechetOptions opt;
        opt.cell = regions[i];
        mosaic.nodes[i].mean = frechet_mean(space, pts, opt);
    });
    for (const auto& [a, b] : diagram.adjacency) {
        const auto ia = index.find(a);
        const auto ib = index.find(b);
        if (ia == index.end() || ib == index.end()) continue;
        mosaic.edges.emplace_back(ia->second, ib->second);
    }
    return mosaic;
}

}  // namespace hilbertvd
