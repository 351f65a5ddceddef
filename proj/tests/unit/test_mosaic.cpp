#include "doctest.h"

#include <cmath>
#include <random>

#include "hilbertvd/error.hpp"
#include "hilbertvd/korder.hpp"
#include "hilbertvd/mosaic.hpp"
#include "support/checks.hpp"

using namespace hilbertvd;

namespace {

const std::vector<Point> kSquare{{0, 0}, {1, 0}, {1, 1}, {0, 1}};

std::vector<Point> regular(int m) {
    std::vector<Point> poly;
    for (int i = 0; i < m; ++i) {
        const double a = std::numbers::pi / 2 + 2.0 * std::numbers::pi * i / m;
        poly.push_back({std::cos(a), std::sin(a)});
    }
    return poly;
}

double oracle_objective(const std::vector<Point>& poly, const std::vector<Point>& pts, Point x) {
    double s = 0.0;
    for (const Point& p : pts) s += oracle::distance(poly, MetricKind::Hilbert, p, x);
    return s;
}

// Best value over a 200x200 grid of the bounding box.
double grid_minimum(const std::vector<Point>& poly, const ConvexDomain& dom, const std::vector<Point>& pts) {
    const Point lo = dom.bbox_min(), hi = dom.bbox_max();
    double best = INFINITY;
    for (int i = 0; i < 200; ++i) {
        for (int j = 0; j < 200; ++j) {
            const Point x{lo.x + (i + 0.5) * (hi.x - lo.x) / 200, lo.y + (j + 0.5) * (hi.y - lo.y) / 200};
            if (dom.contains(x)) best = std::min(best, oracle_objective(poly, pts, x));
        }
    }
    return best;
}

}  // namespace

TEST_CASE("Frechet mean basics") {
    const Space h(ConvexDomain::build(kSquare), MetricKind::Hilbert);
    const FrechetMean one = frechet_mean(h, {{0.3, 0.6}});
    CHECK(dist(one.point, {0.3, 0.6}) < 1e-9);
    CHECK(one.objective == doctest::Approx(0.0));

    const Point a{0.2, 0.3}, b{0.7, 0.6};
    const FrechetMean two = frechet_mean(h, {a, b});
    CHECK(two.objective == doctest::Approx(h.distance(a, b)).epsilon(1e-6));
    CHECK(dist(two.point, (a + b) * 0.5) < 1e-9);

    CHECK_THROWS_AS(frechet_mean(h, {}), Error);
}

TEST_CASE("Frechet mean matches the grid oracle and is locally optimal") {
    const auto pent = regular(5);
    const Space h(ConvexDomain::build(pent), MetricKind::Hilbert);
    const std::vector<Point> sym{{-0.3, -0.2}, {0.3, -0.2}, {0.0, 0.45}};
    const FrechetMean m = frechet_mean(h, sym);
    CHECK(std::abs(m.point.x) < 1e-4);
    CHECK(m.objective <= grid_minimum(pent, h.domain(), sym) + 1e-3);

    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 6; ++trial) {
        const auto poly = oracle::random_domain(rng, 3 + trial, 1.0);
        const Space space(ConvexDomain::build(poly), MetricKind::Hilbert);
        const auto pts = oracle::random_sites(rng, space.domain(), 3 + trial % 3);
        const FrechetMean f = frechet_mean(space, pts);
        CHECK(space.domain().clearance(f.point) > 0.0);
        CHECK(std::abs(f.objective - oracle_objective(poly, pts, f.point)) < 1e-9 * std::max(1.0, f.objective));
        for (const Point& p : pts) CHECK(f.objective <= oracle_objective(poly, pts, p) + 1e-12);
        CHECK(f.objective <= grid_minimum(poly, space.domain(), pts) + 1e-3);
        for (int dir = 0; dir < 8; ++dir) {
            const double a = dir * std::numbers::pi / 4;
            const Point x = f.point + Point{std::cos(a), std::sin(a)} * 1e-4;
            CHECK(oracle_objective(poly, pts, x) >= f.objective - 1e-7);
        }
    }
}

TEST_CASE("Delaunay mosaics") {
    const auto pent = regular(5);
    const Space h(ConvexDomain::build(pent), MetricKind::Hilbert);

    const std::vector<Point> two{{-0.3, 0.0}, {0.25, 0.1}};
    const VoronoiResult r2 = label_all_orders(h, two);
    const Mosaic m2 = delaunay_mosaic(h, two, r2.diagrams.front());
    CHECK(m2.nodes.size() == 2);
    CHECK(m2.edges.size() == 1);

    const std::vector<Point> three{{-0.3, -0.2}, {0.3, -0.2}, {0.05, 0.4}};
    for (std::size_t i = 0; i < three.size(); ++i) {
        for (std::size_t j = i + 1; j < three.size(); ++j) REQUIRE_FALSE(aligned_with_edges(h.domain(), three[i], three[j]));
    }
    const auto events = circumcenter(h, three[0], three[1], three[2]);
    REQUIRE_FALSE(events.empty());
    const VoronoiResult r3 = label_all_orders(h, three);
    for (const OrderDiagram& d : r3.diagrams) {
        CHECK(d.cells.size() == 3);
        CHECK(checks::raster_compare(h, three, d, 400).fraction() < 0.005);
    }
    // The single circumcenter is a vertex of both orders.
    REQUIRE(r3.vertices.size() == 1);
    for (const OrderDiagram& d : r3.diagrams) CHECK(d.vertices == std::vector<int>{0});

    const Mosaic m3 = delaunay_mosaic(h, three, *r3.order(1));
    CHECK(m3.nodes.size() == 3);
    CHECK(m3.edges.size() == 3);
    for (const MosaicNode& n : m3.nodes) CHECK(h.domain().clearance(n.mean.point) > 0.0);

    std::mt19937_64 rng(83);
    const auto poly = oracle::random_domain(rng, 7, 1.0);
    const Space space(ConvexDomain::build(poly), MetricKind::Hilbert);
    const auto sites = oracle::random_sites(rng, space.domain(), 6);
    const VoronoiResult r = label_all_orders(space, sites);
    for (const OrderDiagram& d : r.diagrams) {
        const Mosaic m = delaunay_mosaic(space, sites, d);
        std::size_t cells = 0;
        for (const auto& [set, regions] : d.cells) cells += regions.empty() ? 0 : 1;
        CHECK(m.nodes.size() == cells);
        CHECK(m.edges.size() == d.adjacency.size());
        for (const auto& [a, b] : m.edges) CHECK(d.adjacency.contains({std::min(m.nodes[a].cell, m.nodes[b].cell),
                                                                     std::max(m.nodes[a].cell, m.nodes[b].cell)}));
        for (const MosaicNode& n : m.nodes) {
            CHECK(space.domain().clearance(n.mean.point) > 0.0);
            const auto& regions = d.cells.at(n.cell);
            bool inside = false;
            for (const CellRegion& c : regions) inside = inside || c.contains(n.mean.point);
            CHECK(inside);
        }
    }
}
