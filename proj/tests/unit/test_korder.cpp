#include "doctest.h"

#include <random>

#include "hilbertvd/error.hpp"
#include "hilbertvd/korder.hpp"
#include "hilbertvd/polygon.hpp"
#include "hilbertvd/scene.hpp"
#include "support/checks.hpp"

using namespace hilbertvd;

namespace {

const std::vector<Point> kNonStarDomain{{100, 100}, {300, 100}, {300, 300}, {100, 300}};
const std::vector<Point> kNonStarSites{{160, 284.9}, {140, 170}, {130, 165}, {180, 285}};

}  // namespace

TEST_CASE("circumcenter vertices and portion labels on random scenes") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 8; ++trial) {
        const auto poly = oracle::random_domain(rng, 3 + trial % 7);
        const Space space(ConvexDomain::build(poly), MetricKind::Hilbert);
        const auto sites = oracle::random_sites(rng, space.domain(), 3 + trial % 4);
        const VoronoiResult r = label_all_orders(space, sites);
        CHECK(r.diagnostics.label_disagreements == 0);
        const auto rep = checks::check_labels(space, sites, r);
        for (const auto& note : rep.notes) MESSAGE(note);
        CHECK(rep.vertex_violations == 0);
        CHECK(rep.label_violations == 0);
        CHECK(rep.step_violations == 0);
        CHECK(rep.portions > 0);
        for (const OrderDiagram& d : r.diagrams) CHECK(d.inconsistent_faces == 0);
    }
}

TEST_CASE("portions partition each bisector") {
    std::mt19937_64 rng(67);
    const auto poly = oracle::random_domain(rng, 6);
    const Space space(ConvexDomain::build(poly), MetricKind::Hilbert);
    const auto sites = oracle::random_sites(rng, space.domain(), 5);
    const VoronoiResult r = label_all_orders(space, sites);
    REQUIRE(r.bisectors.size() == 10);
    for (const LabeledBisector& b : r.bisectors) {
        CHECK(b.first < b.second);
        CHECK(b.portions.front().t_lo == 0.0);
        CHECK(b.portions.back().t_hi == 1.0);
        for (std::size_t p = 1; p < b.portions.size(); ++p) {
            CHECK(b.portions[p].t_lo == b.portions[p - 1].t_hi);
            CHECK(b.portions[p].t_lo == b.events[b.portions[p].start_event].t);
        }
    }
}

TEST_CASE("cells match direct nearest-site labeling") {
    std::mt19937_64 rng(71);
    for (MetricKind metric : {MetricKind::Hilbert, MetricKind::Funk, MetricKind::ReverseFunk}) {
        const auto poly = oracle::random_domain(rng, 5);
        const Space space(ConvexDomain::build(poly), metric);
        const auto sites = oracle::random_sites(rng, space.domain(), 5);
        const VoronoiResult r = label_all_orders(space, sites);
        for (const OrderDiagram& d : r.diagrams) {
            CHECK(checks::spot_check_cells(space, sites, d, rng, 20) == 0);
            const auto raster = checks::raster_compare(space, sites, d, 120);
            CHECK(raster.fraction() < 0.005);
            // Cells tile the domain.
            double total = 0.0;
            for (const auto& [set, regions] : d.cells) {
                CHECK(set.size() == d.k);
                for (const CellRegion& c : regions) total += c.area();
            }
            CHECK(total == doctest::Approx(space.domain().area()).epsilon(1e-6));
        }
        // The engine's own raster check agrees.
        for (const RasterReport& rep : raster_verify(space, r, {1, 2, 3, 4}, 100)) {
            CHECK(rep.mismatch_fraction() < 0.005);
            CHECK(rep.unassigned == 0);
        }
    }
}

TEST_CASE("cell_of sorts distances") {
    const Space h(ConvexDomain::build(kNonStarDomain), MetricKind::Hilbert);
    const auto& poly = h.domain().vertices();
    std::mt19937_64 rng(73);
    std::uniform_real_distribution<double> u(101.0, 299.0);
    for (int i = 0; i < 500; ++i) {
        const Point x{u(rng), u(rng)};
        for (int k = 1; k <= 3; ++k) {
            const auto expected = oracle::nearest(poly, MetricKind::Hilbert, kNonStarSites, k, x);
            if (expected.gap < 1e-9) continue;
            CHECK(cell_of(h, kNonStarSites, k, x) == checks::to_set(expected.ids));
        }
    }
}

TEST_CASE("non-star-shaped order-2 cell") {
    const Space h(ConvexDomain::build(kNonStarDomain), MetricKind::Hilbert);
    const VoronoiResult r = label_all_orders(h, kNonStarSites);
    CHECK(r.diagnostics.label_disagreements == 0);
    const OrderDiagram* d = r.order(2);
    REQUIRE(d != nullptr);
    const auto it = d->cells.find(SiteSet::of({0, 1}));
    REQUIRE(it != d->cells.end());
    REQUIRE(it->second.size() == 1);
    CHECK_FALSE(is_star_shaped(it->second.front()).star_shaped);
    int star = 0;
    for (const auto& [set, regions] : d->cells) {
        if (set == SiteSet::of({0, 1})) continue;
        for (const CellRegion& c : regions) star += is_star_shaped(c).star_shaped;
    }
    CHECK(star > 0);
    CHECK(checks::raster_compare(h, kNonStarSites, *d, 200).fraction() < 0.005);

    // The shipped scene is the same configuration.
    const Scene scene = load_scene(HILBERTVD_SCENES_DIR "/non_star_shaped.json");
    CHECK(scene.sites == kNonStarSites);
    CHECK(scene.domain == kNonStarDomain);
}

TEST_CASE("kernel of simple polygons") {
    const Polygon square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    const KernelResult k = kernel(square);
    CHECK(k.star_shaped);
    CHECK(area(k.kernel) == doctest::Approx(1.0));

    const Polygon l_shape{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
    const KernelResult kl = kernel(l_shape);
    CHECK(kl.star_shaped);
    CHECK(area(kl.kernel) == doctest::Approx(1.0));

    // Two arms bent away from each other: no point sees both tips.
    const Polygon zigzag{{0, 0}, {3, 0}, {3, 1}, {1, 1}, {1, 2}, {4, 2}, {4, 3}, {0, 3}, {0, 2}, {-2, 2}, {-2, 1}, {0, 1}};
    CHECK_FALSE(kernel(zigzag).star_shaped);

    const Polygon bowtie{{0, 0}, {1, 1}, {1, 0}, {0, 1}};
    CHECK_THROWS_AS(kernel(bowtie), Error);
}

TEST_CASE("site validation") {
    const Space h(ConvexDomain::build(kNonStarDomain), MetricKind::Hilbert);
    CHECK_THROWS_AS(label_all_orders(h, {{150, 150}}), Error);
    CHECK_THROWS_AS(label_all_orders(h, {{150, 150}, {150, 150}}), Error);
    CHECK_THROWS_AS(label_all_orders(h, {{150, 150}, {350, 150}}), Error);
    std::vector<Point> many;
    for (int i = 0; i < 65; ++i) many.push_back({110.0 + i * 2.5, 150.0 + (i % 7)});
    CHECK_THROWS_AS(validate_sites(h, many), Error);
}
