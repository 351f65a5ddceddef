#include "doctest.h"

#include <cmath>
#include <random>

#include "hilbertvd/error.hpp"
#include "hilbertvd/metric.hpp"
#include "support/oracles.hpp"

using namespace hilbertvd;

namespace {

const std::vector<Point> kSquare{{0, 0}, {1, 0}, {1, 1}, {0, 1}};

Space square(MetricKind metric) { return Space(ConvexDomain::build(kSquare), metric); }

Point random_interior(std::mt19937_64& rng, const ConvexDomain& dom) {
    std::uniform_real_distribution<double> ux(dom.bbox_min().x, dom.bbox_max().x);
    std::uniform_real_distribution<double> uy(dom.bbox_min().y, dom.bbox_max().y);
    for (;;) {
        const Point p{ux(rng), uy(rng)};
        if (dom.contains(p) && dom.clearance(p) > 1e-3 * dom.diameter()) return p;
    }
}

}  // namespace

TEST_CASE("spot values in the unit square") {
    const Space h = square(MetricKind::Hilbert);
    CHECK(h.distance({0.5, 0.5}, {0.5, 0.5}) == 0.0);
    CHECK(h.distance({0.5, 0.5}, {0.75, 0.5}) == doctest::Approx(0.5 * std::log(3.0)).epsilon(1e-12));
    CHECK(square(MetricKind::Funk).distance({0.5, 0.5}, {0.75, 0.5}) == doctest::Approx(std::log(2.0)));
    CHECK(square(MetricKind::ReverseFunk).distance({0.5, 0.5}, {0.75, 0.5}) == doctest::Approx(std::log(1.5)));
    CHECK(square(MetricKind::Thompson).distance({0.5, 0.5}, {0.75, 0.5}) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("distances agree with the cross-ratio oracle") {
    std::mt19937_64 rng(3);
    for (MetricKind metric : {MetricKind::Hilbert, MetricKind::Funk, MetricKind::ReverseFunk, MetricKind::Thompson}) {
        const auto poly = oracle::random_domain(rng, 6);
        const Space space(ConvexDomain::build(poly), metric);
        for (int i = 0; i < 500; ++i) {
            const Point p = random_interior(rng, space.domain());
            const Point q = random_interior(rng, space.domain());
            CHECK(space.distance(p, q) == doctest::Approx(oracle::distance(poly, metric, p, q)).epsilon(1e-9));
        }
    }
}

TEST_CASE("metric axioms") {
    std::mt19937_64 rng(5);
    const auto poly = oracle::random_domain(rng, 7);
    const Space h(ConvexDomain::build(poly), MetricKind::Hilbert);
    const Space f(ConvexDomain::build(poly), MetricKind::Funk);
    const Space t(ConvexDomain::build(poly), MetricKind::Thompson);
    for (int i = 0; i < 2000; ++i) {
        const Point p = random_interior(rng, h.domain());
        const Point q = random_interior(rng, h.domain());
        const Point r = random_interior(rng, h.domain());
        const double scale = 1.0 + h.distance(p, q) + h.distance(q, r);
        CHECK(h.distance(p, q) >= 0.0);
        CHECK(h.distance(p, q) == doctest::Approx(h.distance(q, p)).epsilon(1e-12));
        CHECK(h.distance(p, r) <= h.distance(p, q) + h.distance(q, r) + 1e-9 * scale);
        CHECK(f.distance(p, r) <= f.distance(p, q) + f.distance(q, r) + 1e-9 * scale);
        CHECK(t.distance(p, r) <= t.distance(p, q) + t.distance(q, r) + 1e-9 * scale);
        CHECK(t.distance(p, q) == doctest::Approx(t.distance(q, p)).epsilon(1e-12));
    }
}

TEST_CASE("affine invariance") {
    std::mt19937_64 rng(9);
    const auto poly = oracle::random_domain(rng, 5);
    auto map = [](Point p) { return Point{2.0 * p.x + 0.7 * p.y + 3.0, -0.4 * p.x + 1.3 * p.y - 8.0}; };
    std::vector<Point> image;
    for (Point p : poly) image.push_back(map(p));
    for (MetricKind metric : {MetricKind::Hilbert, MetricKind::Funk, MetricKind::Thompson}) {
        const Space a(ConvexDomain::build(poly), metric);
        const Space b(ConvexDomain::build(image), metric);
        for (int i = 0; i < 300; ++i) {
            const Point p = random_interior(rng, a.domain());
            const Point q = random_interior(rng, a.domain());
            CHECK(a.distance(p, q) == doctest::Approx(b.distance(map(p), map(q))).epsilon(1e-9));
        }
    }
}

TEST_CASE("distance diverges toward the boundary") {
    const Space h = square(MetricKind::Hilbert);
    double last = 0.0;
    for (double x = 0.6; x < 1.0 - 1e-8; x = 1.0 - (1.0 - x) / 4.0) {
        const double d = h.distance({0.5, 0.5}, {x, 0.5});
        CHECK(d > last);
        last = d;
    }
    CHECK(last > 8.0);
}

TEST_CASE("invalid points") {
    const Space h = square(MetricKind::Hilbert);
    CHECK_THROWS_AS(h.distance({0.5, 0.5}, {1.0, 0.5}), Error);
    CHECK_THROWS_AS(h.distance({0.5, 0.5}, {2.0, 0.5}), Error);
    CHECK(parse_metric("reverse_funk") == MetricKind::ReverseFunk);
    CHECK_THROWS_AS(parse_metric("euclid"), Error);
    CHECK(reversed(MetricKind::Funk) == MetricKind::ReverseFunk);
}
