#include "doctest.h"

#include <random>

#include "hilbertvd/domain.hpp"
#include "hilbertvd/error.hpp"
#include "support/oracles.hpp"

using namespace hilbertvd;

namespace {

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("domain validation") {
    const auto sq = ConvexDomain::build({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(sq.size() == 4);
    CHECK(sq.area() == doctest::Approx(1.0));

    const auto cw = ConvexDomain::build({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
    CHECK(cw.area() == doctest::Approx(1.0));
    CHECK(cross(cw.edge_vector(0), cw.edge_vector(1)) > 0);

    CHECK(kind_of([] { ConvexDomain::build({{0, 0}, {1, 0}}); }) == ErrorKind::TooFewVertices);
    CHECK(kind_of([] { ConvexDomain::build({{0, 0}, {2, 0}, {1, 0.2}, {2, 2}, {0, 2}}); }) == ErrorKind::NotConvex);
    CHECK(kind_of([] { ConvexDomain::build({{0, 0}, {1, 0}, {1, 0}, {0, 1}}); }) == ErrorKind::DuplicateVertex);
    CHECK(kind_of([] { ConvexDomain::build({{0, 0}, {1, 0}, {2, 0}, {0, 1}}); }) == ErrorKind::NotConvex);
}

TEST_CASE("chords of the unit square") {
    const auto sq = ConvexDomain::build({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    const Chord c = chord_through(sq, {0.5, 0.5}, {0.75, 0.5});
    CHECK(c.a.x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(c.a.y == doctest::Approx(0.5));
    CHECK(c.b.x == doctest::Approx(1.0));
    CHECK(c.b.y == doctest::Approx(0.5));

    const Chord d = chord_through(sq, {0.25, 0.25}, {0.75, 0.75});
    CHECK(dist(d.a, {0, 0}) < 1e-12);
    CHECK(dist(d.b, {1, 1}) < 1e-12);

    CHECK_THROWS_AS(chord_through(sq, {0.5, 0.5}, {0.5, 0.5}), Error);
    CHECK(kind_of([&] { require_interior(sq, {1.0, 0.5}); }) == ErrorKind::PointOnBoundary);
    CHECK(kind_of([&] { require_interior(sq, {1.5, 0.5}); }) == ErrorKind::OutsideDomain);
}

TEST_CASE("ray exits match the clipping oracle on 10k queries") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int checked = 0;
    for (int m : {3, 4, 7, 16, 64}) {
        const auto poly = oracle::random_domain(rng, m);
        const auto dom = ConvexDomain::build(poly);
        for (int i = 0; i < 2000;) {
            const Point p{100 * u(rng), 100 * u(rng)};
            const Point d{u(rng), u(rng)};
            if (!dom.contains(p) || norm(d) < 1e-6) continue;
            const double expected = oracle::clip(poly, p, d).second;
            REQUIRE(dom.ray_exit(p, d).s == doctest::Approx(expected).epsilon(1e-9));
            REQUIRE(dom.ray_exit_linear(p, d).s == doctest::Approx(expected).epsilon(1e-9));
            ++i;
            ++checked;
        }
    }
    CHECK(checked == 10000);
}

TEST_CASE("containment and clearance") {
    std::mt19937_64 rng(11);
    const auto poly = oracle::random_domain(rng, 9);
    const auto dom = ConvexDomain::build(poly);
    std::uniform_real_distribution<double> u(-110.0, 110.0);
    for (int i = 0; i < 2000; ++i) {
        const Point p{u(rng), u(rng)};
        const auto [lo, hi] = oracle::clip(poly, p, {1.0, 0.3});
        const bool inside = lo < 0 && hi > 0;
        CHECK(dom.contains(p) == inside);
        CHECK((dom.clearance(p) > 0) == inside);
    }
}
