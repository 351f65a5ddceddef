#include "doctest.h"

#include <algorithm>
#include <random>
#include <map>
#include <set>

#include "hilbertvd/clustering.hpp"
#include "support/oracles.hpp"

using namespace hilbertvd;

namespace {

using Members = std::set<int>;

std::vector<Members> merged_sets(int n, const std::vector<Merge>& merges) {
    std::vector<Members> sets;
    for (int i = 0; i < n; ++i) sets.push_back({i});
    std::vector<Members> out;
    for (const Merge& m : merges) {
        Members u = sets[m.a];
        u.insert(sets[m.b].begin(), sets[m.b].end());
        sets.push_back(u);
        out.push_back(u);
    }
    return out;
}

// Same partition up to cluster renumbering.
bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
    std::map<int, int> ab, ba;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!ab.emplace(a[i], b[i]).second && ab[a[i]] != b[i]) return false;
        if (!ba.emplace(b[i], a[i]).second && ba[b[i]] != a[i]) return false;
    }
    return true;
}

std::vector<Point> blobs(std::mt19937_64& rng, Point a, Point b, int each, double spread) {
    std::normal_distribution<double> g(0.0, spread);
    std::vector<Point> out;
    for (int i = 0; i < each; ++i) out.push_back(a + Point{g(rng), g(rng)});
    for (int i = 0; i < each; ++i) out.push_back(b + Point{g(rng), g(rng)});
    return out;
}

}  // namespace

TEST_CASE("k-means separates two blobs quickly") {
    std::mt19937_64 rng(89);
    const Space h(ConvexDomain::build({{0, 0}, {10, 0}, {10, 10}, {0, 10}}), MetricKind::Hilbert);
    const auto sites = blobs(rng, {3, 3}, {7, 6.5}, 15, 0.4);
    ClusteringState s = kmeans_init(h, sites, 2);
    int steps = 0;
    double last = s.objective;
    while (!s.converged && steps < 20) {
        s = kmeans_step(s, h, sites);
        ++steps;
        CHECK(s.objective <= last + 1e-7);
        last = s.objective;
    }
    CHECK(s.converged);
    CHECK(steps <= 5);
    std::vector<int> truth(30);
    for (int i = 15; i < 30; ++i) truth[i] = 1;
    CHECK(same_partition(s.assignments, truth));
    // Fixed point.
    CHECK(kmeans_step(s, h, sites) == s);
}

TEST_CASE("k-means corner cases") {
    std::mt19937_64 rng(97);
    const auto poly = oracle::random_domain(rng, 6);
    const Space h(ConvexDomain::build(poly), MetricKind::Hilbert);
    const auto sites = oracle::random_sites(rng, h.domain(), 7);
    ClusteringState s = kmeans_init(h, sites, 7);
    for (int i = 0; i < 3; ++i) s = kmeans_step(s, h, sites);
    CHECK(s.objective == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(s.clusters() == 7);
    CHECK_THROWS(kmeans_init(h, sites, 0));
    CHECK_THROWS(kmeans_init(h, sites, 8));
}

TEST_CASE("k-means objective never increases") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 5; ++trial) {
        const auto poly = oracle::random_domain(rng, 3 + trial * 2);
        const Space h(ConvexDomain::build(poly), MetricKind::Hilbert);
        const auto sites = oracle::random_sites(rng, h.domain(), 25);
        ClusteringState s = kmeans_init(h, sites, 4);
        for (int i = 0; i < 15; ++i) {
            const ClusteringState next = kmeans_step(s, h, sites);
            CHECK(next.objective <= s.objective + 1e-7);
            s = next;
        }
    }
}

TEST_CASE("single linkage matches the naive oracle") {
    std::mt19937_64 rng(103);
    const auto poly = oracle::random_domain(rng, 7);
    const Space h(ConvexDomain::build(poly), MetricKind::Hilbert);
    const auto sites = oracle::random_sites(rng, h.domain(), 30);
    const ClusteringState s = single_linkage(h, sites, {1, -1.0});
    const auto expected = oracle::single_linkage(poly, sites);
    REQUIRE(s.merges.size() == expected.size());
    const auto got = merged_sets(30, s.merges);
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(got[i] == expected[i].first);
        CHECK(s.merges[i].height == doctest::Approx(expected[i].second).epsilon(1e-12));
        if (i > 0) CHECK(s.merges[i].height >= s.merges[i - 1].height);
    }
    CHECK(s.clusters() == 1);

    const ClusteringState none = single_linkage(h, sites, {30, -1.0});
    CHECK(none.clusters() == 30);
    CHECK(none.step == 0);

    // Relabeling the sites gives the same merges.
    std::vector<int> perm(30);
    for (int i = 0; i < 30; ++i) perm[i] = (i * 7) % 30;
    std::vector<Point> shuffled(30);
    for (int i = 0; i < 30; ++i) shuffled[perm[i]] = sites[i];
    const ClusteringState t = single_linkage(h, shuffled, {5, -1.0});
    const ClusteringState u = single_linkage(h, sites, {5, -1.0});
    std::vector<int> back(30);
    for (int i = 0; i < 30; ++i) back[i] = t.assignments[perm[i]];
    CHECK(same_partition(back, u.assignments));
    CHECK(u.clusters() == 5);

    // Height stop keeps every merge at or below the height.
    const double cut = s.merges[20].height;
    const ClusteringState byh = single_linkage(h, sites, {1, cut});
    CHECK(byh.step == 21);
}

TEST_CASE("120 points into 38 clusters") {
    std::mt19937_64 rng(107);
    const Space h(ConvexDomain::build({{0, 0}, {100, 0}, {120, 60}, {60, 110}, {-20, 70}}), MetricKind::Hilbert);
    const auto sites = oracle::random_sites(rng, h.domain(), 120);
    const ClusteringState s = single_linkage(h, sites, {38, -1.0});
    CHECK(s.clusters() == 38);
    CHECK(cut_dendrogram(120, s.merges, 120 - 38) == s.assignments);
}
