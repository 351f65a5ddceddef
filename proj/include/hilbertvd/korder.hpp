#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hilbertvd/bisector.hpp"
#include "hilbertvd/circumcenter.hpp"
#include "hilbertvd/metric.hpp"
#include "hilbertvd/polygon.hpp"

namespace hilbertvd {

inline constexpr int kMaxSites = 64;

// Subset of site indices (< 64).
struct SiteSet {
    std::uint64_t bits = 0;

    static SiteSet of(std::initializer_list<int> ids) {
        SiteSet s;
        for (int i : ids) s.bits |= std::uint64_t{1} << i;
        return s;
    }
    bool contains(int i) const { return (bits >> i) & 1u; }
    SiteSet with(int i) const { return {bits | (std::uint64_t{1} << i)}; }
    int size() const { return std::popcount(bits); }
    std::vector<int> members() const;
    friend auto operator<=>(const SiteSet&, const SiteSet&) = default;
};

std::string to_string(SiteSet s);

// A stretch of a bisector between consecutive circumcenter events.
struct LabeledPortion {
    double t_lo = 0.0;
    double t_hi = 1.0;
    int order = 1;         // from the traversal
    SiteSet nearer;        // sites strictly nearer than the two defining sites
    int start_event = -1;  // index into events; -1 = bisector endpoint
    int end_event = -1;
};

struct LabeledBisector {
    int first = 0;
    int second = 1;
    Bisector bisector;
    std::vector<CircumcenterEvent> events;  // sorted by t
    std::vector<int> event_vertex;          // diagram vertex of each event
    std::vector<LabeledPortion> portions;
};

struct DiagramVertex {
    Point point;
    std::vector<std::array<int, 3>> triples;  // sorted site triples meeting here
};

struct CellRegion {
    Polygon outer;  // counterclockwise
    std::vector<Polygon> holes;
    bool contains(Point p) const;
    double area() const;
};

struct DiagramEdge {
    int bisector = 0;  // index into VoronoiResult::bisectors
    int portion = 0;
    Polyline polyline;  // along the bisector orientation
    SiteSet left;       // k-set of the cell on the left
    SiteSet right;
    int start_vertex = -1;  // diagram vertex id, -1 on the domain boundary
    int end_vertex = -1;
};

struct OrderDiagram {
    int k = 1;
    std::vector<DiagramEdge> edges;
    std::map<SiteSet, std::vector<CellRegion>> cells;
    std::vector<int> vertices;  // diagram vertex ids with an incident order-k edge
    std::set<std::pair<SiteSet, SiteSet>> adjacency;
    int inconsistent_faces = 0;

    std::optional<SiteSet> locate(Point p) const;
    int count_containing(Point p) const;
};

struct VoronoiDiagnostics {
    int label_disagreements = 0;  // traversal label != |nearer| + 1
    int merged_events = 0;
    std::vector<std::string> warnings;
};

struct VoronoiResult {
    std::vector<Point> sites;
    std::vector<LabeledBisector> bisectors;  // pairs (i < j) in lexicographic order
    std::vector<DiagramVertex> vertices;
    std::vector<OrderDiagram> diagrams;  // assembled orders, ascending k
    VoronoiDiagnostics diagnostics;

    const OrderDiagram* order(int k) const;
};

struct VoronoiOptions {
    std::vector<int> orders;  // empty: every order 1..n-1
    bool assemble = true;
};

/// Throws InvalidArgument (< 2 sites), TooManySites, DuplicateSites and
/// interior-point errors.
void validate_sites(const Space& space, const std::vector<Point>& sites);

/// Labels every bisector portion with the unique order whose diagram it
/// belongs to, and assembles the requested order diagrams.
///
///  1. trace all pairwise bisectors; locate every three-site circumcenter on
///     each, sorted along the bisector;
///  2. label the first portion of each bisector by counting the sites
///     strictly nearer to its midpoint than the defining pair (label = j+1);
///  3. walk the events: the label steps up when the event's third site
///     becomes nearer and down otherwise.
VoronoiResult label_all_orders(const Space& space, const std::vector<Point>& sites,
                               const VoronoiOptions& options = {});

// Steps 2-3 for one bisector. Events must belong to this bisector.
LabeledBisector label_bisector(const Space& space, const std::vector<Point>& sites, int first, int second,
                               Bisector bisector, std::vector<CircumcenterEvent> events,
                               VoronoiDiagnostics& diagnostics);

// Snaps events from all bisectors into shared diagram vertices and fills
// each bisector's event_vertex.
std::vector<DiagramVertex> register_vertices(const Space& space, std::vector<LabeledBisector>& bisectors);

/// Cells of order k from the planar subdivision formed by the label-k
/// portions and the domain boundary; each face takes the k-set implied by
/// its bounding portions.
OrderDiagram assemble_order(const Space& space, const std::vector<Point>& sites,
                            const std::vector<LabeledBisector>& bisectors,
                            const std::vector<DiagramVertex>& vertices, int k);

/// The k nearest sites of x by direct distance sort. Throws OnEdge when the
/// k-th and (k+1)-th distances tie.
SiteSet cell_of(const Space& space, const std::vector<Point>& sites, int k, Point x);

/// Star-shapedness of a cell; a cell with holes never is.
KernelResult is_star_shaped(const CellRegion& cell, double relative_area = 1e-9);

struct RasterReport {
    int order = 1;
    int resolution = 0;
    long counted = 0;
    long excluded = 0;
    long mismatched = 0;
    long unassigned = 0;
    long overlapping = 0;
    double mismatch_fraction() const { return counted ? double(mismatched) / double(counted) : 0.0; }
};

/// Brute-force check of assembled diagrams: every pixel center interior to
/// the domain is labeled by its k nearest sites and compared with the cell
/// containing it. Pixels within one pixel diagonal of an order-k edge are
/// excluded. Orders that were not assembled are skipped.
std::vector<RasterReport> raster_verify(const Space& space, const VoronoiResult& result,
                                        const std::vector<int>& orders, int resolution);

}  // namespace hilbertvd
