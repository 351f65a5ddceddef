#include "hilbertvd/commands.hpp"

#include <string>

#include "hilbertvd/balls.hpp"
#include "hilbertvd/circumcenter.hpp"
#include "hilbertvd/error.hpp"
#include "hilbertvd/export.hpp"
#include "hilbertvd/korder.hpp"
#include "hilbertvd/mosaic.hpp"
#include "hilbertvd/polygon.hpp"

namespace hilbertvd {

namespace {

constexpr std::string_view kInk = "#222222";

Point site(const Scene& scene, int i) {
    if (i < 0 || i >= static_cast<int>(scene.sites.size())) {
        fail(ErrorKind::OutOfRange, "site index " + std::to_string(i) + " out of range");
    }
    return scene.sites[i];
}

void require_distinct(std::initializer_list<int> ids) {
    for (auto a = ids.begin(); a != ids.end(); ++a) {
        for (auto b = a + 1; b != ids.end(); ++b) {
            if (*a == *b) fail(ErrorKind::CoincidentSites, "site indices must be distinct");
        }
    }
}

Json header(const Scene& scene, std::string_view command) {
    Json j;
    j["command"] = std::string(command);
    j["metric"] = std::string(to_string(scene.metric));
    return j;
}

SvgDocument canvas(const Space& space) {
    const ConvexDomain& dom = space.domain();
    SvgDocument svg(dom.bbox_min(), dom.bbox_max());
    svg.begin_layer("domain");
    svg.polygon(dom.vertices(), "#ffffff", kInk);
    svg.end_layer();
    return svg;
}

void draw_sites(SvgDocument& svg, const std::vector<Point>& sites) {
    svg.begin_layer("sites");
    for (std::size_t i = 0; i < sites.size(); ++i) {
        svg.dot(sites[i], kInk);
        svg.label(sites[i], std::to_string(i));
    }
    svg.end_layer();
}

std::vector<int> checked_orders(const Scene& scene, const std::vector<int>& orders) {
    const int n = static_cast<int>(scene.sites.size());
    if (orders.empty()) {
        if (n < 2) fail(ErrorKind::EmptyInput, "need at least two sites");
        std::vector<int> all;
        for (int k = 1; k < n; ++k) all.push_back(k);
        return all;
    }
    for (int k : orders) {
        if (k < 1 || k > n - 1) fail(ErrorKind::OutOfRange, "order " + std::to_string(k) + " outside 1..n-1");
    }
    return orders;
}

}  // namespace

CommandOutput run_distance(const Scene& scene, Point p, Point q) {
    const Space space = scene.space();
    CommandOutput out{header(scene, "distance"), canvas(space)};
    out.json["from"] = to_json(p);
    out.json["to"] = to_json(q);
    out.json["distance"] = space.distance(p, q);
    out.json["reverse_distance"] = space.distance(q, p);
    if (p != q) {
        const Chord c = chord_through(space.domain(), p, q, space.tolerances());
        out.json["chord"] = {to_json(c.a), to_json(c.b)};
        out.svg->begin_layer("chord");
        out.svg->polyline({c.a, c.b}, "#999999");
        out.svg->end_layer();
    }
    out.svg->begin_layer("points");
    out.svg->dot(p, palette(0));
    out.svg->dot(q, palette(1));
    out.svg->end_layer();
    return out;
}

CommandOutput run_ball(const Scene& scene, Point center, double radius) {
    const Space space = scene.space();
    CommandOutput out{header(scene, "ball"), canvas(space)};
    const MetricBall b = ball(space, center, radius);
    out.json["ball"] = to_json(b);
    out.svg->begin_layer("ball");
    out.svg->polygon(b.boundary, palette(0), palette(0), 0.3);
    out.svg->dot(center, kInk);
    out.svg->end_layer();
    return out;
}

CommandOutput run_bisector(const Scene& scene, int i, int j) {
    require_distinct({i, j});
    const Space space = scene.space();
    CommandOutput out{header(scene, "bisector"), canvas(space)};
    const Bisector b = trace_bisector(space, site(scene, i), site(scene, j));
    out.json["pair"] = {i, j};
    out.json["bisector"] = to_json(b);
    out.svg->begin_layer("bisector");
    out.svg->polyline(b.polyline(), palette(2), 1.5);
    out.svg->end_layer();
    draw_sites(*out.svg, {site(scene, i), site(scene, j)});
    return out;
}

CommandOutput run_circumcenter(const Scene& scene, int i, int j, int k) {
    require_distinct({i, j, k});
    const Space space = scene.space();
    CommandOutput out{header(scene, "circumcenter"), canvas(space)};
    space.require_interior(site(scene, k));
    const Bisector host = trace_bisector(space, site(scene, i), site(scene, j));
    const auto events = circumcenters_on(space, host, site(scene, k), {i, j, k});
    bool interior = false;
    Json list = Json::array();
    for (const auto& e : events) {
        interior = interior || !e.near_boundary;
        list.push_back(to_json(e));
    }
    out.json["sites"] = {i, j, k};
    out.json["exists"] = interior;
    out.json["circumcenters"] = std::move(list);
    out.svg->begin_layer("bisector");
    out.svg->polyline(host.polyline(), palette(2), 1.5);
    out.svg->end_layer();
    out.svg->begin_layer("circumcenters");
    for (const auto& e : events) {
        if (!e.near_boundary) {
            out.svg->polygon(ball(space, e.point, e.radius).boundary, "none", palette(3));
        }
        out.svg->dot(e.point, palette(3));
    }
    out.svg->end_layer();
    draw_sites(*out.svg, {site(scene, i), site(scene, j), site(scene, k)});
    return out;
}

CommandOutput run_voronoi(const Scene& scene, const std::vector<int>& orders) {
    const Space space = scene.space();
    CommandOutput out{header(scene, "voronoi"), canvas(space)};
    const VoronoiResult r = label_all_orders(space, scene.sites, {checked_orders(scene, orders), true});
    out.json["sites"] = to_json(scene.sites);
    Json vertices = Json::array();
    for (const DiagramVertex& v : r.vertices) vertices.push_back({{"point", to_json(v.point)}, {"triples", v.triples}});
    out.json["vertices"] = std::move(vertices);
    Json bisectors = Json::array();
    for (const LabeledBisector& b : r.bisectors) bisectors.push_back(to_json(b));
    out.json["bisectors"] = std::move(bisectors);
    Json diagrams = Json::array();
    for (const OrderDiagram& d : r.diagrams) {
        diagrams.push_back(to_json(d));
        out.svg->begin_layer("order-" + std::to_string(d.k));
        int c = 0;
        for (const auto& [set, regions] : d.cells) {
            for (const CellRegion& cell : regions) out.svg->polygon(cell.outer, palette(c), "none", 0.45);
            ++c;
        }
        for (const DiagramEdge& e : d.edges) out.svg->polyline(e.polyline, kInk, 1.2);
        out.svg->end_layer();
    }
    out.json["orders"] = std::move(diagrams);
    out.json["diagnostics"] = to_json(r.diagnostics);
    draw_sites(*out.svg, scene.sites);
    return out;
}

CommandOutput run_delaunay(const Scene& scene, int k) {
    const Space space = scene.space();
    CommandOutput out{header(scene, "delaunay"), canvas(space)};
    const VoronoiResult r = label_all_orders(space, scene.sites, {checked_orders(scene, {k}), true});
    const Mosaic m = delaunay_mosaic(space, scene.sites, r.diagrams.front());
    out.json["mosaic"] = to_json(m);
    out.svg->begin_layer("order-" + std::to_string(k));
    for (const DiagramEdge& e : r.diagrams.front().edges) out.svg->polyline(e.polyline, "#bbbbbb");
    out.svg->end_layer();
    out.svg->begin_layer("mosaic");
    for (const auto& [a, b] : m.edges) out.svg->polyline({m.nodes[a].mean.point, m.nodes[b].mean.point}, palette(0), 1.5);
    for (const MosaicNode& n : m.nodes) out.svg->dot(n.mean.point, palette(0));
    out.svg->end_layer();
    draw_sites(*out.svg, scene.sites);
    return out;
}

CommandOutput run_regions(const Scene& scene, int i, int j) {
    require_distinct({i, j});
    const Space space = scene.space();
    CommandOutput out{header(scene, "regions"), canvas(space)};
    const Bisector b = trace_bisector(space, site(scene, i), site(scene, j));
    const OverlapRegion z = overlap_region(space, b);
    const OuterRegion w = outer_region(space, b);
    out.json["pair"] = {i, j};
    out.json["B0"] = to_json(z.balls.b0);
    out.json["B1"] = to_json(z.balls.b1);
    out.json["Z"] = {{"polygon", to_json(z.polygon)}, {"area", area(z.polygon)}};
    Json pieces = Json::array();
    for (const Polygon& p : w.pieces) pieces.push_back(to_json(p));
    out.json["W"] = {{"pieces", std::move(pieces)}, {"area", w.area()}};
    out.json["domain_area"] = space.domain().area();

    out.svg->begin_layer("limit-balls");
    out.svg->polygon(z.balls.b0.boundary, "none", palette(0));
    out.svg->polygon(z.balls.b1.boundary, "none", palette(1));
    out.svg->end_layer();
    out.svg->begin_layer("Z");
    out.svg->polygon(z.polygon, palette(2), palette(2), 0.4);
    out.svg->end_layer();
    out.svg->begin_layer("W");
    for (const Polygon& p : w.pieces) out.svg->polygon(p, palette(4), "none", 0.4);
    out.svg->end_layer();
    out.svg->begin_layer("bisector");
    out.svg->polyline(b.polyline(), kInk);
    out.svg->end_layer();
    draw_sites(*out.svg, {site(scene, i), site(scene, j)});
    return out;
}

CommandOutput run_cluster(const Scene& scene, const ClusterRequest& request) {
    const Space space = scene.space();
    CommandOutput out{header(scene, "cluster"), canvas(space)};
    ClusteringState state;
    Json objectives = Json::array();
    if (request.method == ClusterMethod::KMeans) {
        if (request.steps < 0) fail(ErrorKind::InvalidArgument, "steps must be non-negative");
        state = kmeans_init(space, scene.sites, request.k);
        objectives.push_back(state.objective);
        for (int s = 0; s < request.steps && !state.converged; ++s) {
            state = kmeans_step(state, space, scene.sites);
            objectives.push_back(state.objective);
        }
    } else {
        state = single_linkage(space, scene.sites, {request.count, request.height});
    }
    out.json["state"] = to_json(state);
    out.json["clusters"] = state.clusters();
    if (request.method == ClusterMethod::KMeans) out.json["objectives"] = std::move(objectives);

    out.svg->begin_layer("clusters");
    for (std::size_t i = 0; i < scene.sites.size(); ++i) out.svg->dot(scene.sites[i], palette(state.assignments[i]));
    for (std::size_t c = 0; c < state.centers.size(); ++c) {
        out.svg->dot(state.centers[c], palette(static_cast<int>(c)), 6.0);
    }
    out.svg->end_layer();
    return out;
}

CommandOutput run_verify(const Scene& scene, const std::vector<int>& orders, int resolution) {
    const Space space = scene.space();
    CommandOutput out{header(scene, "verify"), std::nullopt};
    const auto checked = checked_orders(scene, orders);
    const VoronoiResult r = label_all_orders(space, scene.sites, {checked, true});
    double worst = 0.0;
    Json reports = Json::array();
    for (const RasterReport& rep : raster_verify(space, r, checked, resolution)) {
        worst = std::max(worst, rep.mismatch_fraction());
        reports.push_back(to_json(rep));
    }
    out.json["resolution"] = resolution;
    out.json["reports"] = std::move(reports);
    out.json["max_mismatch_fraction"] = worst;
    out.json["diagnostics"] = to_json(r.diagnostics);
    return out;
}

}  // namespace hilbertvd
