#include "hilbertvd/export.hpp"

#include "hilbertvd/error.hpp"
#include "hilbertvd/polygon.hpp"

namespace hilbertvd {

Json to_json(Point p) { return Json::array({p.x, p.y}); }

Json to_json(const std::vector<Point>& pts) {
    Json j = Json::array();
    for (const Point& p : pts) j.push_back(to_json(p));
    return j;
}

Json to_json(SiteSet s) { return s.members(); }

Json to_json(const MetricBall& b) {
    Json j;
    j["center"] = to_json(b.center);
    j["radius"] = b.radius;
    j["metric"] = std::string(to_string(b.metric));
    j["limit"] = b.limit;
    j["boundary"] = to_json(b.boundary);
    return j;
}

Json to_json(const Bisector& b) {
    Json j;
    j["sites"] = {to_json(b.first_site()), to_json(b.second_site())};
    j["endpoints"] = {to_json(b.endpoint(0)), to_json(b.endpoint(1))};
    j["length"] = b.length();
    Json pieces = Json::array();
    for (const BisectorPiece& p : b.pieces()) {
        pieces.push_back({{"t", {p.t_lo, p.t_hi}},
                          {"first_sector", {p.first_sector.forward, p.first_sector.backward}},
                          {"second_sector", {p.second_sector.forward, p.second_sector.backward}}});
    }
    j["pieces"] = std::move(pieces);
    Json samples = Json::array();
    for (const BisectorSample& s : b.samples()) samples.push_back({s.point.x, s.point.y, s.t});
    j["samples"] = std::move(samples);
    return j;
}

Json to_json(const CircumcenterEvent& e) {
    Json j;
    j["sites"] = e.sites;
    j["t"] = e.t;
    j["point"] = to_json(e.point);
    j["radius"] = e.radius;
    j["near_boundary"] = e.near_boundary;
    return j;
}

Json to_json(const LabeledBisector& b) {
    Json j;
    j["pair"] = {b.first, b.second};
    j["polyline"] = to_json(b.bisector.polyline());
    Json events = Json::array();
    for (std::size_t e = 0; e < b.events.size(); ++e) {
        Json ev = to_json(b.events[e]);
        ev["vertex"] = e < b.event_vertex.size() ? b.event_vertex[e] : -1;
        events.push_back(std::move(ev));
    }
    j["events"] = std::move(events);
    Json portions = Json::array();
    for (const LabeledPortion& p : b.portions) {
        portions.push_back({{"t", {p.t_lo, p.t_hi}}, {"order", p.order}, {"nearer", to_json(p.nearer)}});
    }
    j["portions"] = std::move(portions);
    return j;
}

Json to_json(const CellRegion& cell) {
    Json j;
    j["outer"] = to_json(cell.outer);
    Json holes = Json::array();
    for (const Polygon& h : cell.holes) holes.push_back(to_json(h));
    j["holes"] = std::move(holes);
    j["area"] = cell.area();
    try {
        const KernelResult k = is_star_shaped(cell);
        j["star_shaped"] = k.star_shaped;
        j["kernel"] = to_json(k.kernel);
    } catch (const Error&) {
        j["star_shaped"] = nullptr;  // polyline approximation is not simple
        j["kernel"] = Json::array();
    }
    return j;
}

Json to_json(const OrderDiagram& d) {
    Json j;
    j["k"] = d.k;
    Json edges = Json::array();
    for (const DiagramEdge& e : d.edges) {
        edges.push_back({{"bisector", e.bisector},
                         {"portion", e.portion},
                         {"left", to_json(e.left)},
                         {"right", to_json(e.right)},
                         {"start_vertex", e.start_vertex},
                         {"end_vertex", e.end_vertex},
                         {"polyline", to_json(e.polyline)}});
    }
    j["edges"] = std::move(edges);
    Json cells = Json::array();
    for (const auto& [set, regions] : d.cells) {
        Json rs = Json::array();
        for (const CellRegion& r : regions) rs.push_back(to_json(r));
        cells.push_back({{"sites", to_json(set)}, {"regions", std::move(rs)}});
    }
    j["cells"] = std::move(cells);
    j["vertices"] = d.vertices;
    Json adjacency = Json::array();
    for (const auto& [a, b] : d.adjacency) adjacency.push_back({to_json(a), to_json(b)});
    j["adjacency"] = std::move(adjacency);
    j["inconsistent_faces"] = d.inconsistent_faces;
    return j;
}

Json to_json(const VoronoiDiagnostics& d) {
    Json j;
    j["label_disagreements"] = d.label_disagreements;
    j["merged_events"] = d.merged_events;
    j["warnings"] = d.warnings;
    return j;
}

Json to_json(const RasterReport& r) {
    Json j;
    j["order"] = r.order;
    j["resolution"] = r.resolution;
    j["counted"] = r.counted;
    j["excluded"] = r.excluded;
    j["mismatched"] = r.mismatched;
    j["unassigned"] = r.unassigned;
    j["overlapping"] = r.overlapping;
    j["mismatch_fraction"] = r.mismatch_fraction();
    return j;
}

Json to_json(const FrechetMean& m) {
    Json j;
    j["point"] = to_json(m.point);
    j["objective"] = m.objective;
    j["iterations"] = m.iterations;
    j["converged"] = m.converged;
    j["clamped"] = m.clamped;
    return j;
}

Json to_json(const Mosaic& m) {
    Json j;
    j["k"] = m.k;
    Json nodes = Json::array();
    for (const MosaicNode& n : m.nodes) {
        Json node = to_json(n.mean);
        node["cell"] = to_json(n.cell);
        nodes.push_back(std::move(node));
    }
    j["nodes"] = std::move(nodes);
    Json edges = Json::array();
    for (const auto& [a, b] : m.edges) edges.push_back({a, b});
    j["edges"] = std::move(edges);
    return j;
}

}  // namespace hilbertvd
