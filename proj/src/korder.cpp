#include "hilbertvd/korder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hilbertvd/error.hpp"
#include "hilbertvd/parallel.hpp"

namespace hilbertvd {

std::vector<int> SiteSet::members() const {
    std::vector<int> out;
    for (int i = 0; i < 64; ++i) {
        if (contains(i)) out.push_back(i);
    }
    return out;
}

std::string to_string(SiteSet s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int i : s.members()) {
        os << (first ? "" : ",") << i;
        first = false;
    }
    os << '}';
    return os.str();
}

bool CellRegion::contains(Point p) const {
    if (!hilbertvd::contains(outer, p)) return false;
    for (const auto& h : holes) {
        if (hilbertvd::contains(h, p)) return false;
    }
    return true;
}

double CellRegion::area() const {
    double a = hilbertvd::area(outer);
    for (const auto& h : holes) a -= hilbertvd::area(h);
    return a;
}

std::optional<SiteSet> OrderDiagram::locate(Point p) const {
    for (const auto& [set, regions] : cells) {
        for (const auto& r : regions) {
            if (r.contains(p)) return set;
        }
    }
    return std::nullopt;
}

int OrderDiagram::count_containing(Point p) const {
    int count = 0;
    for (const auto& [set, regions] : cells) {
        for (const auto& r : regions) count += r.contains(p) ? 1 : 0;
    }
    return count;
}

const OrderDiagram* VoronoiResult::order(int k) const {
    for (const auto& d : diagrams) {
        if (d.k == k) return &d;
    }
    return nullptr;
}

void validate_sites(const Space& space, const std::vector<Point>& sites) {
    if (sites.size() < 2) fail(ErrorKind::InvalidArgument, "at least two sites are required");
    if (sites.size() > static_cast<std::size_t>(kMaxSites)) {
        fail(ErrorKind::TooManySites, "at most 64 sites are supported");
    }
    for (const Point& s : sites) space.require_interior(s);
    const double sep = space.tolerances().snap * space.scale();
    for (std::size_t i = 0; i < sites.size(); ++i) {
        for (std::size_t j = i + 1; j < sites.size(); ++j) {
            if (dist(sites[i], sites[j]) <= sep) {
                fail(ErrorKind::DuplicateSites,
                     "sites " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
            }
        }
    }
}

namespace {

SiteSet nearer_than(const Space& space, const std::vector<Point>& sites, int first, int second, Point x) {
    const double ref = space.distance_interior(sites[first], x);
    SiteSet out;
    for (int l = 0; l < static_cast<int>(sites.size()); ++l) {
        if (l == first || l == second) continue;
        if (space.distance_interior(sites[l], x) < ref) out = out.with(l);
    }
    return out;
}

}  // namespace

LabeledBisector label_bisector(const Space& space, const std::vector<Point>& sites, int first, int second,
                               Bisector bisector, std::vector<CircumcenterEvent> events,
                               VoronoiDiagnostics& diagnostics) {
    const int n = static_cast<int>(sites.size());
    std::stable_sort(events.begin(), events.end(), [](const auto& a, const auto& b) { return a.t < b.t; });

    LabeledBisector out;
    out.first = first;
    out.second = second;

    // Events closer than the merge gap form one (degenerate) group.
    const double merge = space.tolerances().circumcenter;
    std::vector<std::pair<int, int>> groups;  // [begin, end) into events
    for (int e = 0; e < static_cast<int>(events.size()); ++e) {
        if (!groups.empty() && events[e].t - events[groups.back().second - 1].t < merge) {
            groups.back().second = e + 1;
        } else {
            groups.emplace_back(e, e + 1);
        }
    }

    const std::size_t portions = groups.size() + 1;
    out.portions.resize(portions);
    std::vector<Point> mids(portions);
    for (std::size_t p = 0; p < portions; ++p) {
        auto& pr = out.portions[p];
        pr.t_lo = p == 0 ? 0.0 : events[groups[p - 1].first].t;
        pr.t_hi = p + 1 == portions ? 1.0 : events[groups[p].first].t;
        pr.start_event = p == 0 ? -1 : groups[p - 1].first;
        pr.end_event = p + 1 == portions ? -1 : groups[p].first;
        mids[p] = exact_point(space, bisector, 0.5 * (pr.t_lo + pr.t_hi));
        pr.nearer = nearer_than(space, sites, first, second, mids[p]);
    }

    const Point s_first = sites[first];
    auto recount = [&](std::size_t p) { return out.portions[p].nearer.size() + 1; };
    int label = recount(0);
    out.portions[0].order = label;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const std::size_t next = g + 1;
        const auto [b, e] = groups[g];
        if (e - b == 1) {
            const Point third = sites[events[b].sites[2]];
            const bool nearer_after = space.distance_interior(third, mids[next]) <
                                      space.distance_interior(s_first, mids[next]);
            label += nearer_after ? 1 : -1;
        } else {
            diagnostics.merged_events += e - b;
            diagnostics.warnings.push_back("NearDegeneracy: " + std::to_string(e - b) +
                                           " coincident events on bisector (" + std::to_string(first) + "," +
                                           std::to_string(second) + ")");
            label = recount(next);
        }
        if (label < 1 || label > n - 1) {
            diagnostics.warnings.push_back("label out of range on bisector (" + std::to_string(first) + "," +
                                           std::to_string(second) + "); recounted");
            label = recount(next);
        }
        out.portions[next].order = label;
    }
    for (const auto& pr : out.portions) {
        if (pr.nearer.size() + 1 != pr.order) ++diagnostics.label_disagreements;
    }

    if (aligned_with_edges(space.domain(), sites[first], sites[second])) {
        diagnostics.warnings.push_back("NearDegeneracy: sites " + std::to_string(first) + " and " +
                                       std::to_string(second) +
                                       " are aligned with two edges; their bisector may be two-dimensional");
    }
    out.bisector = std::move(bisector);
    out.events = std::move(events);
    out.event_vertex.assign(out.events.size(), -1);
    return out;
}

std::vector<DiagramVertex> register_vertices(const Space& space, std::vector<LabeledBisector>& bisectors) {
    struct Ref {
        std::size_t b, e;
        Point p;
    };
    std::vector<Ref> refs;
    for (std::size_t b = 0; b < bisectors.size(); ++b) {
        for (std::size_t e = 0; e < bisectors[b].events.size(); ++e) {
            refs.push_back({b, e, bisectors[b].events[e].point});
        }
    }
    std::stable_sort(refs.begin(), refs.end(), [](const Ref& a, const Ref& b) { return a.p.x < b.p.x; });

    const double snap = space.tolerances().snap * space.scale();
    std::vector<DiagramVertex> vertices;
    std::vector<Point> sums;
    std::vector<int> counts;
    std::vector<int> assigned(refs.size(), -1);
    std::size_t window = 0;  // first ref whose x is within snap of the current one
    for (std::size_t r = 0; r < refs.size(); ++r) {
        while (refs[window].p.x < refs[r].p.x - snap) ++window;
        int found = -1;
        for (std::size_t q = window; q < r; ++q) {
            if (dist(refs[q].p, refs[r].p) <= snap) {
                found = assigned[q];
                break;
            }
        }
        if (found < 0) {
            found = static_cast<int>(vertices.size());
            vertices.emplace_back();
            sums.push_back({0.0, 0.0});
            counts.push_back(0);
        }
        assigned[r] = found;
        sums[found] = sums[found] + refs[r].p;
        ++counts[found];
        auto& ev = bisectors[refs[r].b].events[refs[r].e];
        std::array<int, 3> tri = ev.sites;
        std::sort(tri.begin(), tri.end());
        auto& triples = vertices[found].triples;
        if (std::find(triples.begin(), triples.end(), tri) == triples.end()) triples.push_back(tri);
        bisectors[refs[r].b].event_vertex[refs[r].e] = found;
    }
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        vertices[v].point = sums[v] / static_cast<double>(counts[v]);
        std::sort(vertices[v].triples.begin(), vertices[v].triples.end());
    }
    return vertices;
}

namespace {

struct HalfEdge {
    int origin = -1;
    int dest = -1;
    int twin = -1;
    Polyline pts;
    int edge = -1;  // diagram edge, -1 for the domain boundary
    bool forward = true;
    bool exterior = false;
    double angle = 0.0;
};

}  // namespace

OrderDiagram assemble_order(const Space& space, const std::vector<Point>& sites,
                            const std::vector<LabeledBisector>& bisectors,
                            const std::vector<DiagramVertex>& vertices, int k) {
    const ConvexDomain& dom = space.domain();
    OrderDiagram diagram;
    diagram.k = k;
    const double snap = space.tolerances().snap * space.scale();

    // DCEL vertices: circumcenter vertices on demand, then boundary vertices.
    std::vector<Point> vpos;
    std::map<int, int> from_diagram_vertex;
    struct BoundaryMark {
        double coord;
        int vertex;
    };
    std::vector<BoundaryMark> marks;
    auto vertex_for_event = [&](int dv) {
        auto it = from_diagram_vertex.find(dv);
        if (it != from_diagram_vertex.end()) return it->second;
        const int id = static_cast<int>(vpos.size());
        vpos.push_back(vertices[dv].point);
        from_diagram_vertex.emplace(dv, id);
        diagram.vertices.push_back(dv);
        return id;
    };
    for (std::size_t i = 0; i < dom.size(); ++i) {
        marks.push_back({static_cast<double>(i), static_cast<int>(vpos.size())});
        vpos.push_back(dom.vertex(i));
    }
    auto boundary_vertex = [&](Point p, std::size_t edge) {
        const double coord = dom.boundary_coordinate(p, edge);
        for (const auto& m : marks) {
            if (dist(vpos[m.vertex], p) <= snap) return m.vertex;
        }
        const int id = static_cast<int>(vpos.size());
        vpos.push_back(p);
        marks.push_back({coord, id});
        return id;
    };

    std::vector<HalfEdge> he;
    auto add_pair = [&](int a, int b, Polyline pts, int edge, bool exterior_twin) {
        HalfEdge f;
        f.origin = a;
        f.dest = b;
        f.pts = pts;
        f.edge = edge;
        f.forward = true;
        HalfEdge r;
        r.origin = b;
        r.dest = a;
        r.pts.assign(pts.rbegin(), pts.rend());
        r.edge = edge;
        r.forward = false;
        r.exterior = exterior_twin;
        const int fi = static_cast<int>(he.size());
        f.twin = fi + 1;
        r.twin = fi;
        he.push_back(std::move(f));
        he.push_back(std::move(r));
    };

    for (std::size_t b = 0; b < bisectors.size(); ++b) {
        const LabeledBisector& lb = bisectors[b];
        const auto& samples = lb.bisector.samples();
        for (std::size_t p = 0; p < lb.portions.size(); ++p) {
            const LabeledPortion& pr = lb.portions[p];
            if (pr.order != k) continue;
            DiagramEdge edge;
            edge.bisector = static_cast<int>(b);
            edge.portion = static_cast<int>(p);
            edge.left = pr.nearer.with(lb.first);
            edge.right = pr.nearer.with(lb.second);

            int va, vb;
            Point pa, pb;
            if (pr.start_event < 0) {
                pa = lb.bisector.endpoint(0);
                va = boundary_vertex(pa, lb.bisector.endpoint_edge(0));
            } else {
                edge.start_vertex = lb.event_vertex[pr.start_event];
                va = vertex_for_event(edge.start_vertex);
                pa = vpos[va];
            }
            if (pr.end_event < 0) {
                pb = lb.bisector.endpoint(1);
                vb = boundary_vertex(pb, lb.bisector.endpoint_edge(1));
            } else {
                edge.end_vertex = lb.event_vertex[pr.end_event];
                vb = vertex_for_event(edge.end_vertex);
                pb = vpos[vb];
            }
            Polyline pts{pa};
            for (const auto& s : samples) {
                if (s.t <= pr.t_lo || s.t >= pr.t_hi) continue;
                if (dist(s.point, pa) <= 10.0 * snap || dist(s.point, pb) <= 10.0 * snap) continue;
                pts.push_back(s.point);
            }
            pts.push_back(pb);
            edge.polyline = pts;
            diagram.adjacency.insert(std::minmax(edge.left, edge.right));
            const int ei = static_cast<int>(diagram.edges.size());
            diagram.edges.push_back(std::move(edge));
            add_pair(va, vb, std::move(pts), ei, false);
        }
    }

    std::sort(marks.begin(), marks.end(), [](const auto& a, const auto& b) { return a.coord < b.coord; });
    for (std::size_t i = 0; i < marks.size(); ++i) {
        const auto& a = marks[i];
        const auto& b = marks[(i + 1) % marks.size()];
        add_pair(a.vertex, b.vertex, {vpos[a.vertex], vpos[b.vertex]}, -1, true);
    }

    std::vector<std::vector<int>> outgoing(vpos.size());
    for (int h = 0; h < static_cast<int>(he.size()); ++h) {
        const Point d = he[h].pts[1] - he[h].pts[0];
        he[h].angle = std::atan2(d.y, d.x);
        outgoing[he[h].origin].push_back(h);
    }
    std::vector<int> slot(he.size());
    for (auto& out : outgoing) {
        std::sort(out.begin(), out.end(), [&](int a, int b) { return he[a].angle < he[b].angle; });
        for (std::size_t i = 0; i < out.size(); ++i) slot[out[i]] = static_cast<int>(i);
    }
    auto next_of = [&](int h) {
        const int tw = he[h].twin;
        const auto& out = outgoing[he[h].dest];
        const int s = slot[tw];
        return out[(s + static_cast<int>(out.size()) - 1) % out.size()];
    };

    struct Face {
        Polygon ring;
        SiteSet label;
        bool labeled = false;
    };
    std::vector<Face> faces;
    std::vector<bool> seen(he.size(), false);
    for (int start = 0; start < static_cast<int>(he.size()); ++start) {
        if (seen[start] || he[start].exterior) continue;
        Face face;
        std::map<SiteSet, int> votes;
        bool broken = false;
        int h = start;
        std::size_t steps = 0;
        do {
            seen[h] = true;
            if (he[h].exterior) broken = true;
            const auto& pts = he[h].pts;
            face.ring.insert(face.ring.end(), pts.begin(), pts.end() - 1);
            if (he[h].edge >= 0) {
                const DiagramEdge& e = diagram.edges[he[h].edge];
                ++votes[he[h].forward ? e.left : e.right];
            }
            h = next_of(h);
        } while (h != start && ++steps <= he.size());
        if (broken || h != start) {
            ++diagram.inconsistent_faces;
            continue;
        }
        if (votes.size() > 1) ++diagram.inconsistent_faces;
        if (!votes.empty()) {
            auto best = std::max_element(votes.begin(), votes.end(),
                                         [](const auto& a, const auto& b) { return a.second < b.second; });
            face.label = best->first;
            face.labeled = true;
        }
        faces.push_back(std::move(face));
    }

    // A cycle with no diagram edges is the whole domain.
    for (auto& f : faces) {
        if (!f.labeled) {
            f.label = cell_of(space, sites, k, dom.anchor());
            f.labeled = true;
        }
    }
    std::vector<const Face*> holes;
    for (const auto& f : faces) {
        if (signed_area(f.ring) > 0.0) {
            diagram.cells[f.label].push_back({f.ring, {}});
        } else {
            holes.push_back(&f);
        }
    }
    for (const Face* h : holes) {
        bool placed = false;
        auto it = diagram.cells.find(h->label);
        if (it != diagram.cells.end()) {
            for (auto& region : it->second) {
                if (hilbertvd::contains(region.outer, centroid(h->ring)) ||
                    hilbertvd::contains(region.outer, h->ring.front())) {
                    Polygon ring = h->ring;
                    region.holes.push_back(std::move(ring));
                    placed = true;
                    break;
                }
            }
        }
        if (!placed) ++diagram.inconsistent_faces;
    }
    return diagram;
}

VoronoiResult label_all_orders(const Space& space, const std::vector<Point>& sites,
                               const VoronoiOptions& options) {
    validate_sites(space, sites);
    const int n = static_cast<int>(sites.size());
    VoronoiResult result;
    result.sites = sites;

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }

    // Phase 1: bisectors and their circumcenter events.
    std::vector<std::optional<Bisector>> traced(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t p) {
        traced[p] = trace_bisector(space, sites[pairs[p].first], sites[pairs[p].second]);
    });
    std::vector<std::vector<CircumcenterEvent>> events(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t p) {
        const auto [i, j] = pairs[p];
        for (int l = 0; l < n; ++l) {
            if (l == i || l == j) continue;
            auto found = circumcenters_on(space, *traced[p], sites[l], {i, j, l});
            events[p].insert(events[p].end(), found.begin(), found.end());
        }
    });

    // Phases 2-3: labels, independent per bisector.
    std::vector<VoronoiDiagnostics> diag(pairs.size());
    std::vector<std::optional<LabeledBisector>> labeled(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t p) {
        labeled[p] = label_bisector(space, sites, pairs[p].first, pairs[p].second, std::move(*traced[p]),
                                    std::move(events[p]), diag[p]);
    });
    result.bisectors.reserve(pairs.size());
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        result.bisectors.push_back(std::move(*labeled[p]));
        result.diagnostics.label_disagreements += diag[p].label_disagreements;
        result.diagnostics.merged_events += diag[p].merged_events;
        for (auto& w : diag[p].warnings) result.diagnostics.warnings.push_back(std::move(w));
    }
    result.vertices = register_vertices(space, result.bisectors);

    if (!options.assemble) return result;
    std::vector<int> orders = options.orders;
    if (orders.empty()) {
        for (int k = 1; k < n; ++k) orders.push_back(k);
    }
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    for (int k : orders) {
        if (k < 1 || k > n - 1) fail(ErrorKind::InvalidArgument, "order must be in 1..n-1");
    }
    result.diagrams.resize(orders.size());
    parallel_for(orders.size(), [&](std::size_t i) {
        result.diagrams[i] = assemble_order(space, sites, result.bisectors, result.vertices, orders[i]);
    });
    return result;
}

SiteSet cell_of(const Space& space, const std::vector<Point>& sites, int k, Point x) {
    const int n = static_cast<int>(sites.size());
    if (k < 1 || k > n) fail(ErrorKind::InvalidArgument, "order must be in 1..n");
    space.require_interior(x);
    std::vector<double> d(n);
    for (int i = 0; i < n; ++i) d[i] = space.distance_interior(sites[i], x);
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });
    if (k < n) {
        const double a = d[idx[k - 1]];
        const double b = d[idx[k]];
        if (b - a <= space.tolerances().circumcenter * std::max(1.0, b)) {
            fail(ErrorKind::OnEdge, "point lies on an order-" + std::to_string(k) + " edge");
        }
    }
    SiteSet s;
    for (int i = 0; i < k; ++i) s = s.with(idx[i]);
    return s;
}

KernelResult is_star_shaped(const CellRegion& cell, double relative_area) {
    KernelResult r = kernel(cell.outer, relative_area);
    if (!cell.holes.empty()) {
        r.star_shaped = false;
        r.kernel.clear();
    }
    return r;
}

std::vector<RasterReport> raster_verify(const Space& space, const VoronoiResult& result,
                                        const std::vector<int>& orders, int resolution) {
    if (resolution < 64) fail(ErrorKind::InvalidArgument, "raster resolution must be at least 64");
    const ConvexDomain& dom = space.domain();
    const auto& sites = result.sites;
    const int n = static_cast<int>(sites.size());
    const int R = resolution;
    const Point lo = dom.bbox_min();
    const Point hi = dom.bbox_max();
    const double w = (hi.x - lo.x) / R;
    const double h = (hi.y - lo.y) / R;
    const double diag = std::hypot(w, h);
    auto center = [&](int i, int j) { return Point{lo.x + (i + 0.5) * w, lo.y + (j + 0.5) * h}; };

    // Oracle: full site ranking per interior pixel.
    std::vector<char> interior(static_cast<std::size_t>(R) * R, 0);
    std::vector<int> ranking(static_cast<std::size_t>(R) * R * n, 0);
    parallel_for(static_cast<std::size_t>(R), [&](std::size_t row) {
        const int j = static_cast<int>(row);
        std::vector<double> d(n);
        for (int i = 0; i < R; ++i) {
            const Point c = center(i, j);
            const std::size_t px = static_cast<std::size_t>(j) * R + i;
            if (!dom.contains(c) || dom.clearance(c) <= space.tolerances().boundary) continue;
            interior[px] = 1;
            for (int s = 0; s < n; ++s) d[s] = space.distance_interior(sites[s], c);
            int* rank = &ranking[px * n];
            std::iota(rank, rank + n, 0);
            std::stable_sort(rank, rank + n, [&](int a, int b) { return d[a] < d[b]; });
        }
    });

    std::vector<RasterReport> reports;
    for (int k : orders) {
        const OrderDiagram* diagram = result.order(k);
        if (!diagram) continue;
        RasterReport rep;
        rep.order = k;
        rep.resolution = R;

        std::vector<char> excluded(static_cast<std::size_t>(R) * R, 0);
        for (const auto& e : diagram->edges) {
            for (std::size_t s = 0; s + 1 < e.polyline.size(); ++s) {
                const Point a = e.polyline[s];
                const Point b = e.polyline[s + 1];
                const int i0 = std::max(0, static_cast<int>(std::floor((std::min(a.x, b.x) - diag - lo.x) / w)));
                const int i1 = std::min(R - 1, static_cast<int>(std::ceil((std::max(a.x, b.x) + diag - lo.x) / w)));
                const int j0 = std::max(0, static_cast<int>(std::floor((std::min(a.y, b.y) - diag - lo.y) / h)));
                const int j1 = std::min(R - 1, static_cast<int>(std::ceil((std::max(a.y, b.y) + diag - lo.y) / h)));
                for (int j = j0; j <= j1; ++j) {
                    for (int i = i0; i <= i1; ++i) {
                        if (segment_distance(center(i, j), a, b) <= diag) {
                            excluded[static_cast<std::size_t>(j) * R + i] = 1;
                        }
                    }
                }
            }
        }

        // Scanline fill of assembled cells: -1 none, -2 overlap.
        std::vector<SiteSet> labels;
        std::vector<int> owner(static_cast<std::size_t>(R) * R, -1);
        for (const auto& [set, regions] : diagram->cells) {
            for (const auto& region : regions) {
                const int id = static_cast<int>(labels.size());
                labels.push_back(set);
                std::vector<const Polygon*> rings{&region.outer};
                for (const auto& hole : region.holes) rings.push_back(&hole);
                std::vector<double> xs;
                for (int j = 0; j < R; ++j) {
                    const double y = lo.y + (j + 0.5) * h;
                    xs.clear();
                    for (const Polygon* ring : rings) {
                        const std::size_t m = ring->size();
                        for (std::size_t a = 0, b = m - 1; a < m; b = a++) {
                            const Point p = (*ring)[a];
                            const Point q = (*ring)[b];
                            if ((p.y > y) != (q.y > y)) xs.push_back(p.x + (y - p.y) * (q.x - p.x) / (q.y - p.y));
                        }
                    }
                    std::sort(xs.begin(), xs.end());
                    for (std::size_t s = 0; s + 1 < xs.size(); s += 2) {
                        const int i0 = std::max(0, static_cast<int>(std::ceil((xs[s] - lo.x) / w - 0.5)));
                        const int i1 = std::min(R - 1, static_cast<int>(std::ceil((xs[s + 1] - lo.x) / w - 0.5)) - 1);
                        for (int i = i0; i <= i1; ++i) {
                            int& o = owner[static_cast<std::size_t>(j) * R + i];
                            o = o == -1 ? id : -2;
                        }
                    }
                }
            }
        }

        for (std::size_t px = 0; px < owner.size(); ++px) {
            if (!interior[px]) continue;
            if (excluded[px]) {
                ++rep.excluded;
                continue;
            }
            ++rep.counted;
            SiteSet truth;
            for (int s = 0; s < k; ++s) truth = truth.with(ranking[px * n + s]);
            if (owner[px] == -1) {
                ++rep.unassigned;
                ++rep.mismatched;
            } else if (owner[px] == -2) {
                ++rep.overlapping;
                ++rep.mismatched;
            } else if (!(labels[owner[px]] == truth)) {
                ++rep.mismatched;
            }
        }
        reports.push_back(rep);
    }
    return reports;
}

}  // namespace hilbertvd
