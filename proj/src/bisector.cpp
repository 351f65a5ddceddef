#include "hilbertvd/bisector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

#include <boost/math/tools/toms748_solve.hpp>

#include "hilbertvd/error.hpp"

namespace hilbertvd {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Point direction(double angle) { return {std::cos(angle), std::sin(angle)}; }

struct Tracer {
    const Space& space;
    Point anchor;
    Point other;

    double gap(Point x) const {
        return space.distance_interior(anchor, x) - space.distance_interior(other, x);
    }

    // Limit of gap() at the boundary point hit by the ray at `angle`.
    double boundary_gap(double angle) const {
        const Point u = direction(angle);
        const RayHit hit = space.domain().ray_exit(anchor, u);
        const Point y = anchor + hit.s * u;
        return space.boundary_potential(anchor, y, hit.edge) -
               space.boundary_potential(other, y, hit.edge);
    }

    Point boundary_point(double angle) const {
        const Point u = direction(angle);
        return anchor + space.domain().ray_exit(anchor, u).s * u;
    }

    // The boundary gap can vanish along a whole edge when the two sites'
    // distances share their boundary sectors (e.g. sites level with an edge
    // of a square): there the equidistant set is two-dimensional.
    static constexpr double kFlatGap = 1e-10;
    static constexpr int kRaySamples = 64;

    bool crosses(double angle) const {
        const double g = boundary_gap(angle);
        if (std::abs(g) > kFlatGap) return g > 0.0;
        const Point u = direction(angle);
        const double reach = space.domain().ray_exit(anchor, u).s;
        return gap(anchor + reach * (1.0 - 1e-9) * u) >= -kFlatGap;
    }

    Point crossing(double angle) const {
        const Point u = direction(angle);
        const double reach = space.domain().ray_exit(anchor, u).s;
        const double at_boundary = boundary_gap(angle);
        if (!(at_boundary > -kFlatGap)) return anchor + reach * u;
        if (at_boundary <= kFlatGap) return first_entry(u, reach);
        const double at_anchor = -space.distance_interior(other, anchor);
        std::uintmax_t iterations = 200;
        const auto bracket = boost::math::tools::toms748_solve(
            [&](double lambda) {
                // Points that round onto the boundary take the boundary limit.
                const double g = gap(anchor + lambda * u);
                return std::isfinite(g) ? g : at_boundary;
            },
            0.0, reach, at_anchor, at_boundary, boost::math::tools::eps_tolerance<double>(52), iterations);
        return anchor + (0.5 * (bracket.first + bracket.second)) * u;
    }

    // First point along the ray where the gap reaches zero (within noise).
    Point first_entry(Point u, double reach) const {
        auto reached = [&](double lambda) {
            const double g = gap(anchor + lambda * u);
            return !std::isfinite(g) || g >= -kFlatGap;
        };
        double lo = 0.0;
        double hi = reach;
        for (int i = 1; i <= kRaySamples; ++i) {
            const double lambda = reach * i / kRaySamples;
            if (reached(i == kRaySamples ? reach * (1.0 - 1e-9) : lambda)) {
                hi = lambda;
                break;
            }
            lo = lambda;
        }
        for (int it = 0; it < 64 && hi - lo > 1e-15 * reach; ++it) {
            const double mid = 0.5 * (lo + hi);
            (reached(mid) ? hi : lo) = mid;
        }
        return anchor + std::min(hi, reach) * u;
    }
};

// Angles of `angle` shifted by multiples of 2*pi into [lo, lo + 2*pi).
double unwrap_from(double angle, double lo) {
    double a = std::fmod(angle - lo, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return lo + a;
}

// Angular interval (a, b), b > a, of rays from the anchor that cross the
// bisector: the boundary gap is positive exactly there.
std::pair<double, double> crossing_range(const Tracer& tr) {
    const ConvexDomain& dom = tr.space.domain();
    const std::size_t m = dom.size();
    std::vector<double> vertex_angle(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Point v = dom.vertex(i) - tr.anchor;
        vertex_angle[i] = std::atan2(v.y, v.x);
    }

    for (const int per_edge : {8, 64}) {
        std::vector<double> probes;
        probes.reserve(m * per_edge);
        for (std::size_t i = 0; i < m; ++i) {
            const double a0 = vertex_angle[i];
            const double a1 = unwrap_from(vertex_angle[(i + 1) % m], a0);
            for (int j = 0; j < per_edge; ++j) {
                probes.push_back(a0 + (a1 - a0) * (j + 0.5) / per_edge);
            }
        }
        std::vector<bool> positive(probes.size());
        for (std::size_t i = 0; i < probes.size(); ++i) positive[i] = tr.crosses(probes[i]);

        std::vector<double> rising, falling;
        for (std::size_t i = 0; i < probes.size(); ++i) {
            const std::size_t j = (i + 1) % probes.size();
            if (positive[i] == positive[j]) continue;
            double lo = probes[i];
            double hi = unwrap_from(probes[j], lo);
            // The gap jumps across vertex directions, so plain bisection.
            for (int it = 0; it < 64 && hi - lo > 1e-15; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (tr.crosses(mid) == positive[i]) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            (positive[i] ? falling : rising).push_back(0.5 * (lo + hi));
        }
        if (rising.size() == 1 && falling.size() == 1) {
            const double a = rising.front();
            return {a, unwrap_from(falling.front(), a)};
        }
    }
    fail(ErrorKind::BisectorDegenerate, "bisector does not form a single boundary-to-boundary curve");
}

template <class F>
double refine_sign_change(F&& f, double lo, double hi, double f_lo, double f_hi) {
    std::uintmax_t iterations = 100;
    const auto r = boost::math::tools::toms748_solve(f, lo, hi, f_lo, f_hi,
                                                     boost::math::tools::eps_tolerance<double>(48),
                                                     iterations);
    return 0.5 * (r.first + r.second);
}

}  // namespace

SectorId sector_of(const ConvexDomain& domain, Point site, Point x) {
    const Point d = x - site;
    return {domain.ray_exit(site, d).edge, domain.ray_exit(site, -d).edge};
}

Point bisector_crossing(const Space& space, Point anchor, Point other, double angle) {
    return Tracer{space, anchor, other}.crossing(angle);
}

Bisector trace_bisector(const Space& space, Point s1, Point s2) {
    if (dist(s1, s2) <= space.tolerances().boundary) {
        fail(ErrorKind::CoincidentSites, "bisector needs two distinct sites");
    }
    space.require_interior(s1);
    space.require_interior(s2);

    const bool anchored_on_first = lex_less(s1, s2);
    const Tracer tr{space, anchored_on_first ? s1 : s2, anchored_on_first ? s2 : s1};
    const ConvexDomain& dom = space.domain();
    const auto [start, stop] = crossing_range(tr);
    const double span = stop - start;

    auto point_at_angle = [&](double a) {
        if (a <= start || a >= stop) return tr.boundary_point(a <= start ? start : stop);
        return tr.crossing(a);
    };

    // Breakpoints: anchor spokes are fixed angles; spokes of the other site
    // are located where the traced point changes side of the spoke line.
    std::vector<double> breaks{start, stop};
    for (const Point& v : dom.vertices()) {
        const double a = std::atan2(v.y - tr.anchor.y, v.x - tr.anchor.x);
        for (const double b : {a, a + std::numbers::pi}) {
            const double u = unwrap_from(b, start);
            if (u > start && u < stop) breaks.push_back(u);
        }
    }
    std::vector<double> coarse = breaks;
    constexpr int kCoarse = 24;
    for (int i = 1; i < kCoarse; ++i) coarse.push_back(start + span * i / kCoarse);
    auto too_close = [&](double a, double b) { return b - a <= 1e-13 * span; };
    std::sort(coarse.begin(), coarse.end());
    coarse.erase(std::unique(coarse.begin(), coarse.end(), too_close), coarse.end());
    std::vector<Point> coarse_pts(coarse.size());
    for (std::size_t i = 0; i < coarse.size(); ++i) coarse_pts[i] = point_at_angle(coarse[i]);

    for (const Point& v : dom.vertices()) {
        const Point spoke = v - tr.other;
        auto side = [&](double a) { return cross(spoke, point_at_angle(a) - tr.other); };
        for (std::size_t i = 0; i + 1 < coarse.size(); ++i) {
            const double h0 = cross(spoke, coarse_pts[i] - tr.other);
            const double h1 = cross(spoke, coarse_pts[i + 1] - tr.other);
            if (h0 == 0.0 || h1 == 0.0 || (h0 > 0.0) == (h1 > 0.0)) continue;
            const double b = refine_sign_change(side, coarse[i], coarse[i + 1], h0, h1);
            if (std::isfinite(b)) breaks.push_back(b);
        }
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end(), too_close), breaks.end());
    if (breaks.size() > 2 && too_close(breaks[breaks.size() - 2], stop)) breaks.pop_back();
    breaks.back() = stop;

    const double flat = space.tolerances().flat * space.scale();
    const int cap = std::max(space.tolerances().max_samples_per_piece, 2);
    const int base = std::max(space.tolerances().min_intervals_per_piece, 1);

    struct Raw {
        double angle;
        Point point;
    };
    std::vector<Raw> raw;
    std::vector<std::pair<std::size_t, std::size_t>> piece_ranges;
    raw.push_back({breaks.front(), point_at_angle(breaks.front())});
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
        const double a0 = breaks[p];
        const double a1 = breaks[p + 1];
        const std::size_t first = raw.size() - 1;
        std::vector<Raw> piece;
        piece.push_back(raw.back());
        for (int j = 1; j <= base; ++j) {
            const double a = j == base ? a1 : a0 + (a1 - a0) * j / base;
            piece.push_back({a, point_at_angle(a)});
        }
        // Split intervals whose midpoint strays from the chord.
        int budget = cap - static_cast<int>(piece.size());
        std::vector<Raw> refined{piece.front()};
        std::vector<std::pair<Raw, Raw>> stack;
        for (std::size_t j = piece.size() - 1; j >= 1; --j) stack.emplace_back(piece[j - 1], piece[j]);
        while (!stack.empty()) {
            auto [l, r] = stack.back();
            stack.pop_back();
            const double am = 0.5 * (l.angle + r.angle);
            if (budget > 0) {
                const Point pm = point_at_angle(am);
                if (segment_distance(pm, l.point, r.point) > flat) {
                    --budget;
                    stack.emplace_back(Raw{am, pm}, r);
                    stack.emplace_back(l, Raw{am, pm});
                    continue;
                }
            }
            refined.push_back(r);
        }
        raw.insert(raw.end(), refined.begin() + 1, refined.end());
        piece_ranges.emplace_back(first, raw.size() - 1);
    }

    Bisector out;
    out.first_ = s1;
    out.second_ = s2;
    out.anchored_on_first_ = anchored_on_first;

    const std::size_t n = raw.size();
    out.samples_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Raw& r = anchored_on_first ? raw[i] : raw[n - 1 - i];
        out.samples_[i] = {r.point, r.angle, 0.0};
    }
    double total = 0.0;
    std::vector<double> cumulative(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) {
        total += dist(out.samples_[i - 1].point, out.samples_[i].point);
        cumulative[i] = total;
    }
    if (!(total > 0.0)) fail(ErrorKind::BisectorDegenerate, "bisector has zero length");
    out.length_ = total;
    for (std::size_t i = 0; i < n; ++i) out.samples_[i].t = cumulative[i] / total;
    out.samples_.front().t = 0.0;
    out.samples_.back().t = 1.0;

    const double end_angles[2] = {anchored_on_first ? start : stop, anchored_on_first ? stop : start};
    for (int side = 0; side < 2; ++side) {
        out.endpoint_edge_[side] = dom.ray_exit(tr.anchor, direction(end_angles[side])).edge;
    }

    std::vector<std::pair<std::size_t, std::size_t>> ranges = piece_ranges;
    if (!anchored_on_first) {
        std::reverse(ranges.begin(), ranges.end());
        for (auto& [b, e] : ranges) {
            const std::size_t nb = n - 1 - e;
            const std::size_t ne = n - 1 - b;
            b = nb;
            e = ne;
        }
    }
    for (const auto& [b, e] : ranges) {
        const Point mid = bisector_crossing(
            space, tr.anchor, tr.other, 0.5 * (out.samples_[b].angle + out.samples_[e].angle));
        out.pieces_.push_back({out.samples_[b].t, out.samples_[e].t, sector_of(dom, s1, mid),
                               sector_of(dom, s2, mid), b, e});
    }
    return out;
}

Polyline Bisector::polyline() const {
    Polyline out;
    out.reserve(samples_.size());
    for (const auto& s : samples_) out.push_back(s.point);
    return out;
}

namespace {

std::size_t segment_for_t(const std::vector<BisectorSample>& s, double t) {
    const auto it = std::upper_bound(s.begin(), s.end(), t,
                                     [](double v, const BisectorSample& x) { return v < x.t; });
    std::size_t i = static_cast<std::size_t>(it - s.begin());
    if (i == 0) return 0;
    return std::min(i - 1, s.size() - 2);
}

}  // namespace

Point Bisector::point_at(double t) const {
    if (!(t >= 0.0 && t <= 1.0)) fail(ErrorKind::OutOfRange, "bisector parameter outside [0, 1]");
    const std::size_t i = segment_for_t(samples_, t);
    const double w = samples_[i + 1].t - samples_[i].t;
    const double f = w > 0.0 ? (t - samples_[i].t) / w : 0.0;
    return lerp(samples_[i].point, samples_[i + 1].point, f);
}

double Bisector::angle_at(double t) const {
    if (!(t >= 0.0 && t <= 1.0)) fail(ErrorKind::OutOfRange, "bisector parameter outside [0, 1]");
    const std::size_t i = segment_for_t(samples_, t);
    const double w = samples_[i + 1].t - samples_[i].t;
    const double f = w > 0.0 ? (t - samples_[i].t) / w : 0.0;
    return samples_[i].angle + f * (samples_[i + 1].angle - samples_[i].angle);
}

double Bisector::t_at_angle(double angle) const {
    // Angles increase along the samples when anchored on the first site.
    const double sign = anchored_on_first_ ? 1.0 : -1.0;
    const auto it = std::upper_bound(samples_.begin(), samples_.end(), sign * angle,
                                     [&](double v, const BisectorSample& x) { return v < sign * x.angle; });
    std::size_t i = static_cast<std::size_t>(it - samples_.begin());
    if (i == 0) return 0.0;
    if (i >= samples_.size()) return 1.0;
    --i;
    const double w = samples_[i + 1].angle - samples_[i].angle;
    const double f = w != 0.0 ? (angle - samples_[i].angle) / w : 0.0;
    return samples_[i].t + f * (samples_[i + 1].t - samples_[i].t);
}

Point exact_point(const Space& space, const Bisector& bisector, double t) {
    if (t <= 0.0) return bisector.endpoint(0);
    if (t >= 1.0) return bisector.endpoint(1);
    return bisector_crossing(space, bisector.anchor(), bisector.other(), bisector.angle_at(t));
}

bool aligned_with_edges(const ConvexDomain& domain, Point p, Point q, double tolerance) {
    const auto& v = domain.vertices();
    const std::size_t m = v.size();
    const Point d = q - p;
    for (std::size_t a = 0; a < m; ++a) {
        const Point a0 = v[a], a1 = v[(a + 1) % m];
        for (std::size_t b = a + 1; b < m; ++b) {
            const Point b0 = v[b], b1 = v[(b + 1) % m];
            const Point ea = a1 - a0, eb = b1 - b0;
            const double denom = cross(ea, eb);
            if (std::abs(denom) <= tolerance * norm(ea) * norm(eb)) {
                if (std::abs(cross(d, ea)) <= tolerance * norm(d) * norm(ea)) return true;
                continue;
            }
            const Point o = a0 + ea * (cross(b0 - a0, eb) / denom);
            if (std::abs(cross(d, o - p)) <= tolerance * norm(d) * norm(o - p)) return true;
        }
    }
    return false;
}

}  // namespace hilbertvd
