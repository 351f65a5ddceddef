#include "hilbertvd/session.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdint>

#include <arpa/inet.h>
#include <netinet/in.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include "hilbertvd/error.hpp"
#include "hilbertvd/export.hpp"
#include "hilbertvd/parallel.hpp"

namespace hilbertvd {

namespace {

constexpr std::uint32_t kMaxFrame = 64u << 20;

Point point_arg(const Json& message, const char* key) {
    if (!message.contains(key)) fail(ErrorKind::InvalidArgument, std::string("missing ") + key);
    const Json& p = message[key];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
        fail(ErrorKind::InvalidArgument, std::string(key) + " must be an [x, y] pair");
    }
    return {p[0].get<double>(), p[1].get<double>()};
}

int int_arg(const Json& message, const char* key) {
    if (!message.contains(key) || !message[key].is_number_integer()) {
        fail(ErrorKind::InvalidArgument, std::string(key) + " must be an integer");
    }
    return message[key].get<int>();
}

std::string string_arg(const Json& message, const char* key) {
    if (!message.contains(key) || !message[key].is_string()) {
        fail(ErrorKind::InvalidArgument, std::string(key) + " must be a string");
    }
    return message[key].get<std::string>();
}

Json error_frame(const Json& seq, std::string_view kind, const std::string& message) {
    Json f;
    f["kind"] = "Error";
    f["seq"] = seq;
    f["error"] = std::string(kind);
    f["message"] = message;
    return f;
}

template <class Key>
Json key_json(const Key& k) {
    if constexpr (std::is_same_v<Key, SiteSet>) {
        return to_json(k);
    } else {
        return Json::array({k.first, k.second});
    }
}

// Entries of `after` that are new or differ from `before`, and keys that
// disappeared.
template <class Key>
std::pair<Json, Json> diff(const std::map<Key, Json>& before, const std::map<Key, Json>& after) {
    Json changed = Json::array();
    Json removed = Json::array();
    for (const auto& [key, value] : after) {
        auto it = before.find(key);
        if (it == before.end() || it->second != value) changed.push_back(value);
    }
    for (const auto& [key, value] : before) {
        if (!after.contains(key)) removed.push_back(key_json(key));
    }
    return {std::move(changed), std::move(removed)};
}

std::map<std::pair<int, int>, Json> keyed(const std::vector<LabeledBisector>& bisectors) {
    std::map<std::pair<int, int>, Json> out;
    for (const auto& b : bisectors) out.emplace(std::pair{b.first, b.second}, to_json(b));
    return out;
}

std::map<SiteSet, Json> keyed(const std::optional<OrderDiagram>& d) {
    std::map<SiteSet, Json> out;
    if (!d) return out;
    for (const auto& [set, regions] : d->cells) {
        Json rs = Json::array();
        for (const CellRegion& r : regions) rs.push_back(to_json(r));
        out.emplace(set, Json{{"sites", to_json(set)}, {"regions", std::move(rs)}});
    }
    return out;
}

}  // namespace

Session::Session(Scene scene) : scene_(std::move(scene)) { recompute_all(); }

void Session::recompute_all() {
    space_.emplace(scene_.space());
    cache_.clear();
    const int n = static_cast<int>(scene_.sites.size());
    if (n >= 2) validate_sites(*space_, scene_.sites);
    scene_.order = std::clamp(scene_.order, 1, std::max(1, n - 1));
    std::vector<Pair> all;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
    }
    rebuild(Json::object(), all, {}, true);
}

Json Session::rebuild(Json frame, const std::vector<Pair>& retrace, const std::vector<int>& moved_thirds,
                      bool full) {
    const Space& space = *space_;
    const auto& sites = scene_.sites;
    const int n = static_cast<int>(sites.size());

    std::vector<std::optional<PairCache>> fresh(retrace.size());
    parallel_for(retrace.size(), [&](std::size_t p) {
        const auto [i, j] = retrace[p];
        PairCache c{trace_bisector(space, sites[i], sites[j]), {}};
        for (int l = 0; l < n; ++l) {
            if (l != i && l != j) c.events[l] = circumcenters_on(space, c.bisector, sites[l], {i, j, l});
        }
        fresh[p] = std::move(c);
    });
    for (std::size_t p = 0; p < retrace.size(); ++p) cache_.insert_or_assign(retrace[p], std::move(*fresh[p]));

    if (!moved_thirds.empty()) {
        std::vector<std::pair<PairCache*, Pair>> others;
        for (auto& [pair, c] : cache_) {
            if (std::find(retrace.begin(), retrace.end(), pair) == retrace.end()) others.emplace_back(&c, pair);
        }
        parallel_for(others.size(), [&](std::size_t o) {
            auto [c, pair] = others[o];
            for (int l : moved_thirds) {
                if (l == pair.first || l == pair.second || l >= n) continue;
                c->events[l] = circumcenters_on(space, c->bisector, sites[l], {pair.first, pair.second, l});
            }
        });
    }
    relabel();
    frame["full"] = full;
    return frame;
}

void Session::relabel() {
    const Space& space = *space_;
    const int n = static_cast<int>(scene_.sites.size());
    std::vector<std::pair<const Pair*, const PairCache*>> entries;
    for (const auto& [pair, c] : cache_) entries.emplace_back(&pair, &c);

    std::vector<std::optional<LabeledBisector>> out(entries.size());
    std::vector<VoronoiDiagnostics> diag(entries.size());
    parallel_for(entries.size(), [&](std::size_t e) {
        const auto [pair, c] = entries[e];
        std::vector<CircumcenterEvent> events;
        for (const auto& [third, list] : c->events) events.insert(events.end(), list.begin(), list.end());
        out[e] = label_bisector(space, scene_.sites, pair->first, pair->second, c->bisector, std::move(events),
                                diag[e]);
    });
    labeled_.clear();
    diagnostics_ = {};
    for (std::size_t e = 0; e < entries.size(); ++e) {
        labeled_.push_back(std::move(*out[e]));
        diagnostics_.label_disagreements += diag[e].label_disagreements;
        diagnostics_.merged_events += diag[e].merged_events;
        for (auto& w : diag[e].warnings) diagnostics_.warnings.push_back(std::move(w));
    }
    vertices_ = register_vertices(space, labeled_);
    if (n >= 2) {
        diagram_ = assemble_order(space, scene_.sites, labeled_, vertices_, scene_.order);
    } else {
        diagram_.reset();
    }
}

Json Session::step_clustering() {
    const Space& space = *space_;
    const int n = static_cast<int>(scene_.sites.size());
    if (n < 1) fail(ErrorKind::EmptyInput, "clustering needs at least one site");
    if (!scene_.clustering) {
        ClusteringConfig cfg;
        cfg.k = std::min(2, n);
        scene_.clustering = cfg;
    }
    ClusteringConfig& cfg = *scene_.clustering;
    bool changed = true;
    if (cfg.method == ClusterMethod::KMeans) {
        if (!cfg.state) {
            cfg.state = kmeans_init(space, scene_.sites, cfg.k);
        } else {
            ClusteringState next = kmeans_step(*cfg.state, space, scene_.sites);
            changed = !(next == *cfg.state);
            cfg.state = std::move(next);
        }
    } else {
        const ClusteringState target = single_linkage(space, scene_.sites, {cfg.count, cfg.height});
        ClusteringState st = cfg.state ? *cfg.state : target;
        if (!cfg.state) {
            st.step = 0;
        } else if (st.step < target.step) {
            ++st.step;
        } else {
            changed = false;
        }
        st.merges = target.merges;
        st.assignments = cut_dendrogram(n, st.merges, static_cast<std::size_t>(st.step));
        st.converged = st.step == target.step;
        cfg.state = std::move(st);
    }
    return {{"changed", changed}, {"state", to_json(*cfg.state)}};
}

Json Session::apply(const Json& message, const std::string& kind) {
    const int n = static_cast<int>(scene_.sites.size());
    auto reset_clustering = [&] {
        if (scene_.clustering) scene_.clustering->state.reset();
    };
    auto pairs_with = [&](int idx, int count) {
        std::vector<Pair> out;
        for (int l = 0; l < count; ++l) {
            if (l != idx) out.emplace_back(std::min(l, idx), std::max(l, idx));
        }
        return out;
    };

    if (kind == "AddSite") {
        std::vector<Point> sites = scene_.sites;
        sites.push_back(point_arg(message, "point"));
        if (sites.size() >= 2) {
            validate_sites(*space_, sites);
        } else {
            space_->require_interior(sites.back());
        }
        scene_.sites = std::move(sites);
        reset_clustering();
        return rebuild(Json::object(), pairs_with(n, n + 1), {n}, false);
    }
    if (kind == "MoveSite") {
        const int idx = int_arg(message, "index");
        if (idx < 0 || idx >= n) fail(ErrorKind::OutOfRange, "site index out of range");
        std::vector<Point> sites = scene_.sites;
        sites[idx] = point_arg(message, "to");
        if (sites.size() >= 2) {
            validate_sites(*space_, sites);
        } else {
            space_->require_interior(sites[idx]);
        }
        scene_.sites = std::move(sites);
        reset_clustering();
        return rebuild(Json::object(), pairs_with(idx, n), {idx}, false);
    }
    if (kind == "RemoveSite") {
        const int idx = int_arg(message, "index");
        if (idx < 0 || idx >= n) fail(ErrorKind::OutOfRange, "site index out of range");
        scene_.sites.erase(scene_.sites.begin() + idx);
        auto shift = [idx](int s) { return s > idx ? s - 1 : s; };
        std::map<Pair, PairCache> moved;
        for (auto& [pair, c] : cache_) {
            if (pair.first == idx || pair.second == idx) continue;
            PairCache next{std::move(c.bisector), {}};
            for (auto& [third, list] : c.events) {
                if (third == idx) continue;
                for (auto& e : list) {
                    for (int& s : e.sites) s = shift(s);
                }
                next.events.emplace(shift(third), std::move(list));
            }
            moved.emplace(Pair{shift(pair.first), shift(pair.second)}, std::move(next));
        }
        cache_ = std::move(moved);
        scene_.order = std::clamp(scene_.order, 1, std::max(1, n - 2));
        reset_clustering();
        return rebuild(Json::object(), {}, {}, false);
    }
    if (kind == "SetOrder") {
        const int k = int_arg(message, "k");
        if (k < 1 || k > n - 1) fail(ErrorKind::OutOfRange, "order must be in 1..n-1");
        scene_.order = k;
        diagram_ = assemble_order(*space_, scene_.sites, labeled_, vertices_, k);
        return {{"full", false}};
    }
    if (kind == "SetMetric") {
        const MetricKind metric = parse_metric(string_arg(message, "metric"));
        scene_.metric = metric;
        reset_clustering();
        recompute_all();
        return {{"full", true}};
    }
    if (kind == "LoadScene") {
        if (!message.contains("scene") || !message["scene"].is_object()) {
            fail(ErrorKind::InvalidArgument, "LoadScene needs a scene object");
        }
        scene_ = parse_scene(message["scene"].dump());
        recompute_all();
        return {{"full", true}};
    }
    if (kind == "StepClustering") return {{"full", false}, {"clustering", step_clustering()}};
    fail(ErrorKind::InvalidArgument, "unknown event kind '" + kind + "'");
}

Json Session::handle(const Json& message) {
    const Json seq = message.is_object() && message.contains("seq") ? message["seq"] : Json();
    if (!message.is_object()) return error_frame(seq, "InvalidArgument", "event must be a JSON object");
    if (!seq.is_number_integer()) return error_frame(seq, "InvalidArgument", "event needs an integer seq");
    if (seq.get<long long>() <= last_seq_) {
        return error_frame(seq, "InvalidArgument",
                           "seq must increase (last was " + std::to_string(last_seq_) + ")");
    }
    last_seq_ = seq.get<long long>();
    if (!message.contains("kind") || !message["kind"].is_string()) {
        return error_frame(seq, "InvalidArgument", "event needs a kind");
    }
    const std::string kind = message["kind"].get<std::string>();

    if (kind == "ToggleLayer") {
        try {
            const std::string layer = string_arg(message, "layer");
            if (message.contains("visible") && !message["visible"].is_boolean()) {
                fail(ErrorKind::InvalidArgument, "visible must be a boolean");
            }
            bool& on = scene_.layers[layer];
            on = message.contains("visible") ? message["visible"].get<bool>() : !on;
        } catch (const Error& e) {
            return error_frame(seq, to_string(e.kind()), e.what());
        }
        Json ack{{"kind", "Ack"}, {"seq", seq}, {"event", kind}};
        ack["layers"] = scene_.layers;
        return ack;
    }

    // Work on a copy of the state so a failed event leaves no trace.
    Scene scene = scene_;
    std::optional<Space> space = space_;
    auto cache = cache_;
    auto labeled = labeled_;
    auto vertices = vertices_;
    auto diagram = diagram_;
    auto diagnostics = diagnostics_;
    const auto bisectors_before = keyed(labeled_);
    const auto cells_before = keyed(diagram_);
    Json body;
    try {
        body = apply(message, kind);
    } catch (const std::exception& e) {
        scene_ = std::move(scene);
        space_ = std::move(space);
        cache_ = std::move(cache);
        labeled_ = std::move(labeled);
        vertices_ = std::move(vertices);
        diagram_ = std::move(diagram);
        diagnostics_ = std::move(diagnostics);
        if (const auto* err = dynamic_cast<const Error*>(&e)) return error_frame(seq, to_string(err->kind()), e.what());
        return error_frame(seq, "InvalidArgument", e.what());
    }

    Json frame;
    frame["kind"] = "GeometryUpdate";
    frame["seq"] = seq;
    frame["event"] = kind;
    frame["full"] = body.value("full", false);
    frame["n"] = scene_.sites.size();
    frame["order"] = scene_.order;
    auto [bisectors, removed] = diff(bisectors_before, keyed(labeled_));
    frame["bisectors"] = std::move(bisectors);
    frame["removed"] = std::move(removed);
    auto [cells, removed_cells] = diff(cells_before, keyed(diagram_));
    frame["cells"] = std::move(cells);
    frame["removed_cells"] = std::move(removed_cells);
    Json verts = Json::array();
    for (const DiagramVertex& v : vertices_) verts.push_back({{"point", to_json(v.point)}, {"triples", v.triples}});
    frame["vertices"] = std::move(verts);
    frame["diagnostics"] = to_json(diagnostics_);
    if (body.contains("clustering")) frame["clustering"] = body["clustering"];
    return frame;
}

Json Session::handle_text(std::string_view text) {
    Json message;
    try {
        message = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        return error_frame(Json(), "ParseError", e.what());
    }
    return handle(message);
}

Json Session::snapshot() const {
    Json j;
    j["scene"] = Json::parse(dump_scene(scene_));
    Json bisectors = Json::array();
    for (const auto& b : labeled_) bisectors.push_back(to_json(b));
    j["bisectors"] = std::move(bisectors);
    j["diagram"] = diagram_ ? to_json(*diagram_) : Json();
    j["diagnostics"] = to_json(diagnostics_);
    return j;
}

std::string encode_frame(std::string_view payload) {
    const auto n = static_cast<std::uint32_t>(payload.size());
    std::string out;
    out.reserve(payload.size() + 4);
    for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<char>((n >> shift) & 0xffu));
    out.append(payload);
    return out;
}

namespace {

bool read_exact(int fd, char* buf, std::size_t n) {
    while (n > 0) {
        const ssize_t got = ::read(fd, buf, n);
        if (got < 0 && errno == EINTR) continue;
        if (got <= 0) return false;
        buf += got;
        n -= static_cast<std::size_t>(got);
    }
    return true;
}

bool write_all(int fd, const char* buf, std::size_t n) {
    while (n > 0) {
        const ssize_t put = ::send(fd, buf, n, MSG_NOSIGNAL);
        if (put < 0 && errno == EINTR) continue;
        if (put <= 0) return false;
        buf += put;
        n -= static_cast<std::size_t>(put);
    }
    return true;
}

}  // namespace

bool read_frame(int fd, std::string& payload) {
    unsigned char head[4];
    if (!read_exact(fd, reinterpret_cast<char*>(head), 4)) return false;
    const std::uint32_t n = (std::uint32_t{head[0]} << 24) | (std::uint32_t{head[1]} << 16) |
                            (std::uint32_t{head[2]} << 8) | std::uint32_t{head[3]};
    if (n > kMaxFrame) return false;
    payload.resize(n);
    return read_exact(fd, payload.data(), n);
}

bool write_frame(int fd, std::string_view payload) {
    const std::string framed = encode_frame(payload);
    return write_all(fd, framed.data(), framed.size());
}

SessionServer::SessionServer(Session& session, int port) : session_(session) {
    listen_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
    if (listen_fd_ < 0) fail(ErrorKind::IoError, "cannot create socket");
    const int yes = 1;
    ::setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    addr.sin_port = htons(static_cast<std::uint16_t>(port));
    if (::bind(listen_fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0 || ::listen(listen_fd_, 4) != 0) {
        ::close(listen_fd_);
        fail(ErrorKind::IoError, "cannot listen on port " + std::to_string(port));
    }
    socklen_t len = sizeof addr;
    ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&addr), &len);
    port_ = ntohs(addr.sin_port);
}

SessionServer::~SessionServer() {
    if (listen_fd_ >= 0) ::close(listen_fd_);
}

void SessionServer::stop() { stopping_ = true; }

void SessionServer::serve_connection(int fd) {
    std::string request;
    while (!stopping_ && read_frame(fd, request)) {
        if (!write_frame(fd, session_.handle_text(request).dump())) break;
    }
    ::close(fd);
}

void SessionServer::serve_one() {
    const int fd = ::accept(listen_fd_, nullptr, nullptr);
    if (fd < 0) fail(ErrorKind::IoError, "accept failed");
    serve_connection(fd);
}

void SessionServer::run() {
    while (!stopping_) {
        pollfd p{listen_fd_, POLLIN, 0};
        const int ready = ::poll(&p, 1, 200);
        if (ready < 0 && errno != EINTR) fail(ErrorKind::IoError, "poll failed");
        if (ready <= 0) continue;
        const int fd = ::accept(listen_fd_, nullptr, nullptr);
        if (fd >= 0) serve_connection(fd);
    }
}

}  // namespace hilbertvd
