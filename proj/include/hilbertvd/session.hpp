#pragma once

#include <atomic>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hilbertvd/korder.hpp"
#include "hilbertvd/scene.hpp"

namespace hilbertvd {

/// One live scene driven by events. Every message is a JSON object with a
/// "kind" (AddSite, MoveSite, RemoveSite, SetOrder, ToggleLayer,
/// StepClustering, SetMetric, LoadScene) and a "seq" that must increase
/// strictly. Each message yields exactly one frame, tagged with its seq:
///
///   GeometryUpdate  what changed: bisectors (keyed by site pair) whose
///                   curve, events or labels differ, removed pairs, changed
///                   and removed cells of the current order, clustering;
///   Ack             accepted without geometric change (layer toggles);
///   Error           rejected; the scene is left exactly as it was.
///
/// Moving a site retraces only its n-1 bisectors and recomputes only the
/// circumcenters it takes part in; labels are then re-derived per bisector.
/// Domain or metric changes recompute everything.
class Session {
public:
    explicit Session(Scene scene);

    Json handle(const Json& message);
    Json handle_text(std::string_view text);

    const Scene& scene() const { return scene_; }
    const std::vector<LabeledBisector>& bisectors() const { return labeled_; }
    const OrderDiagram* diagram() const { return diagram_ ? &*diagram_ : nullptr; }
    /// Everything the current state would send after a full recompute.
    Json snapshot() const;

private:
    using Pair = std::pair<int, int>;
    struct PairCache {
        Bisector bisector;
        std::map<int, std::vector<CircumcenterEvent>> events;  // by third site
    };

    Json apply(const Json& message, const std::string& kind);
    Json rebuild(Json frame, const std::vector<Pair>& retrace, const std::vector<int>& moved_thirds,
                 bool full);
    void recompute_all();
    void relabel();
    Json step_clustering();

    Scene scene_;
    std::optional<Space> space_;
    std::map<Pair, PairCache> cache_;
    std::vector<LabeledBisector> labeled_;
    std::vector<DiagramVertex> vertices_;
    std::optional<OrderDiagram> diagram_;
    VoronoiDiagnostics diagnostics_;
    long long last_seq_ = -1;
};

// Length-prefixed frames: a 4-byte big-endian byte count, then UTF-8 JSON.
std::string encode_frame(std::string_view payload);
bool read_frame(int fd, std::string& payload);
bool write_frame(int fd, std::string_view payload);

/// Local TCP service for one session (127.0.0.1 only). Clients are served
/// one at a time; each request frame gets exactly one response frame.
class SessionServer {
public:
    SessionServer(Session& session, int port);  // port 0 picks a free one
    ~SessionServer();
    SessionServer(const SessionServer&) = delete;
    SessionServer& operator=(const SessionServer&) = delete;

    int port() const { return port_; }
    /// Serves clients until stop() is called.
    void run();
    /// Serves a single client connection, then returns.
    void serve_one();
    void stop();

private:
    void serve_connection(int fd);

    Session& session_;
    int listen_fd_ = -1;
    int port_ = 0;
    std::atomic<bool> stopping_{false};
};

}  // namespace hilbertvd
