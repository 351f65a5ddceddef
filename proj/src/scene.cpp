#include "hilbertvd/scene.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "hilbertvd/error.hpp"

namespace hilbertvd {

namespace {

struct ToleranceField {
    const char* name;
    std::function<void(Tolerances&, const Json&)> apply;
};

template <class T>
ToleranceField field(const char* name, T Tolerances::*member) {
    return {name, [member, name](Tolerances& t, const Json& v) {
                if (!v.is_number()) fail(ErrorKind::SchemaMismatch, std::string("tolerance ") + name + " must be a number");
                t.*member = v.get<T>();
            }};
}

const std::vector<ToleranceField>& tolerance_fields() {
    static const std::vector<ToleranceField> fields{
        field("boundary", &Tolerances::boundary),
        field("ball", &Tolerances::ball),
        field("infinite_ball", &Tolerances::infinite_ball),
        field("bisector", &Tolerances::bisector),
        field("flat", &Tolerances::flat),
        field("max_samples_per_piece", &Tolerances::max_samples_per_piece),
        field("min_intervals_per_piece", &Tolerances::min_intervals_per_piece),
        field("circumcenter", &Tolerances::circumcenter),
        field("snap", &Tolerances::snap),
        field("optimum", &Tolerances::optimum),
        field("frechet_max_iterations", &Tolerances::frechet_max_iterations),
        field("kernel_area", &Tolerances::kernel_area),
    };
    return fields;
}

[[noreturn]] void schema(const std::string& message) { fail(ErrorKind::SchemaMismatch, message); }

Point point_from(const Json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        schema(std::string(what) + " entries must be [x, y] number pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Point> points_from(const Json& j, const char* what) {
    if (!j.is_array()) schema(std::string(what) + " must be an array");
    std::vector<Point> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(point_from(e, what));
    return out;
}

int int_from(const Json& j, const char* what) {
    if (!j.is_number_integer()) schema(std::string(what) + " must be an integer");
    return j.get<int>();
}

// Leaves numbers that already hold the value untouched, so integers written
// by hand survive a round trip.
void put_number(Json& slot, double v) {
    if (slot.is_number() && slot.get<double>() == v) return;
    slot = v;
}

void put_points(Json& slot, const std::vector<Point>& pts) {
    if (!slot.is_array() || slot.size() != pts.size()) slot = Json::array();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i >= slot.size()) slot.push_back(Json::array());
        Json& e = slot[i];
        if (!e.is_array() || e.size() != 2) e = Json::array({0.0, 0.0});
        put_number(e[0], pts[i].x);
        put_number(e[1], pts[i].y);
    }
}

template <class T>
void put(Json& slot, const T& v) {
    if (slot != Json(v)) slot = v;
}

std::string locate(std::string_view text, std::size_t byte) {
    const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

const std::map<std::string, bool>& default_layers() {
    static const std::map<std::string, bool> layers{
        {"balls", false}, {"bisectors", true}, {"diagram", true}, {"mosaic", false},
        {"raster", false}, {"regions", false},
    };
    return layers;
}

Tolerances Scene::tolerances() const {
    Tolerances t;
    for (const auto& [name, value] : tolerance_overrides.items()) {
        const auto& fields = tolerance_fields();
        auto it = std::find_if(fields.begin(), fields.end(), [&](const auto& f) { return name == f.name; });
        if (it == fields.end()) schema("unknown tolerance " + name);
        it->apply(t, value);
    }
    return t;
}

Space Scene::space() const { return Space(ConvexDomain::build(domain), metric, tolerances()); }

Json to_json(const ClusteringState& state) {
    Json j;
    j["method"] = std::string(to_string(state.method));
    j["step"] = state.step;
    j["objective"] = state.objective;
    j["converged"] = state.converged;
    j["assignments"] = state.assignments;
    Json centers = Json::array();
    for (const Point& c : state.centers) centers.push_back({c.x, c.y});
    j["centers"] = std::move(centers);
    Json merges = Json::array();
    for (const Merge& m : state.merges) merges.push_back({m.a, m.b, m.height, m.size});
    j["merges"] = std::move(merges);
    return j;
}

ClusteringState clustering_state_from_json(const Json& j) {
    if (!j.is_object()) schema("clustering state must be an object");
    ClusteringState s;
    try {
        s.method = parse_cluster_method(j.at("method").get<std::string>());
        s.step = j.at("step").get<int>();
        s.objective = j.at("objective").get<double>();
        s.converged = j.at("converged").get<bool>();
        s.assignments = j.at("assignments").get<std::vector<int>>();
        s.centers = points_from(j.at("centers"), "clustering centers");
        for (const auto& m : j.at("merges")) {
            s.merges.push_back({m.at(0).get<int>(), m.at(1).get<int>(), m.at(2).get<double>(), m.at(3).get<int>()});
        }
    } catch (const nlohmann::json::exception& e) {
        schema(std::string("malformed clustering state: ") + e.what());
    }
    return s;
}

Scene parse_scene(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::ParseError, "invalid JSON at " + locate(text, e.byte));
    }
    if (!j.is_object()) schema("scene must be a JSON object");
    if (!j.contains("schema") || j["schema"] != kSceneSchema) {
        schema("not a " + std::string(kSceneSchema) + " document");
    }
    if (!j.contains("version") || !j["version"].is_number_integer() || j["version"].get<int>() != kSceneVersion) {
        schema("unsupported scene version (expected " + std::to_string(kSceneVersion) + ")");
    }

    Scene s;
    if (!j.contains("domain")) schema("scene has no domain");
    s.domain = points_from(j["domain"], "domain");
    if (j.contains("sites")) s.sites = points_from(j["sites"], "sites");
    if (j.contains("metric")) {
        if (!j["metric"].is_string()) schema("metric must be a string");
        try {
            s.metric = parse_metric(j["metric"].get<std::string>());
        } catch (const Error& e) {
            schema(e.what());
        }
    }
    if (j.contains("order")) s.order = int_from(j["order"], "order");
    s.layers = default_layers();
    if (j.contains("layers")) {
        if (!j["layers"].is_object()) schema("layers must be an object");
        for (const auto& [name, on] : j["layers"].items()) {
            if (!on.is_boolean()) schema("layer " + name + " must be true or false");
            s.layers[name] = on.get<bool>();
        }
    }
    if (j.contains("clustering") && !j["clustering"].is_null()) {
        const Json& c = j["clustering"];
        if (!c.is_object()) schema("clustering must be an object");
        ClusteringConfig cfg;
        try {
            if (c.contains("method")) cfg.method = parse_cluster_method(c["method"].get<std::string>());
        } catch (const std::exception& e) {
            schema(e.what());
        }
        if (c.contains("k")) cfg.k = int_from(c["k"], "clustering k");
        if (c.contains("count")) cfg.count = int_from(c["count"], "clustering count");
        if (c.contains("height")) {
            if (!c["height"].is_number()) schema("clustering height must be a number");
            cfg.height = c["height"].get<double>();
        }
        if (c.contains("state") && !c["state"].is_null()) cfg.state = clustering_state_from_json(c["state"]);
        s.clustering = std::move(cfg);
    }
    if (j.contains("tolerances")) {
        if (!j["tolerances"].is_object()) schema("tolerances must be an object");
        s.tolerance_overrides = j["tolerances"];
        (void)s.tolerances();  // validates names and types
    }
    s.document = std::move(j);
    return s;
}

std::string dump_scene(const Scene& scene) {
    Json out = scene.document.is_object() ? scene.document : Json::object();
    put(out["schema"], std::string(kSceneSchema));
    put(out["version"], kSceneVersion);
    put(out["metric"], std::string(to_string(scene.metric)));
    put_points(out["domain"], scene.domain);
    put_points(out["sites"], scene.sites);
    put(out["order"], scene.order);

    Json& layers = out["layers"];
    if (!layers.is_object()) layers = Json::object();
    for (const auto& [name, on] : scene.layers) put(layers[name], on);

    if (scene.clustering) {
        const ClusteringConfig& c = *scene.clustering;
        Json& cj = out["clustering"];
        if (!cj.is_object()) cj = Json::object();
        put(cj["method"], std::string(to_string(c.method)));
        put(cj["k"], c.k);
        put(cj["count"], c.count);
        put_number(cj["height"], c.height);
        if (c.state) {
            put(cj["state"], to_json(*c.state));
        } else {
            cj.erase("state");
        }
    } else {
        out.erase("clustering");
    }

    if (!scene.tolerance_overrides.empty() || out.contains("tolerances")) {
        put(out["tolerances"], scene.tolerance_overrides);
    }
    return out.dump(2) + "\n";
}

Scene load_scene(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::IoError, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) fail(ErrorKind::IoError, "cannot read " + path.string());
    return parse_scene(buf.str());
}

void save_scene(const std::filesystem::path& path, const Scene& scene) {
    const std::string text = dump_scene(scene);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::IoError, "cannot write " + path.string());
    out << text;
    if (!out) fail(ErrorKind::IoError, "cannot write " + path.string());
}

}  // namespace hilbertvd
