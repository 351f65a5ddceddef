#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hilbertvd/clustering.hpp"
#include "hilbertvd/metric.hpp"
#include "hilbertvd/point.hpp"
#include "hilbertvd/tolerances.hpp"

namespace hilbertvd {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSceneSchema = "hilbert-scene";
inline constexpr int kSceneVersion = 1;

struct ClusteringConfig {
    ClusterMethod method = ClusterMethod::KMeans;
    int k = 2;              // k-means cluster count
    int count = 1;          // single-linkage stop: clusters left
    double height = -1.0;   // single-linkage stop: merge height, when >= 0
    std::optional<ClusteringState> state;
};

/// Everything a session or CLI run needs: the domain, the sites, the metric
/// and the display and clustering state. Fields the engine does not know
/// are kept verbatim, so load + save never drops data.
struct Scene {
    std::vector<Point> domain;
    std::vector<Point> sites;
    MetricKind metric = MetricKind::Hilbert;
    int order = 1;
    std::map<std::string, bool> layers;  // display toggles by name
    std::optional<ClusteringConfig> clustering;
    Json tolerance_overrides = Json::object();
    Json document = Json::object();  // the parsed file, for unknown fields

    Tolerances tolerances() const;
    /// Builds the validated domain; throws the domain errors.
    Space space() const;
};

// The layer names a scene starts with.
const std::map<std::string, bool>& default_layers();

/// Throws ParseError (with line and column) or SchemaMismatch.
Scene parse_scene(std::string_view text);
std::string dump_scene(const Scene& scene);

/// File wrappers; I/O failures throw IoError.
Scene load_scene(const std::filesystem::path& path);
void save_scene(const std::filesystem::path& path, const Scene& scene);

Json to_json(const ClusteringState& state);
ClusteringState clustering_state_from_json(const Json& j);

}  // namespace hilbertvd
