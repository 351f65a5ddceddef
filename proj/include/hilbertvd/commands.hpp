#pragma once

#include <optional>
#include <vector>

#include "hilbertvd/scene.hpp"
#include "hilbertvd/svg.hpp"

namespace hilbertvd {

// Result of one CLI command: a JSON report and, where the command draws
// something, a figure.
struct CommandOutput {
    Json json;
    std::optional<SvgDocument> svg;
};

// Site arguments are indices into scene.sites. Orders are 1..n-1; an empty
// order list means all of them.

CommandOutput run_distance(const Scene& scene, Point p, Point q);
CommandOutput run_ball(const Scene& scene, Point center, double radius);
CommandOutput run_bisector(const Scene& scene, int i, int j);
CommandOutput run_circumcenter(const Scene& scene, int i, int j, int k);
CommandOutput run_voronoi(const Scene& scene, const std::vector<int>& orders);
CommandOutput run_delaunay(const Scene& scene, int k);
CommandOutput run_regions(const Scene& scene, int i, int j);

struct ClusterRequest {
    ClusterMethod method = ClusterMethod::KMeans;
    int k = 2;             // k-means clusters
    int steps = 10;        // k-means iterations
    int count = 1;         // single linkage: clusters left
    double height = -1.0;  // single linkage: merge height, when >= 0
};
CommandOutput run_cluster(const Scene& scene, const ClusterRequest& request);

CommandOutput run_verify(const Scene& scene, const std::vector<int>& orders, int resolution);

}  // namespace hilbertvd
