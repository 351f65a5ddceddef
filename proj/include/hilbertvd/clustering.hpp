#pragma once

#include <string_view>
#include <vector>

#include "hilbertvd/metric.hpp"

namespace hilbertvd {

enum class ClusterMethod { KMeans, SingleLinkage };

std::string_view to_string(ClusterMethod method);
ClusterMethod parse_cluster_method(std::string_view name);

// Agglomerative merge; clusters are numbered like a scipy linkage matrix:
// sites are 0..n-1 and merge i creates cluster n+i.
struct Merge {
    int a = 0;
    int b = 0;
    double height = 0.0;
    int size = 0;

    friend bool operator==(const Merge&, const Merge&) = default;
};

struct ClusteringState {
    ClusterMethod method = ClusterMethod::KMeans;
    std::vector<int> assignments;  // site -> cluster id in 0..clusters-1
    std::vector<Point> centers;    // k-means only
    std::vector<Merge> merges;     // single linkage only: full dendrogram
    int step = 0;
    double objective = 0.0;        // k-means: sum of distance(site, its center)
    bool converged = false;

    int clusters() const;
    friend bool operator==(const ClusteringState&, const ClusteringState&) = default;
};

/// Farthest-first seeding from the site nearest the Frechet mean of all
/// sites; assignments and objective reflect the seeds.
ClusteringState kmeans_init(const Space& space, const std::vector<Point>& sites, int k);

/// One assign-then-recenter iteration; centers move to the Frechet mean of
/// their cluster, searched from the current center so the objective never
/// increases. Empty clusters are re-seeded at the site farthest from its
/// center. A converged state is returned unchanged.
ClusteringState kmeans_step(const ClusteringState& state, const Space& space, const std::vector<Point>& sites);

struct LinkageStop {
    int count = 1;          // stop when this many clusters remain...
    double height = -1.0;   // ...or, when >= 0, after all merges up to this height
};

/// Single-linkage agglomeration (minimum inter-cluster distance, using
/// max(d(a,b), d(b,a)) so asymmetric metrics give one value per pair).
/// The full dendrogram is kept; `stop` selects the displayed partition.
ClusteringState single_linkage(const Space& space, const std::vector<Point>& sites, LinkageStop stop);

// Partition after applying the first `merges` merges of a dendrogram.
std::vector<int> cut_dendrogram(int n, const std::vector<Merge>& merges, std::size_t applied);

}  // namespace hilbertvd
