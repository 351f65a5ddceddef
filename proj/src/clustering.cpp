#include "hilbertvd/clustering.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "hilbertvd/error.hpp"
#include "hilbertvd/mosaic.hpp"

namespace hilbertvd {

std::string_view to_string(ClusterMethod method) {
    return method == ClusterMethod::KMeans ? "kmeans" : "slink";
}

ClusterMethod parse_cluster_method(std::string_view name) {
    if (name == "kmeans") return ClusterMethod::KMeans;
    if (name == "slink" || name == "single_linkage") return ClusterMethod::SingleLinkage;
    fail(ErrorKind::InvalidArgument, "unknown clustering method '" + std::string(name) + "'");
}

int ClusteringState::clusters() const {
    int c = 0;
    for (int a : assignments) c = std::max(c, a + 1);
    return c;
}

namespace {

std::vector<int> assign(const Space& space, const std::vector<Point>& sites, const std::vector<Point>& centers,
                        double* objective) {
    std::vector<int> out(sites.size(), 0);
    double total = 0.0;
    for (std::size_t i = 0; i < sites.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < centers.size(); ++c) {
            const double d = space.distance_interior(sites[i], centers[c]);
            if (d < best) {
                best = d;
                out[i] = static_cast<int>(c);
            }
        }
        total += best;
    }
    if (objective) *objective = total;
    return out;
}

double objective_of(const Space& space, const std::vector<Point>& sites, const std::vector<Point>& centers,
                    const std::vector<int>& assignments) {
    double total = 0.0;
    for (std::size_t i = 0; i < sites.size(); ++i) {
        total += space.distance_interior(sites[i], centers[assignments[i]]);
    }
    return total;
}

}  // namespace

ClusteringState kmeans_init(const Space& space, const std::vector<Point>& sites, int k) {
    if (sites.empty()) fail(ErrorKind::EmptyInput, "clustering needs at least one site");
    if (k < 1 || k > static_cast<int>(sites.size())) {
        fail(ErrorKind::InvalidArgument, "k must be in 1..n");
    }
    const FrechetMean all = frechet_mean(space, sites);
    std::size_t first = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < sites.size(); ++i) {
        const double d = space.distance_interior(sites[i], all.point);
        if (d < best) {
            best = d;
            first = i;
        }
    }
    ClusteringState st;
    st.method = ClusterMethod::KMeans;
    st.centers.push_back(sites[first]);
    std::vector<double> nearest(sites.size(), std::numeric_limits<double>::infinity());
    while (static_cast<int>(st.centers.size()) < k) {
        std::size_t far = 0;
        double far_d = -1.0;
        for (std::size_t i = 0; i < sites.size(); ++i) {
            nearest[i] = std::min(nearest[i], space.distance_interior(sites[i], st.centers.back()));
            if (nearest[i] > far_d) {
                far_d = nearest[i];
                far = i;
            }
        }
        st.centers.push_back(sites[far]);
    }
    st.assignments = assign(space, sites, st.centers, &st.objective);
    return st;
}

constexpr double kConvergedGain = 1e-6;

ClusteringState kmeans_step(const ClusteringState& state, const Space& space, const std::vector<Point>& sites) {
    if (state.method != ClusterMethod::KMeans) fail(ErrorKind::InvalidArgument, "state is not k-means");
    if (state.converged) return state;

    ClusteringState next = state;
    next.assignments = assign(space, sites, state.centers, nullptr);
    const std::size_t k = next.centers.size();
    for (std::size_t c = 0; c < k; ++c) {
        std::vector<Point> members;
        for (std::size_t i = 0; i < sites.size(); ++i) {
            if (next.assignments[i] == static_cast<int>(c)) members.push_back(sites[i]);
        }
        if (members.empty()) {
            std::size_t far = 0;
            double far_d = -1.0;
            for (std::size_t i = 0; i < sites.size(); ++i) {
                const double d = space.distance_interior(sites[i], next.centers[next.assignments[i]]);
                if (d > far_d) {
                    far_d = d;
                    far = i;
                }
            }
            next.centers[c] = sites[far];
            continue;
        }
        FrechetOptions opt;
        opt.start = state.centers[c];
        const FrechetMean m = frechet_mean(space, members, opt);
        // Keep the old center unless the search strictly improved on it.
        if (m.objective < frechet_objective(space, members, state.centers[c])) next.centers[c] = m.point;
    }
    next.objective = objective_of(space, sites, next.centers, next.assignments);
    // Stable assignments and a negligible gain mean the Fréchet searches are
    // only polishing centers within their own tolerance.
    const double gain = state.objective - next.objective;
    if (next.assignments == state.assignments && gain <= kConvergedGain * std::max(1.0, state.objective)) {
        ClusteringState same = state;
        same.converged = true;
        return same;
    }
    ++next.step;
    return next;
}

std::vector<int> cut_dendrogram(int n, const std::vector<Merge>& merges, std::size_t applied) {
    std::vector<int> parent(2 * n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < applied && i < merges.size(); ++i) {
        const int id = n + static_cast<int>(i);
        parent[find(merges[i].a)] = id;
        parent[find(merges[i].b)] = id;
    }
    std::vector<int> out(n);
    std::vector<int> compact(2 * n, -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
        const int r = find(i);
        if (compact[r] < 0) compact[r] = next++;
        out[i] = compact[r];
    }
    return out;
}

ClusteringState single_linkage(const Space& space, const std::vector<Point>& sites, LinkageStop stop) {
    const int n = static_cast<int>(sites.size());
    if (n < 1) fail(ErrorKind::EmptyInput, "clustering needs at least one site");
    if (stop.height < 0.0 && (stop.count < 1 || stop.count > n)) {
        fail(ErrorKind::InvalidArgument, "cluster count must be in 1..n");
    }
    auto link = [&](int a, int b) {
        return std::max(space.distance_interior(sites[a], sites[b]), space.distance_interior(sites[b], sites[a]));
    };

    // Prim's minimum spanning tree; its edges in weight order are the
    // single-linkage merges.
    struct Edge {
        int a, b;
        double w;
    };
    std::vector<Edge> tree;
    std::vector<bool> in_tree(n, false);
    std::vector<double> best(n, std::numeric_limits<double>::infinity());
    std::vector<int> from(n, -1);
    int current = 0;
    in_tree[0] = true;
    for (int added = 1; added < n; ++added) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (in_tree[v]) continue;
            const double d = link(current, v);
            if (d < best[v]) {
                best[v] = d;
                from[v] = current;
            }
            if (pick < 0 || best[v] < best[pick]) pick = v;
        }
        in_tree[pick] = true;
        tree.push_back({from[pick], pick, best[pick]});
        current = pick;
    }
    std::stable_sort(tree.begin(), tree.end(), [](const Edge& x, const Edge& y) { return x.w < y.w; });

    ClusteringState st;
    st.method = ClusterMethod::SingleLinkage;
    std::vector<int> parent(2 * n);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<int> size(2 * n, 1);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Edge& e : tree) {
        const int ra = find(e.a);
        const int rb = find(e.b);
        const int id = n + static_cast<int>(st.merges.size());
        parent[ra] = parent[rb] = id;
        size[id] = size[ra] + size[rb];
        st.merges.push_back({std::min(ra, rb), std::max(ra, rb), e.w, size[id]});
    }

    std::size_t applied = 0;
    if (stop.height >= 0.0) {
        while (applied < st.merges.size() && st.merges[applied].height <= stop.height) ++applied;
    } else {
        applied = static_cast<std::size_t>(n - stop.count);
    }
    st.assignments = cut_dendrogram(n, st.merges, applied);
    st.step = static_cast<int>(applied);
    st.converged = true;
    return st;
}

}  // namespace hilbertvd
