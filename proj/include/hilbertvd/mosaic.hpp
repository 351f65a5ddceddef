#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hilbertvd/korder.hpp"
#include "hilbertvd/metric.hpp"

namespace hilbertvd {

struct FrechetMean {
    Point point;
    double objective = 0.0;  // sum of distance(p_i, point)
    int iterations = 0;
    bool converged = false;
    bool clamped = false;  // constrained to a cell because the free minimizer fell outside it
};

struct FrechetOptions {
    std::optional<Point> start;  // default: Euclidean centroid of the points
    const std::vector<CellRegion>* cell = nullptr;
};

double frechet_objective(const Space& space, const std::vector<Point>& points, Point x);

/// Local minimizer of the sum of distances by compass pattern search: eight
/// directions, step halved whenever no direction improves, iterates kept at
/// least the boundary tolerance inside the domain. The compass is rotated
/// after every halving so creases along spokes cannot trap it. Two distinct
/// points return their midpoint. With `cell` set, a minimizer outside the
/// cell is replaced by the best point found inside it. Throws EmptyInput.
FrechetMean frechet_mean(const Space& space, const std::vector<Point>& points,
                         const FrechetOptions& options = {});

struct MosaicNode {
    SiteSet cell;
    FrechetMean mean;
};

struct Mosaic {
    int k = 1;
    std::vector<MosaicNode> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // indices into nodes
};

/// One node per cell at the Frechet mean of its k sites; one edge per pair
/// of cells sharing a labeled portion.
Mosaic delaunay_mosaic(const Space& space, const std::vector<Point>& sites, const OrderDiagram& diagram);

}  // namespace hilbertvd
