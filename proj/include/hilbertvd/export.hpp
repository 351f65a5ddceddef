#pragma once

#include <vector>

#include "hilbertvd/balls.hpp"
#include "hilbertvd/circumcenter.hpp"
#include "hilbertvd/korder.hpp"
#include "hilbertvd/mosaic.hpp"
#include "hilbertvd/scene.hpp"

namespace hilbertvd {

// JSON views of engine results. Points are [x, y] pairs; site sets are
// sorted index arrays.

Json to_json(Point p);
Json to_json(const std::vector<Point>& pts);
Json to_json(SiteSet s);
Json to_json(const MetricBall& b);
Json to_json(const Bisector& b);
Json to_json(const CircumcenterEvent& e);
Json to_json(const LabeledBisector& b);
Json to_json(const CellRegion& cell);
Json to_json(const OrderDiagram& d);
Json to_json(const VoronoiDiagnostics& d);
Json to_json(const RasterReport& r);
Json to_json(const FrechetMean& m);
Json to_json(const Mosaic& m);

}  // namespace hilbertvd
