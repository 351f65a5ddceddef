#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hilbertvd/point.hpp"

namespace hilbertvd {

/// Minimal SVG builder in scene coordinates (y up). Layers are <g> groups
/// with an id, so one file can carry e.g. every Voronoi order.
class SvgDocument {
public:
    SvgDocument(Point lo, Point hi, double width_px = 800.0);

    void begin_layer(std::string_view id);
    void end_layer();

    void polygon(const Polygon& ring, std::string_view fill, std::string_view stroke, double opacity = 1.0);
    void polyline(const Polyline& line, std::string_view stroke, double width = 1.0);
    void dot(Point p, std::string_view fill, double radius_px = 3.0);
    void label(Point p, std::string_view text);

    /// The finished document; the generation-time comment is optional so
    /// outputs can be compared byte for byte.
    std::string str(bool timestamp = true) const;

private:
    std::string coords(const Polyline& pts) const;
    double px(double scene_units) const { return scene_units * scale_; }

    Point lo_;
    Point hi_;
    double scale_;
    double width_;
    double height_;
    std::string body_;
    int open_layers_ = 0;
};

// Fill colour for order/cluster i from a fixed categorical palette.
std::string_view palette(int i);

}  // namespace hilbertvd
