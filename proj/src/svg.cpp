#include "hilbertvd/svg.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <ctime>
#include <fmt/chrono.h>
#include <fmt/format.h>

namespace hilbertvd {

namespace {

constexpr double kMargin = 10.0;

std::string escape(std::string_view text) {
    std::string out;
    for (const char c : text) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string_view palette(int i) {
    static constexpr std::array<std::string_view, 10> colors{
        "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
        "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac",
    };
    return colors[static_cast<std::size_t>(std::max(i, 0)) % colors.size()];
}

SvgDocument::SvgDocument(Point lo, Point hi, double width_px) : lo_(lo), hi_(hi), width_(width_px) {
    const double w = std::max(hi.x - lo.x, 1e-12);
    const double h = std::max(hi.y - lo.y, 1e-12);
    scale_ = (width_px - 2.0 * kMargin) / w;
    height_ = h * scale_ + 2.0 * kMargin;
}

std::string SvgDocument::coords(const Polyline& pts) const {
    std::string out;
    for (const Point& p : pts) {
        if (!out.empty()) out += ' ';
        out += fmt::format("{:.3f},{:.3f}", kMargin + px(p.x - lo_.x), kMargin + px(hi_.y - p.y));
    }
    return out;
}

void SvgDocument::begin_layer(std::string_view id) {
    body_ += fmt::format("<g id=\"{}\">\n", escape(id));
    ++open_layers_;
}

void SvgDocument::end_layer() {
    if (open_layers_ == 0) return;
    body_ += "</g>\n";
    --open_layers_;
}

void SvgDocument::polygon(const Polygon& ring, std::string_view fill, std::string_view stroke, double opacity) {
    if (ring.size() < 3) return;
    body_ += fmt::format("<polygon points=\"{}\" fill=\"{}\" fill-opacity=\"{:.2f}\" stroke=\"{}\"/>\n",
                         coords(ring), fill, opacity, stroke);
}

void SvgDocument::polyline(const Polyline& line, std::string_view stroke, double width) {
    if (line.size() < 2) return;
    body_ += fmt::format("<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{:.2f}\"/>\n",
                         coords(line), stroke, width);
}

void SvgDocument::dot(Point p, std::string_view fill, double radius_px) {
    body_ += fmt::format("<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"{:.2f}\" fill=\"{}\"/>\n", kMargin + px(p.x - lo_.x),
                         kMargin + px(hi_.y - p.y), radius_px, fill);
}

void SvgDocument::label(Point p, std::string_view text) {
    body_ += fmt::format("<text x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"12\">{}</text>\n",
                         kMargin + px(p.x - lo_.x) + 4.0, kMargin + px(hi_.y - p.y) - 4.0, escape(text));
}

std::string SvgDocument::str(bool timestamp) const {
    std::string out = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" viewBox=\"0 0 {:.3f} {:.3f}\">\n",
        width_, height_, width_, height_);
    if (timestamp) {
        const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        out += fmt::format("<!-- generated {:%Y-%m-%dT%H:%M:%SZ} -->\n", fmt::gmtime(now));
    }
    out += body_;
    for (int i = 0; i < open_layers_; ++i) out += "</g>\n";
    out += "</svg>\n";
    return out;
}

}  // namespace hilbertvd
