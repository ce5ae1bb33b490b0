#include "svr/render.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

#include "svr/visibility.hpp"

namespace svr {

namespace {

std::int64_t max_abs_eps(const Drawing& d) {
    std::int64_t e = 0;
    for (const Shape& s : d.shapes)
        for (Coord c : {s.left(), s.right(), s.bottom(), s.top()}) e = std::max(e, std::abs(c.eps));
    return e;
}

std::string px(double v) { return fmt::format("{:.3f}", v); }

std::string escaped(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

double materialize(Coord c, double eps) { return static_cast<double>(c.base) + static_cast<double>(c.eps) * eps; }

double checked_eps_substitute(const Drawing& d, const RenderConfig& cfg) {
    const std::int64_t bound = 2 * (max_abs_eps(d) + 1);
    if (cfg.epsNum == 0) return 1.0 / static_cast<double>(2 * bound);
    // 0 < num/den < 1/bound, compared exactly.
    if (cfg.epsDen <= 0 || cfg.epsNum <= 0 || cfg.epsNum * bound >= cfg.epsDen)
        throw std::invalid_argument(fmt::format("eps substitute {}/{} must lie strictly between 0 and 1/{}", cfg.epsNum,
                                                cfg.epsDen, bound));
    return static_cast<double>(cfg.epsNum) / static_cast<double>(cfg.epsDen);
}

std::string render_svg(const Drawing& d, const RenderConfig& cfg, const std::vector<std::string>& labels) {
    const double eps = checked_eps_substitute(d, cfg);
    double minX = 0, maxX = 1, minY = 0, maxY = 1;
    if (!d.shapes.empty()) {
        minX = minY = std::numeric_limits<double>::max();
        maxX = maxY = std::numeric_limits<double>::lowest();
        for (const Shape& s : d.shapes) {
            minX = std::min(minX, materialize(s.left(), eps));
            maxX = std::max(maxX, materialize(s.right(), eps));
            minY = std::min(minY, materialize(s.bottom(), eps));
            maxY = std::max(maxY, materialize(s.top(), eps));
        }
    }
    minX -= cfg.margin, minY -= cfg.margin, maxX += cfg.margin, maxY += cfg.margin;
    const double width = (maxX - minX) * cfg.scale, height = (maxY - minY) * cfg.scale;
    auto X = [&](double x) { return px((x - minX) * cfg.scale); };
    auto Y = [&](double y) { return px((maxY - y) * cfg.scale); };
    const double stroke = std::max(1.0, cfg.scale / 20.0);

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" "
                       "viewBox=\"0 0 {} {}\">\n",
                       px(width), px(height), px(width), px(height));
    out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n", px(width), px(height));

    if (cfg.sightLines) {
        for (Axis axis : {Axis::Vertical, Axis::Horizontal}) {
            const std::string& color = axis == Axis::Vertical ? cfg.verticalColor : cfg.horizontalColor;
            for (const SightLine& s : sight_lines(d.shapes, axis)) {
                const double at = materialize(s.at, eps) / 2, a = materialize(s.from, eps) / 2,
                             b = materialize(s.to, eps) / 2;
                const bool v = axis == Axis::Vertical;
                out += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"{}\" "
                                   "stroke-dasharray=\"4 3\"/>\n",
                                   X(v ? at : a), Y(v ? a : at), X(v ? at : b), Y(v ? b : at), color, px(stroke / 2));
            }
        }
    }

    for (Vertex v = 1; v <= d.size(); ++v) {
        const Shape& s = d[v];
        const double l = materialize(s.left(), eps), r = materialize(s.right(), eps);
        const double b = materialize(s.bottom(), eps), t = materialize(s.top(), eps);
        if (s.kind() == ShapeKind::LShape) {
            out += fmt::format("<polyline points=\"{},{} {},{} {},{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\"/>\n",
                               X(l), Y(t), X(l), Y(b), X(r), Y(b), cfg.shapeStroke, px(stroke));
        } else {
            out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\" stroke=\"{}\" "
                               "stroke-width=\"{}\"/>\n",
                               X(l), Y(t), px((r - l) * cfg.scale), px((t - b) * cfg.scale), cfg.shapeFill,
                               cfg.shapeStroke, px(stroke / 2));
        }
        const std::string name = static_cast<std::size_t>(v) <= labels.size() ? labels[static_cast<std::size_t>(v - 1)]
                                                                                : std::to_string(v);
        out += fmt::format("<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"{}\">{}</text>\n",
                           px((l - minX) * cfg.scale + stroke * 2), px((maxY - b) * cfg.scale - stroke * 2),
                           px(cfg.scale / 3), escaped(name));
    }
    out += "</svg>\n";
    return out;
}

}  // namespace svr
