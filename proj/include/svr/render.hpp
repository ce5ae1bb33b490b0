#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "svr/drawing.hpp"

namespace svr {

struct RenderConfig {
    /// ε is drawn as epsNum/epsDen; 0 selects 1/(4(E+1)) where E is the
    /// largest |eps| in the drawing. Must stay below 1/(2(E+1)) so that
    /// rendered order matches Coord order.
    std::int64_t epsNum = 0;
    std::int64_t epsDen = 1;
    double scale = 40.0;  // pixels per grid unit
    double margin = 1.0;  // grid units around the bounding box
    bool sightLines = false;
    std::string shapeFill = "#e8e8e8";
    std::string shapeStroke = "#222222";
    std::string verticalColor = "#d62728";
    std::string horizontalColor = "#1f77b4";
};

/// Checks the ε substitute against the drawing; throws std::invalid_argument.
/// Returns the (possibly defaulted) substitute as a double.
double checked_eps_substitute(const Drawing& d, const RenderConfig& cfg);

/// Real-valued position of c under the substitute.
double materialize(Coord c, double eps);

/// SVG 1.1 document. `labels[v-1]` names vertex v when given.
std::string render_svg(const Drawing& d, const RenderConfig& cfg = {},
                       const std::vector<std::string>& labels = {});

}  // namespace svr
