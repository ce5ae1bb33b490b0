#include "svr/drawing.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace svr {

void Drawing::check() const {
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        const Shape& s = shapes[i];
        const std::string who = "vertex " + std::to_string(i + 1);
        if (s.kind() != family)
            throw std::invalid_argument(who + " is a " + std::string(to_string(s.kind())) + " in a " +
                                        std::string(to_string(family)) + " drawing");
        if (family == ShapeKind::UnitSquare) {
            if (!unit) throw std::invalid_argument("unit-square drawing without a unit side");
            if (s.width() != *unit || s.height() != *unit)
                throw std::invalid_argument(who + " is not a square of side " + unit->str());
        }
    }
}

Drawing Drawing::relabeled(std::span<const Vertex> map) const {
    if (map.size() != shapes.size()) throw std::invalid_argument("relabel map has wrong size");
    Drawing out{family, unit, {}};
    out.shapes.reserve(shapes.size());
    for (Vertex v : map) out.shapes.push_back((*this)[v]);
    return out;
}

std::vector<Interval> projection_union(const Drawing& d, std::span<const Vertex> vs, bool xAxis) {
    std::vector<Interval> ivs;
    for (Vertex v : vs) ivs.push_back(xAxis ? d[v].x_projection() : d[v].y_projection());
    std::sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> merged;
    for (const Interval& iv : ivs) {
        if (!merged.empty() && iv.lo <= merged.back().hi) {
            merged.back().hi = std::max(merged.back().hi, iv.hi);
        } else {
            merged.push_back(iv);
        }
    }
    return merged;
}

}  // namespace svr
