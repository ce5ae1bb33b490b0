#pragma once

#include <optional>
#include <vector>

#include "svr/graph.hpp"
#include "svr/shape.hpp"

namespace svr {

/// Total map vertex -> shape; vertex v lives at shapes[v-1].
struct Drawing {
    ShapeKind family = ShapeKind::Rect;
    /// Common side of every square when family is UnitSquare.
    std::optional<Coord> unit;
    std::vector<Shape> shapes;

    int size() const { return static_cast<int>(shapes.size()); }
    const Shape& operator[](Vertex v) const { return shapes.at(static_cast<std::size_t>(v - 1)); }
    Shape& operator[](Vertex v) { return shapes.at(static_cast<std::size_t>(v - 1)); }

    /// Throws std::invalid_argument when a shape does not belong to the
    /// family or a unit square's side differs from `unit`.
    void check() const;

    /// Vertices renumbered: vertex v of the result is vertex map[v-1] here.
    Drawing relabeled(std::span<const Vertex> map) const;

    bool operator==(const Drawing&) const = default;
};

/// Union of the x (or y) projections of a vertex set.
std::vector<Interval> projection_union(const Drawing& d, std::span<const Vertex> vs, bool xAxis);

}  // namespace svr
