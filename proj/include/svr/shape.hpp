#pragma once

#include <string_view>
#include <vector>

#include "svr/coord.hpp"

namespace svr {

enum class ShapeKind { Rect, UnitSquare, LShape };

std::string_view to_string(ShapeKind k);
ShapeKind shape_kind_from_string(std::string_view s);

/// Closed axis-aligned box; segments are boxes with one zero extent.
struct Box {
    Interval x;
    Interval y;
    constexpr bool intersects(const Box& o) const { return x.intersects(o.x) && y.intersects(o.y); }
};

/// A vertex shape. Rectangles and unit squares are solid closed boxes.
/// L-shapes are fixed to the ⌞ orientation: a horizontal bar
/// [l, l+w] x {b} and a vertical bar {l} x [b, b+h] sharing the corner.
class Shape {
public:
    static Shape rect(Coord l, Coord r, Coord b, Coord t);
    /// Square with bottom-left corner (l, b) and the given side.
    static Shape unit_square(Coord l, Coord b, Coord side);
    static Shape lshape(Coord l, Coord b, Coord w, Coord h);

    ShapeKind kind() const { return kind_; }

    // Bounding values; for an L-shape r = l + w and t = b + h.
    Coord left() const { return l_; }
    Coord right() const { return r_; }
    Coord bottom() const { return b_; }
    Coord top() const { return t_; }
    Coord width() const { return r_ - l_; }
    Coord height() const { return t_ - b_; }

    Interval x_projection() const { return {l_, r_}; }
    Interval y_projection() const { return {b_, t_}; }

    /// Constituent closed boxes: one for solid shapes, two segments for an L.
    std::vector<Box> parts() const;

    /// Intersection of the shape with the vertical line at `x`, if any.
    bool stab_vertical(Coord x, Interval& out) const;
    /// Intersection of the shape with the horizontal line at `y`, if any.
    bool stab_horizontal(Coord y, Interval& out) const;

    Shape translated(Coord dx, Coord dy) const;
    /// Same shape with every coordinate multiplied by k > 0.
    Shape scaled(std::int64_t k) const;

    // L-shape stretching: move the left end (or bottom end) keeping the
    // opposite end fixed.
    Shape with_left(Coord l) const;
    Shape with_bottom(Coord b) const;

    bool operator==(const Shape&) const = default;

private:
    Shape(ShapeKind k, Coord l, Coord r, Coord b, Coord t) : kind_(k), l_(l), r_(r), b_(b), t_(t) {}

    ShapeKind kind_;
    Coord l_, r_, b_, t_;
};

bool shapes_disjoint(const Shape& a, const Shape& b);

}  // namespace svr
