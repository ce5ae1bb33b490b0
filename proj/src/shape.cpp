#include "svr/shape.hpp"

#include <stdexcept>
#include <string>

namespace svr {

std::string_view to_string(ShapeKind k) {
    switch (k) {
    case ShapeKind::Rect: return "rect";
    case ShapeKind::UnitSquare: return "usq";
    case ShapeKind::LShape: return "lshape";
    }
    return "?";
}

ShapeKind shape_kind_from_string(std::string_view s) {
    if (s == "rect") return ShapeKind::Rect;
    if (s == "usq") return ShapeKind::UnitSquare;
    if (s == "lshape") return ShapeKind::LShape;
    throw std::invalid_argument("unknown shape kind '" + std::string(s) + "'");
}

Shape Shape::rect(Coord l, Coord r, Coord b, Coord t) {
    if (!(l < r) || !(b < t)) throw std::invalid_argument("rectangle needs l < r and b < t");
    return Shape(ShapeKind::Rect, l, r, b, t);
}

Shape Shape::unit_square(Coord l, Coord b, Coord side) {
    if (!side.positive()) throw std::invalid_argument("square side must be positive");
    return Shape(ShapeKind::UnitSquare, l, l + side, b, b + side);
}

Shape Shape::lshape(Coord l, Coord b, Coord w, Coord h) {
    if (!w.positive() || !h.positive()) throw std::invalid_argument("L-shape needs w > 0 and h > 0");
    return Shape(ShapeKind::LShape, l, l + w, b, b + h);
}

std::vector<Box> Shape::parts() const {
    if (kind_ != ShapeKind::LShape) return {Box{{l_, r_}, {b_, t_}}};
    return {Box{{l_, r_}, {b_, b_}}, Box{{l_, l_}, {b_, t_}}};
}

bool Shape::stab_vertical(Coord x, Interval& out) const {
    if (x < l_ || r_ < x) return false;
    if (kind_ == ShapeKind::LShape && x != l_) {
        out = {b_, b_};
    } else {
        out = {b_, t_};
    }
    return true;
}

bool Shape::stab_horizontal(Coord y, Interval& out) const {
    if (y < b_ || t_ < y) return false;
    if (kind_ == ShapeKind::LShape && y != b_) {
        out = {l_, l_};
    } else {
        out = {l_, r_};
    }
    return true;
}

Shape Shape::translated(Coord dx, Coord dy) const {
    return Shape(kind_, l_ + dx, r_ + dx, b_ + dy, t_ + dy);
}

Shape Shape::scaled(std::int64_t k) const {
    if (k <= 0) throw std::invalid_argument("scale factor must be positive");
    return Shape(kind_, l_.scaled(k), r_.scaled(k), b_.scaled(k), t_.scaled(k));
}

Shape Shape::with_left(Coord l) const {
    if (kind_ != ShapeKind::LShape) throw std::logic_error("only L-shapes are stretched");
    return lshape(l, b_, r_ - l, t_ - b_);
}

Shape Shape::with_bottom(Coord b) const {
    if (kind_ != ShapeKind::LShape) throw std::logic_error("only L-shapes are stretched");
    return lshape(l_, b, r_ - l_, t_ - b);
}

bool shapes_disjoint(const Shape& a, const Shape& b) {
    for (const Box& pa : a.parts())
        for (const Box& pb : b.parts())
            if (pa.intersects(pb)) return false;
    return true;
}

}  // namespace svr
