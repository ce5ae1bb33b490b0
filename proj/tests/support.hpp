#pragma once

// Independent reference implementations used as test oracles.

#include <algorithm>
#include <cstdlib>
#include <random>
#include <vector>

#include "svr/drawing.hpp"
#include "svr/graph.hpp"
#include "svr/visibility.hpp"

namespace testing {

using namespace svr;

/// Integer box [x0,x1] x [y0,y1].
struct IBox {
    long x0, x1, y0, y1;
};

/// Replaces base + eps*ε by base*K + eps with K larger than twice every
/// |eps|; this keeps the order of all coordinates, which is all visibility
/// depends on.
inline std::vector<std::vector<IBox>> materialize(std::span<const Shape> shapes) {
    long e = 0;
    for (const Shape& s : shapes)
        for (Coord c : {s.left(), s.right(), s.bottom(), s.top()}) e = std::max(e, static_cast<long>(std::abs(c.eps)));
    const long k = 2 * e + 2;
    auto m = [k](Coord c) { return 2 * (c.base * k + c.eps); };  // doubled, so midpoints stay integral
    std::vector<std::vector<IBox>> out;
    for (const Shape& s : shapes) {
        std::vector<IBox> boxes;
        for (const Box& b : s.parts()) boxes.push_back({m(b.x.lo), m(b.x.hi), m(b.y.lo), m(b.y.hi)});
        out.push_back(boxes);
    }
    return out;
}

/// Visibility by testing every pair on every lattice line: u sees v along
/// the line when the gap between them meets no third shape.
inline EdgeSet reference_visibility(std::span<const Shape> shapes, Axis axis) {
    const auto boxes = materialize(shapes);
    long lo = 0, hi = 0;
    bool first = true;
    for (const auto& bs : boxes)
        for (const IBox& b : bs) {
            const long a = axis == Axis::Vertical ? b.x0 : b.y0, z = axis == Axis::Vertical ? b.x1 : b.y1;
            lo = first ? a : std::min(lo, a);
            hi = first ? z : std::max(hi, z);
            first = false;
        }
    // Stab of shape i on the line at t: hull of the meeting parts (L-shape
    // parts share a corner, so the union is an interval).
    auto stab = [&](std::size_t i, long t, long& s0, long& s1) {
        bool any = false;
        for (const IBox& b : boxes[i]) {
            const bool hit = axis == Axis::Vertical ? (b.x0 <= t && t <= b.x1) : (b.y0 <= t && t <= b.y1);
            if (!hit) continue;
            const long a = axis == Axis::Vertical ? b.y0 : b.x0, z = axis == Axis::Vertical ? b.y1 : b.x1;
            s0 = any ? std::min(s0, a) : a;
            s1 = any ? std::max(s1, z) : z;
            any = true;
        }
        return any;
    };
    EdgeSet edges;
    const std::size_t n = boxes.size();
    for (long t = lo; t <= hi; ++t) {
        std::vector<char> hit(n);
        std::vector<long> s0(n), s1(n);
        for (std::size_t i = 0; i < n; ++i) hit[i] = stab(i, t, s0[i], s1[i]);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) {
                if (u == v || !hit[u] || !hit[v] || !(s1[u] < s0[v])) continue;
                bool clear = true;
                for (std::size_t w = 0; w < n && clear; ++w)
                    if (w != u && w != v && hit[w] && s0[w] <= s0[v] && s1[w] >= s1[u]) clear = false;
                if (clear) edges.insert(Edge(static_cast<Vertex>(u + 1), static_cast<Vertex>(v + 1)));
            }
    }
    return edges;
}

/// Pairwise-disjoint random shapes of one family on a small integer grid,
/// some of them offset by ±ε.
inline Drawing random_drawing(std::mt19937& rng, ShapeKind family, int n, int grid = 8) {
    std::uniform_int_distribution<int> pos(0, grid), len(1, 3), eps(-1, 1);
    Drawing d;
    d.family = family;
    if (family == ShapeKind::UnitSquare) d.unit = Coord{2, 1};
    for (int attempts = 0; d.size() < n && attempts < 10000; ++attempts) {
        const Coord l{pos(rng), eps(rng)}, b{pos(rng), eps(rng)};
        Shape s = Shape::rect(l, l + Coord{len(rng)}, b, b + Coord{len(rng)});
        if (family == ShapeKind::UnitSquare) s = Shape::unit_square(l, b, *d.unit);
        if (family == ShapeKind::LShape) s = Shape::lshape(l, b, Coord{len(rng), eps(rng)}, Coord{len(rng), eps(rng)});
        if (std::all_of(d.shapes.begin(), d.shapes.end(), [&](const Shape& o) { return shapes_disjoint(s, o); }))
            d.shapes.push_back(s);
    }
    return d;
}

/// Uniformly random permutation of 1..n.
inline std::vector<Vertex> random_permutation(std::mt19937& rng, int n) {
    std::vector<Vertex> pi(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pi[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(pi.begin(), pi.end(), rng);
    return pi;
}

}  // namespace testing
