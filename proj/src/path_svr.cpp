#include "svr/path_svr.hpp"

#include <algorithm>
#include <string>

#include "svr/visibility.hpp"

namespace svr::paths {

namespace {

const Coord kSide{1, 1};  // 1 + ε

std::vector<int> positions_of(std::span<const Vertex> pi) {
    std::vector<int> pos(pi.size() + 1, 0);
    for (std::size_t k = 0; k < pi.size(); ++k) pos[pi[k]] = static_cast<int>(k) + 1;
    return pos;
}

}  // namespace

Drawing algorithm_a(const PathPair& p, ShapeKind family) {
    const auto pos = p.positions();
    Drawing d{family, std::nullopt, {}};
    if (family == ShapeKind::UnitSquare) d.unit = kSide;
    d.shapes.reserve(static_cast<std::size_t>(p.n));
    for (Vertex v = 1; v <= p.n; ++v) {
        const Coord x{pos[v]}, y{v};
        switch (family) {
        case ShapeKind::UnitSquare: d.shapes.push_back(Shape::unit_square(x, y, kSide)); break;
        case ShapeKind::Rect: d.shapes.push_back(Shape::rect(x, x + kSide, y, y + kSide)); break;
        case ShapeKind::LShape: d.shapes.push_back(Shape::lshape(x, y, kSide, kSide)); break;
        }
    }
    return d;
}

std::optional<Edge> shared_edge(const PathPair& p) {
    for (int k = 0; k + 1 < p.n; ++k) {
        const int diff = p.pi[k] - p.pi[k + 1];
        if (diff == 1 || diff == -1) return Edge(p.pi[k], p.pi[k + 1]);
    }
    return std::nullopt;
}

std::optional<Drawing> decide_square_rect_svr(const PathPair& p, ShapeKind family) {
    if (family == ShapeKind::LShape) throw std::invalid_argument("use decide_lsvr for L-shapes");
    if (shared_edge(p)) return std::nullopt;
    Drawing d = algorithm_a(p, family);
    if (!validate_svr(d, p.graphs()).valid())
        throw std::logic_error("Algorithm A produced an invalid drawing for edge-disjoint paths");
    return d;
}

MonotoneProfile monotone_profile(std::span<const Vertex> pi) {
    const int n = static_cast<int>(pi.size());
    MonotoneProfile m;
    if (n == 0) return m;
    m.a = m.c = 1;
    if (n == 1) return m;
    const auto pos = positions_of(pi);
    m.sIncreasing = pos[1] < pos[2];
    m.a = 2;
    while (m.a < n && (pos[m.a] < pos[m.a + 1]) == m.sIncreasing) ++m.a;
    m.wDecreasing = pi[0] > pi[1];
    m.c = 2;
    while (m.c < n && (pi[m.c - 1] > pi[m.c]) == m.wDecreasing) ++m.c;
    return m;
}

ConditionReport check_condition(std::span<const Vertex> pi) {
    const MonotoneProfile m = monotone_profile(pi);
    const auto pos = positions_of(pi);
    ConditionReport rep;
    for (std::size_t k = 0; k + 1 < pi.size(); ++k) {
        if (pi[k] != pi[k + 1] + 1) continue;
        const Vertex i = pi[k + 1];
        const bool inW = pos[i] <= m.c;
        if (!inW && !m.in_s(i + 1)) rep.violations.push_back(i);
    }
    std::sort(rep.violations.begin(), rep.violations.end());
    rep.holds = rep.violations.empty();
    return rep;
}

std::string_view to_string(Orientation o) {
    switch (o) {
    case Orientation::SW: return "SW";
    case Orientation::SE: return "SE";
    case Orientation::NW: return "NW";
    case Orientation::NE: return "NE";
    }
    return "?";
}

std::array<OrientationVariant, 4> orientation_variants(const PathPair& p) {
    const int n = p.n;
    std::array<OrientationVariant, 4> out;
    for (std::size_t k = 0; k < kOrientations.size(); ++k) {
        const Orientation o = kOrientations[k];
        const bool flipH = o == Orientation::SE || o == Orientation::NE;
        const bool flipV = o == Orientation::NW || o == Orientation::NE;
        OrientationVariant var{o, p.pi, {}};
        if (flipH)
            for (Vertex& v : var.pi) v = n + 1 - v;
        if (flipV) std::reverse(var.pi.begin(), var.pi.end());
        for (Vertex j = 1; j <= n; ++j) var.toPair.push_back(flipH ? n + 1 - j : j);
        out[k] = std::move(var);
    }
    return out;
}

std::vector<Edge> crossings_among(const Drawing& step1, std::span<const Vertex> subset) {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = i + 1; j < subset.size(); ++j)
            if (!shapes_disjoint(step1[subset[i]], step1[subset[j]])) out.emplace_back(subset[i], subset[j]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> crossings_from_permutation(std::span<const Vertex> pi, std::span<const Vertex> subset) {
    std::vector<char> member(pi.size() + 1, 0);
    for (Vertex v : subset) member[v] = 1;
    std::vector<Edge> out;
    for (std::size_t k = 0; k + 1 < pi.size(); ++k)
        if (pi[k] == pi[k + 1] + 1 && member[pi[k]] && member[pi[k + 1]]) out.emplace_back(pi[k], pi[k + 1]);
    std::sort(out.begin(), out.end());
    return out;
}

Drawing lsvr_paths(std::span<const Vertex> pi, StretchTrace* trace) {
    if (!is_permutation_of_n(pi)) throw std::invalid_argument("not a permutation of 1..n");
    if (const auto rep = check_condition(pi); !rep.holds)
        throw PreconditionError("stretching condition fails at i = " + std::to_string(rep.violations.front()));

    const PathPair p = PathPair::from_permutation({pi.begin(), pi.end()});
    const MonotoneProfile m = monotone_profile(pi);
    const Drawing step1 = algorithm_a(p, ShapeKind::LShape);
    Drawing out = step1;
    StretchTrace tr;

    const std::vector<Vertex> w(pi.begin(), pi.begin() + m.c);
    std::vector<Vertex> s;
    for (Vertex v = 1; v <= m.a; ++v) s.push_back(v);

    auto crosses = [&](std::span<const Vertex> subset) {
        const auto geometric = crossings_among(step1, subset);
        if (geometric != crossings_from_permutation(pi, subset))
            throw std::logic_error("crossing detection routes disagree");
        return !geometric.empty();
    };

    if (m.wDecreasing && crosses(w)) {
        tr.leftStep = true;
        for (int i = 1; i <= m.c; ++i) {
            const Vertex v = pi[i - 1];
            out[v] = out[v].with_left(Coord{2 - i});
            tr.stretchedLeft.push_back(v);
        }
    }
    if (!m.sIncreasing && crosses(s)) {
        tr.downStep = true;
        const auto pos = p.positions();
        for (Vertex v : s) {
            if (pos[v] <= m.c) continue;
            tr.stretchedDown.push_back(v);
        }
        // The unstretched part of S is always a prefix 1..a'.
        for (std::size_t k = 0; k < tr.stretchedDown.size(); ++k)
            if (tr.stretchedDown[k] != static_cast<Vertex>(k) + 1)
                throw std::logic_error("S minus W is not an initial segment");
        for (Vertex v : tr.stretchedDown) out[v] = out[v].with_bottom(Coord{2 - v});
    }
    if (trace) *trace = std::move(tr);
    return out;
}

LsvrDecision decide_lsvr(const PathPair& p) {
    LsvrDecision dec;
    const auto variants = orientation_variants(p);
    for (std::size_t k = 0; k < variants.size(); ++k) dec.reports[k] = check_condition(variants[k].pi);
    for (std::size_t k = 0; k < variants.size(); ++k) {
        if (!dec.reports[k].holds) continue;
        const OrientationVariant& var = variants[k];
        StretchTrace tr;
        const Drawing local = lsvr_paths(var.pi, &tr);
        // Vertex v of the pair is vertex fromPair[v-1] of the variant.
        std::vector<Vertex> fromPair(static_cast<std::size_t>(p.n));
        for (Vertex j = 1; j <= p.n; ++j) fromPair[var.toPair[j - 1] - 1] = j;
        dec.orientation = var.tag;
        dec.drawing = local.relabeled(fromPair);
        auto mapBack = [&](std::vector<Vertex>& vs) {
            for (Vertex& v : vs) v = var.toPair[v - 1];
        };
        mapBack(tr.stretchedLeft);
        mapBack(tr.stretchedDown);
        dec.trace = std::move(tr);
        break;
    }
    return dec;
}

}  // namespace svr::paths
