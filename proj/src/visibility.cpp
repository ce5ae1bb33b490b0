#include "svr/visibility.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

namespace svr {

namespace {

struct Stab {
    Interval span;
    Vertex v;
};

bool stab(const Shape& s, Axis axis, Coord at, Interval& out) {
    return axis == Axis::Vertical ? s.stab_vertical(at, out) : s.stab_horizontal(at, out);
}

Interval projection(const Shape& s, Axis axis) {
    return axis == Axis::Vertical ? s.x_projection() : s.y_projection();
}

Coord low_side(const Shape& s, Axis axis) { return axis == Axis::Vertical ? s.bottom() : s.left(); }

std::vector<Stab> stabs_at(std::span<const Shape> shapes, Axis axis, Coord at) {
    std::vector<Stab> out;
    Interval iv;
    for (std::size_t i = 0; i < shapes.size(); ++i)
        if (stab(shapes[i], axis, at, iv)) out.push_back({iv, static_cast<Vertex>(i + 1)});
    std::sort(out.begin(), out.end(), [](const Stab& a, const Stab& b) {
        return a.span.lo != b.span.lo ? a.span.lo < b.span.lo : a.v < b.v;
    });
    return out;
}

bool in_union(const std::vector<Interval>& ivs, Coord c) {
    return std::any_of(ivs.begin(), ivs.end(), [c](const Interval& iv) { return iv.contains(c); });
}

}  // namespace

OverlapError::OverlapError(Vertex a, Vertex b)
    : std::runtime_error("shapes of vertices " + std::to_string(a) + " and " + std::to_string(b) + " intersect"),
      pair(a, b) {}

std::vector<Edge> overlapping_pairs(std::span<const Shape> shapes) {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < shapes.size(); ++i)
        for (std::size_t j = i + 1; j < shapes.size(); ++j)
            if (!shapes_disjoint(shapes[i], shapes[j]))
                out.emplace_back(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1));
    return out;
}

std::vector<Coord> sample_lines(std::span<const Shape> shapes, Axis axis) {
    std::vector<Coord> ends;
    ends.reserve(shapes.size() * 2);
    for (const Shape& s : shapes) {
        const Interval p = projection(s, axis);
        ends.push_back(p.lo.scaled(2));
        ends.push_back(p.hi.scaled(2));
    }
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    std::vector<Coord> samples;
    samples.reserve(ends.size() * 2);
    for (std::size_t i = 0; i < ends.size(); ++i) {
        samples.push_back(ends[i]);
        // Both ends are even in each component, so the midpoint is exact.
        if (i + 1 < ends.size()) samples.push_back(Coord{(ends[i].base + ends[i + 1].base) / 2,
                                                         (ends[i].eps + ends[i + 1].eps) / 2});
    }
    return samples;
}

EdgeSet visibility_edges_at(std::span<const Shape> shapes, Axis axis, std::span<const Coord> doubledSamples) {
    std::vector<Shape> doubled;
    doubled.reserve(shapes.size());
    for (const Shape& s : shapes) doubled.push_back(s.scaled(2));
    EdgeSet edges;
    for (Coord at : doubledSamples) {
        const auto st = stabs_at(doubled, axis, at);
        for (std::size_t i = 0; i + 1 < st.size(); ++i) edges.insert(Edge(st[i].v, st[i + 1].v));
    }
    return edges;
}

EdgeSet visibility_edges(std::span<const Shape> shapes, Axis axis) {
    return visibility_edges_at(shapes, axis, sample_lines(shapes, axis));
}

std::vector<SightLine> sight_lines(std::span<const Shape> shapes, Axis axis) {
    std::vector<Shape> doubled;
    doubled.reserve(shapes.size());
    for (const Shape& s : shapes) doubled.push_back(s.scaled(2));
    const std::vector<Coord> samples = sample_lines(shapes, axis);
    std::map<Edge, SightLine> found;
    // Odd indices are the midpoints between consecutive endpoints.
    for (std::size_t pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 1 - pass; k < samples.size(); k += 2) {
            const auto st = stabs_at(doubled, axis, samples[k]);
            for (std::size_t i = 0; i + 1 < st.size(); ++i) {
                const Edge e(st[i].v, st[i + 1].v);
                if (!found.count(e)) found.emplace(e, SightLine{e, samples[k], st[i].span.hi, st[i + 1].span.lo});
            }
        }
    }
    std::vector<SightLine> out;
    for (auto& [e, line] : found) out.push_back(line);
    return out;
}

EdgeSet vertical_visibility_graph(const Drawing& d) {
    if (auto ov = overlapping_pairs(d.shapes); !ov.empty()) throw OverlapError(ov.front().u, ov.front().v);
    return visibility_edges(d.shapes, Axis::Vertical);
}

EdgeSet horizontal_visibility_graph(const Drawing& d) {
    if (auto ov = overlapping_pairs(d.shapes); !ov.empty()) throw OverlapError(ov.front().u, ov.front().v);
    return visibility_edges(d.shapes, Axis::Horizontal);
}

VisibilityReport validate_svr(const Drawing& d, const GraphPair& g) {
    if (d.size() != g.n)
        throw std::invalid_argument("drawing has " + std::to_string(d.size()) + " shapes but the pair has " +
                                    std::to_string(g.n) + " vertices");
    d.check();
    VisibilityReport rep;
    rep.overlaps = overlapping_pairs(d.shapes);
    rep.verticalEdges = visibility_edges(d.shapes, Axis::Vertical);
    rep.horizontalEdges = visibility_edges(d.shapes, Axis::Horizontal);
    auto diff = [](const EdgeSet& a, const EdgeSet& b) {
        EdgeSet out;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
        return out;
    };
    rep.missingV = diff(g.edgesV, rep.verticalEdges);
    rep.extraV = diff(rep.verticalEdges, g.edgesV);
    rep.missingH = diff(g.edgesH, rep.horizontalEdges);
    rep.extraH = diff(rep.horizontalEdges, g.edgesH);
    return rep;
}

std::vector<Vertex> check_thin_overlap(const Drawing& d, std::span<const Vertex> s1, std::span<const Vertex> s2,
                                       Coord at, Axis axis) {
    const bool xAxis = axis == Axis::Vertical;
    if (!in_union(projection_union(d, s1, xAxis), at) || !in_union(projection_union(d, s2, xAxis), at))
        throw std::invalid_argument("line at " + at.str() + " misses the projection of one of the sets");
    const auto st = stabs_at(d.shapes, axis, at);
    auto member = [](std::span<const Vertex> s, Vertex v) { return std::find(s.begin(), s.end(), v) != s.end(); };
    std::size_t bestI = 0, bestJ = 0, bestLen = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < st.size(); ++i) {
        if (!member(s1, st[i].v)) continue;
        for (std::size_t j = 0; j < st.size(); ++j) {
            if (!member(s2, st[j].v)) continue;
            const std::size_t len = i < j ? j - i : i - j;
            if (len < bestLen) bestLen = len, bestI = i, bestJ = j;
        }
    }
    std::vector<Vertex> path;
    if (bestI <= bestJ) {
        for (std::size_t k = bestI; k <= bestJ; ++k) path.push_back(st[k].v);
    } else {
        for (std::size_t k = bestI + 1; k-- > bestJ;) path.push_back(st[k].v);
    }
    return path;
}

int check_nestedness(const Drawing& d, int n, const EdgeSet& edges, Vertex u, Axis axis) {
    const auto adj = adjacency(n, edges);
    const auto parts = components(n, edges, {u});
    const Interval pu = projection(d[u], axis);
    int hanging = 0;
    int count = 0;
    for (const auto& comp : parts) {
        const bool attached = std::any_of(comp.begin(), comp.end(), [&](Vertex v) {
            return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
        });
        if (!attached) continue;
        ++hanging;
        const bool nested = std::all_of(comp.begin(), comp.end(),
                                        [&](Vertex v) { return pu.contains(projection(d[v], axis)); });
        if (!nested) ++count;
    }
    if (hanging < 2) throw std::invalid_argument("vertex " + std::to_string(u) + " is not a cut vertex");
    return count;
}

bool check_no_twist(const Drawing& d, int n, const EdgeSet& edges, Axis axis) {
    std::vector<Interval> hull;
    for (const auto& comp : components(n, edges)) {
        Interval h = projection(d[comp.front()], axis);
        for (Vertex v : comp) {
            const Interval p = projection(d[v], axis);
            h.lo = std::min(h.lo, p.lo);
            h.hi = std::max(h.hi, p.hi);
        }
        hull.push_back(h);
    }
    for (std::size_t i = 0; i < hull.size(); ++i)
        for (std::size_t j = i + 1; j < hull.size(); ++j)
            if (!(hull[i].hi < hull[j].lo) && !(hull[j].hi < hull[i].lo)) return false;
    return true;
}

std::optional<CycleWitness> find_cycle_premise(const Drawing& d, Axis axis) {
    const int n = d.size();
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = 1; v <= n; ++v) {
            if (v == u) continue;
            const Interval pu = projection(d[u], axis), pv = projection(d[v], axis);
            if (!pu.intersects(pv)) continue;
            const Interval common{std::max(pu.lo, pv.lo), std::min(pu.hi, pv.hi)};
            for (Vertex w = 1; w <= n; ++w) {
                if (w == u || w == v) continue;
                if (!(low_side(d[u], axis) < low_side(d[w], axis) && low_side(d[w], axis) < low_side(d[v], axis)))
                    continue;
                const Interval pw = projection(d[w], axis);
                for (Coord e : {pw.lo, pw.hi})
                    if (common.lo < e && e < common.hi) return CycleWitness{u, v, w};
            }
        }
    }
    return std::nullopt;
}

}  // namespace svr
