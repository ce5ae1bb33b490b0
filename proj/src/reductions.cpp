#include "svr/reductions.hpp"

#include <algorithm>
#include <cstdlib>

#include <fmt/format.h>

#include "svr/visibility.hpp"

namespace svr::sat {

std::string_view to_string(ReductionMode m) {
    return m == ReductionMode::NaeUssvr ? "nae-ussvr" : "3sat-rsvr";
}

std::string_view to_string(Role r) {
    switch (r) {
    case Role::Clause: return "clause";
    case Role::Literal: return "literal";
    case Role::NegatedLeaf: return "negated-leaf";
    }
    return "?";
}

namespace {

void check_formula(const Cnf3Instance& f) {
    if (f.nVars < 0) throw std::invalid_argument("negative variable count");
    for (std::size_t i = 0; i < f.clauses.size(); ++i)
        for (Literal l : f.clauses[i])
            if (l == 0 || std::abs(l) > f.nVars)
                throw std::invalid_argument(fmt::format("clause {}: literal {} out of range", i + 1, l));
}

void check_assignment(const Cnf3Instance& f, const Assignment& a) {
    if (a.size() != f.nVars)
        throw std::invalid_argument(fmt::format("assignment has {} values for {} variables", a.size(), f.nVars));
}

void add_path(EdgeSet& edges, const std::vector<Vertex>& path) {
    for (std::size_t k = 0; k + 1 < path.size(); ++k) edges.insert(Edge(path[k], path[k + 1]));
}

void add_gadget_paths(GadgetIndex& idx) {
    add_path(idx.pair.edgesH, idx.clauseGadget);
    for (const auto& [v, path] : idx.varGadget) add_path(idx.pair.edgesH, path);
    for (const auto& [v, path] : idx.negGadget) add_path(idx.pair.edgesH, path);
}

void occurrence(GadgetIndex& idx, Literal l, Vertex v) {
    (l > 0 ? idx.varGadget[l] : idx.negGadget[-l]).push_back(v);
}

Interval hull(const Drawing& d, const std::vector<Vertex>& vs, bool xAxis) {
    Interval h = xAxis ? d[vs.front()].x_projection() : d[vs.front()].y_projection();
    for (Vertex v : vs) {
        const Interval p = xAxis ? d[v].x_projection() : d[v].y_projection();
        h.lo = std::min(h.lo, p.lo);
        h.hi = std::max(h.hi, p.hi);
    }
    return h;
}

/// Strictly above: every point of a exceeds every point of b.
bool above(const Interval& a, const Interval& b) { return b.hi < a.lo; }

void require_valid(const Drawing& d, const GadgetIndex& idx, std::string_view what) {
    if (d.size() != idx.pair.n)
        throw DecodeError(fmt::format("drawing has {} shapes, the pair has {} vertices", d.size(), idx.pair.n));
    VisibilityReport rep;
    try {
        rep = validate_svr(d, idx.pair);
    } catch (const std::invalid_argument& e) {
        throw DecodeError(e.what());
    }
    if (!rep.valid())
        throw DecodeError(fmt::format("drawing is not a valid {} of the pair ({} overlaps, {}/{} vertical "
                                      "missing/extra, {}/{} horizontal missing/extra)",
                                      what, rep.overlaps.size(), rep.missingV.size(), rep.extraV.size(),
                                      rep.missingH.size(), rep.extraH.size()));
}

/// y-extents of every G_H gadget; throws unless they are pairwise ordered.
std::vector<Interval> ordered_gadget_hulls(const Drawing& d, const std::vector<std::vector<Vertex>>& gadgets) {
    std::vector<Interval> hulls;
    for (const auto& g : gadgets) hulls.push_back(hull(d, g, false));
    for (std::size_t i = 0; i < hulls.size(); ++i)
        for (std::size_t j = i + 1; j < hulls.size(); ++j)
            if (!above(hulls[i], hulls[j]) && !above(hulls[j], hulls[i]))
                throw DecodeError("consistency gadgets have interleaved y-projections");
    return hulls;
}

}  // namespace

// ---------------------------------------------------------------------------
// Unit squares from monotone not-all-equal 3SAT

GadgetIndex build_ussvr_instance(const NaeInstance& f) {
    const Cnf3Instance cnf = as_cnf(f);
    check_formula(cnf);
    for (const auto& c : f.clauses)
        for (int v : c)
            if (v < 0) throw std::invalid_argument("NAE instance must be monotone");
    GadgetIndex idx;
    idx.mode = ReductionMode::NaeUssvr;
    idx.formula = cnf;
    const int m = static_cast<int>(f.clauses.size());
    idx.pair.n = 4 * m;
    idx.roles.resize(static_cast<std::size_t>(idx.pair.n));
    for (int i = 0; i < m; ++i) {
        const Vertex c = 4 * i + 1;
        idx.clauseVertex.push_back(c);
        idx.clauseGadget.push_back(c);
        idx.roles[c - 1] = {Role::Clause, i, -1, 0};
        std::array<Vertex, 3> slots{};
        for (int k = 0; k < 3; ++k) {
            const Vertex v = c + 1 + k;
            slots[k] = v;
            idx.roles[v - 1] = {Role::Literal, i, k, f.clauses[i][k]};
            idx.pair.edgesV.insert(Edge(c, v));
            occurrence(idx, f.clauses[i][k], v);
        }
        idx.slotVertex.push_back(slots);
    }
    add_gadget_paths(idx);
    return idx;
}

Drawing build_ussvr_drawing(const NaeInstance& f, const Assignment& a) {
    const GadgetIndex idx = build_ussvr_instance(f);
    check_assignment(idx.formula, a);
    if (auto bad = first_nae_violation(f, a))
        throw AssignmentError(*bad, fmt::format("clause {} has all literals {}", *bad + 1, a[f.clauses[*bad][0]] ? "true" : "false"));

    // rho: false variables 0.., then the clause gadget, then true variables.
    const auto vars = occurring_variables(idx.formula);
    std::map<int, int> rho;
    int next = 0;
    for (int v : vars)
        if (!a[v]) rho[v] = next++;
    const int rhoClause = next++;
    for (int v : vars)
        if (a[v]) rho[v] = next++;

    const Coord unit{1};
    Drawing d{ShapeKind::UnitSquare, unit, {}};
    std::vector<Coord> xs(static_cast<std::size_t>(idx.pair.n)), ys(static_cast<std::size_t>(idx.pair.n));
    for (int i = 0; i < static_cast<int>(f.clauses.size()); ++i) {
        const auto& c = f.clauses[i];
        // The minority value is held by exactly one slot.
        int unique = 0;
        for (int k = 0; k < 3; ++k) {
            const int same = static_cast<int>(a[c[0]] == a[c[k]]) + static_cast<int>(a[c[1]] == a[c[k]]) +
                             static_cast<int>(a[c[2]] == a[c[k]]);
            if (same == 1) {
                unique = k;
                break;
            }
        }
        const Vertex cv = idx.clauseVertex[i];
        xs[cv - 1] = Coord{3 * i + 1};
        ys[cv - 1] = Coord{2 * rhoClause};
        bool leftDone = false;
        for (int k = 0; k < 3; ++k) {
            const Vertex v = idx.slotVertex[i][k];
            if (k == unique) {
                xs[v - 1] = Coord{3 * i + 1};
            } else if (!leftDone) {
                xs[v - 1] = Coord{3 * i, 1};
                leftDone = true;
            } else {
                xs[v - 1] = Coord{3 * i + 2, -1};
            }
            ys[v - 1] = Coord{2 * rho.at(c[k])};
        }
    }
    for (int v = 1; v <= idx.pair.n; ++v) d.shapes.push_back(Shape::unit_square(xs[v - 1], ys[v - 1], unit));
    return d;
}

Assignment decode_ussvr_assignment(const Drawing& d, const GadgetIndex& idx) {
    if (idx.mode != ReductionMode::NaeUssvr) throw DecodeError("gadget index is not a NAE/USSVR instance");
    if (d.family != ShapeKind::UnitSquare) throw DecodeError("USSVR decoding needs a unit-square drawing");
    require_valid(d, idx, "USSVR");
    Assignment a(idx.formula.nVars);
    if (idx.clauseGadget.empty()) return a;

    std::vector<std::vector<Vertex>> gadgets{idx.clauseGadget};
    for (const auto& [v, path] : idx.varGadget) gadgets.push_back(path);
    const auto hulls = ordered_gadget_hulls(d, gadgets);
    std::size_t k = 1;
    for (const auto& [v, path] : idx.varGadget) a.set(v, above(hulls[k++], hulls[0]));

    if (!nae_satisfies(as_nae(idx.formula), a))
        throw std::logic_error("decoded assignment is not NAE-satisfying for a valid drawing");
    return a;
}

// ---------------------------------------------------------------------------
// Rectangles from 3SAT

GadgetIndex build_rsvr_instance(const Cnf3Instance& f) {
    check_formula(f);
    GadgetIndex idx;
    idx.mode = ReductionMode::SatRsvr;
    idx.formula = f;
    const int m = static_cast<int>(f.clauses.size());
    idx.pair.n = 7 * m;
    idx.roles.resize(static_cast<std::size_t>(idx.pair.n));
    for (int i = 0; i < m; ++i) {
        const Vertex c = 7 * i + 1;
        idx.clauseVertex.push_back(c);
        idx.clauseGadget.push_back(c);
        idx.roles[c - 1] = {Role::Clause, i, -1, 0};
        std::array<Vertex, 3> lits{}, leaves{};
        for (int k = 0; k < 3; ++k) {
            const Literal l = f.clauses[i][k];
            lits[k] = c + 1 + 2 * k;
            leaves[k] = c + 2 + 2 * k;
            idx.roles[lits[k] - 1] = {Role::Literal, i, k, l};
            idx.roles[leaves[k] - 1] = {Role::NegatedLeaf, i, k, -l};
            idx.pair.edgesV.insert(Edge(c, lits[k]));
            idx.pair.edgesV.insert(Edge(lits[k], leaves[k]));
            occurrence(idx, l, lits[k]);
            occurrence(idx, -l, leaves[k]);
        }
        idx.slotVertex.push_back(lits);
        idx.leafVertex.push_back(leaves);
    }
    add_gadget_paths(idx);
    return idx;
}

namespace {

/// Slots in left-to-right order: a satisfied centre between two sides such
/// that slots on a common variable keep their order of appearance.
std::array<int, 3> clause_arrangement(const Clause3& c, const Assignment& a, std::size_t clause) {
    for (int centre : {1, 0, 2}) {
        if (!a.literal(c[centre])) continue;
        int s0 = -1, s1 = -1;
        for (int k = 0; k < 3; ++k) {
            if (k == centre) continue;
            (s0 < 0 ? s0 : s1) = k;
        }
        for (const std::array<int, 3> order : {std::array<int, 3>{s0, centre, s1}, std::array<int, 3>{s1, centre, s0}}) {
            bool keeps = true;
            for (int p = 0; p < 3; ++p)
                for (int q = p + 1; q < 3; ++q)
                    if (std::abs(c[order[p]]) == std::abs(c[order[q]]) && order[p] > order[q]) keeps = false;
            if (keeps) return order;
        }
    }
    throw LayoutError(clause, fmt::format("clause {} uses one variable in every slot and its middle literal is "
                                          "false; the gadget layout cannot keep the occurrence order",
                                          clause + 1));
}

}  // namespace

Drawing build_rsvr_drawing(const Cnf3Instance& f, const Assignment& a) {
    const GadgetIndex idx = build_rsvr_instance(f);
    check_assignment(f, a);
    if (auto bad = first_unsatisfied(f, a))
        throw AssignmentError(*bad, fmt::format("clause {} is falsified", *bad + 1));

    const std::size_t n = static_cast<std::size_t>(idx.pair.n);
    std::vector<Interval> xs(n), ys(n);
    auto band = [&](Literal occ) {
        // Occurrences of v sit next to the clause band when v is true.
        const int j = std::abs(occ);
        const bool near = (occ > 0) == a[j];
        const int lo = near ? 4 * j : 4 * j + 2;
        return Interval{Coord{lo}, Coord{lo + 1}};
    };
    for (int i = 0; i < static_cast<int>(f.clauses.size()); ++i) {
        const auto order = clause_arrangement(f.clauses[i], a, static_cast<std::size_t>(i));
        const int o = 7 * i;
        xs[idx.clauseVertex[i] - 1] = {Coord{o + 2}, Coord{o + 5}};
        ys[idx.clauseVertex[i] - 1] = {Coord{0}, Coord{1}};
        const int left = order[0], centre = order[1], right = order[2];
        xs[idx.slotVertex[i][left] - 1] = Interval{Coord{o + 1}, Coord{o + 2}}.shifted(Coord{0, 1});
        xs[idx.leafVertex[i][left] - 1] = Interval{Coord{o}, Coord{o + 1}}.shifted(Coord{0, 2});
        xs[idx.slotVertex[i][centre] - 1] = {Coord{o + 3}, Coord{o + 4}};
        xs[idx.leafVertex[i][centre] - 1] = {Coord{o + 3}, Coord{o + 4}};
        xs[idx.slotVertex[i][right] - 1] = Interval{Coord{o + 5}, Coord{o + 6}}.shifted(Coord{0, -1});
        xs[idx.leafVertex[i][right] - 1] = Interval{Coord{o + 6}, Coord{o + 7}}.shifted(Coord{0, -2});
        for (int k = 0; k < 3; ++k) {
            ys[idx.slotVertex[i][k] - 1] = band(f.clauses[i][k]);
            ys[idx.leafVertex[i][k] - 1] = band(-f.clauses[i][k]);
        }
    }
    Drawing d{ShapeKind::Rect, std::nullopt, {}};
    for (std::size_t v = 0; v < n; ++v) d.shapes.push_back(Shape::rect(xs[v].lo, xs[v].hi, ys[v].lo, ys[v].hi));

    // The ε shifts stay inside each clause's block of width 7.
    for (std::size_t i = 0; i + 1 < f.clauses.size(); ++i) {
        std::vector<Vertex> cur, nxt;
        for (Vertex v = 1; v <= 7; ++v) {
            cur.push_back(static_cast<Vertex>(7 * i) + v);
            nxt.push_back(static_cast<Vertex>(7 * (i + 1)) + v);
        }
        if (!(hull(d, cur, true).hi < hull(d, nxt, true).lo))
            throw std::logic_error(fmt::format("clause blocks {} and {} overlap in x", i + 1, i + 2));
    }
    return d;
}

Assignment decode_rsvr_assignment(const Drawing& d, const GadgetIndex& idx) {
    if (idx.mode != ReductionMode::SatRsvr) throw DecodeError("gadget index is not a 3SAT/RSVR instance");
    if (d.family == ShapeKind::LShape) throw DecodeError("RSVR decoding needs a rectangle drawing");
    require_valid(d, idx, "RSVR");
    Assignment a(idx.formula.nVars);
    if (idx.clauseGadget.empty()) return a;

    std::vector<std::vector<Vertex>> gadgets{idx.clauseGadget};
    std::vector<int> vars;
    for (const auto& [v, path] : idx.varGadget) {
        vars.push_back(v);
        gadgets.push_back(path);
        gadgets.push_back(idx.negGadget.at(v));
    }
    const auto hulls = ordered_gadget_hulls(d, gadgets);
    const Interval& clause = hulls[0];
    for (std::size_t k = 0; k < vars.size(); ++k) {
        const Interval& pos = hulls[1 + 2 * k];
        const Interval& neg = hulls[2 + 2 * k];
        const bool upward = above(neg, pos) && above(pos, clause);
        const bool downward = above(clause, pos) && above(pos, neg);
        a.set(vars[k], upward || downward);
    }
    if (!satisfies(idx.formula, a)) throw std::logic_error("decoded assignment falsifies a clause of a valid drawing");
    return a;
}

}  // namespace svr::sat
