#include "svr/json_io.hpp"

#include <fmt/format.h>

namespace svr::io {

namespace {

template <class F>
auto guarded(std::string_view what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw FormatError(fmt::format("{}: {}", what, e.what()));
    } catch (const std::invalid_argument& e) {
        throw FormatError(fmt::format("{}: {}", what, e.what()));
    }
}

Coord field(const json& coords, const char* key) {
    if (!coords.contains(key)) throw FormatError(fmt::format("shape coords lack '{}'", key));
    return coord_from_json(coords.at(key));
}

json vertex_list(const std::vector<Vertex>& vs) { return json(vs); }

json label_list(const std::vector<Vertex>& vs, const PathPair& p) {
    json out = json::array();
    for (Vertex v : vs) out.push_back(p.labels.at(static_cast<std::size_t>(v - 1)));
    return out;
}

}  // namespace

json to_json(Coord c) { return json::array({c.base, c.eps}); }

Coord coord_from_json(const json& j) {
    if (j.is_number_integer()) return Coord{j.get<std::int64_t>()};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw FormatError(fmt::format("coordinate must be [base, eps], got {}", j.dump()));
    return Coord{j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

json to_json(const Shape& s) {
    json coords;
    coords["l"] = to_json(s.left());
    coords["b"] = to_json(s.bottom());
    if (s.kind() == ShapeKind::LShape) {
        coords["w"] = to_json(s.width());
        coords["h"] = to_json(s.height());
    } else {
        coords["r"] = to_json(s.right());
        coords["t"] = to_json(s.top());
    }
    return json{{"kind", std::string(to_string(s.kind()))}, {"coords", coords}};
}

Shape shape_from_json(const json& j) {
    return guarded("shape", [&] {
        const ShapeKind k = shape_kind_from_string(j.at("kind").get<std::string>());
        const json& c = j.at("coords");
        if (k == ShapeKind::LShape) return Shape::lshape(field(c, "l"), field(c, "b"), field(c, "w"), field(c, "h"));
        const Coord l = field(c, "l"), r = field(c, "r"), b = field(c, "b"), t = field(c, "t");
        if (k == ShapeKind::Rect) return Shape::rect(l, r, b, t);
        if (r - l != t - b) throw FormatError("unit square with unequal sides");
        return Shape::unit_square(l, b, r - l);
    });
}

json to_json(const Drawing& d) {
    json shapes = json::array();
    for (Vertex v = 1; v <= d.size(); ++v) {
        json s = to_json(d[v]);
        s["vertex"] = v;
        shapes.push_back(std::move(s));
    }
    json out{{"family", std::string(to_string(d.family))}, {"n", d.size()}, {"shapes", shapes}};
    if (d.unit) out["unit"] = to_json(*d.unit);
    return out;
}

Drawing drawing_from_json(const json& j) {
    return guarded("drawing", [&] {
        Drawing d;
        d.family = shape_kind_from_string(j.at("family").get<std::string>());
        if (j.contains("unit")) d.unit = coord_from_json(j.at("unit"));
        const json& shapes = j.at("shapes");
        const int n = j.contains("n") ? j.at("n").get<int>() : static_cast<int>(shapes.size());
        if (n != static_cast<int>(shapes.size()))
            throw FormatError(fmt::format("drawing declares n = {} but lists {} shapes", n, shapes.size()));
        std::vector<std::optional<Shape>> byVertex(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < shapes.size(); ++i) {
            const int v = shapes[i].contains("vertex") ? shapes[i].at("vertex").get<int>() : static_cast<int>(i) + 1;
            if (v < 1 || v > n) throw FormatError(fmt::format("shape vertex {} outside 1..{}", v, n));
            if (byVertex[static_cast<std::size_t>(v - 1)]) throw FormatError(fmt::format("vertex {} has two shapes", v));
            byVertex[static_cast<std::size_t>(v - 1)] = shape_from_json(shapes[i]);
        }
        for (auto& s : byVertex) d.shapes.push_back(*s);
        if (d.family == ShapeKind::UnitSquare && !d.unit && !d.shapes.empty()) d.unit = d.shapes.front().width();
        d.check();
        return d;
    });
}

json to_json(const EdgeSet& es) {
    json out = json::array();
    for (const Edge& e : es) out.push_back(json::array({e.u, e.v}));
    return out;
}

EdgeSet edges_from_json(const json& j, int n) {
    return guarded("edge list", [&] {
        EdgeSet es;
        for (const json& e : j) {
            if (!e.is_array() || e.size() != 2) throw FormatError(fmt::format("edge must be [u, v], got {}", e.dump()));
            const int u = e[0].get<int>(), v = e[1].get<int>();
            if (u < 1 || v < 1 || u > n || v > n || u == v)
                throw FormatError(fmt::format("edge [{}, {}] invalid for n = {}", u, v, n));
            es.insert(Edge(u, v));
        }
        return es;
    });
}

json to_json(const GraphPair& g) { return json{{"n", g.n}, {"ev", to_json(g.edgesV)}, {"eh", to_json(g.edgesH)}}; }

GraphPair graph_pair_from_json(const json& j) {
    return guarded("graph pair", [&] {
        GraphPair g;
        g.n = j.at("n").get<int>();
        if (g.n < 0) throw FormatError("negative vertex count");
        g.edgesV = edges_from_json(j.at("ev"), g.n);
        g.edgesH = edges_from_json(j.at("eh"), g.n);
        return g;
    });
}

json to_json(const VisibilityReport& r) {
    json overlaps = json::array();
    for (const Edge& e : r.overlaps) overlaps.push_back(json::array({e.u, e.v}));
    return json{{"valid", r.valid()},
                {"overlaps", overlaps},
                {"vertical", {{"edges", to_json(r.verticalEdges)}, {"missing", to_json(r.missingV)}, {"extra", to_json(r.extraV)}}},
                {"horizontal",
                 {{"edges", to_json(r.horizontalEdges)}, {"missing", to_json(r.missingH)}, {"extra", to_json(r.extraH)}}}};
}

json to_json(const sat::Cnf3Instance& f) {
    json clauses = json::array();
    for (const sat::Clause3& c : f.clauses) clauses.push_back(json::array({c[0], c[1], c[2]}));
    return json{{"nVars", f.nVars}, {"clauses", clauses}};
}

sat::Cnf3Instance cnf_from_json(const json& j) {
    return guarded("formula", [&] {
        sat::Cnf3Instance f;
        f.nVars = j.at("nVars").get<int>();
        for (const json& c : j.at("clauses")) {
            if (!c.is_array() || c.size() != 3) throw FormatError(fmt::format("clause must have 3 literals, got {}", c.dump()));
            f.clauses.push_back({c[0].get<int>(), c[1].get<int>(), c[2].get<int>()});
        }
        return f;
    });
}

json to_json(const sat::GadgetIndex& idx) {
    json roles = json::array();
    for (std::size_t i = 0; i < idx.roles.size(); ++i) {
        const sat::VertexRole& r = idx.roles[i];
        json jr{{"vertex", i + 1}, {"role", std::string(to_string(r.role))}, {"clause", r.clause + 1}};
        if (r.role != sat::Role::Clause) {
            jr["slot"] = r.slot + 1;
            jr["literal"] = r.literal;
        }
        roles.push_back(std::move(jr));
    }
    json vars = json::object(), negs = json::object();
    for (const auto& [v, path] : idx.varGadget) vars[std::to_string(v)] = vertex_list(path);
    for (const auto& [v, path] : idx.negGadget) negs[std::to_string(v)] = vertex_list(path);
    json gadgets{{"clauses", vertex_list(idx.clauseGadget)}, {"variables", vars}};
    if (idx.mode == sat::ReductionMode::SatRsvr) gadgets["negated"] = negs;
    return json{{"mode", std::string(to_string(idx.mode))},
                {"formula", to_json(idx.formula)},
                {"pair", to_json(idx.pair)},
                {"roles", roles},
                {"gadgets", gadgets}};
}

sat::GadgetIndex gadget_index_from_json(const json& j) {
    return guarded("gadget index", [&] {
        const std::string mode = j.at("mode").get<std::string>();
        const sat::Cnf3Instance f = cnf_from_json(j.at("formula"));
        sat::GadgetIndex idx;
        if (mode == to_string(sat::ReductionMode::NaeUssvr))
            idx = sat::build_ussvr_instance(sat::as_nae(f));
        else if (mode == to_string(sat::ReductionMode::SatRsvr))
            idx = sat::build_rsvr_instance(f);
        else
            throw FormatError(fmt::format("unknown reduction mode '{}'", mode));
        if (j.contains("pair") && graph_pair_from_json(j.at("pair")) != idx.pair)
            throw FormatError("stored pair does not match the construction for the stored formula");
        return idx;
    });
}

json to_json(const paths::LsvrDecision& d, const PathPair& p) {
    // Each violation i names the P_V adjacency (i+1, i) of its variant.
    const auto variants = paths::orientation_variants(p);
    json violations = json::object();
    for (std::size_t k = 0; k < variants.size(); ++k) {
        json list = json::array();
        for (Vertex i : d.reports[k].violations) {
            const auto& toPair = variants[k].toPair;
            list.push_back(label_list({toPair[static_cast<std::size_t>(i)], toPair[static_cast<std::size_t>(i - 1)]}, p));
        }
        violations[std::string(to_string(variants[k].tag))] = list;
    }
    json out{{"exists", d.exists()},
             {"orientation", d.orientation ? json(std::string(to_string(*d.orientation))) : json(nullptr)},
             {"violations", violations},
             {"labels", p.labels},
             {"drawing", d.drawing ? to_json(*d.drawing) : json(nullptr)}};
    if (d.exists())
        out["stretch"] = {{"left", label_list(d.trace.stretchedLeft, p)},
                          {"down", label_list(d.trace.stretchedDown, p)},
                          {"leftStep", d.trace.leftStep},
                          {"downStep", d.trace.downStep}};
    return out;
}

json to_json(const oracle::SearchResult& r) {
    return json{{"status", std::string(to_string(r.status))},
                {"nodes", r.nodes},
                {"drawing", r.drawing ? to_json(*r.drawing) : json(nullptr)}};
}

json to_json(const oracle::LsvrCheckReport& r) {
    json rows = json::array();
    for (const auto& row : r.oracleRows)
        rows.push_back({{"pi", row.pi},
                        {"decision", row.accepted ? "accept" : "reject"},
                        {"oracle", std::string(to_string(*row.oracle))},
                        {"status", std::string(to_string(row.status))},
                        {"nodes", row.nodes},
                        {"seconds", row.seconds}});
    json disc = json::array();
    for (const auto& row : r.discrepancies)
        disc.push_back({{"pi", row.pi}, {"accepted", row.accepted}, {"sound", row.sound}});
    return json{{"nMax", r.nMax},
                {"completenessMax", r.completenessMax},
                {"permutations", r.permutations},
                {"rejected", r.rejected},
                {"capped", r.capped},
                {"clean", r.clean()},
                {"instances", rows},
                {"discrepancies", disc}};
}

}  // namespace svr::io
