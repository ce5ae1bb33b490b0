// svrtool: command-line front end for the svr library.
//
// Exit codes: 0 exists/valid, 1 nonexistent/invalid, 2 input error,
// 3 oracle budget exhausted before a verdict.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "svr/json_io.hpp"
#include "svr/oracle.hpp"
#include "svr/path_svr.hpp"
#include "svr/reductions.hpp"
#include "svr/render.hpp"
#include "svr/visibility.hpp"

namespace {

using namespace svr;
using io::json;

enum Exit { kOk = 0, kNo = 1, kInput = 2, kCapped = 3 };

/// Input problems that map to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(fmt::format("cannot open '{}'", path));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw InputError(fmt::format("{}: {}", path, e.what()));
    }
}

/// A file may hold the object itself or a document with it under `key`, so
/// the output of one command can feed the next.
const json& unwrap(const json& j, const char* key) { return j.is_object() && j.contains(key) ? j.at(key) : j; }

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

void write_svg(const std::string& path, const Drawing& d, const RenderConfig& cfg,
               const std::vector<std::string>& labels = {}) {
    if (path.empty()) return;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError(fmt::format("cannot write '{}'", path));
    out << render_svg(d, cfg, labels);
}

struct Common {
    std::string svg;
    bool sightLines = false;
    RenderConfig render() const {
        RenderConfig cfg;
        cfg.sightLines = sightLines;
        return cfg;
    }
};

void add_svg_options(CLI::App* cmd, Common& c) {
    cmd->add_option("--svg", c.svg, "Write the drawing as SVG to this file");
    cmd->add_flag("--sight-lines", c.sightLines, "Overlay dashed lines-of-sight in the SVG");
}

PathPair load_paths(const std::string& path) {
    try {
        return parse_path_pair(read_file(path));
    } catch (const std::invalid_argument& e) {
        throw InputError(fmt::format("{}: {}", path, e.what()));
    }
}

GraphPair load_pair(const std::string& pairFile, const std::string& pathsFile) {
    if (!pathsFile.empty()) return load_paths(pathsFile).graphs();
    if (pairFile.empty()) throw InputError("give --pair or --paths");
    return io::graph_pair_from_json(unwrap(read_json(pairFile), "pair"));
}

int cmd_decide_lsvr(const std::string& pathsFile, const Common& c) {
    const PathPair p = load_paths(pathsFile);
    const paths::LsvrDecision d = paths::decide_lsvr(p);
    emit(io::to_json(d, p));
    if (!d.exists()) {
        fmt::print(std::cerr, "no LSVR: every orientation violates the stretching condition\n");
        return kNo;
    }
    fmt::print(std::cerr, "LSVR found in orientation {}\n", paths::to_string(*d.orientation));
    write_svg(c.svg, *d.drawing, c.render(), p.labels);
    return kOk;
}

int cmd_algorithm_a(const std::string& pathsFile, const std::string& family, const Common& c) {
    const PathPair p = load_paths(pathsFile);
    const ShapeKind k = shape_kind_from_string(family);
    if (k == ShapeKind::LShape) throw InputError("--family must be usq or rect");
    const Drawing d = paths::algorithm_a(p, k);
    const VisibilityReport rep = validate_svr(d, p.graphs());
    json out{{"labels", p.labels}, {"drawing", io::to_json(d)}, {"validation", io::to_json(rep)}};
    const auto shared = paths::shared_edge(p);
    if (shared) {
        const std::string& a = p.labels[static_cast<std::size_t>(shared->u - 1)];
        const std::string& b = p.labels[static_cast<std::size_t>(shared->v - 1)];
        out["sharedEdge"] = json::array({a, b});
        emit(out);
        fmt::print(std::cerr, "paths share edge {}-{}: no {} SVR\n", a, b, family);
        return kNo;
    }
    emit(out);
    write_svg(c.svg, d, c.render(), p.labels);
    fmt::print(std::cerr, "{} SVR {}\n", family, rep.valid() ? "valid" : "INVALID");
    return rep.valid() ? kOk : kNo;
}

int cmd_reduce(const std::string& mode, const std::string& cnfFile, const std::string& bits, const Common& c) {
    sat::Cnf3Instance f;
    try {
        f = sat::parse_dimacs(read_file(cnfFile));
    } catch (const sat::DimacsError& e) {
        throw InputError(fmt::format("{}: {}", cnfFile, e.what()));
    }
    const bool nae = mode == sat::to_string(sat::ReductionMode::NaeUssvr);
    if (!nae && mode != sat::to_string(sat::ReductionMode::SatRsvr))
        throw InputError(fmt::format("unknown mode '{}'", mode));
    sat::NaeInstance g;
    if (nae) {
        try {
            g = sat::as_nae(f);
        } catch (const sat::DimacsError& e) {
            throw InputError(e.what());
        }
    }
    const sat::GadgetIndex idx = nae ? sat::build_ussvr_instance(g) : sat::build_rsvr_instance(f);
    json out{{"index", io::to_json(idx)}, {"pair", io::to_json(idx.pair)}};
    if (bits.empty()) {
        emit(out);
        fmt::print(std::cerr, "{} instance: {} vertices\n", mode, idx.pair.n);
        return kOk;
    }
    sat::Assignment a;
    try {
        a = sat::Assignment::from_bits(bits);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    Drawing d;
    try {
        d = nae ? sat::build_ussvr_drawing(g, a) : sat::build_rsvr_drawing(f, a);
    } catch (const sat::AssignmentError& e) {
        fmt::print(std::cerr, "{}\n", e.what());
        return kNo;
    } catch (const sat::LayoutError& e) {
        fmt::print(std::cerr, "{}\n", e.what());
        return kNo;
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    const VisibilityReport rep = validate_svr(d, idx.pair);
    out["assignment"] = a.bits();
    out["drawing"] = io::to_json(d);
    out["validation"] = io::to_json(rep);
    emit(out);
    write_svg(c.svg, d, c.render());
    fmt::print(std::cerr, "{} drawing for {}: {}\n", mode, a.bits(), rep.valid() ? "valid" : "INVALID");
    return rep.valid() ? kOk : kNo;
}

int cmd_verify(const std::string& drawingFile, const std::string& pairFile, const std::string& pathsFile,
               const Common& c) {
    const Drawing d = io::drawing_from_json(unwrap(read_json(drawingFile), "drawing"));
    const GraphPair g = load_pair(pairFile, pathsFile);
    VisibilityReport rep;
    try {
        rep = validate_svr(d, g);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    emit(io::to_json(rep));
    write_svg(c.svg, d, c.render());
    fmt::print(std::cerr, "{}: {} overlaps, vertical {}/{} missing/extra, horizontal {}/{} missing/extra\n",
               rep.valid() ? "valid" : "invalid", rep.overlaps.size(), rep.missingV.size(), rep.extraV.size(),
               rep.missingH.size(), rep.extraH.size());
    return rep.valid() ? kOk : kNo;
}

int cmd_decode(const std::string& drawingFile, const std::string& indexFile) {
    const Drawing d = io::drawing_from_json(unwrap(read_json(drawingFile), "drawing"));
    const sat::GadgetIndex idx = io::gadget_index_from_json(unwrap(read_json(indexFile), "index"));
    sat::Assignment a;
    try {
        a = idx.mode == sat::ReductionMode::NaeUssvr ? sat::decode_ussvr_assignment(d, idx)
                                                     : sat::decode_rsvr_assignment(d, idx);
    } catch (const sat::DecodeError& e) {
        fmt::print(std::cerr, "cannot decode: {}\n", e.what());
        return kNo;
    }
    json trueVars = json::array();
    for (int v = 1; v <= a.size(); ++v)
        if (a[v]) trueVars.push_back(v);
    const bool ok = idx.mode == sat::ReductionMode::NaeUssvr ? sat::nae_satisfies(sat::as_nae(idx.formula), a)
                                                             : sat::satisfies(idx.formula, a);
    emit(json{{"assignment", a.bits()}, {"true", trueVars}, {"satisfies", ok}});
    fmt::print(std::cerr, "decoded assignment {}\n", a.bits());
    return ok ? kOk : kNo;
}

int cmd_oracle(const std::string& pairFile, const std::string& pathsFile, const std::string& family,
               const oracle::SearchBudget& budget, const Common& c) {
    const GraphPair g = load_pair(pairFile, pathsFile);
    oracle::SearchResult r;
    try {
        r = oracle::brute_force_svr(g, shape_kind_from_string(family), budget);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    emit(io::to_json(r));
    fmt::print(std::cerr, "{} after {} nodes in {:.2f}s\n", oracle::to_string(r.status), r.nodes, r.seconds);
    switch (r.status) {
        case oracle::SearchStatus::Found:
            write_svg(c.svg, *r.drawing, c.render());
            return kOk;
        case oracle::SearchStatus::Exhausted: return kNo;
        case oracle::SearchStatus::Capped: return kCapped;
    }
    return kInput;
}

int cmd_report(int nMax, int completenessMax, const oracle::SearchBudget& budget) {
    const oracle::LsvrCheckReport r = oracle::exhaustive_lsvr_check(nMax, completenessMax, budget);
    emit(io::to_json(r));
    for (int n = 1; n <= nMax; ++n)
        fmt::print(std::cerr, "n={}: {} permutations, {} rejected\n", n, r.permutations[static_cast<std::size_t>(n - 1)],
                   r.rejected[static_cast<std::size_t>(n - 1)]);
    fmt::print(std::cerr, "{} discrepancies, {} capped\n", r.discrepancies.size(), r.capped);
    if (!r.discrepancies.empty()) return kNo;
    return r.capped ? kCapped : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simultaneous visibility representations: decide, construct, reduce, verify"};
    app.require_subcommand(1);

    Common common;
    std::string pathsFile, pairFile, drawingFile, indexFile, cnfFile, bits, family = "usq", mode;
    oracle::SearchBudget budget;
    int nMax = 8, completenessMax = 4;

    auto* decide = app.add_subcommand("decide-lsvr", "Decide whether a path pair has an L-shape SVR");
    decide->add_option("--paths", pathsFile, "Path-pair file: P_H on line 1, P_V on line 2")->required();
    add_svg_options(decide, common);

    auto* algA = app.add_subcommand("algorithm-a", "Square or rectangle SVR of an edge-disjoint path pair");
    algA->add_option("--paths", pathsFile, "Path-pair file")->required();
    algA->add_option("--family", family, "usq or rect")->check(CLI::IsMember({"usq", "rect"}));
    add_svg_options(algA, common);

    auto* reduce = app.add_subcommand("reduce", "Build the hardness instance of a 3-CNF formula");
    reduce->add_option("--mode", mode)->required()->check(CLI::IsMember({"nae-ussvr", "3sat-rsvr"}));
    reduce->add_option("--cnf", cnfFile, "DIMACS file with 3 literals per clause")->required();
    reduce->add_option("--assign", bits, "Assignment bits, v1 first (e.g. 0101)");
    add_svg_options(reduce, common);

    auto* verify = app.add_subcommand("verify", "Check a drawing against a graph pair");
    verify->add_option("--drawing", drawingFile, "Drawing JSON")->required();
    auto* vPair = verify->add_option("--pair", pairFile, "Graph-pair JSON");
    verify->add_option("--paths", pathsFile, "Path-pair file instead of --pair")->excludes(vPair);
    add_svg_options(verify, common);

    auto* decode = app.add_subcommand("decode", "Read the assignment encoded by a reduction drawing");
    decode->add_option("--drawing", drawingFile, "Drawing JSON")->required();
    decode->add_option("--index", indexFile, "Gadget index (output of reduce)")->required();

    auto* orc = app.add_subcommand("oracle", "Exhaustive search for an SVR of a small graph pair");
    auto* oPair = orc->add_option("--pair", pairFile, "Graph-pair JSON");
    orc->add_option("--paths", pathsFile, "Path-pair file instead of --pair")->excludes(oPair);
    orc->add_option("--family", family, "usq, rect or lshape")->check(CLI::IsMember({"usq", "rect", "lshape"}));
    orc->add_option("--budget", budget.maxNodes, "Node budget");
    orc->add_option("--time-limit", budget.timeLimitSeconds, "Seconds");
    orc->add_option("--coord-range", budget.coordRange, "Lattice extent (0 = canonical)");
    orc->add_option("--workers", budget.workers, "Threads splitting the root branches")->check(CLI::PositiveNumber);
    add_svg_options(orc, common);

    auto* report = app.add_subcommand("report", "Cross-check the L-shape decision against the oracle");
    report->add_option("--n-max", nMax, "Soundness sweep up to this n")->check(CLI::Range(1, 10));
    report->add_option("--completeness", completenessMax, "Oracle comparison up to this n")->check(CLI::Range(0, 5));
    report->add_option("--budget", budget.maxNodes, "Node budget per instance");
    report->add_option("--workers", budget.workers, "Threads splitting the root branches")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInput;
    }

    try {
        if (*decide) return cmd_decide_lsvr(pathsFile, common);
        if (*algA) return cmd_algorithm_a(pathsFile, family, common);
        if (*reduce) return cmd_reduce(mode, cnfFile, bits, common);
        if (*verify) return cmd_verify(drawingFile, pairFile, pathsFile, common);
        if (*decode) return cmd_decode(drawingFile, indexFile);
        if (*orc) return cmd_oracle(pairFile, pathsFile, family, budget, common);
        if (*report) return cmd_report(nMax, completenessMax, budget);
    } catch (const InputError& e) {
        fmt::print(std::cerr, "error: {}\n", e.what());
        return kInput;
    } catch (const io::FormatError& e) {
        fmt::print(std::cerr, "error: {}\n", e.what());
        return kInput;
    } catch (const std::invalid_argument& e) {
        fmt::print(std::cerr, "error: {}\n", e.what());
        return kInput;
    }
    return kInput;
}
