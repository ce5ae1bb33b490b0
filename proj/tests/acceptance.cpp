// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include <fmt/format.h>

#include "svr/json_io.hpp"
#include "svr/oracle.hpp"
#include "svr/path_svr.hpp"
#include "svr/reductions.hpp"
#include "svr/render.hpp"
#include "svr/visibility.hpp"

using namespace svr;

namespace {

// Pinned limits.
constexpr double kWorkedExamplesSeconds = 0.5;
constexpr double kSweepSeconds = 120.0;
constexpr double kCompletenessSeconds = 600.0;
constexpr double kAlgorithmASeconds = 30.0;
constexpr double kEquivalenceSeconds = 1800.0;
constexpr int kSweepMaxN = 8;
constexpr int kSweepInstances = 46233;
constexpr int kCompletenessMaxN = 4;
constexpr int kAlgorithmAN = 50;
constexpr int kAlgorithmAPairs = 100;
constexpr int kRoundTripFormulas = 50;

struct Outcome {
    bool pass = true;
    std::string detail;
    std::string transcript;  // serialized outputs, compared for determinism
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

/// Runs the structural checks on every validated drawing the other
/// criteria produce.
struct Diagnostics {
    long drawings = 0;
    long pathDrawings = 0;
    long failures = 0;
    std::string firstFailure;

    void fail(const std::string& what) {
        if (failures++ == 0) firstFailure = what;
    }

    void add(const Drawing& d, const GraphPair& g, bool pathPair, const std::string& name) {
        ++drawings;
        for (Axis axis : {Axis::Vertical, Axis::Horizontal}) {
            const EdgeSet& es = axis == Axis::Vertical ? g.edgesV : g.edgesH;
            if (!check_no_twist(d, g.n, es, axis)) fail(name + ": components twist");
            for (Vertex u = 1; u <= g.n; ++u) {
                int count = 0;
                try {
                    count = check_nestedness(d, g.n, es, u, axis);
                } catch (const std::invalid_argument&) {
                    continue;
                }
                if (count > 2) fail(fmt::format("{}: {} non-nested components at {}", name, count, u));
            }
            if (pathPair) {
                if (auto w = find_cycle_premise(d, axis))
                    fail(fmt::format("{}: cycle premise ({}, {}, {})", name, w->u, w->v, w->w));
            }
        }
        if (pathPair) ++pathDrawings;
    }
};

Diagnostics diagnostics;

std::vector<Vertex> identity(int n) {
    std::vector<Vertex> pi(static_cast<std::size_t>(n));
    std::iota(pi.begin(), pi.end(), 1);
    return pi;
}

bool within_grid(const Drawing& d, int n) {
    for (const Shape& s : d.shapes)
        for (Coord c : {s.left(), s.right(), s.bottom(), s.top()})
            if (c.base < 2 - n || c.base > n + 1) return false;
    return true;
}

std::string svg_of(const Drawing& d) {
    RenderConfig cfg;
    cfg.sightLines = true;
    return render_svg(d, cfg);
}

Outcome criterion_worked_examples(bool record) {
    Outcome o;
    const auto t = Clock::now();
    const PathPair rejected7 = PathPair::from_permutation({1, 3, 2, 7, 5, 6, 4});
    const PathPair accepted6 = PathPair::from_permutation({2, 1, 6, 4, 5, 3});
    const PathPair stretch5 = PathPair::from_permutation({4, 3, 5, 2, 1});
    const auto dRejected = paths::decide_lsvr(rejected7);
    const auto dAccepted = paths::decide_lsvr(accepted6);
    const auto dStretch = paths::decide_lsvr(stretch5);
    const double elapsed = seconds_since(t);

    if (dRejected.exists()) o.pass = false, o.detail += " (1..7)/(1,3,2,7,5,6,4) accepted;";
    for (const auto& [p, d, name] :
         {std::tuple{&accepted6, &dAccepted, "accepted6"}, std::tuple{&stretch5, &dStretch, "stretch5"}}) {
        if (!d->exists()) {
            o.pass = false;
            o.detail += fmt::format(" {} rejected;", name);
            continue;
        }
        if (!validate_svr(*d->drawing, p->graphs()).valid()) o.pass = false, o.detail += fmt::format(" {} invalid;", name);
        if (record) diagnostics.add(*d->drawing, p->graphs(), true, name);
    }
    if (dStretch.exists()) {
        if (dStretch.trace.stretchedLeft != std::vector<Vertex>{4, 3})
            o.pass = false, o.detail += " step-2 set differs from {4,3};";
        if (dStretch.trace.stretchedDown != std::vector<Vertex>{1, 2})
            o.pass = false, o.detail += " step-3 set differs from {1,2};";
    }
    if (elapsed > kWorkedExamplesSeconds) o.pass = false;
    o.detail += fmt::format(" {:.2f} ms", elapsed * 1e3);
    for (const PathPair* p : {&rejected7, &accepted6, &stretch5}) {
        const auto d = paths::decide_lsvr(*p);
        o.transcript += io::to_json(d, *p).dump() + "\n";
        if (d.drawing) o.transcript += svg_of(*d.drawing);
    }
    return o;
}

Outcome criterion_soundness_sweep() {
    Outcome o;
    const auto t = Clock::now();
    int instances = 0, accepted = 0, failures = 0;
    for (int n = 1; n <= kSweepMaxN; ++n) {
        std::vector<Vertex> pi = identity(n);
        do {
            ++instances;
            const PathPair p = PathPair::from_permutation(pi);
            const auto d = paths::decide_lsvr(p);
            if (!d.exists()) continue;
            ++accepted;
            const GraphPair g = p.graphs();
            const VisibilityReport r = validate_svr(*d.drawing, g);
            if (!r.valid() || !within_grid(*d.drawing, n)) {
                if (failures++ == 0) o.detail += fmt::format(" first failure at pi of size {};", n);
                continue;
            }
            diagnostics.add(*d.drawing, g, true, "sweep");
        } while (std::next_permutation(pi.begin(), pi.end()));
    }
    const double elapsed = seconds_since(t);
    o.pass = failures == 0 && instances == kSweepInstances && elapsed < kSweepSeconds;
    o.detail += fmt::format(" {} instances, {} accepted, {} failures, {:.1f} s", instances, accepted, failures, elapsed);
    return o;
}

Outcome criterion_completeness() {
    Outcome o;
    const auto t = Clock::now();
    const oracle::LsvrCheckReport r = oracle::exhaustive_lsvr_check(kCompletenessMaxN, kCompletenessMaxN);
    const double elapsed = seconds_since(t);
    std::uint64_t nodes = 0;
    int exhausted = 0;
    for (const auto& row : r.oracleRows) {
        nodes += row.nodes;
        if (row.oracle == oracle::SearchStatus::Exhausted) ++exhausted;
    }
    // Also feed the oracle's own drawings to the diagnostics.
    for (int n = 1; n <= kCompletenessMaxN; ++n) {
        std::vector<Vertex> pi = identity(n);
        do {
            const PathPair p = PathPair::from_permutation(pi);
            const auto s = oracle::brute_force_svr(p.graphs(), ShapeKind::LShape);
            if (s.drawing) diagnostics.add(*s.drawing, p.graphs(), true, "oracle");
        } while (std::next_permutation(pi.begin(), pi.end()));
    }
    o.pass = r.clean() && r.oracleRows.size() == 33 && elapsed < kCompletenessSeconds;
    o.detail = fmt::format(" {} instances, {} discrepancies, {} capped, {} proven empty, {} nodes, {:.1f} s",
                           r.oracleRows.size(), r.discrepancies.size(), r.capped, exhausted, nodes, elapsed);
    return o;
}

Outcome criterion_algorithm_a(bool record) {
    Outcome o;
    const auto t = Clock::now();
    std::mt19937 rng(20240601);
    int disjointOk = 0, sharedOk = 0, disjointSeen = 0, sharedSeen = 0;
    while (disjointSeen < kAlgorithmAPairs || sharedSeen < kAlgorithmAPairs) {
        std::vector<Vertex> pi = identity(kAlgorithmAN);
        std::shuffle(pi.begin(), pi.end(), rng);
        const PathPair p = PathPair::from_permutation(pi);
        const GraphPair g = p.graphs();
        const auto shared = paths::shared_edge(p);
        if (!shared && disjointSeen < kAlgorithmAPairs) {
            ++disjointSeen;
            bool ok = true;
            for (ShapeKind k : {ShapeKind::UnitSquare, ShapeKind::Rect}) {
                const auto d = paths::decide_square_rect_svr(p, k);
                ok = ok && d && validate_svr(*d, g).valid();
                if (d) {
                    if (record) diagnostics.add(*d, g, true, "algorithm-a");
                    o.transcript += io::to_json(*d).dump() + "\n" + svg_of(*d);
                }
            }
            disjointOk += ok;
        } else if (shared && sharedSeen < kAlgorithmAPairs) {
            ++sharedSeen;
            const bool rejected = !paths::decide_square_rect_svr(p, ShapeKind::UnitSquare) &&
                                  !paths::decide_square_rect_svr(p, ShapeKind::Rect);
            sharedOk += rejected && g.edgesV.count(*shared) && g.edgesH.count(*shared);
            o.transcript += fmt::format("shared {}-{}\n", shared->u, shared->v);
        }
    }
    const double elapsed = seconds_since(t);
    o.pass = disjointOk == kAlgorithmAPairs && sharedOk == kAlgorithmAPairs && elapsed < kAlgorithmASeconds;
    o.detail = fmt::format(" edge-disjoint {}/{} drawn in both families, sharing {}/{} rejected, {:.2f} s", disjointOk,
                           kAlgorithmAPairs, sharedOk, kAlgorithmAPairs, elapsed);
    return o;
}

Outcome criterion_reductions_forward(bool record) {
    Outcome o;
    const sat::NaeInstance f5{4, {{1, 2, 3}, {4, 1, 2}, {3, 4, 3}}};
    const sat::Assignment a5 = sat::Assignment::from_bits("0101");
    const sat::GadgetIndex i5 = sat::build_ussvr_instance(f5);
    const Drawing d5 = sat::build_ussvr_drawing(f5, a5);
    const bool v5 = validate_svr(d5, i5.pair).valid();
    const sat::Assignment b5 = sat::decode_ussvr_assignment(d5, i5);
    const bool ok5 = v5 && sat::nae_satisfies(f5, b5) && b5 == a5;

    const sat::Cnf3Instance f6{3, {{3, 1, 2}, {-1, -2, 1}, {2, 1, -3}}};
    const sat::Assignment a6 = sat::Assignment::from_bits("101");
    const sat::GadgetIndex i6 = sat::build_rsvr_instance(f6);
    const Drawing d6 = sat::build_rsvr_drawing(f6, a6);
    const bool v6 = validate_svr(d6, i6.pair).valid();
    const sat::Assignment b6 = sat::decode_rsvr_assignment(d6, i6);
    const bool ok6 = v6 && sat::satisfies(f6, b6) && b6 == a6;

    if (record) {
        if (v5) diagnostics.add(d5, i5.pair, false, "nae4");
        if (v6) diagnostics.add(d6, i6.pair, false, "cnf3");
    }
    o.pass = ok5 && ok6;
    o.detail = fmt::format(" USSVR {} decoded {}, RSVR {} decoded {}", v5 ? "valid" : "INVALID", b5.bits(),
                           v6 ? "valid" : "INVALID", b6.bits());
    o.transcript = io::to_json(i5).dump() + io::to_json(d5).dump() + svg_of(d5) + io::to_json(i6).dump() +
                   io::to_json(d6).dump() + svg_of(d6);
    return o;
}

Outcome criterion_equivalence() {
    Outcome o;
    const auto t = Clock::now();
    int formulas = 0, disagreements = 0, capped = 0, unsat = 0;
    for (int nVars = 1; nVars <= 3; ++nVars)
        for (int a = 1; a <= nVars; ++a)
            for (int b = 1; b <= nVars; ++b)
                for (int c = 1; c <= nVars; ++c) {
                    const sat::NaeInstance f{nVars, {{a, b, c}}};
                    ++formulas;
                    const bool sat = oracle::brute_force_nae(f).has_value();
                    const sat::GadgetIndex idx = sat::build_ussvr_instance(f);
                    const oracle::SearchResult r = oracle::brute_force_svr(idx.pair, ShapeKind::UnitSquare);
                    if (r.status == oracle::SearchStatus::Capped) {
                        ++capped;
                        continue;
                    }
                    bool agree = sat == (r.status == oracle::SearchStatus::Found);
                    if (r.drawing) {
                        agree = agree && sat::nae_satisfies(f, sat::decode_ussvr_assignment(*r.drawing, idx));
                        diagnostics.add(*r.drawing, idx.pair, false, "oracle-usq");
                    }
                    unsat += !sat;
                    if (!agree) {
                        if (disagreements++ == 0) o.detail += fmt::format(" first disagreement ({},{},{});", a, b, c);
                    }
                }
    const double elapsed = seconds_since(t);
    o.pass = disagreements == 0 && capped == 0 && elapsed < kEquivalenceSeconds;
    o.detail += fmt::format(" {} formulas ({} unsatisfiable), {} disagreements, {} capped, {:.1f} s", formulas, unsat,
                            disagreements, capped, elapsed);
    return o;
}

Outcome criterion_round_trip() {
    Outcome o;
    std::mt19937 rng(777);
    int done = 0, failures = 0;
    while (done < kRoundTripFormulas) {
        const int nVars = 3 + static_cast<int>(rng() % 4);
        const int clauses = 1 + static_cast<int>(rng() % 3);
        sat::Cnf3Instance f{nVars, {}};
        std::uniform_int_distribution<int> var(1, nVars);
        while (static_cast<int>(f.clauses.size()) < clauses) {
            // Three different variables per clause.
            sat::Clause3 c{};
            for (sat::Literal& l : c) l = var(rng) * (rng() % 2 ? 1 : -1);
            if (std::abs(c[0]) != std::abs(c[1]) && std::abs(c[0]) != std::abs(c[2]) && std::abs(c[1]) != std::abs(c[2]))
                f.clauses.push_back(c);
        }
        const auto a = oracle::brute_force_sat(f);
        if (!a) continue;
        ++done;
        const sat::GadgetIndex idx = sat::build_rsvr_instance(f);
        const Drawing d = sat::build_rsvr_drawing(f, *a);
        bool ok = validate_svr(d, idx.pair).valid();
        if (ok) {
            diagnostics.add(d, idx.pair, false, "round-trip");
            ok = sat::satisfies(f, sat::decode_rsvr_assignment(d, idx));
        }
        failures += !ok;
    }
    o.pass = failures == 0;
    o.detail = fmt::format(" {} formulas, {} failures", done, failures);
    return o;
}

Outcome criterion_diagnostics() {
    Outcome o;
    o.pass = diagnostics.failures == 0 && diagnostics.drawings > 0;
    o.detail = fmt::format(" {} drawings ({} of path pairs), {} failures", diagnostics.drawings, diagnostics.pathDrawings,
                           diagnostics.failures);
    if (diagnostics.failures) o.detail += "; first: " + diagnostics.firstFailure;
    return o;
}

Outcome criterion_determinism(const std::vector<std::string>& first) {
    Outcome o;
    const std::vector<std::string> second{criterion_worked_examples(false).transcript,
                                          criterion_algorithm_a(false).transcript,
                                          criterion_reductions_forward(false).transcript};
    std::size_t bytes = 0;
    for (std::size_t i = 0; i < first.size(); ++i) {
        bytes += first[i].size();
        if (first[i] != second[i]) o.pass = false;
    }
    o.detail = fmt::format(" {} bytes of JSON and SVG compared across two runs", bytes);
    return o;
}

int report(int id, const char* title, const Outcome& o) {
    std::printf("[%s] criterion %d: %s:%s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str());
    std::fflush(stdout);
    return o.pass ? 0 : 1;
}

}  // namespace

int main() {
    int failed = 0;
    const Outcome c1 = criterion_worked_examples(true);
    failed += report(1, "worked examples", c1);
    failed += report(2, "soundness sweep n <= 8", criterion_soundness_sweep());
    failed += report(3, "completeness cross-check n <= 4", criterion_completeness());
    const Outcome c4 = criterion_algorithm_a(true);
    failed += report(4, "Algorithm A iff at n = 50", c4);
    const Outcome c5 = criterion_reductions_forward(true);
    failed += report(5, "reductions forward", c5);
    failed += report(6, "reduction equivalence at desk scale", criterion_equivalence());
    failed += report(7, "RSVR round trip", criterion_round_trip());
    failed += report(8, "structural diagnostics", criterion_diagnostics());
    failed += report(9, "determinism", criterion_determinism({c1.transcript, c4.transcript, c5.transcript}));
    std::printf("%d of 9 criteria failed\n", failed);
    return failed;
}
