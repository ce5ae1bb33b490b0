#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "svr/drawing.hpp"
#include "svr/graph.hpp"
#include "svr/sat.hpp"

namespace svr::oracle {

inline constexpr int kMaxBooleanVars = 24;

/// First NAE-satisfying assignment in lexicographic order of the bit
/// string v1 v2 ... (F < T). Throws std::invalid_argument above 24 variables.
std::optional<sat::Assignment> brute_force_nae(const sat::NaeInstance& f);
std::optional<sat::Assignment> brute_force_sat(const sat::Cnf3Instance& f);

struct SearchBudget {
    /// Lattice extent; 0 selects the canonical one (ranks 1..2n for
    /// rectangles and L-shapes, square corners 0..n(n+1) in units of
    /// 1/(n+1)).
    int coordRange = 0;
    std::uint64_t maxNodes = 50'000'000;
    double timeLimitSeconds = 600.0;
    /// Root branches are dealt round-robin to this many threads.
    int workers = 1;
};

enum class SearchStatus { Found, Exhausted, Capped };
std::string_view to_string(SearchStatus s);

struct SearchResult {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<Drawing> drawing;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

/// Backtracking search for an SVR of `g` over a finite coordinate lattice.
/// Vertices are placed in order of decreasing total degree; a branch dies
/// as soon as placed shapes intersect or a required visibility between
/// placed shapes is already blocked. Any returned drawing passes
/// validate_svr. Capped means the budget ran out, never "no drawing".
SearchResult brute_force_svr(const GraphPair& g, ShapeKind family, const SearchBudget& budget = {});

enum class CellStatus { Agree, Disagree, Capped };
std::string_view to_string(CellStatus s);

struct LsvrCheckRow {
    std::vector<Vertex> pi;
    bool accepted = false;
    bool sound = true;  // accepted drawing validated within the grid bound
    std::optional<SearchStatus> oracle;  // only for n <= completeness bound
    CellStatus status = CellStatus::Agree;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

struct LsvrCheckReport {
    int nMax = 0;
    int completenessMax = 0;
    std::vector<int> permutations;  // per n, index n-1
    std::vector<int> rejected;      // per n
    std::vector<LsvrCheckRow> oracleRows;      // every row with an oracle run
    std::vector<LsvrCheckRow> discrepancies;   // unsound or disagreeing rows
    int capped = 0;

    bool clean() const { return discrepancies.empty() && capped == 0; }
};

/// Soundness for every permutation up to nMax; agreement with
/// brute_force_svr on L-shapes up to completenessMax.
LsvrCheckReport exhaustive_lsvr_check(int nMax, int completenessMax = 4, const SearchBudget& budget = {});

}  // namespace svr::oracle
