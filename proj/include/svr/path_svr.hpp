#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "svr/drawing.hpp"
#include "svr/graph.hpp"

namespace svr::paths {

class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Places vertex v with its bottom-left corner at (position along P_V,
/// position along P_H) and both extents 1+ε. For L-shapes this is the SW
/// drawing; squares and rectangles may overlap when the paths share edges.
Drawing algorithm_a(const PathPair& p, ShapeKind family);

/// First edge (in P_V order) that P_V and P_H have in common.
std::optional<Edge> shared_edge(const PathPair& p);

/// A validated square or rectangle SVR when the paths are edge-disjoint,
/// nothing otherwise.
std::optional<Drawing> decide_square_rect_svr(const PathPair& p, ShapeKind family = ShapeKind::UnitSquare);

/// Lengths of the two monotone prefixes that drive the stretching step.
struct MonotoneProfile {
    int a = 0;                // (1, ..., a) is monotone in pi
    bool sIncreasing = true;  // ... and appears in increasing position order
    int c = 0;                // pi_1, ..., pi_c is monotone in value
    bool wDecreasing = false; // ... and pi_1 > ... > pi_c

    bool in_s(Vertex v) const { return v <= a; }
    bool operator==(const MonotoneProfile&) const = default;
};

MonotoneProfile monotone_profile(std::span<const Vertex> pi);

struct ConditionReport {
    bool holds = true;
    /// Every i with i+1 immediately before i in pi, i outside the monotone
    /// prefix of pi and i+1 outside the monotone run of small values.
    std::vector<Vertex> violations;
};

ConditionReport check_condition(std::span<const Vertex> pi);

enum class Orientation { SW, SE, NW, NE };
inline constexpr std::array<Orientation, 4> kOrientations{Orientation::SW, Orientation::SE, Orientation::NW,
                                                          Orientation::NE};
std::string_view to_string(Orientation o);

/// One of the four choices of reference endpoints, renumbered so that P_H
/// is again (1..n). Vertex j of the variant is vertex toPair[j-1] of the
/// input pair.
struct OrientationVariant {
    Orientation tag = Orientation::SW;
    std::vector<Vertex> pi;
    std::vector<Vertex> toPair;
};

/// SW: as given; SE: P_H reversed (values complemented); NW: P_V reversed;
/// NE: both.
std::array<OrientationVariant, 4> orientation_variants(const PathPair& p);

/// What the stretching steps did, in the vertex numbering of the call.
struct StretchTrace {
    bool leftStep = false;
    bool downStep = false;
    std::vector<Vertex> stretchedLeft;  // in pi order
    std::vector<Vertex> stretchedDown;  // ascending
};

/// Crossing pairs of the SW drawing among `subset`, found by pairwise
/// segment tests on the shapes.
std::vector<Edge> crossings_among(const Drawing& step1, std::span<const Vertex> subset);
/// Same from the permutation alone: in the SW drawing shapes i and i+1
/// cross exactly when i+1 immediately precedes i in pi.
std::vector<Edge> crossings_from_permutation(std::span<const Vertex> pi, std::span<const Vertex> subset);

/// L-shape drawing of <P_V = pi, P_H = (1..n)>: the SW drawing of
/// Algorithm A, then the prefix of pi stretched left and the small values
/// stretched down where their shapes cross. Throws PreconditionError when
/// check_condition(pi) fails.
Drawing lsvr_paths(std::span<const Vertex> pi, StretchTrace* trace = nullptr);

struct LsvrDecision {
    std::optional<Orientation> orientation;
    std::array<ConditionReport, 4> reports;  // indexed like kOrientations
    /// Drawing in the vertex numbering of the input pair.
    std::optional<Drawing> drawing;
    /// Stretch sets mapped back to the input pair's numbering.
    StretchTrace trace;

    bool exists() const { return orientation.has_value(); }
};

/// Tries SW, SE, NW, NE in that order and stretches the first variant whose
/// condition holds.
LsvrDecision decide_lsvr(const PathPair& p);

}  // namespace svr::paths
