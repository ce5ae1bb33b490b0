#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "svr/drawing.hpp"
#include "svr/graph.hpp"
#include "svr/sat.hpp"

namespace svr::sat {

enum class ReductionMode { NaeUssvr, SatRsvr };
std::string_view to_string(ReductionMode m);

enum class Role { Clause, Literal, NegatedLeaf };
std::string_view to_string(Role r);

/// What a vertex of the constructed pair stands for. `literal` is the
/// literal the vertex is an occurrence of; a leaf under a literal l is an
/// occurrence of -l.
struct VertexRole {
    Role role = Role::Clause;
    int clause = 0;  // 0-based
    int slot = -1;   // 0..2 for literal vertices and leaves
    Literal literal = 0;

    bool operator==(const VertexRole&) const = default;
};

/// The constructed pair plus the gadget bookkeeping needed to draw or
/// decode it.
struct GadgetIndex {
    ReductionMode mode = ReductionMode::NaeUssvr;
    Cnf3Instance formula;
    GraphPair pair;
    std::vector<VertexRole> roles;  // roles[v-1]

    std::vector<Vertex> clauseVertex;                 // per clause
    std::vector<std::array<Vertex, 3>> slotVertex;    // per clause, per slot
    std::vector<std::array<Vertex, 3>> leafVertex;    // RSVR only

    /// Consistency gadgets of G_H, each a path in order of appearance.
    std::vector<Vertex> clauseGadget;
    std::map<int, std::vector<Vertex>> varGadget;     // occurrences of v
    std::map<int, std::vector<Vertex>> negGadget;     // occurrences of -v (RSVR only)

    bool operator==(const GadgetIndex&) const = default;
};

class AssignmentError : public std::runtime_error {
public:
    AssignmentError(std::size_t clause, const std::string& what)
        : std::runtime_error(what), clause(clause) {}
    std::size_t clause;
};

/// The assignment satisfies the formula but the fixed gadget geometry
/// cannot lay the clause out (all three slots on one variable with the
/// middle literal false).
class LayoutError : public std::runtime_error {
public:
    LayoutError(std::size_t clause, const std::string& what) : std::runtime_error(what), clause(clause) {}
    std::size_t clause;
};

class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One vertex per clause and per literal occurrence. G_v is a claw per
/// clause; G_H is the clause path plus one occurrence path per variable.
GadgetIndex build_ussvr_instance(const NaeInstance& f);

/// Unit-square (side 1) drawing encoding a not-all-equal assignment.
/// Throws AssignmentError naming the first clause with all-equal literals.
Drawing build_ussvr_drawing(const NaeInstance& f, const Assignment& a);

/// a(v) = T iff the variable gadget lies above the clause gadget. Throws
/// DecodeError if d is not a valid USSVR of the pair or gadget
/// projections interleave.
Assignment decode_ussvr_assignment(const Drawing& d, const GadgetIndex& idx);

/// Seven vertices per clause: clause, three literal occurrences and a
/// negated leaf under each. G_H adds a negated-occurrence path per variable.
GadgetIndex build_rsvr_instance(const Cnf3Instance& f);

/// Rectangle drawing encoding a satisfying assignment. Throws
/// AssignmentError for a falsified clause and LayoutError when a clause on
/// a single variable has no order-preserving arrangement.
Drawing build_rsvr_drawing(const Cnf3Instance& f, const Assignment& a);

/// a(v) = T iff v is positively arranged: negated gadget >= variable gadget
/// >= clause gadget in y, or the full reverse.
Assignment decode_rsvr_assignment(const Drawing& d, const GadgetIndex& idx);

}  // namespace svr::sat
