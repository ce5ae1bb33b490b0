#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "svr/drawing.hpp"
#include "svr/graph.hpp"

namespace svr {

/// Direction of the lines-of-sight. Vertical sight lines realize G_v and
/// are governed by x-projections; horizontal ones realize G_H via y.
enum class Axis { Vertical, Horizontal };

/// Thrown by the visibility-graph entry points when two shapes intersect.
class OverlapError : public std::runtime_error {
public:
    OverlapError(Vertex a, Vertex b);
    Edge pair;
};

/// All intersecting shape pairs (closed-set model: touching counts).
std::vector<Edge> overlapping_pairs(std::span<const Shape> shapes);

/// Strong-visibility graph of an arbitrary shape list (vertex i+1 is
/// shapes[i]). Overlaps are not checked, so the result is advisory when
/// shapes intersect.
EdgeSet visibility_edges(std::span<const Shape> shapes, Axis axis);

/// Same, but on a caller-provided set of sample lines given on the doubled
/// lattice (the line at coordinate c is passed as 2c). Used to check that
/// denser sampling does not change the result.
EdgeSet visibility_edges_at(std::span<const Shape> shapes, Axis axis, std::span<const Coord> doubledSamples);

/// The sample lines the engine uses: every distinct endpoint and the
/// midpoint of each consecutive pair, on the doubled lattice.
std::vector<Coord> sample_lines(std::span<const Shape> shapes, Axis axis);

/// One realized line-of-sight, on the doubled lattice: the line at `at`
/// runs from `from` on the first shape of `edge` to `to` on the other.
struct SightLine {
    Edge edge;
    Coord at;
    Coord from;
    Coord to;
};

/// One witness per visibility edge. Lines strictly between endpoints are
/// preferred over lines through an endpoint.
std::vector<SightLine> sight_lines(std::span<const Shape> shapes, Axis axis);

/// Throw OverlapError if any two shapes intersect.
EdgeSet vertical_visibility_graph(const Drawing& d);
EdgeSet horizontal_visibility_graph(const Drawing& d);

struct VisibilityReport {
    EdgeSet verticalEdges;
    EdgeSet horizontalEdges;
    std::vector<Edge> overlaps;
    EdgeSet missingV, extraV;
    EdgeSet missingH, extraH;

    bool valid() const {
        return overlaps.empty() && missingV.empty() && extraV.empty() && missingH.empty() && extraH.empty();
    }
};

/// Checks that `d` is an SVR of `g`. Throws std::invalid_argument when the
/// drawing size differs from g.n or the drawing is malformed.
VisibilityReport validate_svr(const Drawing& d, const GraphPair& g);

/// Vertices met, in order, by the line-of-sight at `at` (perpendicular to
/// the projection axis) from a member of s1 to a member of s2. Every
/// consecutive pair is an edge of the visibility graph along that axis.
/// Throws std::invalid_argument if `at` misses the projection of either set.
std::vector<Vertex> check_thin_overlap(const Drawing& d, std::span<const Vertex> s1, std::span<const Vertex> s2,
                                       Coord at, Axis axis = Axis::Vertical);

/// Number of components C of (component of u) - u whose projection is not
/// contained in that of u. In a valid drawing this never exceeds 2.
/// Throws std::invalid_argument if u is not a cut vertex.
int check_nestedness(const Drawing& d, int n, const EdgeSet& edges, Vertex u, Axis axis = Axis::Vertical);

/// True iff the projections of every two components are strictly ordered.
bool check_no_twist(const Drawing& d, int n, const EdgeSet& edges, Axis axis = Axis::Vertical);

/// A triple (u, v, w) with an endpoint of the projection of w strictly
/// inside proj(u) ∩ proj(v) and low(u) < low(w) < low(v), where low is the
/// bottom (vertical axis) or left (horizontal axis) coordinate. Such a
/// triple forces a cycle, so it never exists in a drawing of a forest.
struct CycleWitness {
    Vertex u, v, w;
};
std::optional<CycleWitness> find_cycle_premise(const Drawing& d, Axis axis = Axis::Vertical);

}  // namespace svr
