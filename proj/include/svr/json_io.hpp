#pragma once

#include <stdexcept>

#include <json.hpp>

#include "svr/drawing.hpp"
#include "svr/graph.hpp"
#include "svr/oracle.hpp"
#include "svr/path_svr.hpp"
#include "svr/reductions.hpp"
#include "svr/visibility.hpp"

/// JSON encodings. Objects use nlohmann::json's ordered std::map, so keys
/// come out sorted and dumps are byte-stable.
namespace svr::io {

using nlohmann::json;

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// [base, eps]
json to_json(Coord c);
Coord coord_from_json(const json& j);

/// {"kind": "rect"|"usq"|"lshape", "coords": {...}}; rect and usq carry
/// l, r, b, t, an L-shape carries l, b, w, h.
json to_json(const Shape& s);
Shape shape_from_json(const json& j);

/// {"family", "unit" (usq only), "n", "shapes": [{"vertex", "kind", "coords"}]}
json to_json(const Drawing& d);
Drawing drawing_from_json(const json& j);

json to_json(const EdgeSet& es);
EdgeSet edges_from_json(const json& j, int n);

/// {"n", "ev", "eh"}
json to_json(const GraphPair& g);
GraphPair graph_pair_from_json(const json& j);

json to_json(const VisibilityReport& r);

json to_json(const sat::Cnf3Instance& f);
sat::Cnf3Instance cnf_from_json(const json& j);

/// Mode, formula, pair and per-vertex roles. Reading rebuilds the index from
/// mode and formula and rejects a stored pair that does not match.
json to_json(const sat::GadgetIndex& idx);
sat::GadgetIndex gadget_index_from_json(const json& j);

/// Decision with the drawing and violations expressed in the labels of `p`.
json to_json(const paths::LsvrDecision& d, const PathPair& p);

json to_json(const oracle::SearchResult& r);
json to_json(const oracle::LsvrCheckReport& r);

}  // namespace svr::io
