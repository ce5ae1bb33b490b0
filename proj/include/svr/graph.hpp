#pragma once

#include <compare>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace svr {

/// Vertices are canonically 1..n.
using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}
    auto operator<=>(const Edge&) const = default;
};

using EdgeSet = std::set<Edge>;

/// Adjacency lists for a graph on 1..n (index 0 unused).
std::vector<std::vector<Vertex>> adjacency(int n, const EdgeSet& edges);

/// Connected components of the graph restricted to vertices not in `removed`.
std::vector<std::vector<Vertex>> components(int n, const EdgeSet& edges,
                                            const std::set<Vertex>& removed = {});

bool is_forest(int n, const EdgeSet& edges);

/// A pair of graphs on the shared vertex set 1..n.
struct GraphPair {
    int n = 0;
    EdgeSet edgesV;  // realized by vertical lines-of-sight
    EdgeSet edgesH;  // realized by horizontal lines-of-sight

    /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
    void check() const;
    bool operator==(const GraphPair&) const = default;
};

/// Two paths on the same vertex set, relabeled so that P_H = (1, ..., n);
/// P_V is stored as the permutation `pi`.
struct PathPair {
    int n = 0;
    std::vector<Vertex> pi;          // P_V = (pi[0], ..., pi[n-1])
    std::vector<std::string> labels; // labels[v-1] is the original name of v

    /// Builds a path pair straight from a permutation; labels are "1".."n".
    static PathPair from_permutation(std::vector<Vertex> pi);

    GraphPair graphs() const;
    /// 1-based position of every vertex along P_V (index 0 unused).
    std::vector<int> positions() const;
};

/// Relabels so that `seqH` becomes (1..n). Throws std::invalid_argument on
/// duplicates or when the two sequences are not over the same set.
PathPair normalize_path_pair(std::span<const std::string> seqV, std::span<const std::string> seqH);

/// Path-pair text: the first non-empty line lists P_H, the second P_V;
/// names are separated by whitespace or commas. Lines starting with '#'
/// are ignored.
PathPair parse_path_pair(std::string_view text);

bool is_permutation_of_n(std::span<const Vertex> pi);

}  // namespace svr
