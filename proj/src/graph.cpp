#include "svr/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace svr {

std::vector<std::vector<Vertex>> adjacency(int n, const EdgeSet& edges) {
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n) + 1);
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

std::vector<std::vector<Vertex>> components(int n, const EdgeSet& edges, const std::set<Vertex>& removed) {
    const auto adj = adjacency(n, edges);
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 1; s <= n; ++s) {
        if (seen[s] || removed.count(s)) continue;
        std::vector<Vertex> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (Vertex w : adj[comp[i]]) {
                if (seen[w] || removed.count(w)) continue;
                seen[w] = 1;
                comp.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_forest(int n, const EdgeSet& edges) {
    return static_cast<int>(edges.size()) + static_cast<int>(components(n, edges).size()) == n;
}

void GraphPair::check() const {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (const EdgeSet* es : {&edgesV, &edgesH}) {
        for (const Edge& e : *es) {
            if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
            if (e.u < 1 || e.v > n) throw std::invalid_argument("edge endpoint out of range");
        }
    }
}

bool is_permutation_of_n(std::span<const Vertex> pi) {
    std::vector<char> seen(pi.size() + 1, 0);
    for (Vertex v : pi) {
        if (v < 1 || v > static_cast<Vertex>(pi.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

PathPair PathPair::from_permutation(std::vector<Vertex> pi) {
    if (!is_permutation_of_n(pi)) throw std::invalid_argument("not a permutation of 1..n");
    PathPair p;
    p.n = static_cast<int>(pi.size());
    p.pi = std::move(pi);
    p.labels.reserve(p.pi.size());
    for (int v = 1; v <= p.n; ++v) p.labels.push_back(std::to_string(v));
    return p;
}

GraphPair PathPair::graphs() const {
    GraphPair g;
    g.n = n;
    for (int i = 0; i + 1 < n; ++i) {
        g.edgesV.insert(Edge(pi[i], pi[i + 1]));
        g.edgesH.insert(Edge(i + 1, i + 2));
    }
    return g;
}

std::vector<int> PathPair::positions() const {
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) pos[pi[i]] = i + 1;
    return pos;
}

PathPair normalize_path_pair(std::span<const std::string> seqV, std::span<const std::string> seqH) {
    if (seqV.size() != seqH.size())
        throw std::invalid_argument("paths have different lengths");
    std::map<std::string, Vertex> id;
    for (const std::string& s : seqH) {
        const Vertex next = static_cast<Vertex>(id.size()) + 1;
        if (!id.emplace(s, next).second) throw std::invalid_argument("duplicate vertex '" + s + "' in P_H");
    }
    PathPair p;
    p.n = static_cast<int>(seqH.size());
    p.labels.assign(seqH.begin(), seqH.end());
    std::vector<char> seen(static_cast<std::size_t>(p.n) + 1, 0);
    for (const std::string& s : seqV) {
        auto it = id.find(s);
        if (it == id.end()) throw std::invalid_argument("vertex '" + s + "' of P_V is not on P_H");
        if (seen[it->second]) throw std::invalid_argument("duplicate vertex '" + s + "' in P_V");
        seen[it->second] = 1;
        p.pi.push_back(it->second);
    }
    return p;
}

PathPair parse_path_pair(std::string_view text) {
    std::vector<std::vector<std::string>> seqs;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        std::vector<std::string> seq;
        for (std::string tok; ls >> tok;) seq.push_back(tok);
        if (seq.empty() || seq.front().starts_with('#')) continue;
        seqs.push_back(std::move(seq));
    }
    if (seqs.size() != 2)
        throw std::invalid_argument("expected two vertex sequences (P_H, then P_V), found " + std::to_string(seqs.size()));
    return normalize_path_pair(seqs[1], seqs[0]);
}

}  // namespace svr
