#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "rforge/bitset.hpp"
#include "rforge/errors.hpp"

namespace rforge {

// Simple undirected graph on vertices 0..n-1, immutable after construction.
// Edges are kept both as a canonically sorted list and as adjacency bitsets.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
        if (n < 0) throw DomainError("graph: negative vertex count");
        adj_.assign(n, Bitset(n));
        for (auto& [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw DomainError("graph: edge endpoint out of range");
            if (u == v) throw DomainError("graph: loop edge");
            if (u > v) std::swap(u, v);
            if (!adj_[u].test(v)) {
                adj_[u].set(v);
                adj_[v].set(u);
                edges_.push_back({u, v});
            }
        }
        std::sort(edges_.begin(), edges_.end());
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return int(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool adjacent(int u, int v) const { return u != v && adj_[u].test(v); }
    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

    Graph complement() const {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!adj_[u].test(v)) es.push_back({u, v});
        return Graph(n_, std::move(es));
    }

    // Induced subgraph on `keep`, vertices renumbered in increasing id order.
    Graph induced(const Bitset& keep) const {
        std::vector<int> ids = keep.to_vector();
        std::vector<int> pos(n_, -1);
        for (size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = int(i);
        std::vector<std::pair<int, int>> es;
        for (auto [u, v] : edges_)
            if (pos[u] >= 0 && pos[v] >= 0) es.push_back({pos[u], pos[v]});
        return Graph(int(ids.size()), std::move(es));
    }

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
    std::vector<std::pair<int, int>> edges_;
};

// Vertices with no edge into u_set (members of u_set count themselves when
// they have no neighbor inside the set).
Bitset non_neighborhood(const Graph& g, const Bitset& u_set);

// Tensor square: vertex set V x V, (u1,u2) ~ (v1,v2) iff u1~v1 and u2~v2.
// Vertex (a,b) gets id a*n+b. Edge count is always 2*E(g)^2.
Graph tensor_square(const Graph& g, int vertex_limit = 4096);

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph complete_multipartite(const std::vector<int>& part_sizes);
Graph petersen_graph();

} // namespace rforge
