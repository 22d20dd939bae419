#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "rforge/bitset.hpp"
#include "rforge/errors.hpp"
#include "rforge/graph.hpp"

namespace rforge {

using Triple = std::array<int, 3>;

// 3-uniform hypergraph on vertices 0..n-1, immutable after construction.
// Triples are stored canonically sorted, and additionally as "pair rows":
// pair_row(u,v) is the bitset of w completing {u,v,w} to an edge. The rows
// are what makes candidate filtering in the search kernels cheap.
class ThreeGraph {
public:
    ThreeGraph() = default;

    ThreeGraph(int n, std::vector<Triple> triples) : n_(n) {
        if (n < 0) throw DomainError("3-graph: negative vertex count");
        rows_.assign(size_t(n) * n, Bitset(n));
        for (auto t : triples) {
            std::sort(t.begin(), t.end());
            auto [a, b, c] = t;
            if (a < 0 || c >= n) throw DomainError("3-graph: vertex out of range");
            if (a == b || b == c) throw DomainError("3-graph: repeated vertex in triple");
            if (!rows_[row_id(a, b)].test(c)) {
                triples_.push_back(t);
                add_rows(a, b, c);
            }
        }
        std::sort(triples_.begin(), triples_.end());
    }

    int vertex_count() const { return n_; }
    int triple_count() const { return int(triples_.size()); }
    const std::vector<Triple>& triples() const { return triples_; }

    bool has_triple(int a, int b, int c) const {
        return a != b && rows_[row_id(a, b)].test(c);
    }

    // w such that {u,v,w} is an edge.
    const Bitset& pair_row(int u, int v) const { return rows_[row_id(u, v)]; }

    bool operator==(const ThreeGraph& o) const {
        return n_ == o.n_ && triples_ == o.triples_;
    }

    ThreeGraph complement() const {
        std::vector<Triple> ts;
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b)
                for (int c = b + 1; c < n_; ++c)
                    if (!has_triple(a, b, c)) ts.push_back({a, b, c});
        return ThreeGraph(n_, std::move(ts));
    }

    ThreeGraph induced(const Bitset& keep) const {
        std::vector<int> ids = keep.to_vector();
        std::vector<int> pos(n_, -1);
        for (size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = int(i);
        std::vector<Triple> ts;
        for (auto [a, b, c] : triples_)
            if (pos[a] >= 0 && pos[b] >= 0 && pos[c] >= 0)
                ts.push_back({pos[a], pos[b], pos[c]});
        return ThreeGraph(int(ids.size()), std::move(ts));
    }

private:
    size_t row_id(int u, int v) const { return size_t(u) * n_ + v; }

    void add_rows(int a, int b, int c) {
        rows_[row_id(a, b)].set(c); rows_[row_id(b, a)].set(c);
        rows_[row_id(a, c)].set(b); rows_[row_id(c, a)].set(b);
        rows_[row_id(b, c)].set(a); rows_[row_id(c, b)].set(a);
    }

    int n_ = 0;
    std::vector<Triple> triples_;
    std::vector<Bitset> rows_;
};

// Link of vertex v: graph on the same vertex ids, {a,b} an edge iff {v,a,b}
// is a triple. v itself is isolated in the result.
Graph link_of_vertex(const ThreeGraph& h, int v);

// Link hypergraph of a graph g: apex vertex u (id = |V(g)|) plus one triple
// {u,a,b} for every edge {a,b} of g.
ThreeGraph link_hypergraph(const Graph& g);

// Replace vertex v by t mutually "parallel" copies: each copy inherits every
// triple of v, and no triple joins two copies. The original keeps its id,
// the t-1 new copies are appended as ids n, n+1, ...
ThreeGraph blowup_vertex(const ThreeGraph& h, int v, int t);

// Blow v up into a copy of f: the class {v, copies...} induces f (v plays
// f's vertex 0) and every class member inherits v's triples into the rest.
ThreeGraph blowup_with(const ThreeGraph& h, int v, const ThreeGraph& f);

} // namespace rforge
