#include "rforge/graph.hpp"

namespace rforge {

Bitset non_neighborhood(const Graph& g, const Bitset& u_set) {
    Bitset seen(g.vertex_count());
    u_set.for_each([&](int u) { seen |= g.neighbors(u); });
    return seen.complement();
}

Graph tensor_square(const Graph& g, int vertex_limit) {
    int n = g.vertex_count();
    if (int64_t(n) * n > vertex_limit)
        throw SizeLimitExceeded("tensor_square: " + std::to_string(n) + "^2 vertices over limit " +
                                std::to_string(vertex_limit));
    std::vector<std::pair<int, int>> es;
    es.reserve(size_t(2) * g.edge_count() * g.edge_count());
    for (auto [u1, v1] : g.edges())
        for (auto [u2, v2] : g.edges()) {
            // Each unordered pair of directed edges gives one tensor edge.
            es.push_back({u1 * n + u2, v1 * n + v2});
            es.push_back({u1 * n + v2, v1 * n + u2});
        }
    return Graph(n * n, std::move(es));
}

Graph empty_graph(int n) { return Graph(n, {}); }

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    return Graph(n, std::move(es));
}

Graph cycle_graph(int n) {
    if (n < 3) throw DomainError("cycle_graph: need at least 3 vertices");
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u) es.push_back({u, (u + 1) % n});
    return Graph(n, std::move(es));
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
    int n = 0;
    for (int s : part_sizes) {
        if (s < 0) throw DomainError("complete_multipartite: negative part");
        n += s;
    }
    std::vector<int> part_of;
    for (size_t p = 0; p < part_sizes.size(); ++p)
        part_of.insert(part_of.end(), part_sizes[p], int(p));
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) es.push_back({u, v});
    return Graph(n, std::move(es));
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) {
        es.push_back({i, (i + 1) % 5});         // outer 5-cycle
        es.push_back({i, i + 5});               // spokes
        es.push_back({i + 5, (i + 2) % 5 + 5}); // inner pentagram
    }
    return Graph(10, std::move(es));
}

} // namespace rforge
