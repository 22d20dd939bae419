#include "rforge/three_graph.hpp"

namespace rforge {

Graph link_of_vertex(const ThreeGraph& h, int v) {
    if (v < 0 || v >= h.vertex_count()) throw DomainError("link_of_vertex: bad vertex");
    std::vector<std::pair<int, int>> es;
    for (auto [a, b, c] : h.triples()) {
        if (a == v) es.push_back({b, c});
        else if (b == v) es.push_back({a, c});
        else if (c == v) es.push_back({a, b});
    }
    return Graph(h.vertex_count(), std::move(es));
}

ThreeGraph link_hypergraph(const Graph& g) {
    int apex = g.vertex_count();
    std::vector<Triple> ts;
    for (auto [a, b] : g.edges()) ts.push_back({a, b, apex});
    return ThreeGraph(apex + 1, std::move(ts));
}

ThreeGraph blowup_vertex(const ThreeGraph& h, int v, int t) {
    if (t < 1) throw DomainError("blowup_vertex: need t >= 1");
    if (v < 0 || v >= h.vertex_count()) throw DomainError("blowup_vertex: bad vertex");
    int n = h.vertex_count();
    std::vector<Triple> ts = h.triples();
    for (int copy = 0; copy < t - 1; ++copy) {
        int id = n + copy;
        for (auto [a, b, c] : h.triples()) {
            if (a == v) ts.push_back({id, b, c});
            else if (b == v) ts.push_back({a, id, c});
            else if (c == v) ts.push_back({a, b, id});
        }
    }
    return ThreeGraph(n + t - 1, std::move(ts));
}

ThreeGraph blowup_with(const ThreeGraph& h, int v, const ThreeGraph& f) {
    if (f.vertex_count() < 1) throw DomainError("blowup_with: f needs a vertex");
    ThreeGraph out = blowup_vertex(h, v, f.vertex_count());
    // Class member i is v for i=0, else appended copy h.n-1+i; the class
    // induces f with v playing f's vertex 0.
    auto class_id = [&](int i) { return i == 0 ? v : h.vertex_count() + i - 1; };
    std::vector<Triple> ts = out.triples();
    for (auto [a, b, c] : f.triples())
        ts.push_back({class_id(a), class_id(b), class_id(c)});
    return ThreeGraph(out.vertex_count(), std::move(ts));
}

} // namespace rforge
