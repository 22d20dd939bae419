#include "rforge/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace rforge {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError("json: parse error at byte " + std::to_string(e.byte) + ": " +
                          e.what());
    }
}

int get_n(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw DomainError("json: missing integer field \"n\"");
    return j["n"].get<int>();
}

} // namespace

std::string to_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    auto& edges = j["edges"] = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return j.dump(2) + "\n";
}

std::string to_json(const ThreeGraph& h) {
    json j;
    j["n"] = h.vertex_count();
    auto& triples = j["triples"] = json::array();
    for (auto [a, b, c] : h.triples()) triples.push_back({a, b, c});
    return j.dump(2) + "\n";
}

Graph graph_from_json(const std::string& text) {
    json j = parse(text);
    int n = get_n(j);
    if (!j.contains("edges") || !j["edges"].is_array())
        throw DomainError("json: missing array field \"edges\"");
    std::vector<std::pair<int, int>> es;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw DomainError("json: edge entries must be pairs");
        es.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return Graph(n, std::move(es));
}

ThreeGraph three_graph_from_json(const std::string& text) {
    json j = parse(text);
    int n = get_n(j);
    if (!j.contains("triples") || !j["triples"].is_array())
        throw DomainError("json: missing array field \"triples\"");
    std::vector<Triple> ts;
    for (const auto& t : j["triples"]) {
        if (!t.is_array() || t.size() != 3)
            throw DomainError("json: triple entries must have 3 vertices");
        ts.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
    }
    return ThreeGraph(n, std::move(ts));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph(const std::string& path) { return graph_from_json(read_file(path)); }

ThreeGraph load_three_graph(const std::string& path) {
    return three_graph_from_json(read_file(path));
}

void save_json(const std::string& path, const std::string& payload) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write " + path);
    out << payload;
}

} // namespace rforge
