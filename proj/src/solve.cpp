#include "rforge/solve.hpp"

#include <algorithm>
#include <numeric>

namespace rforge {

namespace {

void check_vertex_limit(int n, int limit, const char* who) {
    if (n > limit)
        throw SizeLimitExceeded(std::string(who) + ": " + std::to_string(n) +
                                " vertices over exact-search limit " + std::to_string(limit));
}

// Max clique with greedy-coloring bound (Tomita style). Vertices are
// pre-permuted by non-increasing degree, ties by lowest id, so runs are
// reproducible bit for bit.
struct CliqueSolver {
    int n;
    std::vector<Bitset> adj;
    int best = 0;
    std::vector<int> best_set, cur;

    void expand(Bitset cand) {
        // Partition cand into independent classes; a clique meets each once.
        std::vector<int> order, bound;
        order.reserve(cand.count());
        Bitset uncolored = cand;
        int color = 0;
        while (uncolored.any()) {
            ++color;
            Bitset avail = uncolored;
            while (avail.any()) {
                int v = avail.first();
                avail.reset(v);
                uncolored.reset(v);
                avail.subtract(adj[v]);
                order.push_back(v);
                bound.push_back(color);
            }
        }
        for (int i = int(order.size()) - 1; i >= 0; --i) {
            if (int(cur.size()) + bound[i] <= best) return;
            int v = order[i];
            cur.push_back(v);
            Bitset next = cand & adj[v];
            if (next.any()) {
                expand(next);
            } else if (int(cur.size()) > best) {
                best = int(cur.size());
                best_set = cur;
            }
            cur.pop_back();
            cand.reset(v);
        }
    }
};

std::vector<int> degree_order(int n, const std::vector<Bitset>& adj) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
        return adj[a].count() > adj[b].count();
    });
    return perm;
}

IndependenceResult max_clique(int n, const std::vector<Bitset>& adj) {
    if (n == 0) return {};
    std::vector<int> perm = degree_order(n, adj); // solver id -> original id
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    CliqueSolver s;
    s.n = n;
    s.adj.assign(n, Bitset(n));
    for (int u = 0; u < n; ++u)
        adj[perm[u]].for_each([&](int w) { s.adj[u].set(inv[w]); });
    Bitset all(n);
    all.set_all();
    s.expand(all);
    IndependenceResult r;
    r.value = s.best;
    for (int v : s.best_set) r.witness.push_back(perm[v]);
    std::sort(r.witness.begin(), r.witness.end());
    return r;
}

} // namespace

IndependenceResult independence_number(const Graph& g, const SearchLimits& limits) {
    check_vertex_limit(g.vertex_count(), limits.exact_vertices, "independence_number");
    int n = g.vertex_count();
    std::vector<Bitset> co(n, Bitset(n));
    for (int u = 0; u < n; ++u) {
        co[u] = g.neighbors(u).complement();
        co[u].reset(u);
    }
    return max_clique(n, co);
}

IndependenceResult independence_number(const ThreeGraph& h, const SearchLimits& limits) {
    check_vertex_limit(h.vertex_count(), limits.exact_vertices, "independence_number");
    struct Solver {
        const ThreeGraph* h;
        int best = 0;
        std::vector<int> best_set, cur;

        void expand(Bitset cand) {
            if (int(cur.size()) > best) {
                best = int(cur.size());
                best_set = cur;
            }
            while (cand.any()) {
                if (int(cur.size()) + cand.count() <= best) return;
                int v = cand.first();
                cand.reset(v);
                Bitset next = cand;
                for (int a : cur) next.subtract(h->pair_row(a, v));
                cur.push_back(v);
                expand(next);
                cur.pop_back();
            }
        }
    } s;
    s.h = &h;
    Bitset all(h.vertex_count());
    all.set_all();
    s.expand(all);
    IndependenceResult r;
    r.value = s.best;
    r.witness = s.best_set;
    std::sort(r.witness.begin(), r.witness.end());
    return r;
}

namespace {

// Two disjoint sets with no crossing edge, maximizing the smaller side.
// Branch three ways per vertex (left / right / out) with candidate bitsets;
// a candidate enters a side only if it has no edge into the opposite side.
struct BisetSolver {
    const Graph* g = nullptr;
    int target = 0; // 0: optimize; >0: stop once min side reaches target
    bool stopped = false;
    int best = -1;
    std::array<std::vector<int>, 2> best_sides;
    std::array<std::vector<int>, 2> side;

    void record() {
        int v = int(std::min(side[0].size(), side[1].size()));
        if (v > best) {
            best = v;
            best_sides = side;
            if (target > 0 && best >= target) stopped = true;
        }
    }

    void rec(Bitset pl, Bitset pr) {
        if (stopped) return;
        size_t base_l = side[0].size(), base_r = side[1].size();
        record();

        // Dominant moves: a vertex usable on one side only, with no neighbor
        // among the other side's candidates, can be taken greedily. Adding it
        // constrains nothing, so some optimum extends the reduced state.
        bool reduced = true;
        while (reduced && !stopped) {
            reduced = false;
            Bitset only_l = pl;
            only_l.subtract(pr);
            for (int v = only_l.first(); v != -1; v = only_l.next(v)) {
                if (!g->neighbors(v).intersects(pr)) {
                    side[0].push_back(v);
                    pl.reset(v);
                    reduced = true;
                }
            }
            Bitset only_r = pr;
            only_r.subtract(pl);
            for (int v = only_r.first(); v != -1; v = only_r.next(v)) {
                if (!g->neighbors(v).intersects(pl)) {
                    side[1].push_back(v);
                    pr.reset(v);
                    reduced = true;
                }
            }
            if (reduced) record();
        }

        while (!stopped) { // single pass; while gives a breakable scope
            int l = int(side[0].size()), r = int(side[1].size());
            Bitset undecided = pl | pr;
            int goal = target > 0 ? target : best + 1;
            int ub = std::min(l + pl.count(), r + pr.count());
            ub = std::min(ub, (l + r + undecided.count()) / 2);
            if (ub < goal || !undecided.any()) break;

            // Branch on the most constrained vertex: highest degree among the
            // undecided, lowest id on ties.
            int v = -1, vd = -1;
            for (int u = undecided.first(); u != -1; u = undecided.next(u)) {
                int d = g->degree(u);
                if (d > vd) { vd = d; v = u; }
            }

            // Feed the smaller side first so the first dive is balanced.
            int first_side = side[1].size() < side[0].size() ? 1 : 0;
            for (int q : {first_side, 1 - first_side}) {
                const Bitset& p_own = q == 0 ? pl : pr;
                if (!p_own.test(v)) continue;
                // Left/right symmetry: the first committed vertex goes left.
                if (q == 1 && side[0].empty() && side[1].empty()) continue;
                side[q].push_back(v);
                Bitset pl2 = pl, pr2 = pr;
                pl2.reset(v);
                pr2.reset(v);
                (q == 0 ? pr2 : pl2).subtract(g->neighbors(v));
                rec(pl2, pr2);
                side[q].pop_back();
                if (stopped) break;
            }
            if (stopped) break;
            pl.reset(v);
            pr.reset(v);
            rec(pl, pr);
            break;
        }
        side[0].resize(base_l);
        side[1].resize(base_r);
    }
};

} // namespace

MultipartiteResult multipartite_independence(const Graph& g, int k, const SearchLimits& limits) {
    if (k != 2) throw DomainError("multipartite_independence(graph): only k=2 is defined");
    check_vertex_limit(g.vertex_count(), limits.exact_vertices, "multipartite_independence");
    BisetSolver s;
    s.g = &g;
    Bitset all(g.vertex_count());
    all.set_all();
    s.rec(all, all);
    MultipartiteResult r;
    r.value = std::max(s.best, 0);
    r.witness.resize(2);
    for (int sd = 0; sd < 2; ++sd) {
        auto part = s.best_sides[sd];
        std::sort(part.begin(), part.end());
        part.resize(r.value);
        r.witness[sd] = std::move(part);
    }
    return r;
}

std::optional<std::array<std::vector<int>, 2>>
find_bipartite_independent(const Graph& g, int t) {
    if (t < 1) throw DomainError("find_bipartite_independent: need t >= 1");
    if (2 * t > g.vertex_count()) return std::nullopt;
    BisetSolver s;
    s.g = &g;
    s.target = t;
    Bitset all(g.vertex_count());
    all.set_all();
    s.rec(all, all);
    if (s.best < t) return std::nullopt;
    std::array<std::vector<int>, 2> w;
    for (int sd = 0; sd < 2; ++sd) {
        auto part = s.best_sides[sd];
        std::sort(part.begin(), part.end());
        part.resize(t);
        w[sd] = std::move(part);
    }
    return w;
}

namespace {

// Three disjoint sets with no triple meeting all of them, maximizing the
// smallest side. Same scheme as BisetSolver with pair-row filtering.
struct TrisetSolver {
    const ThreeGraph* h = nullptr;
    std::vector<int> degree; // triples through each vertex
    int target = 0;
    bool stopped = false;
    int best = -1;
    std::array<std::vector<int>, 3> best_sides;
    std::array<std::vector<int>, 3> side;

    void init() {
        degree.assign(h->vertex_count(), 0);
        for (auto [a, b, c] : h->triples()) {
            ++degree[a];
            ++degree[b];
            ++degree[c];
        }
    }

    void record() {
        int v = int(std::min({side[0].size(), side[1].size(), side[2].size()}));
        if (v > best) {
            best = v;
            best_sides = side;
            if (target > 0 && best >= target) stopped = true;
        }
    }

    void rec(std::array<Bitset, 3> p) {
        if (stopped) return;
        record();
        if (stopped) return;

        Bitset undecided = p[0] | p[1] | p[2];
        int goal = target > 0 ? target : best + 1;
        int total = int(side[0].size() + side[1].size() + side[2].size()) + undecided.count();
        int ub = total / 3;
        for (int q = 0; q < 3; ++q)
            ub = std::min(ub, int(side[q].size()) + p[q].count());
        if (ub < goal || !undecided.any()) return;

        int v = -1, vd = -1;
        for (int u = undecided.first(); u != -1; u = undecided.next(u))
            if (degree[u] > vd) { vd = degree[u]; v = u; }

        // Part symmetry: commit the first vertex to part 0, the first vertex
        // outside part 0 to part 1. Among open parts, feed smaller first.
        int open_parts = side[0].empty() ? 1 : (side[1].empty() ? 2 : 3);
        std::array<int, 3> by_size{0, 1, 2};
        std::sort(by_size.begin(), by_size.end(), [&](int a, int b) {
            return std::tuple(side[a].size(), a) < std::tuple(side[b].size(), b);
        });
        for (int q : by_size) {
            if (q >= open_parts || !p[q].test(v)) continue;
            auto p2 = p;
            for (int d = 0; d < 3; ++d) p2[d].reset(v);
            // Adding v to part q bans, for each committed w of another part,
            // every completion of {v,w} from the third part.
            int a = (q + 1) % 3, b = (q + 2) % 3;
            for (int w : side[a]) p2[b].subtract(h->pair_row(v, w));
            for (int w : side[b]) p2[a].subtract(h->pair_row(v, w));
            side[q].push_back(v);
            rec(p2);
            side[q].pop_back();
            if (stopped) return;
        }
        for (int d = 0; d < 3; ++d) p[d].reset(v);
        rec(p);
    }
};

} // namespace

MultipartiteResult multipartite_independence(const ThreeGraph& h, int k,
                                             const SearchLimits& limits) {
    if (k != 3) throw DomainError("multipartite_independence(3-graph): only k=3 is defined");
    check_vertex_limit(h.vertex_count(), limits.exact_vertices, "multipartite_independence");
    TrisetSolver s;
    s.h = &h;
    s.init();
    Bitset all(h.vertex_count());
    all.set_all();
    s.rec({all, all, all});
    MultipartiteResult r;
    r.value = std::max(s.best, 0);
    r.witness.resize(3);
    for (int sd = 0; sd < 3; ++sd) {
        auto part = s.best_sides[sd];
        std::sort(part.begin(), part.end());
        part.resize(r.value);
        r.witness[sd] = std::move(part);
    }
    return r;
}

std::optional<std::array<std::vector<int>, 3>>
find_tripartite_independent(const ThreeGraph& h, int t) {
    if (t < 1) throw DomainError("find_tripartite_independent: need t >= 1");
    if (3 * t > h.vertex_count()) return std::nullopt;
    TrisetSolver s;
    s.h = &h;
    s.init();
    s.target = t;
    Bitset all(h.vertex_count());
    all.set_all();
    s.rec({all, all, all});
    if (s.best < t) return std::nullopt;
    std::array<std::vector<int>, 3> w;
    for (int sd = 0; sd < 3; ++sd) {
        auto part = s.best_sides[sd];
        std::sort(part.begin(), part.end());
        part.resize(t);
        w[sd] = std::move(part);
    }
    return w;
}

std::optional<int> girth(const Graph& g) {
    int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n), queue(n);
    for (auto [eu, ev] : g.edges()) {
        // Shortest eu-ev path avoiding the edge itself closes the shortest
        // cycle through that edge.
        std::fill(dist.begin(), dist.end(), -1);
        dist[eu] = 0;
        int head = 0, tail = 0;
        queue[tail++] = eu;
        while (head < tail && dist[ev] == -1) {
            int u = queue[head++];
            if (best != -1 && dist[u] + 2 > best) break;
            g.neighbors(u).for_each([&](int w) {
                if (dist[w] == -1 && !(u == eu && w == ev)) {
                    dist[w] = dist[u] + 1;
                    queue[tail++] = w;
                }
            });
        }
        if (dist[ev] != -1 && (best == -1 || dist[ev] + 1 < best)) best = dist[ev] + 1;
    }
    if (best == -1) return std::nullopt;
    return best;
}

std::optional<int> odd_girth(const Graph& g) {
    int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n), queue(n);
    for (int r = 0; r < n; ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[r] = 0;
        int head = 0, tail = 0;
        queue[tail++] = r;
        while (head < tail) {
            int u = queue[head++];
            g.neighbors(u).for_each([&](int w) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    queue[tail++] = w;
                }
            });
        }
        // An edge joining two vertices at equal-parity distance from r closes
        // an odd walk, and the minimum over all roots is the odd girth.
        for (auto [u, w] : g.edges()) {
            if (dist[u] < 0 || dist[w] < 0) continue;
            if (((dist[u] ^ dist[w]) & 1) == 0) {
                int len = dist[u] + dist[w] + 1;
                if (best == -1 || len < best) best = len;
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

int64_t count_short_cycles(const Graph& g, int max_len) {
    if (max_len < 3) return 0;
    int n = g.vertex_count();
    int64_t count = 0;
    std::vector<int> path;
    Bitset on_path(n);

    // Cycles are rooted at their minimum vertex and traversed with second
    // vertex < last vertex, so each is counted exactly once.
    auto dfs = [&](auto&& self, int v) -> void {
        const Bitset& nb = g.neighbors(v);
        for (int w = nb.first(); w != -1; w = nb.next(w)) {
            if (w == path[0]) {
                if (path.size() >= 3 && path[1] < path.back()) ++count;
            } else if (w > path[0] && !on_path.test(w) && int(path.size()) < max_len) {
                path.push_back(w);
                on_path.set(w);
                self(self, w);
                on_path.reset(w);
                path.pop_back();
            }
        }
    };
    for (int r = 0; r < n; ++r) {
        path.assign(1, r);
        on_path.clear();
        on_path.set(r);
        dfs(dfs, r);
    }
    return count;
}

namespace {

// Source vertex order for mapping searches: per component, start at the
// highest-degree vertex and grow by "most mapped neighbors first".
std::vector<int> mapping_order(const Graph& src) {
    int n = src.vertex_count();
    std::vector<int> order;
    std::vector<bool> placed(n, false);
    while (int(order.size()) < n) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            int mapped = 0;
            for (int u : order) mapped += src.adjacent(u, v);
            auto better = [&](int other) {
                int om = 0;
                for (int u : order) om += src.adjacent(u, other);
                return std::tuple(mapped, src.degree(v), -v) > std::tuple(om, src.degree(other), -other);
            };
            if (pick == -1 || better(pick)) pick = v;
        }
        placed[pick] = true;
        order.push_back(pick);
    }
    return order;
}

struct MapSearch {
    const Graph* src;
    const Graph* dst;
    std::vector<int> order;
    std::vector<int> map; // source id -> target id, -1 unmapped
    bool injective = false;
    bool into_complement = false; // edges land on non-adjacent (maybe equal) pairs
    Bitset used;

    Bitset candidates(int v) const {
        int n = dst->vertex_count();
        Bitset cand(n);
        cand.set_all();
        for (int u = 0; u < src->vertex_count(); ++u) {
            if (map[u] < 0 || !src->adjacent(u, v)) continue;
            if (into_complement) {
                Bitset ok = dst->neighbors(map[u]).complement();
                cand &= ok; // includes map[u] itself: equal images allowed
            } else {
                cand &= dst->neighbors(map[u]);
            }
        }
        if (injective) cand.subtract(used);
        return cand;
    }

    bool find(size_t depth) {
        if (depth == order.size()) return true;
        int v = order[depth];
        Bitset cand = candidates(v);
        for (int t = cand.first(); t != -1; t = cand.next(t)) {
            map[v] = t;
            if (injective) used.set(t);
            if (find(depth + 1)) return true;
            if (injective) used.reset(t);
            map[v] = -1;
        }
        return false;
    }

    uint64_t count(size_t depth) {
        if (depth == order.size()) return 1;
        int v = order[depth];
        Bitset cand = candidates(v);
        uint64_t total = 0;
        for (int t = cand.first(); t != -1; t = cand.next(t)) {
            map[v] = t;
            total += count(depth + 1);
            map[v] = -1;
        }
        return total;
    }
};

} // namespace

HomWitness hom_exists(const Graph& source, const Graph& target, const SearchLimits& limits) {
    check_vertex_limit(source.vertex_count(), limits.hom_source, "hom_exists");
    check_vertex_limit(target.vertex_count(), limits.exact_vertices, "hom_exists(target)");
    MapSearch s{&source, &target, mapping_order(source),
                std::vector<int>(source.vertex_count(), -1),
                false, false, Bitset(target.vertex_count())};
    HomWitness w;
    w.exists = target.vertex_count() > 0 && s.find(0);
    if (w.exists) w.map = s.map;
    return w;
}

uint64_t count_homomorphisms(const Graph& source, const Graph& target,
                             const SearchLimits& limits) {
    check_vertex_limit(source.vertex_count(), limits.hom_count_source, "count_homomorphisms");
    check_vertex_limit(target.vertex_count(), limits.exact_vertices, "count_homomorphisms(target)");
    MapSearch s{&source, &target, mapping_order(source),
                std::vector<int>(source.vertex_count(), -1),
                false, false, Bitset(target.vertex_count())};
    return s.count(0);
}

uint64_t count_homomorphisms_into_complement(const Graph& source, const Graph& avoid,
                                             const SearchLimits& limits) {
    check_vertex_limit(source.vertex_count(), limits.hom_count_source,
                       "count_homomorphisms_into_complement");
    check_vertex_limit(avoid.vertex_count(), limits.exact_vertices,
                       "count_homomorphisms_into_complement(target)");
    MapSearch s{&source, &avoid, mapping_order(source),
                std::vector<int>(source.vertex_count(), -1),
                false, true, Bitset(avoid.vertex_count())};
    return s.count(0);
}

HomWitness contains_copy(const Graph& pattern, const Graph& host, const SearchLimits& limits) {
    check_vertex_limit(pattern.vertex_count(), limits.copy_pattern, "contains_copy");
    check_vertex_limit(host.vertex_count(), limits.exact_vertices, "contains_copy(host)");
    HomWitness w;
    if (pattern.vertex_count() > host.vertex_count()) return w;
    MapSearch s{&pattern, &host, mapping_order(pattern),
                std::vector<int>(pattern.vertex_count(), -1),
                true, false, Bitset(host.vertex_count())};
    w.exists = s.find(0);
    if (w.exists) w.map = s.map;
    return w;
}

namespace {

std::vector<int> triple_mapping_order(const ThreeGraph& pattern) {
    int n = pattern.vertex_count();
    std::vector<int> order;
    std::vector<bool> placed(n, false);
    auto weight = [&](int v) {
        int complete = 0, touch = 0;
        for (auto [a, b, c] : pattern.triples()) {
            int in = (a == v) + (b == v) + (c == v);
            if (!in) continue;
            int done = (a != v && placed[a]) + (b != v && placed[b]) + (c != v && placed[c]);
            if (done == 2) ++complete;
            touch += done;
        }
        return std::tuple(complete, touch, -v);
    };
    for (int k = 0; k < n; ++k) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!placed[v] && (pick == -1 || weight(v) > weight(pick))) pick = v;
        placed[pick] = true;
        order.push_back(pick);
    }
    return order;
}

struct TripleCopySearch {
    const ThreeGraph* pattern;
    const ThreeGraph* host;
    std::vector<int> order;
    std::vector<int> map;
    Bitset used;

    bool find(size_t depth) {
        if (depth == order.size()) return true;
        int v = order[depth];
        Bitset cand(host->vertex_count());
        cand.set_all();
        cand.subtract(used);
        for (auto [a, b, c] : pattern->triples()) {
            int x = -1, y = -1;
            if (a == v) { x = b; y = c; }
            else if (b == v) { x = a; y = c; }
            else if (c == v) { x = a; y = b; }
            else continue;
            if (map[x] >= 0 && map[y] >= 0) cand &= host->pair_row(map[x], map[y]);
        }
        for (int t = cand.first(); t != -1; t = cand.next(t)) {
            map[v] = t;
            used.set(t);
            if (find(depth + 1)) return true;
            used.reset(t);
            map[v] = -1;
        }
        return false;
    }
};

} // namespace

HomWitness contains_copy(const ThreeGraph& pattern, const ThreeGraph& host,
                         const SearchLimits& limits) {
    check_vertex_limit(pattern.vertex_count(), limits.copy_pattern, "contains_copy");
    check_vertex_limit(host.vertex_count(), limits.exact_vertices, "contains_copy(host)");
    HomWitness w;
    if (pattern.vertex_count() > host.vertex_count()) return w;
    TripleCopySearch s{&pattern, &host, triple_mapping_order(pattern),
                       std::vector<int>(pattern.vertex_count(), -1),
                       Bitset(host.vertex_count())};
    w.exists = s.find(0);
    if (w.exists) w.map = s.map;
    return w;
}

} // namespace rforge
