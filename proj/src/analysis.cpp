#include "ggraph/analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace ggraph {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

// Iterate the set bits of a word row.
template <typename F>
void for_bits(const uint64_t* row, std::size_t words, F&& f) {
    for (std::size_t w = 0; w < words; ++w) {
        uint64_t bits = row[w];
        while (bits) {
            f(int(w * 64) + __builtin_ctzll(bits));
            bits &= bits - 1;
        }
    }
}

struct SourceResult {
    int ecc = 0;
    int cycle = kInf;
};

// BFS from s.  The cycle bound is the classic one: a non-tree edge (u,v)
// closes a walk of length dist(u)+dist(v)+1 through s, which always
// contains a cycle, and for a source on a shortest cycle the bound is
// tight, so the minimum over all sources is the girth.
SourceResult bfs_from(const Graph& g, int s, std::vector<int>& dist,
                      std::vector<int>& parent, std::vector<int>& queue) {
    std::fill(dist.begin(), dist.end(), kInf);
    queue.clear();
    dist[s] = 0;
    parent[s] = -1;
    queue.push_back(s);
    SourceResult r;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for_bits(g.row(u), g.words(), [&](int v) {
            if (v == parent[u]) return;
            if (dist[v] == kInf) {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                r.ecc = std::max(r.ecc, dist[v]);
                queue.push_back(v);
            } else {
                r.cycle = std::min(r.cycle, dist[u] + dist[v] + 1);
            }
        });
    }
    return r;
}

}  // namespace

SweepResult bfs_sweep(const Graph& g, Exec mode) {
    int n = g.n();
    SweepResult out;
    out.ecc.assign(n, 0);
    int best_cycle = kInf;
    if (mode == Exec::Parallel) {
#pragma omp parallel
        {
            std::vector<int> dist(n), parent(n), queue;
            queue.reserve(n);
            int local = kInf;
#pragma omp for schedule(dynamic, 8) nowait
            for (int s = 0; s < n; ++s) {
                SourceResult r = bfs_from(g, s, dist, parent, queue);
                out.ecc[s] = r.ecc;
                local = std::min(local, r.cycle);
            }
#pragma omp critical
            best_cycle = std::min(best_cycle, local);
        }
    } else {
        std::vector<int> dist(n), parent(n), queue;
        queue.reserve(n);
        for (int s = 0; s < n; ++s) {
            SourceResult r = bfs_from(g, s, dist, parent, queue);
            out.ecc[s] = r.ecc;
            best_cycle = std::min(best_cycle, r.cycle);
        }
    }
    out.girth = best_cycle == kInf ? -1 : best_cycle;
    return out;
}

AnalysisResult analyze(const Graph& g, Exec mode) {
    int n = g.n();
    AnalysisResult r;
    r.component_of.assign(n, -1);

    std::vector<int> color(n, -1);
    std::vector<int> queue;
    queue.reserve(n);
    for (int s = 0; s < n; ++s) {
        if (r.component_of[s] >= 0) continue;
        int cid = int(r.components.size());
        r.components.emplace_back();
        queue.clear();
        queue.push_back(s);
        r.component_of[s] = cid;
        color[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            r.components[cid].push_back(u);
            for_bits(g.row(u), g.words(), [&](int v) {
                if (r.component_of[v] < 0) {
                    r.component_of[v] = cid;
                    color[v] = color[u] ^ 1;
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    r.bipartite = false;
                }
            });
        }
        std::sort(r.components[cid].begin(), r.components[cid].end());
    }
    if (r.bipartite && n > 0) r.coloring = color;

    for (int u = 0; u < n; ++u)
        if (g.degree(u) % 2 != 0) r.all_degrees_even = false;

    SweepResult sw = bfs_sweep(g, mode);
    r.girth = sw.girth;
    r.component_diameter.assign(r.components.size(), 0);
    for (int u = 0; u < n; ++u) {
        int& d = r.component_diameter[r.component_of[u]];
        d = std::max(d, sw.ecc[u]);
    }
    if (r.components.size() <= 1)
        r.diameter = r.component_diameter.empty() ? 0 : r.component_diameter[0];
    else
        r.diameter = -1;

    // Components are connected, so Euler's criterion reduces to degree
    // parity; the global flag additionally needs every edge in one
    // component.
    r.eulerian_per_component = r.all_degrees_even;
    int edge_comp = -1;
    bool edges_together = true;
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) == 0) continue;
        if (edge_comp < 0)
            edge_comp = r.component_of[u];
        else if (r.component_of[u] != edge_comp)
            edges_together = false;
    }
    r.eulerian_global = r.all_degrees_even && edges_together;
    return r;
}

std::vector<int> isolated_vertices_of_difference(const FiniteGroup& G) {
    CyclicLattice L = CyclicLattice::build(G);
    BitMatrix adj = class_adjacency(L, GraphKind::DifferenceUndeleted);
    std::vector<int> out;
    for (int a = 0; a < L.num_classes(); ++a)
        if (adj.row_popcount(a) == 0)
            out.insert(out.end(), L.cls(a).members.begin(), L.cls(a).members.end());
    std::sort(out.begin(), out.end());
    return out;
}

CographResult is_cograph(const Graph& g) {
    int n = g.n();
    if (n > 3000)
        throw PreconditionFailed("induced-P4 scan capped at 3000 vertices, got " +
                                 std::to_string(n));
    std::size_t W = g.words();
    std::vector<uint64_t> A(W), D(W), cand(W);
    for (int b = 0; b < n; ++b) {
        const uint64_t* rb = g.row(b);
        for (int c = b + 1; c < n; ++c) {
            if (!g.adjacent(b, c)) continue;
            const uint64_t* rc = g.row(c);
            // a-b-c-d induced: a in N(b)\N[c], d in N(c)\N[b], a and d
            // non-adjacent
            for (std::size_t w = 0; w < W; ++w) {
                A[w] = rb[w] & ~rc[w];
                D[w] = rc[w] & ~rb[w];
            }
            A[std::size_t(c) / 64] &= ~(uint64_t(1) << (c % 64));
            D[std::size_t(b) / 64] &= ~(uint64_t(1) << (b % 64));
            bool d_empty = true;
            for (std::size_t w = 0; w < W; ++w) d_empty = d_empty && D[w] == 0;
            if (d_empty) continue;
            std::optional<std::array<int, 4>> hit;
            for_bits(A.data(), W, [&](int a) {
                if (hit) return;
                const uint64_t* ra = g.row(a);
                for (std::size_t w = 0; w < W; ++w) {
                    uint64_t free = D[w] & ~ra[w];
                    if (free) {
                        int d = int(w * 64) + __builtin_ctzll(free);
                        hit = std::array<int, 4>{a, b, c, d};
                        return;
                    }
                }
            });
            if (hit) return {false, hit};
        }
    }
    return {true, std::nullopt};
}

long hole_search_budget() {
    if (const char* s = std::getenv("GGRAPH_BUDGET")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end != s && *end == '\0' && v > 0) return v;
    }
    return 100000000L;
}

namespace {

// DFS over induced paths p0..pk with p0 the least cycle vertex.  forb at
// depth L bans everything that can no longer appear: vertices <= p0, the
// path itself, and neighbors of internal path vertices.  Neighbors of p0
// stay available but only close cycles, never extend.
struct HoleSearcher {
    const Graph& g;
    std::size_t W;
    int bound;
    long budget;
    long nodes = 0;
    std::vector<int> path;
    std::vector<std::vector<uint64_t>> forb;
    std::vector<int> hole;

    HoleSearcher(const Graph& gr, int b, long bud)
        : g(gr), W(gr.words()), bound(b), budget(bud),
          forb(std::size_t(b) + 2, std::vector<uint64_t>(W, 0)) {}

    void spend() {
        if (++nodes > budget)
            throw BudgetExceeded("odd hole search exceeded " + std::to_string(budget) +
                                 " expansions");
    }

    bool dfs() {
        spend();
        int L = int(path.size());
        const uint64_t* rlast = g.row(path[L - 1]);
        const uint64_t* r0 = g.row(path[0]);
        const uint64_t* f = forb[L].data();
        if (L + 1 >= 5 && (L + 1) % 2 == 1) {
            for (std::size_t w = 0; w < W; ++w) {
                uint64_t close = rlast[w] & r0[w] & ~f[w];
                if (close) {
                    hole = path;
                    hole.push_back(int(w * 64) + __builtin_ctzll(close));
                    return true;
                }
            }
        }
        if (L > bound - 2) return false;
        const uint64_t* rprev = rlast;
        for (std::size_t w = 0; w < W; ++w) {
            uint64_t ext = rlast[w] & ~r0[w] & ~f[w];
            while (ext) {
                int v = int(w * 64) + __builtin_ctzll(ext);
                ext &= ext - 1;
                path.push_back(v);
                uint64_t* nf = forb[L + 1].data();
                for (std::size_t k = 0; k < W; ++k) nf[k] = f[k] | rprev[k];
                nf[std::size_t(v) / 64] |= uint64_t(1) << (v % 64);
                if (dfs()) return true;
                path.pop_back();
            }
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_odd_hole(const Graph& g, int max_len) {
    return find_odd_hole(g, max_len, hole_search_budget());
}

std::optional<std::vector<int>> find_odd_hole(const Graph& g, int max_len, long budget) {
    if (max_len < 5 || max_len % 2 == 0)
        throw PreconditionFailed("hole length bound must be odd and at least 5");
    int n = g.n();
    int bound = std::min(max_len, n);
    if (bound < 5) return std::nullopt;
    std::size_t W = g.words();

    HoleSearcher hs(g, bound, budget);
    for (int s = 0; s + 4 < n; ++s) {
        // forb at depth 1: everything <= s
        std::vector<uint64_t>& base = hs.forb[1];
        std::fill(base.begin(), base.end(), 0);
        for (std::size_t w = 0; w < std::size_t(s) / 64; ++w) base[w] = ~uint64_t(0);
        base[std::size_t(s) / 64] = (s % 64 == 63) ? ~uint64_t(0)
                                                   : (uint64_t(1) << (s % 64 + 1)) - 1;
        hs.path.assign(1, s);
        const uint64_t* rs = g.row(s);
        for (std::size_t w = 0; w < W; ++w) {
            uint64_t firsts = rs[w] & ~base[w];
            while (firsts) {
                int p1 = int(w * 64) + __builtin_ctzll(firsts);
                firsts &= firsts - 1;
                hs.path.resize(1);
                hs.path.push_back(p1);
                std::vector<uint64_t>& f2 = hs.forb[2];
                f2 = base;
                f2[std::size_t(p1) / 64] |= uint64_t(1) << (p1 % 64);
                if (hs.dfs()) return hs.hole;
            }
        }
    }
    return std::nullopt;
}

namespace {

uint64_t mix64(uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

// Lexicographically least twin pair among the alive vertices, found by
// hashing rows masked to the alive set and comparing only within equal
// hashes.  closed adds each vertex's own bit before comparing.
std::optional<std::pair<int, int>> least_twin_pair(const Graph& g,
                                                  const std::vector<uint64_t>& alive,
                                                  const std::vector<int>& ids,
                                                  bool closed) {
    std::size_t W = g.words();
    auto masked_word = [&](int v, std::size_t w) {
        uint64_t x = g.row(v)[w] & alive[w];
        if (closed && std::size_t(v) / 64 == w) x |= uint64_t(1) << (v % 64);
        return x;
    };
    std::vector<std::pair<uint64_t, int>> keys;
    keys.reserve(ids.size());
    for (int v : ids) {
        uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::size_t w = 0; w < W; ++w) h = mix64(h ^ masked_word(v, w));
        keys.emplace_back(h, v);
    }
    std::sort(keys.begin(), keys.end());
    auto rows_equal = [&](int a, int b) {
        for (std::size_t w = 0; w < W; ++w)
            if (masked_word(a, w) != masked_word(b, w)) return false;
        return true;
    };
    std::optional<std::pair<int, int>> best;
    std::size_t i = 0;
    while (i < keys.size()) {
        std::size_t j = i;
        while (j < keys.size() && keys[j].first == keys[i].first) ++j;
        if (j - i >= 2) {
            // ids within a run ascend, so the first equal pair found in
            // (outer, inner) order is the run's least
            bool found = false;
            for (std::size_t a = i; a < j && !found; ++a)
                for (std::size_t b = a + 1; b < j && !found; ++b)
                    if (rows_equal(keys[a].second, keys[b].second)) {
                        std::pair<int, int> p{keys[a].second, keys[b].second};
                        if (!best || p < *best) best = p;
                        found = true;
                    }
        }
        i = j;
    }
    return best;
}

}  // namespace

TwinReduction twin_reduce_modes(const Graph& g, bool open_twins, bool closed_twins) {
    int n = g.n();
    std::size_t W = g.words();
    std::vector<uint64_t> alive(W, 0);
    for (int v = 0; v < n; ++v) alive[std::size_t(v) / 64] |= uint64_t(1) << (v % 64);
    std::vector<int> rep(n);
    for (int v = 0; v < n; ++v) rep[v] = v;
    std::vector<int> ids(n);
    for (int v = 0; v < n; ++v) ids[v] = v;

    TwinReduction out{Graph(0), {}, 0, {}};
    while (true) {
        std::optional<std::pair<int, int>> pair;
        if (open_twins) pair = least_twin_pair(g, alive, ids, false);
        if (!pair && closed_twins) pair = least_twin_pair(g, alive, ids, true);
        if (!pair) break;
        auto [u, v] = *pair;
        alive[std::size_t(v) / 64] &= ~(uint64_t(1) << (v % 64));
        rep[v] = u;
        ids.erase(std::lower_bound(ids.begin(), ids.end(), v));
        ++out.rounds;
    }

    out.survivors = ids;
    out.reduced = g.induced(ids);
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = int(i);
    out.class_map.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        int r = v;
        while (rep[r] != r) r = rep[r];
        out.class_map[v] = pos[r];
    }
    return out;
}

TwinReduction twin_reduce(const Graph& g) { return twin_reduce_modes(g, true, true); }

PerfectnessResult is_perfect(const Graph& g) {
    TwinReduction tr = twin_reduce(g);
    const Graph& h = tr.reduced;
    int n = h.n();
    PerfectnessResult res;
    if (n < 5) return res;
    int bound = n % 2 == 1 ? n : n - 1;
    if (bound < 5) return res;
    try {
        if (auto hole = find_odd_hole(h, bound)) {
            res.status = Perfectness::Imperfect;
            for (int v : *hole) res.witness.push_back(tr.survivors[v]);
            return res;
        }
        if (auto hole = find_odd_hole(h.complement(), bound)) {
            res.status = Perfectness::Imperfect;
            res.in_complement = true;
            for (int v : *hole) res.witness.push_back(tr.survivors[v]);
            return res;
        }
    } catch (const BudgetExceeded&) {
        res.status = Perfectness::Unknown;
        return res;
    }
    res.status = Perfectness::Perfect;
    return res;
}

namespace {

// Branch and bound with a greedy-coloring bound (color count caps the
// clique size within the candidate set).
struct CliqueSolver {
    const Graph& g;
    long budget;
    long nodes = 0;
    bool exact = true;
    std::vector<int> best, cur;

    void expand(const std::vector<int>& P) {
        if (P.empty()) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        if (++nodes > budget) {
            exact = false;
            if (cur.size() > best.size()) best = cur;
            return;
        }
        // first-fit coloring; classes listed low color first
        std::vector<std::vector<int>> classes;
        for (int v : P) {
            bool placed = false;
            for (auto& cl : classes) {
                bool conflict = false;
                for (int u : cl)
                    if (g.adjacent(u, v)) {
                        conflict = true;
                        break;
                    }
                if (!conflict) {
                    cl.push_back(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) classes.push_back({v});
        }
        std::vector<int> order;
        std::vector<int> color_of;
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (int v : classes[c]) {
                order.push_back(v);
                color_of.push_back(int(c) + 1);
            }
        for (int idx = int(order.size()) - 1; idx >= 0; --idx) {
            if (cur.size() + std::size_t(color_of[idx]) <= best.size()) return;
            int v = order[idx];
            std::vector<int> next;
            for (int k = 0; k < idx; ++k)
                if (g.adjacent(order[k], v)) next.push_back(order[k]);
            cur.push_back(v);
            expand(next);
            cur.pop_back();
            if (!exact) return;
        }
    }
};

}  // namespace

CliqueResult max_clique(const Graph& g) {
    int n = g.n();
    if (n == 0) return {{}, true};

    // deleting all but one of each open-twin class never changes the
    // clique number: the class is independent and its members swap
    // freely, so repeat until no class has two members
    std::vector<uint64_t> alive(g.words(), 0);
    for (int v = 0; v < n; ++v) alive[std::size_t(v) / 64] |= uint64_t(1) << (v % 64);
    std::vector<int> ids(n);
    for (int v = 0; v < n; ++v) ids[v] = v;
    while (true) {
        auto pair = least_twin_pair(g, alive, ids, false);
        if (!pair) break;
        int v = pair->second;
        alive[std::size_t(v) / 64] &= ~(uint64_t(1) << (v % 64));
        ids.erase(std::lower_bound(ids.begin(), ids.end(), v));
    }
    if (long(ids.size()) > 2000)
        throw PreconditionFailed("clique search needs at most 2000 vertices after twin "
                                 "reduction, have " + std::to_string(ids.size()));

    Graph sub = g.induced(ids);
    CliqueSolver solver{sub, hole_search_budget(), 0, true, {}, {}};
    std::vector<int> all(sub.n());
    for (int v = 0; v < sub.n(); ++v) all[v] = v;
    solver.expand(all);

    CliqueResult res;
    res.exact = solver.exact;
    for (int v : solver.best) res.vertices.push_back(ids[v]);
    std::sort(res.vertices.begin(), res.vertices.end());
    for (std::size_t i = 0; i < res.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < res.vertices.size(); ++j)
            if (!g.adjacent(res.vertices[i], res.vertices[j]))
                throw Error("clique search returned a non-clique");
    return res;
}

bool even_order_clique_check(const FiniteGroup& G) {
    if (!G.unique_involution())
        throw PreconditionFailed(G.name() + " does not have a unique involution");
    CyclicLattice L = CyclicLattice::build(G);
    for (int a = 0; a < L.num_classes(); ++a) {
        if (L.cls(a).subgroup_order % 2 != 0) continue;
        for (int b = a; b < L.num_classes(); ++b) {
            if (L.cls(b).subgroup_order % 2 != 0) continue;
            if (!L.meets_nontrivially(a, b)) return false;
        }
    }
    return true;
}

}  // namespace ggraph
