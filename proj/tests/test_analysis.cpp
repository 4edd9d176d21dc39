#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <vector>

#include "ggraph/analysis.hpp"
#include "ggraph/cyclic.hpp"
#include "ggraph/graph.hpp"
#include "ggraph/group.hpp"

using namespace ggraph;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph random_graph(int n, double p, uint64_t seed) {
    Graph g(n);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

Graph element_diff(const std::string& spec) {
    return build_graph(CyclicLattice::build(build_group(spec)), GraphKind::Difference);
}

// An induced odd cycle of length >= 5, checked pair by pair.
bool valid_hole(const Graph& g, const std::vector<int>& h) {
    int k = int(h.size());
    if (k < 5 || k % 2 == 0) return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool want = j == i + 1 || (i == 0 && j == k - 1);
            if (g.adjacent(h[i], h[j]) != want) return false;
        }
    return true;
}

// SPGT applied directly, without twin reduction, for cross-checking
// is_perfect on small graphs.
Perfectness spgt_direct(const Graph& g) {
    int bound = g.n() | 1;
    if (bound < 5) return Perfectness::Perfect;
    if (find_odd_hole(g, bound)) return Perfectness::Imperfect;
    if (find_odd_hole(g.complement(), bound)) return Perfectness::Imperfect;
    return Perfectness::Perfect;
}

}  // namespace

TEST_CASE("analyze on fixed shapes") {
    AnalysisResult c4 = analyze(cycle(4));
    CHECK(c4.components.size() == 1);
    CHECK(c4.diameter == 2);
    CHECK(c4.girth == 4);
    CHECK(c4.bipartite);
    CHECK(c4.all_degrees_even);
    CHECK(c4.eulerian_global);

    AnalysisResult c5 = analyze(cycle(5));
    CHECK(c5.diameter == 2);
    CHECK(c5.girth == 5);
    CHECK_FALSE(c5.bipartite);

    Graph k33(6);
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) k33.add_edge(i, j);
    AnalysisResult a33 = analyze(k33);
    CHECK(a33.diameter == 2);
    CHECK(a33.girth == 4);
    CHECK(a33.bipartite);
    CHECK_FALSE(a33.all_degrees_even);

    // two disjoint triangles
    Graph tt(6);
    tt.add_edge(0, 1);
    tt.add_edge(1, 2);
    tt.add_edge(2, 0);
    tt.add_edge(3, 4);
    tt.add_edge(4, 5);
    tt.add_edge(5, 3);
    AnalysisResult att = analyze(tt);
    CHECK(att.components.size() == 2);
    CHECK(att.diameter == -1);
    CHECK(att.component_diameter == std::vector<int>{1, 1});
    CHECK(att.girth == 3);
    CHECK_FALSE(att.bipartite);
    CHECK(att.eulerian_per_component);
    CHECK_FALSE(att.eulerian_global);

    AnalysisResult empty = analyze(Graph(0));
    CHECK(empty.components.empty());
    CHECK(empty.diameter == 0);
    CHECK(empty.girth == -1);

    // a tree is acyclic
    Graph path(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    CHECK(analyze(path).girth == -1);
    CHECK(analyze(path).diameter == 3);
}

TEST_CASE("serial and parallel sweeps agree") {
    for (uint64_t seed : {1u, 2u, 3u}) {
        Graph g = random_graph(200, 0.05, seed);
        SweepResult s = bfs_sweep(g, Exec::Serial);
        SweepResult p = bfs_sweep(g, Exec::Parallel);
        CHECK(s.ecc == p.ecc);
        CHECK(s.girth == p.girth);
    }
    Graph d = element_diff("Z(360)");
    SweepResult s = bfs_sweep(d, Exec::Serial);
    SweepResult p = bfs_sweep(d, Exec::Parallel);
    CHECK(s.ecc == p.ecc);
    CHECK(s.girth == p.girth);
}

TEST_CASE("girth via sweep matches a per-edge BFS oracle") {
    // remove each edge in turn and measure the distance its endpoints
    // keep; the shortest such cycle is the girth
    for (uint64_t seed : {7u, 8u, 9u, 10u}) {
        Graph g = random_graph(40, 0.08, seed);
        int best = -1;
        for (int u = 0; u < g.n(); ++u)
            for (int v = u + 1; v < g.n(); ++v) {
                if (!g.adjacent(u, v)) continue;
                // BFS from u to v avoiding the edge uv
                std::vector<int> dist(g.n(), -1), queue{u};
                dist[u] = 0;
                for (std::size_t h = 0; h < queue.size(); ++h) {
                    int x = queue[h];
                    for (int y = 0; y < g.n(); ++y) {
                        if (!g.adjacent(x, y) || dist[y] >= 0) continue;
                        if ((x == u && y == v) || (x == v && y == u)) continue;
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
                if (dist[v] >= 0 && (best < 0 || dist[v] + 1 < best)) best = dist[v] + 1;
            }
        CHECK(bfs_sweep(g).girth == best);
    }
}

TEST_CASE("isolated vertices of the difference graph") {
    FiniteGroup z6 = build_group("Z(6)");
    std::vector<int> all{0, 1, 2, 3, 4, 5};
    CHECK(isolated_vertices_of_difference(z6) == all);

    // Z(12): identity, the four generators, and the prime-order
    // elements 6 (order 2) and 4, 8 (order 3)
    FiniteGroup z12 = build_group("Z(12)");
    CHECK(isolated_vertices_of_difference(z12) == std::vector<int>{0, 1, 4, 5, 6, 7, 8, 11});

    FiniteGroup q8 = build_group("Q(8)");
    std::vector<int> expect{0, *q8.unique_involution()};
    std::sort(expect.begin(), expect.end());
    CHECK(isolated_vertices_of_difference(q8) == expect);
}

TEST_CASE("cograph detection") {
    CHECK(is_cograph(complete(4)).cograph);
    CHECK(is_cograph(Graph(5)).cograph);

    Graph p4(4);
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    CographResult r = is_cograph(p4);
    REQUIRE_FALSE(r.cograph);
    REQUIRE(r.p4.has_value());
    auto [a, b, c, d] = *r.p4;
    CHECK(p4.adjacent(a, b));
    CHECK(p4.adjacent(b, c));
    CHECK(p4.adjacent(c, d));
    CHECK_FALSE(p4.adjacent(a, c));
    CHECK_FALSE(p4.adjacent(a, d));
    CHECK_FALSE(p4.adjacent(b, d));

    // P(Z_4 x Z_2) is a cograph even though the difference graph is not
    // null, so cograph power graphs do not force a null difference
    Graph pz = build_graph(CyclicLattice::build(build_group("Z(4) x Z(2)")), GraphKind::Power);
    CHECK(is_cograph(pz).cograph);

    // C5 contains an induced P4
    CHECK_FALSE(is_cograph(cycle(5)).cograph);
}

TEST_CASE("odd hole search") {
    auto h5 = find_odd_hole(cycle(5), 5);
    REQUIRE(h5.has_value());
    CHECK(valid_hole(cycle(5), *h5));

    CHECK_FALSE(find_odd_hole(cycle(4), 5).has_value());
    CHECK_FALSE(find_odd_hole(complete(6), 7).has_value());

    // C7: invisible below its length, found at 7
    CHECK_FALSE(find_odd_hole(cycle(7), 5).has_value());
    auto h7 = find_odd_hole(cycle(7), 7);
    REQUIRE(h7.has_value());
    CHECK(valid_hole(cycle(7), *h7));

    // bipartite graphs have no odd cycles at all
    for (uint64_t seed : {21u, 22u}) {
        Graph g(30);
        std::mt19937_64 rng(seed);
        for (int i = 0; i < 15; ++i)
            for (int j = 15; j < 30; ++j)
                if (rng() & 1) g.add_edge(i, j);
        CHECK_FALSE(find_odd_hole(g, 29).has_value());
    }

    // any hole returned on a random graph really is one
    for (uint64_t seed : {31u, 32u, 33u}) {
        Graph g = random_graph(30, 0.2, seed);
        auto h = find_odd_hole(g, 9);
        if (h) CHECK(valid_hole(g, *h));
    }

    CHECK_THROWS_AS(find_odd_hole(cycle(5), 4), PreconditionFailed);
    CHECK_THROWS_AS(find_odd_hole(cycle(5), 3), PreconditionFailed);
    // a complete graph has no holes, so a tiny budget must drain
    CHECK_THROWS_AS(find_odd_hole(complete(60), 59, 10), BudgetExceeded);
}

TEST_CASE("hole search budget override") {
    CHECK(hole_search_budget() == 100000000L);
    setenv("GGRAPH_BUDGET", "12345", 1);
    CHECK(hole_search_budget() == 12345);
    setenv("GGRAPH_BUDGET", "junk", 1);
    CHECK(hole_search_budget() == 100000000L);
    unsetenv("GGRAPH_BUDGET");
}

TEST_CASE("twin reduction") {
    // each side of K33 collapses to a point, then the leftover edge is a
    // closed-twin pair, so the fixpoint is a single vertex in 5 rounds
    Graph k33(6);
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) k33.add_edge(i, j);
    TwinReduction t = twin_reduce(k33);
    CHECK(t.reduced.n() == 1);
    CHECK(t.reduced.m() == 0);
    CHECK(t.rounds == 5);

    // complete graphs collapse to a point
    CHECK(twin_reduce(complete(7)).reduced.n() == 1);

    // C4: open twins take it to K2, closed twins finish the job; with
    // closed merging off it stops at the single edge
    CHECK(twin_reduce(cycle(4)).reduced.n() == 1);
    TwinReduction c4 = twin_reduce_modes(cycle(4), true, false);
    CHECK(c4.reduced.n() == 2);
    CHECK(c4.reduced.m() == 1);

    // C5 is twin-free
    CHECK(twin_reduce(cycle(5)).rounds == 0);

    // open-only mode cannot merge the closed-twin pairs of K4
    CHECK(twin_reduce_modes(complete(4), true, false).reduced.n() == 4);
    CHECK(twin_reduce_modes(complete(4), false, true).reduced.n() == 1);

    for (uint64_t seed : {41u, 42u, 43u}) {
        Graph g = random_graph(60, 0.2, seed);
        TwinReduction tr = twin_reduce(g);
        // idempotent
        CHECK(twin_reduce(tr.reduced).rounds == 0);
        // class_map sends every survivor to itself
        REQUIRE(int(tr.survivors.size()) == tr.reduced.n());
        for (int v = 0; v < tr.reduced.n(); ++v) CHECK(tr.class_map[tr.survivors[v]] == v);
        for (int x = 0; x < g.n(); ++x) {
            CHECK(tr.class_map[x] >= 0);
            CHECK(tr.class_map[x] < tr.reduced.n());
        }
    }
}

TEST_CASE("perfectness") {
    CHECK(is_perfect(cycle(4)).status == Perfectness::Perfect);
    CHECK(is_perfect(complete(5)).status == Perfectness::Perfect);
    CHECK(is_perfect(Graph(3)).status == Perfectness::Perfect);

    PerfectnessResult c5 = is_perfect(cycle(5));
    REQUIRE(c5.status == Perfectness::Imperfect);
    CHECK(valid_hole(cycle(5), c5.witness));

    PerfectnessResult c7 = is_perfect(cycle(7));
    REQUIRE(c7.status == Perfectness::Imperfect);
    CHECK_FALSE(c7.in_complement);
    CHECK(valid_hole(cycle(7), c7.witness));

    // the complement of C7 has no odd hole of its own length but its
    // complement (C7 itself) does
    PerfectnessResult cc7 = is_perfect(cycle(7).complement());
    REQUIRE(cc7.status == Perfectness::Imperfect);
    CHECK(valid_hole(cycle(7), cc7.witness) == cc7.in_complement);

    // bipartite graphs are perfect
    for (uint64_t seed : {51u, 52u}) {
        Graph g(24);
        std::mt19937_64 rng(seed);
        for (int i = 0; i < 12; ++i)
            for (int j = 12; j < 24; ++j)
                if (rng() & 1) g.add_edge(i, j);
        CHECK(is_perfect(g).status == Perfectness::Perfect);
    }

    // twin reduction does not change the verdict
    for (uint64_t seed : {61u, 62u, 63u, 64u}) {
        Graph g = random_graph(30, 0.25, seed);
        CHECK(is_perfect(g).status == spgt_direct(g));
    }
    Graph d30 = element_diff("Z(30)");
    CHECK(is_perfect(d30).status == Perfectness::Perfect);
    CHECK(spgt_direct(d30) == Perfectness::Perfect);
    Graph d60 = element_diff("Z(60)");
    REQUIRE(d60.n() <= 60);
    CHECK(is_perfect(d60).status == spgt_direct(d60));

    // witnesses map back to the input graph
    PerfectnessResult p60 = is_perfect(d60);
    REQUIRE(p60.status == Perfectness::Imperfect);
    if (!p60.in_complement) CHECK(valid_hole(d60, p60.witness));
    else CHECK(valid_hole(d60.complement(), p60.witness));
}

TEST_CASE("max clique") {
    CHECK(max_clique(complete(5)).vertices.size() == 5);
    CHECK(max_clique(cycle(5)).vertices.size() == 2);
    CHECK(max_clique(Graph(4)).vertices.size() == 1);
    CHECK(max_clique(Graph(0)).vertices.empty());

    CliqueResult d30 = max_clique(element_diff("Z(30)"));
    CHECK(d30.exact);
    CHECK(d30.vertices.size() == 3);

    // against exhaustive subset search on small random graphs
    for (uint64_t seed : {71u, 72u, 73u}) {
        Graph g = random_graph(18, 0.4, seed);
        int best = 0;
        for (unsigned mask = 0; mask < 1u << 18; ++mask) {
            std::vector<int> s;
            for (int v = 0; v < 18; ++v)
                if (mask >> v & 1u) s.push_back(v);
            if (int(s.size()) <= best) continue;
            bool ok = true;
            for (std::size_t i = 0; i < s.size() && ok; ++i)
                for (std::size_t j = i + 1; j < s.size(); ++j)
                    if (!g.adjacent(s[i], s[j])) {
                        ok = false;
                        break;
                    }
            if (ok) best = int(s.size());
        }
        CliqueResult r = max_clique(g);
        CHECK(r.exact);
        CHECK(int(r.vertices.size()) == best);
        for (std::size_t i = 0; i < r.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < r.vertices.size(); ++j)
                CHECK(g.adjacent(r.vertices[i], r.vertices[j]));
    }
}

TEST_CASE("even-order clique check") {
    CHECK(even_order_clique_check(build_group("Q(8)")));
    CHECK(even_order_clique_check(build_group("Q(32)")));
    CHECK(even_order_clique_check(build_group("SL(2,3)")));
    CHECK(even_order_clique_check(build_group("Z(4)")));
    CHECK_THROWS_AS(even_order_clique_check(build_group("Z(2) x Z(2)")), PreconditionFailed);
    CHECK_THROWS_AS(even_order_clique_check(build_group("Z(15)")), PreconditionFailed);
}
