#pragma once
// Graph measurements: components, diameter, girth, bipartiteness, Euler
// degree parity, cograph and odd-hole searches, perfectness, cliques, and
// twin reduction.  Everything here is a pure function of an immutable
// Graph; the BFS sweep is the one kernel with a parallel variant.

#include <array>
#include <optional>
#include <vector>

#include "ggraph/exec.hpp"
#include "ggraph/graph.hpp"
#include "ggraph/group.hpp"

namespace ggraph {

// One BFS per source vertex.  ecc[v] is the eccentricity of v within its
// component; girth is the length of a shortest cycle, or -1 if the graph
// is acyclic.  The serial and parallel variants share the per-source
// routine and must agree exactly.
struct SweepResult {
    std::vector<int> ecc;
    int girth = -1;
};
SweepResult bfs_sweep(const Graph& g, Exec mode = Exec::Parallel);

struct AnalysisResult {
    std::vector<std::vector<int>> components;  // each sorted, ordered by least member
    std::vector<int> component_of;             // vertex id -> index into components
    std::vector<int> component_diameter;
    int diameter = 0;   // -1 means infinite (more than one component)
    int girth = -1;     // -1 means acyclic
    bool bipartite = true;
    std::vector<int> coloring;  // 0/1 per vertex when bipartite, else empty
    bool all_degrees_even = true;
    bool eulerian_per_component = true;  // each component has a closed trail over its edges
    bool eulerian_global = true;         // one closed trail covers every edge
};
AnalysisResult analyze(const Graph& g, Exec mode = Exec::Parallel);

// Zero-degree vertices of the undeleted difference graph, as element ids.
// Computed at class level, so it works for groups whose element graph
// would be over the vertex cap.
std::vector<int> isolated_vertices_of_difference(const FiniteGroup& G);

// Induced-P4 test.  p4 holds one witness path (a,b,c,d) when the answer
// is negative.  Exhaustive scan, capped at 3000 vertices.
struct CographResult {
    bool cograph = true;
    std::optional<std::array<int, 4>> p4;
};
CographResult is_cograph(const Graph& g);

// Induced odd cycle of length >= 5 and <= max_len, or nullopt if none
// exists within the bound.  max_len must be odd and >= 5.  Throws
// BudgetExceeded when the node budget runs out before the search is
// exhaustive; the default budget is 10^8 expansions, overridable through
// the GGRAPH_BUDGET environment variable.
long hole_search_budget();
std::optional<std::vector<int>> find_odd_hole(const Graph& g, int max_len);
std::optional<std::vector<int>> find_odd_hole(const Graph& g, int max_len, long budget);

struct TwinReduction {
    Graph reduced;
    std::vector<int> class_map;  // original vertex -> reduced vertex
    int rounds = 0;              // number of merges performed
    std::vector<int> survivors;  // reduced vertex -> original vertex
};
TwinReduction twin_reduce(const Graph& g);
// Restricted variants; twin_reduce(g) is modes(g, true, true).
TwinReduction twin_reduce_modes(const Graph& g, bool open_twins, bool closed_twins);

enum class Perfectness { Perfect, Imperfect, Unknown };

struct PerfectnessResult {
    Perfectness status = Perfectness::Perfect;
    std::vector<int> witness;    // odd hole, as vertex ids of the input graph
    bool in_complement = false;  // witness is a hole of the complement
};
PerfectnessResult is_perfect(const Graph& g);

struct CliqueResult {
    std::vector<int> vertices;  // ascending vertex ids of the input graph
    bool exact = true;          // false when the search budget ran out
};
CliqueResult max_clique(const Graph& g);

// True iff the even-order elements are pairwise adjacent in the
// intersection power graph.  Requires a unique involution.
bool even_order_clique_check(const FiniteGroup& G);

}  // namespace ggraph
