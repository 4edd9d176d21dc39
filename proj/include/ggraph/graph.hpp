#pragma once
// Simple undirected graphs over dense vertex ids with bit-row adjacency,
// the four graph constructions derived from a cyclic lattice, and the
// serialization formats.  Construction runs at generator-class level
// first (class pairs are adjacent all-or-none), then expands to element
// level, which keeps M11-sized groups cheap.

#include <optional>
#include <string>
#include <vector>

#include "ggraph/bits.hpp"
#include "ggraph/cyclic.hpp"
#include "ggraph/exec.hpp"

namespace ggraph {

enum class GraphKind { Power, IntersectionPower, EnhancedPower, Difference, DifferenceUndeleted };

// Canonical names: power, ipg, epg, diff, diff_undeleted.
std::string kind_name(GraphKind k);
std::optional<GraphKind> kind_from_name(const std::string& s);

struct VertexInfo {
    std::string label;
    long order = 0;    // element order, or subgroup order for class vertices
    int element = -1;  // originating element id (-1 for imported graphs)
    long weight = 1;   // member count when the vertex stands for a class
};

class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    long m() const;

    void add_edge(int u, int v) {
        adj_.set(u, v);
        adj_.set(v, u);
    }
    bool adjacent(int u, int v) const { return adj_.get(u, v); }
    int degree(int u) const { return adj_.row_popcount(u); }
    const uint64_t* row(int u) const { return adj_.row(u); }
    std::size_t words() const { return adj_.stride(); }

    VertexInfo& vertex(int u) { return verts_[u]; }
    const VertexInfo& vertex(int u) const { return verts_[u]; }

    const std::string& group_name() const { return group_; }
    const std::string& kind() const { return kind_; }
    void set_meta(std::string group, std::string kind) {
        group_ = std::move(group);
        kind_ = std::move(kind);
    }

    // keep may be unsorted; vertices are re-densified in ascending order
    // of original id and provenance records are preserved.
    Graph induced(std::vector<int> keep) const;
    Graph complement() const;
    std::vector<int> isolated() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    BitMatrix adj_;
    std::vector<VertexInfo> verts_;
    std::string group_, kind_;
};

// Adjacency between distinct generator classes under a kind.  Power
// pairs follow containment, intersection pairs follow nontrivial meets
// with the identity adjacent to all, enhanced pairs need one common
// ancestor class, difference is intersection minus power.  The subgraph
// relations (power inside ipg and epg, difference disjoint from power)
// are re-checked on every call.
BitMatrix class_adjacency(const CyclicLattice& L, GraphKind kind);

// One vertex per class, weighted by member count.  Difference drops
// classes with no incident edge (its same-class pairs are never
// adjacent); DifferenceUndeleted keeps every class.
Graph build_class_graph(const CyclicLattice& L, GraphKind kind);

// Element-level graph.  Difference drops isolated vertices, everything
// else keeps all |G| elements.  Throws PreconditionFailed when the
// result would exceed vertex_cap.
Graph build_graph(const CyclicLattice& L, GraphKind kind, long vertex_cap = 20000);

// --- serialization ---

std::string to_json(const Graph& g);
std::string to_dot(const Graph& g);
std::string to_edge_csv(const Graph& g);

// Parses the JSON schema emitted by to_json; throws SchemaError on
// structural problems.
Graph graph_from_json(const std::string& text);

// Whole-file helpers; IoError on failure.
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace ggraph
