#pragma once
// Symbolic treatment of the graphs on cyclic groups through the divisor
// lattice of n: clique searches over divisor families (chains,
// intersecting families, intersecting Sperner families) and the
// embedding of arbitrary graphs into the difference graph of a cyclic
// group of squarefree order.  Divisors are exponent vectors over a fixed
// prime list; the embedding never materializes the product of its
// primes, which can exceed any machine integer.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ggraph/graph.hpp"

namespace ggraph {

struct Divisor {
    std::vector<int> exp;       // parallel to the ambient prime list
    std::optional<long> value;  // the plain integer when it fits

    bool operator==(const Divisor& o) const { return exp == o.exp; }
};

// d must divide the number described by n_fact.
Divisor divisor_of(long d, const std::vector<std::pair<long, int>>& n_fact);

// Euler phi from the exponent vector; primes[i] is the i-th ambient prime.
long phi_of(const Divisor& d, const std::vector<long>& primes);

bool divisor_divides(const Divisor& a, const Divisor& b);  // a | b
bool divisors_coprime(const Divisor& a, const Divisor& b);

// Adjacency of distinct element orders in the difference graph of a
// cyclic group: shared prime factor but neither order divides the other.
bool symbolic_diff_adjacent(const Divisor& d1, const Divisor& d2);

struct FamilyFlags {
    bool is_chain = true;         // totally ordered by divisibility
    bool is_intersecting = true;  // pairwise gcd > 1
    bool is_sperner = true;       // no member divides another
    long weight = 0;              // sum of phi over members
};
FamilyFlags classify_family(const std::vector<Divisor>& members,
                            const std::vector<long>& primes);

// Exact clique optima of the three graphs on Z_n computed purely over
// divisor families: chains for the power graph, intersecting families
// (plus the identity) for the intersection power graph, intersecting
// Sperner families for the difference graph.  The difference kind is
// scored under both the cardinality and the total-phi objective, which
// genuinely disagree.  Witness divisor lists are ascending.
struct OmegaDivisorResult {
    long n = 0;
    GraphKind kind = GraphKind::Power;
    long weight_value = 0;  // optimum of the phi objective (the clique number
                            // for power and ipg)
    std::vector<long> weight_witness;
    long card_value = 0;  // difference kind only: optimum family size
    std::vector<long> card_witness;
};
OmegaDivisorResult omega_via_divisors(long n, GraphKind kind);

// Ground set X = V then E; sets[v] = {v} plus v's incident edges, which
// is Sperner by construction and has intersection graph isomorphic to
// the input.
struct SpernerFamily {
    int ground_size = 0;
    std::vector<std::string> ground_labels;
    std::vector<std::vector<int>> sets;
};
SpernerFamily graph_to_sperner(const Graph& g);

// Assigns the first |X| primes to the ground set, turns each F_v into a
// squarefree divisor, and checks symbolically that the induced
// difference-graph adjacency reproduces the input graph exactly.
struct CyclicEmbedding {
    SpernerFamily family;
    std::vector<long> primes;       // one per ground-set member
    std::vector<Divisor> divisors;  // one per vertex
    bool verified = false;
};
CyclicEmbedding embed_in_cyclic(const Graph& g);

}  // namespace ggraph
