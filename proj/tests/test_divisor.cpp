#include <doctest.h>

#include <algorithm>
#include <vector>

#include "ggraph/analysis.hpp"
#include "ggraph/cyclic.hpp"
#include "ggraph/divisor.hpp"
#include "ggraph/graph.hpp"
#include "ggraph/group.hpp"
#include "ggraph/num.hpp"

using namespace ggraph;

namespace {

std::vector<Divisor> to_divisors(long n, const std::vector<long>& ds) {
    auto fact = factorize(n);
    std::vector<Divisor> out;
    for (long d : ds) out.push_back(divisor_of(d, fact));
    return out;
}

std::vector<long> plist(long n) {
    std::vector<long> out;
    for (auto [p, e] : factorize(n)) out.push_back(p);
    return out;
}

Graph element_graph(long n, GraphKind kind) {
    return build_graph(CyclicLattice::build(build_group("Z(" + std::to_string(n) + ")")), kind);
}

}  // namespace

TEST_CASE("divisor arithmetic") {
    auto f60 = factorize(60);
    Divisor d12 = divisor_of(12, f60);
    CHECK(d12.exp == std::vector<int>{2, 1, 0});
    CHECK(d12.value == 12);
    CHECK(phi_of(d12, plist(60)) == 4);
    CHECK(phi_of(divisor_of(1, f60), plist(60)) == 1);

    CHECK(divisor_divides(divisor_of(6, f60), d12));
    CHECK_FALSE(divisor_divides(d12, divisor_of(6, f60)));
    CHECK(divisors_coprime(divisor_of(4, f60), divisor_of(15, f60)));
    CHECK_FALSE(divisors_coprime(divisor_of(6, f60), divisor_of(10, f60)));

    CHECK_THROWS_AS(divisor_of(7, f60), InvalidParameter);
}

TEST_CASE("symbolic difference adjacency") {
    auto f60 = factorize(60);
    auto d = [&](long x) { return divisor_of(x, f60); };
    CHECK(symbolic_diff_adjacent(d(4), d(6)));    // share 2, incomparable
    CHECK_FALSE(symbolic_diff_adjacent(d(2), d(4)));   // comparable
    CHECK_FALSE(symbolic_diff_adjacent(d(3), d(5)));   // coprime
    CHECK_FALSE(symbolic_diff_adjacent(d(6), d(6)));   // same divisor
    CHECK(symbolic_diff_adjacent(d(12), d(30)));

    // matches the element graphs: one representative per divisor pair
    for (long n : {12L, 30L, 36L, 60L}) {
        FiniteGroup G = build_group("Z(" + std::to_string(n) + ")");
        CyclicLattice L = CyclicLattice::build(G);
        Graph du = build_graph(L, GraphKind::DifferenceUndeleted);
        auto fact = factorize(n);
        for (int a = 0; a < L.num_classes(); ++a)
            for (int b = a + 1; b < L.num_classes(); ++b) {
                bool sym = symbolic_diff_adjacent(divisor_of(L.cls(a).subgroup_order, fact),
                                                  divisor_of(L.cls(b).subgroup_order, fact));
                CHECK(sym == du.adjacent(L.cls(a).representative, L.cls(b).representative));
            }
    }
}

TEST_CASE("family classification") {
    auto ps = plist(60);
    FamilyFlags chain = classify_family(to_divisors(60, {1, 2, 4, 12}), ps);
    CHECK(chain.is_chain);
    CHECK_FALSE(chain.is_sperner);
    CHECK(chain.weight == 1 + 1 + 2 + 4);

    FamilyFlags inter = classify_family(to_divisors(60, {6, 10, 15}), ps);
    CHECK_FALSE(inter.is_chain);
    CHECK(inter.is_intersecting);
    CHECK(inter.is_sperner);
    CHECK(inter.weight == 2 + 4 + 8);

    FamilyFlags mixed = classify_family(to_divisors(60, {2, 6, 15}), ps);
    CHECK_FALSE(mixed.is_intersecting);  // gcd(2,15) = 1
    CHECK_FALSE(mixed.is_sperner);       // 2 | 6
}

TEST_CASE("clique optima on the divisor lattice") {
    // power graph of a cyclic p-group is complete
    OmegaDivisorResult p8 = omega_via_divisors(8, GraphKind::Power);
    CHECK(p8.weight_value == 8);
    CHECK(p8.weight_witness == std::vector<long>{1, 2, 4, 8});

    // difference graph of Z_30: cardinality optimum is the triangle
    OmegaDivisorResult d30 = omega_via_divisors(30, GraphKind::Difference);
    CHECK(d30.card_value == 3);
    CHECK(d30.card_witness == std::vector<long>{6, 10, 15});
    CHECK(d30.weight_value == 14);  // phi(6)+phi(10)+phi(15)

    OmegaDivisorResult d12 = omega_via_divisors(12, GraphKind::Difference);
    CHECK(d12.card_value == 2);

    // n = 1 degenerates
    CHECK(omega_via_divisors(1, GraphKind::Power).weight_value == 1);
    CHECK(omega_via_divisors(1, GraphKind::IntersectionPower).weight_value == 1);
    CHECK(omega_via_divisors(1, GraphKind::Difference).card_value == 0);

    CHECK_THROWS_AS(omega_via_divisors(12, GraphKind::EnhancedPower), InvalidParameter);
    CHECK_THROWS_AS(omega_via_divisors(0, GraphKind::Power), PreconditionFailed);
    // 2^5 * 3^3 * 5^2 * 7 * 11 * 13 * 17 * 19 * 23 has 4608 divisors
    CHECK_THROWS_AS(omega_via_divisors(160626866400L, GraphKind::Power), TooManyDivisors);
}

TEST_CASE("divisor optima match the exact graph cliques") {
    for (long n : {12L, 24L, 30L, 36L, 60L, 90L, 100L, 210L}) {
        CliqueResult p = max_clique(element_graph(n, GraphKind::Power));
        REQUIRE(p.exact);
        CHECK(long(p.vertices.size()) == omega_via_divisors(n, GraphKind::Power).weight_value);

        CliqueResult i = max_clique(element_graph(n, GraphKind::IntersectionPower));
        REQUIRE(i.exact);
        CHECK(long(i.vertices.size()) ==
              omega_via_divisors(n, GraphKind::IntersectionPower).weight_value);

        CliqueResult d = max_clique(element_graph(n, GraphKind::Difference));
        REQUIRE(d.exact);
        CHECK(long(d.vertices.size()) == omega_via_divisors(n, GraphKind::Difference).card_value);
    }
}

TEST_CASE("graph to sperner family") {
    Graph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    SpernerFamily f = graph_to_sperner(p3);
    CHECK(f.ground_size == 5);  // 3 vertices + 2 edges
    REQUIRE(f.sets.size() == 3);
    CHECK(f.sets[0] == std::vector<int>{0, 3});
    CHECK(f.sets[1] == std::vector<int>{1, 3, 4});
    CHECK(f.sets[2] == std::vector<int>{2, 4});
    CHECK(f.ground_labels[3] == "e(0,1)");

    CHECK_THROWS_AS(graph_to_sperner(Graph(0)), PreconditionFailed);
}

TEST_CASE("embedding small graphs") {
    Graph c5(5);
    for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
    CyclicEmbedding e5 = embed_in_cyclic(c5);
    CHECK(e5.verified);
    CHECK(e5.primes.size() == 10);
    CHECK(e5.primes[0] == 2);

    Graph p4(4);
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    CHECK(embed_in_cyclic(p4).verified);

    // one vertex, no edges: a single divisor, vacuously verified
    CyclicEmbedding k1 = embed_in_cyclic(Graph(1));
    CHECK(k1.verified);
    CHECK(k1.divisors.size() == 1);
    CHECK(k1.divisors[0].value == 2);

    // P3 with primes 2,3,5 on vertices and 7,11 on edges
    Graph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    CyclicEmbedding e3 = embed_in_cyclic(p3);
    CHECK(e3.verified);
    REQUIRE(e3.divisors.size() == 3);
    CHECK(e3.divisors[0].value == 2 * 7);
    CHECK(e3.divisors[1].value == 3 * 7 * 11);
    CHECK(e3.divisors[2].value == 5 * 11);

    // K12 has 12 + 66 = 78 ground elements, past the prime table
    Graph k12(12);
    for (int i = 0; i < 12; ++i)
        for (int j = i + 1; j < 12; ++j) k12.add_edge(i, j);
    CHECK_THROWS_AS(embed_in_cyclic(k12), GroundSetTooLarge);
}
