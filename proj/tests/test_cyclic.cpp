#include <doctest.h>

#include <algorithm>
#include <vector>

#include "ggraph/cyclic.hpp"
#include "ggraph/group.hpp"
#include "ggraph/num.hpp"

using namespace ggraph;

TEST_CASE("Z(12) generator classes") {
    FiniteGroup G = build_group("Z(12)");
    CyclicLattice L = CyclicLattice::build(G);
    REQUIRE(L.num_classes() == 6);
    std::vector<long> orders, sizes;
    for (int i = 0; i < 6; ++i) {
        orders.push_back(L.cls(i).subgroup_order);
        sizes.push_back(long(L.cls(i).members.size()));
    }
    CHECK(orders == std::vector<long>{1, 2, 3, 4, 6, 12});
    CHECK(sizes == std::vector<long>{1, 1, 2, 2, 2, 4});
    CHECK(L.cls(0).representative == 0);
    // members carry phi(subgroup_order) elements
    for (int i = 0; i < 6; ++i)
        CHECK(long(L.cls(i).members.size()) == totient(L.cls(i).subgroup_order));
    // the only maximal class is the generator class
    CHECK(L.maximal_class_ids() == std::vector<int>{5});
}

TEST_CASE("Q(8) generator classes") {
    FiniteGroup G = build_group("Q(8)");
    CyclicLattice L = CyclicLattice::build(G);
    REQUIRE(L.num_classes() == 5);
    int order4 = 0;
    for (int i = 0; i < 5; ++i)
        if (L.cls(i).subgroup_order == 4) {
            ++order4;
            CHECK(L.cls(i).members.size() == 2);
        }
    CHECK(order4 == 3);
    CHECK(L.maximal_class_ids().size() == 3);
    // every order-4 subgroup contains the involution, so all pairs meet
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            if (L.cls(a).subgroup_order == 4 && L.cls(b).subgroup_order == 4)
                CHECK(L.meets_nontrivially(a, b));
}

TEST_CASE("classes partition the group") {
    for (const char* spec : {"Z(60)", "D(24)", "Q(32)", "Sym(4)", "Z(2) x Z(4)", "SL(2,3)"}) {
        FiniteGroup G = build_group(spec);
        CyclicLattice L = CyclicLattice::build(G);
        long total = 0;
        std::vector<char> seen(G.order(), 0);
        for (int i = 0; i < L.num_classes(); ++i) {
            total += long(L.cls(i).members.size());
            for (int x : L.cls(i).members) {
                CHECK_FALSE(seen[x]);
                seen[x] = 1;
                CHECK(L.class_of(x) == i);
            }
        }
        CHECK(total == G.order());
        // class ids ascend by (subgroup_order, representative)
        for (int i = 1; i < L.num_classes(); ++i) {
            auto& a = L.cls(i - 1);
            auto& b = L.cls(i);
            CHECK((a.subgroup_order < b.subgroup_order ||
                   (a.subgroup_order == b.subgroup_order &&
                    a.representative < b.representative)));
        }
    }
}

TEST_CASE("coprime orders never meet") {
    for (const char* spec : {"Z(30)", "D(60)", "Sym(4)", "Z(3) x Q(8)"}) {
        CyclicLattice L = CyclicLattice::build(build_group(spec));
        for (int a = 0; a < L.num_classes(); ++a)
            for (int b = 0; b < L.num_classes(); ++b)
                if (gcd(L.cls(a).subgroup_order, L.cls(b).subgroup_order) == 1)
                    CHECK_FALSE(L.meets_nontrivially(a, b));
    }
}

TEST_CASE("cyclic groups reduce relations to divisor arithmetic") {
    for (long n = 1; n <= 300; ++n) {
        CyclicLattice L = CyclicLattice::build(build_group("Z(" + std::to_string(n) + ")"));
        REQUIRE(long(L.num_classes()) == long(divisors(n).size()));
        for (int a = 0; a < L.num_classes(); ++a)
            for (int b = 0; b < L.num_classes(); ++b) {
                long oa = L.cls(a).subgroup_order, ob = L.cls(b).subgroup_order;
                CHECK(L.contains(a, b) == (oa % ob == 0));
                CHECK(L.meets_nontrivially(a, b) == (gcd(oa, ob) > 1));
            }
    }
}

TEST_CASE("serial and parallel relation kernels agree") {
    for (const char* spec : {"Z(240)", "Q(64)", "Sym(5)", "Z(2) x Z(2) x Z(15)"}) {
        FiniteGroup G = build_group(spec);
        CyclicLattice s = CyclicLattice::build(G, Exec::Serial);
        CyclicLattice p = CyclicLattice::build(G, Exec::Parallel);
        REQUIRE(s.num_classes() == p.num_classes());
        for (int a = 0; a < s.num_classes(); ++a) {
            CHECK(s.cls(a).members == p.cls(a).members);
            for (int b = 0; b < s.num_classes(); ++b) {
                CHECK(s.contains(a, b) == p.contains(a, b));
                CHECK(s.meets_nontrivially(a, b) == p.meets_nontrivially(a, b));
            }
        }
    }
}

TEST_CASE("pi_of_center") {
    CHECK(pi_of_center(build_group("Z(30)")) == std::vector<long>{2, 3, 5});
    CHECK(pi_of_center(build_group("Sym(4)")).empty());
    CHECK(pi_of_center(build_group("Z(3) x Q(8)")) == std::vector<long>{2, 3});
    CHECK(pi_of_center(build_group("D(12)")) == std::vector<long>{2});
}
