#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "ggraph/group.hpp"
#include "ggraph/num.hpp"

using namespace ggraph;

namespace {

std::map<long, int> order_multiset(const FiniteGroup& G) {
    std::map<long, int> out;
    for (int g = 0; g < G.order(); ++g) ++out[G.element_order(g)];
    return out;
}

}  // namespace

TEST_CASE("parser rejects malformed specs") {
    CHECK_THROWS_AS(build_group("Z(6"), SyntaxError);
    CHECK_THROWS_AS(build_group("Z(6) y Z(2)"), SyntaxError);
    CHECK_THROWS_AS(build_group(""), SyntaxError);
    CHECK_THROWS_AS(build_group("Z(6),"), SyntaxError);
    CHECK_THROWS_AS(build_group("Z()"), InvalidParameter);
    CHECK_THROWS_AS(build_group("Z(2,3)"), InvalidParameter);
    CHECK_THROWS_AS(build_group("Foo(3)"), InvalidParameter);
    CHECK_THROWS_AS(build_group("Q(12)"), InvalidParameter);  // not a 2-power >= 8
    CHECK_THROWS_AS(build_group("D(7)"), InvalidParameter);   // odd order
    CHECK_THROWS_AS(build_group("PSL(2,6)"), NotAPrimePower);
}

TEST_CASE("order cap is enforced") {
    BuildOptions small;
    small.order_cap = 1000;
    CHECK_THROWS_AS(build_group("Z(1001)", small), OrderLimitExceeded);
    CHECK_THROWS_AS(build_group("Z(40) x Z(40)", small), OrderLimitExceeded);
    CHECK(build_group("Z(1000)", small).order() == 1000);
}

TEST_CASE("identity and inverses") {
    for (const char* spec : {"Z(12)", "D(12)", "Q(16)", "Sym(4)", "Z(3) x Q(8)"}) {
        FiniteGroup G = build_group(spec);
        CHECK(G.element_order(0) == 1);
        for (int g = 0; g < G.order(); ++g) {
            CHECK(G.mul(0, g) == g);
            CHECK(G.mul(g, 0) == g);
            CHECK(G.mul(g, G.inv(g)) == 0);
        }
    }
}

TEST_CASE("element orders of Z(6)") {
    FiniteGroup G = build_group("Z(6)");
    std::vector<long> orders;
    for (int g = 0; g < 6; ++g) orders.push_back(G.element_order(g));
    std::sort(orders.begin(), orders.end());
    CHECK(orders == std::vector<long>{1, 2, 3, 3, 6, 6});
}

TEST_CASE("element_order equals the naive minimum") {
    for (const char* spec : {"Z(1998)", "D(2000)", "Q(64)", "Sym(6)", "Z(4) x Z(50)"}) {
        FiniteGroup G = build_group(spec);
        REQUIRE(G.order() <= 2000);
        for (int g = 0; g < G.order(); ++g) {
            long k = 1;
            int x = g;
            while (x != 0) {
                x = G.mul(x, g);
                ++k;
            }
            CHECK(G.element_order(g) == k);
        }
    }
}

TEST_CASE("cyclic_subgroup is closed under multiplication and inverse") {
    for (const char* spec : {"Z(24)", "D(20)", "Q(32)", "Sym(4)", "SL(2,3)"}) {
        FiniteGroup G = build_group(spec);
        for (int g = 0; g < G.order(); ++g) {
            std::vector<int> H = G.cyclic_subgroup(g);
            CHECK(std::is_sorted(H.begin(), H.end()));
            CHECK(long(H.size()) == G.element_order(g));
            for (int a : H) {
                CHECK(std::binary_search(H.begin(), H.end(), G.inv(a)));
                for (int b : H) CHECK(std::binary_search(H.begin(), H.end(), G.mul(a, b)));
            }
        }
    }
}

TEST_CASE("coprime products are cyclic") {
    CHECK(order_multiset(build_group("Z(3) x Z(4)")) == order_multiset(build_group("Z(12)")));
    CHECK(order_multiset(build_group("Z(5) x Z(9) x Z(2)")) ==
          order_multiset(build_group("Z(90)")));
    // and a non-coprime product is not
    CHECK(order_multiset(build_group("Z(4) x Z(2)")) != order_multiset(build_group("Z(8)")));
    CHECK_FALSE(build_group("Z(4) x Z(2)").is_cyclic());
    CHECK(build_group("Z(3) x Z(4)").is_cyclic());
}

TEST_CASE("unique involution detection") {
    CHECK(build_group("Q(8)").unique_involution().has_value());
    CHECK(build_group("Z(4)").unique_involution().has_value());
    CHECK_FALSE(build_group("Z(2) x Z(2)").unique_involution().has_value());
    CHECK_FALSE(build_group("Z(15)").unique_involution().has_value());
    CHECK_FALSE(build_group("D(12)").unique_involution().has_value());
}

TEST_CASE("centers") {
    CHECK(build_group("Sym(3)").center() == std::vector<int>{0});
    CHECK(build_group("Sym(4)").center() == std::vector<int>{0});
    CHECK(build_group("Q(8)").center().size() == 2);
    CHECK(build_group("D(12)").center().size() == 2);
    CHECK(build_group("Z(3) x Q(8)").center().size() == 6);
    CHECK(build_group("Z(30)").center().size() == 30);
}

TEST_CASE("generalized quaternion structure") {
    for (long q : {8L, 16L, 32L, 64L}) {
        FiniteGroup G = build_group("Q(" + std::to_string(q) + ")");
        CHECK(G.order() == q);
        CHECK(G.unique_involution().has_value());
        CHECK(G.elements_of_order(2).size() == 1);
        // 2^(n-2)+1 cyclic subgroups of order 4, each holding two of the
        // order-4 elements
        long want = q / 4 + 1;
        CHECK(long(G.elements_of_order(4).size()) == 2 * want);
    }
}

TEST_CASE("symmetric and alternating groups") {
    CHECK(build_group("Sym(3)").order() == 6);
    CHECK(build_group("Sym(5)").order() == 120);
    CHECK(build_group("Alt(4)").order() == 12);
    CHECK(build_group("Alt(5)").order() == 60);
    CHECK_FALSE(build_group("Sym(4)").is_abelian());
    CHECK(build_group("Sym(6)").order() == 720);
}

TEST_CASE("explicit permutation groups") {
    FiniteGroup G = build_group("Perm(\"(1 2)(3 4)\", \"(1 3)(2 4)\")");
    CHECK(G.order() == 4);
    CHECK(G.is_abelian());
    CHECK_FALSE(G.is_cyclic());
}

TEST_CASE("M11 closure has the right order") {
    FiniteGroup G = build_group("M11");
    CHECK(G.order() == 7920);
    CHECK(G.elements_of_order(2).size() == 165);
    CHECK(G.elements_of_order(11).size() == 1440);
}

TEST_CASE("elementary abelian atoms") {
    FiniteGroup G = build_group("ElemAb(2,3)");
    CHECK(G.order() == 8);
    for (int g = 1; g < 8; ++g) CHECK(G.element_order(g) == 2);
    CHECK_THROWS_AS(build_group("ElemAb(6,2)"), InvalidParameter);
}
