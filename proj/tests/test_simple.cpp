#include <doctest.h>

#include <map>
#include <vector>

#include "ggraph/gf.hpp"
#include "ggraph/group.hpp"
#include "ggraph/simple_groups.hpp"

using namespace ggraph;

namespace {

std::map<long, int> order_counts(const FiniteGroup& G) {
    std::map<long, int> out;
    for (int g = 0; g < G.order(); ++g) ++out[G.element_order(g)];
    return out;
}

}  // namespace

TEST_CASE("galois field axioms") {
    for (long q : {2L, 3L, 4L, 8L, 9L, 16L, 25L}) {
        GaloisField F(q);
        CHECK(F.q() == q);
        int qq = int(q);
        for (int a = 0; a < qq; ++a) {
            CHECK(F.add(a, 0) == a);
            CHECK(F.mul(a, 1) == a);
            CHECK(F.mul(a, 0) == 0);
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
            for (int b = 0; b < qq; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                for (int c = 0; c < qq; ++c) {
                    CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
                    CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                }
            }
        }
    }
    CHECK_THROWS_AS(GaloisField(6), NotAPrimePower);
    CHECK_THROWS_AS(GaloisField(256), InvalidParameter);
}

TEST_CASE("frobenius is additive") {
    for (long q : {4L, 8L, 9L, 27L, 16L}) {
        GaloisField F(q);
        auto frob = [&](int a) {
            int r = a;  // a^p by repeated multiplication
            for (long i = 1; i < F.p(); ++i) r = F.mul(r, a);
            return r;
        };
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                CHECK(frob(F.add(a, b)) == F.add(frob(a), frob(b)));
    }
}

TEST_CASE("SL(2,q) orders") {
    CHECK(build_sl2(2, 50000).order() == 6);
    CHECK(build_sl2(3, 50000).order() == 24);
    CHECK(build_sl2(5, 50000).order() == 120);

    // SL(2,3): one involution, six order-4 and eight each of orders 3, 6
    auto oc = order_counts(build_sl2(3, 50000));
    CHECK(oc[2] == 1);
    CHECK(oc[3] == 8);
    CHECK(oc[4] == 6);
    CHECK(oc[6] == 8);
}

TEST_CASE("PSL(2,q) projective action") {
    CHECK(build_psl2(4, 50000).order() == 60);
    CHECK(build_psl2(5, 50000).order() == 60);
    CHECK(build_psl2(7, 50000).order() == 168);
    CHECK(build_psl2(9, 50000).order() == 360);

    // both PSL(2,4) and PSL(2,5) are the alternating group A5
    std::map<long, int> a5{{1, 1}, {2, 15}, {3, 20}, {5, 24}};
    CHECK(order_counts(build_psl2(4, 50000)) == a5);
    CHECK(order_counts(build_psl2(5, 50000)) == a5);

    CHECK_THROWS_AS(build_psl2(6, 50000), NotAPrimePower);
}

TEST_CASE("nullness predicate per q") {
    PslNullVerdict v4 = psl2_null_verdict(4);
    CHECK(v4.d == 1);
    CHECK(v4.lower == 3);
    CHECK(v4.upper == 5);
    CHECK(v4.predicate);

    PslNullVerdict v9 = psl2_null_verdict(9);
    CHECK(v9.d == 2);
    CHECK(v9.lower == 4);
    CHECK(v9.upper == 5);
    CHECK(v9.predicate);

    // (25-1)/2 = 12 = 2^2 * 3 is neither a prime power nor a product of
    // two distinct primes
    PslNullVerdict v25 = psl2_null_verdict(25);
    CHECK(v25.lower == 12);
    CHECK_FALSE(v25.lower_ok);
    CHECK_FALSE(v25.predicate);

    CHECK_THROWS_AS(psl2_null_verdict(6), NotAPrimePower);
}

TEST_CASE("dihedral difference graphs reduce to the rotation subgroup") {
    for (long n : {3L, 4L, 6L, 12L, 30L, 100L}) CHECK(dihedral_reduction_check(n));
}

TEST_CASE("the SL(3,4) transvection subgroup is quaternion") {
    Sl34Check s = sl34_quaternion_check();
    CHECK(s.dets_one);
    CHECK(s.squares_are_z);
    CHECK(s.z_square_is_identity);
    CHECK(s.closure_order == 8);
    CHECK(s.quaternion);
    CHECK(s.ok);
}
