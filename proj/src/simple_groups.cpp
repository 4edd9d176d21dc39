#include "ggraph/simple_groups.hpp"

#include <algorithm>

#include "ggraph/cyclic.hpp"
#include "ggraph/gf.hpp"
#include "ggraph/graph.hpp"
#include "ggraph/num.hpp"

namespace ggraph {

namespace {

// 2x2 matrices as 4 bytes, row major.
std::vector<uint8_t> mat2(int a, int b, int c, int d) {
    return {uint8_t(a), uint8_t(b), uint8_t(c), uint8_t(d)};
}

std::string mat2_str(const GaloisField& F, const uint8_t* m) {
    (void)F;
    return "[[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "],[" +
           std::to_string(m[2]) + "," + std::to_string(m[3]) + "]]";
}

std::vector<std::vector<uint8_t>> sl2_generators(const GaloisField& F) {
    std::vector<std::vector<uint8_t>> gens;
    for (int i = 0; i < F.k(); ++i) gens.push_back(mat2(1, F.basis(i), 0, 1));
    gens.push_back(mat2(0, 1, F.neg(1), 0));
    return gens;
}

}  // namespace

FiniteGroup build_sl2(long q, long order_cap) {
    if (q < 2 || q > 127) throw InvalidParameter("SL(2,q) needs a prime power q in [2,127]");
    GaloisField F(q);
    auto compose = [F](const uint8_t* A, const uint8_t* B, uint8_t* C) {
        C[0] = uint8_t(F.add(F.mul(A[0], B[0]), F.mul(A[1], B[2])));
        C[1] = uint8_t(F.add(F.mul(A[0], B[1]), F.mul(A[1], B[3])));
        C[2] = uint8_t(F.add(F.mul(A[2], B[0]), F.mul(A[3], B[2])));
        C[3] = uint8_t(F.add(F.mul(A[2], B[1]), F.mul(A[3], B[3])));
    };
    auto display = [F](const uint8_t* m) { return mat2_str(F, m); };
    long expected = q * (q * q - 1);
    return closure_group("SL(2," + std::to_string(q) + ")", 4, sl2_generators(F),
                         mat2(1, 0, 0, 1), compose, display, order_cap, expected);
}

FiniteGroup build_psl2(long q, long order_cap) {
    if (q < 2 || q > 127) throw InvalidParameter("PSL(2,q) needs a prime power q in [2,127]");
    GaloisField F(q);
    int deg = int(q) + 1;
    int inf = int(q);  // the point at infinity

    // image of point z under (az+b)/(cz+d)
    auto moebius = [&](const std::vector<uint8_t>& m) {
        std::vector<uint8_t> perm(deg);
        int a = m[0], b = m[1], c = m[2], d = m[3];
        for (int z = 0; z < deg; ++z) {
            if (z == inf) {
                perm[z] = uint8_t(c == 0 ? inf : F.mul(a, F.inv(c)));
                continue;
            }
            int den = F.add(F.mul(c, z), d);
            if (den == 0) {
                perm[z] = uint8_t(inf);
                continue;
            }
            int num = F.add(F.mul(a, z), b);
            perm[z] = uint8_t(F.mul(num, F.inv(den)));
        }
        return perm;
    };

    std::vector<std::vector<uint8_t>> gens;
    for (const auto& m : sl2_generators(F)) gens.push_back(moebius(m));
    long d = gcd(q - 1, 2);
    long expected = q * (q * q - 1) / d;
    return perm_closure_group("PSL(2," + std::to_string(q) + ")", deg, gens, order_cap,
                              expected);
}

FiniteGroup build_m11(long order_cap) {
    std::vector<std::vector<uint8_t>> gens{
        perm_from_cycles("(1 2 3 4 5 6 7 8 9 10 11)", 11),
        perm_from_cycles("(3 7 11 8)(4 10 5 6)", 11)};
    return perm_closure_group("M11", 11, gens, order_cap, 7920);
}

namespace {

bool prime_power_or_two_distinct(long v, const std::vector<std::pair<long, int>>& f) {
    if (v == 1) return false;
    if (f.size() == 1) return true;  // prime power, p*p included here
    return f.size() == 2 && f[0].second == 1 && f[1].second == 1;
}

}  // namespace

PslNullVerdict psl2_null_verdict(long q) {
    long p = 0;
    int k = 0;
    if (!is_prime_power(q, &p, &k))
        throw NotAPrimePower(std::to_string(q) + " is not a prime power");
    if (q < 4)
        throw PreconditionFailed("the nullness predicate applies from q = 4 upward");
    PslNullVerdict v;
    v.q = q;
    v.d = gcd(q - 1, 2);
    v.lower = (q - 1) / v.d;
    v.upper = (q + 1) / v.d;
    v.lower_fact = factorize(v.lower);
    v.upper_fact = factorize(v.upper);
    v.lower_ok = prime_power_or_two_distinct(v.lower, v.lower_fact);
    v.upper_ok = prime_power_or_two_distinct(v.upper, v.upper_fact);
    v.predicate = v.lower_ok && v.upper_ok;
    v.note = "product of two primes read as two distinct primes; p*p already "
             "falls under the prime-power clause";
    return v;
}

bool psl2_null_predicate(long q) { return psl2_null_verdict(q).predicate; }

std::vector<long> psl2_default_scan_set() { return {4, 5, 7, 8, 9, 11, 13, 16, 25}; }

std::vector<PslScanRow> psl2_nullness_scan(const std::vector<long>& qs, long order_cap) {
    std::vector<PslScanRow> rows;
    for (long q : qs) {
        PslScanRow row;
        row.q = q;
        row.predicate = psl2_null_predicate(q);
        FiniteGroup G = build_psl2(q, order_cap);
        row.order = G.order();
        CyclicLattice L = CyclicLattice::build(G);
        BitMatrix adj = class_adjacency(L, GraphKind::DifferenceUndeleted);
        row.computed_null = true;
        for (int a = 0; a < L.num_classes() && row.computed_null; ++a)
            if (adj.row_popcount(a) != 0) row.computed_null = false;
        row.agree = row.predicate == row.computed_null;
        rows.push_back(row);
    }
    return rows;
}

bool dihedral_reduction_check(long n) {
    if (n < 3) throw PreconditionFailed("dihedral reduction check needs n >= 3");
    FiniteGroup dih = build_group("D(" + std::to_string(2 * n) + ")");
    FiniteGroup cyc = build_group("Z(" + std::to_string(n) + ")");
    Graph gd = build_graph(CyclicLattice::build(dih), GraphKind::DifferenceUndeleted);
    Graph gc = build_graph(CyclicLattice::build(cyc), GraphKind::DifferenceUndeleted);
    for (long i = n; i < 2 * n; ++i)
        if (gd.degree(int(i)) != 0) return false;
    for (int i = 0; i < int(n); ++i)
        for (int j = i + 1; j < int(n); ++j)
            if (gd.adjacent(i, j) != gc.adjacent(i, j)) return false;
    return true;
}

Sl34Check sl34_quaternion_check() {
    GaloisField F(4);
    auto mat3 = [](std::initializer_list<int> v) {
        std::vector<uint8_t> m;
        for (int x : v) m.push_back(uint8_t(x));
        return m;
    };
    auto mul3 = [F](const uint8_t* A, const uint8_t* B, uint8_t* C) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int s = 0;
                for (int k = 0; k < 3; ++k) s = F.add(s, F.mul(A[3 * i + k], B[3 * k + j]));
                C[3 * i + j] = uint8_t(s);
            }
    };
    auto det3 = [&F](const std::vector<uint8_t>& m) {
        int d = 0;
        d = F.add(d, F.mul(m[0], F.sub(F.mul(m[4], m[8]), F.mul(m[5], m[7]))));
        d = F.sub(d, F.mul(m[1], F.sub(F.mul(m[3], m[8]), F.mul(m[5], m[6]))));
        d = F.add(d, F.mul(m[2], F.sub(F.mul(m[3], m[7]), F.mul(m[4], m[6]))));
        return d;
    };

    std::vector<uint8_t> I = mat3({1, 0, 0, 0, 1, 0, 0, 0, 1});
    std::vector<uint8_t> Z = mat3({1, 0, 1, 0, 1, 0, 0, 0, 1});
    auto X = [&](int a) { return mat3({1, a, 0, 0, 1, F.inv(a), 0, 0, 1}); };

    Sl34Check res;
    res.dets_one = true;
    res.squares_are_z = true;
    for (int a = 1; a < 4; ++a) {
        if (det3(X(a)) != 1) res.dets_one = false;
        std::vector<uint8_t> sq(9);
        mul3(X(a).data(), X(a).data(), sq.data());
        if (sq != Z) res.squares_are_z = false;
    }
    std::vector<uint8_t> zz(9);
    mul3(Z.data(), Z.data(), zz.data());
    res.z_square_is_identity = zz == I;

    auto display = [](const uint8_t* m) {
        std::string s = "[";
        for (int i = 0; i < 3; ++i) {
            s += i ? ",[" : "[";
            for (int j = 0; j < 3; ++j)
                s += (j ? "," : "") + std::to_string(m[3 * i + j]);
            s += "]";
        }
        return s + "]";
    };
    FiniteGroup H = closure_group("<X_1,X_x>", 9, {X(1), X(2)}, I, mul3, display, 64);
    res.closure_order = H.order();
    res.quaternion = H.order() == 8 && H.elements_of_order(2).size() == 1 &&
                     H.elements_of_order(4).size() == 6;
    res.ok = res.dets_one && res.squares_are_z && res.z_square_is_identity &&
             res.quaternion;
    return res;
}

}  // namespace ggraph
