#include "ggraph/gf.hpp"

#include <map>

#include "ggraph/num.hpp"

namespace ggraph {

namespace {

// Reduction polynomials for the non-prime fields up to 128, written as
// coefficient lists c0, c1, ..., c_{k-1} of x^k + ... + c1 x + c0.
const std::map<long, std::vector<int>>& poly_table() {
    static const std::map<long, std::vector<int>> t = {
        {4, {1, 1}},                  // x^2 + x + 1
        {8, {1, 1, 0}},               // x^3 + x + 1
        {9, {2, 2}},                  // x^2 + 2x + 2
        {16, {1, 1, 0, 0}},           // x^4 + x + 1
        {25, {2, 4}},                 // x^2 + 4x + 2
        {27, {1, 2, 0}},              // x^3 + 2x + 1
        {32, {1, 0, 1, 0, 0}},        // x^5 + x^2 + 1
        {49, {3, 6}},                 // x^2 + 6x + 3
        {64, {1, 1, 0, 1, 1, 0}},     // x^6 + x^4 + x^3 + x + 1
        {81, {2, 0, 0, 2}},           // x^4 + 2x^3 + 2
        {121, {2, 7}},                // x^2 + 7x + 2
        {125, {3, 3, 0}},             // x^3 + 3x + 3
        {128, {1, 1, 0, 0, 0, 0, 0}}, // x^7 + x + 1
    };
    return t;
}

using Poly = std::vector<int>;  // coefficients, constant first, no trailing zeros

int pdeg(const Poly& a) { return int(a.size()) - 1; }

Poly ptrim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// remainder of a mod b over GF(p), b monic
Poly pmod(Poly a, const Poly& b, long p) {
    a = ptrim(std::move(a));
    while (pdeg(a) >= pdeg(b)) {
        int shift = pdeg(a) - pdeg(b);
        int c = a.back();
        for (int i = 0; i <= pdeg(b); ++i) {
            long v = a[i + shift] - long(c) * b[i];
            a[i + shift] = int(((v % p) + p) % p);
        }
        a = ptrim(std::move(a));
    }
    return a;
}

Poly pmul(const Poly& a, const Poly& b, long p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = int((out[i + j] + long(a[i]) * b[j]) % p);
    return ptrim(std::move(out));
}

// trial division by every monic polynomial of degree 1..deg/2
bool irreducible(const Poly& f, long p) {
    int k = pdeg(f);
    for (int d = 1; 2 * d <= k; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            g[d] = 1;
            long c = code;
            for (int i = 0; i < d; ++i) {
                g[i] = int(c % p);
                c /= p;
            }
            if (pmod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

GaloisField::GaloisField(long q) : q_(q) {
    int k = 0;
    long p = 0;
    if (!is_prime_power(q, &p, &k)) throw NotAPrimePower("GF(" + std::to_string(q) + ")");
    if (q > 128) throw InvalidParameter("GF(" + std::to_string(q) + "): fields beyond 128 unsupported");
    p_ = p;
    k_ = k;

    Poly red;  // monic reduction polynomial, full coefficient list
    if (k_ > 1) {
        auto it = poly_table().find(q);
        if (it == poly_table().end())
            throw InvalidParameter("GF(" + std::to_string(q) + "): no polynomial table entry");
        red = it->second;
        red.push_back(1);
        if (!irreducible(red, p_))
            throw GroupConstructionError("GF(" + std::to_string(q) +
                                         "): table polynomial is reducible");
    }

    auto decode = [&](int e) {
        Poly a;
        while (e) {
            a.push_back(e % int(p_));
            e /= int(p_);
        }
        return a;
    };
    auto encode = [&](const Poly& a) {
        long e = 0;
        for (int i = int(a.size()) - 1; i >= 0; --i) e = e * p_ + a[i];
        return int(e);
    };

    add_.resize(std::size_t(q_) * q_);
    mul_.resize(std::size_t(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        Poly pa = decode(a);
        for (int b = 0; b < q_; ++b) {
            Poly pb = decode(b);
            Poly sum(std::max(pa.size(), pb.size()), 0);
            for (std::size_t i = 0; i < sum.size(); ++i) {
                long v = (i < pa.size() ? pa[i] : 0) + (i < pb.size() ? pb[i] : 0);
                sum[i] = int(v % p_);
            }
            add_[std::size_t(a) * q_ + b] = uint8_t(encode(ptrim(sum)));
            Poly prod = pmul(pa, pb, p_);
            if (k_ > 1) prod = pmod(std::move(prod), red, p_);
            mul_[std::size_t(a) * q_ + b] = uint8_t(encode(prod));
        }
    }
    for (int a = 0; a < q_; ++a) {
        for (int b = 0; b < q_; ++b)
            if (add(a, b) == 0) neg_[a] = uint8_t(b);
        if (a) {
            int found = 0;
            for (int b = 1; b < q_; ++b)
                if (mul(a, b) == 1) {
                    inv_[a] = uint8_t(b);
                    found = 1;
                }
            if (!found)
                throw GroupConstructionError("GF(" + std::to_string(q) +
                                             "): element without inverse");
        }
    }

    // exhaustive field axioms for the smallest fields; the larger ones are
    // covered by the same construction code paths
    if (q_ <= 16) {
        for (int a = 0; a < q_; ++a)
            for (int b = 0; b < q_; ++b) {
                if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a))
                    throw GroupConstructionError("GF: commutativity fails");
                for (int c = 0; c < q_; ++c) {
                    if (add(add(a, b), c) != add(a, add(b, c)) ||
                        mul(mul(a, b), c) != mul(a, mul(b, c)) ||
                        mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
                        throw GroupConstructionError("GF: ring axioms fail");
                }
            }
    }
}

int GaloisField::inv(int a) const {
    if (a == 0) throw PreconditionFailed("GF inverse of zero");
    return inv_[a];
}

int GaloisField::basis(int i) const {
    if (i < 0 || i >= k_) throw PreconditionFailed("GF basis index out of range");
    long e = 1;
    for (int j = 0; j < i; ++j) e *= p_;
    return int(e);
}

}  // namespace ggraph
