#pragma once
// Small Galois fields GF(p^k) for the matrix group builders.  Elements
// are integers in [0, q); the base-p digits of an element are the
// coefficients of its polynomial representative, constant term first.
// Arithmetic is table-driven, with the reduction polynomial checked for
// irreducibility at construction.  Fields up to q = 128 are supported,
// which is as far as the fixed polynomial table goes.

#include <cstdint>
#include <vector>

#include "ggraph/errors.hpp"

namespace ggraph {

class GaloisField {
public:
    // Throws NotAPrimePower when q is not p^k, InvalidParameter when
    // q > 128, GroupConstructionError if the table polynomial fails its
    // irreducibility check.
    explicit GaloisField(long q);

    long q() const { return q_; }
    long p() const { return p_; }
    int k() const { return k_; }

    int add(int a, int b) const { return add_[std::size_t(a) * q_ + b]; }
    int mul(int a, int b) const { return mul_[std::size_t(a) * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    // Multiplicative inverse; PreconditionFailed for 0.
    int inv(int a) const;

    // The basis monomial x^i as a field element, 0 <= i < k.
    int basis(int i) const;

private:
    long q_, p_;
    int k_;
    std::vector<uint8_t> add_, mul_, neg_, inv_;
};

}  // namespace ggraph
