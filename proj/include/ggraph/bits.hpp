#pragma once
// Square bit matrix with 64-bit word rows.  Backs adjacency matrices and
// the subgroup-relation tables; row words are exposed so neighborhood
// comparisons and intersections can run word-at-a-time.

#include <cstdint>
#include <vector>

namespace ggraph {

class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int n) : n_(n), stride_((n + 63) / 64), w_(std::size_t(n) * stride_, 0) {}

    int size() const { return n_; }
    std::size_t stride() const { return stride_; }

    bool get(int i, int j) const {
        return (w_[std::size_t(i) * stride_ + std::size_t(j) / 64] >> (j % 64)) & 1u;
    }
    void set(int i, int j) {
        w_[std::size_t(i) * stride_ + std::size_t(j) / 64] |= uint64_t(1) << (j % 64);
    }
    void clear(int i, int j) {
        w_[std::size_t(i) * stride_ + std::size_t(j) / 64] &= ~(uint64_t(1) << (j % 64));
    }

    const uint64_t* row(int i) const { return w_.data() + std::size_t(i) * stride_; }
    uint64_t* row(int i) { return w_.data() + std::size_t(i) * stride_; }

    int row_popcount(int i) const {
        const uint64_t* r = row(i);
        int c = 0;
        for (std::size_t k = 0; k < stride_; ++k) c += __builtin_popcountll(r[k]);
        return c;
    }

    bool rows_equal(int i, int j) const {
        const uint64_t *a = row(i), *b = row(j);
        for (std::size_t k = 0; k < stride_; ++k)
            if (a[k] != b[k]) return false;
        return true;
    }

    bool operator==(const BitMatrix& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
    int n_ = 0;
    std::size_t stride_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace ggraph
