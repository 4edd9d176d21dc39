#include "ggraph/cyclic.hpp"

#include <algorithm>

#include "ggraph/num.hpp"

namespace ggraph {

CyclicLattice CyclicLattice::build(const FiniteGroup& g, Exec mode) {
    CyclicLattice L;
    L.group_ = g;
    long n = g.order();
    L.class_of_.assign(n, -1);

    // Partition into generator classes: walk elements in ascending order,
    // and for a fresh element collect the generators of its subgroup
    // (exactly the members of order |<e>| inside it).
    for (long e = 0; e < n; ++e) {
        if (L.class_of_[e] >= 0) continue;
        GeneratorClass c;
        c.subgroup = g.cyclic_subgroup(int(e));
        c.subgroup_order = long(c.subgroup.size());
        for (int x : c.subgroup)
            if (g.element_order(x) == c.subgroup_order) c.members.push_back(x);
        c.representative = c.members.front();
        int provisional = int(L.classes_.size());
        for (int x : c.members) L.class_of_[x] = provisional;
        L.classes_.push_back(std::move(c));
    }
    std::sort(L.classes_.begin(), L.classes_.end(),
              [](const GeneratorClass& a, const GeneratorClass& b) {
                  return std::make_pair(a.subgroup_order, a.representative) <
                         std::make_pair(b.subgroup_order, b.representative);
              });
    for (std::size_t i = 0; i < L.classes_.size(); ++i) {
        L.classes_[i].class_id = int(i);
        for (int x : L.classes_[i].members) L.class_of_[x] = int(i);
    }

    int c = L.num_classes();
    std::size_t words = std::size_t((n + 63) / 64);
    std::vector<uint64_t> sets(std::size_t(c) * words, 0);
    for (int i = 0; i < c; ++i) {
        uint64_t* row = sets.data() + std::size_t(i) * words;
        for (int x : L.classes_[i].subgroup) row[x / 64] |= uint64_t(1) << (x % 64);
    }

    L.contains_ = BitMatrix(c);
    L.meets_ = BitMatrix(c);
    // Pairwise subgroup relations; this is the parallel kernel.  Every
    // thread fills complete rows of both matrices, so no two threads
    // touch the same output word.
#pragma omp parallel for schedule(dynamic, 16) if (mode == Exec::Parallel)
    for (int i = 0; i < c; ++i) {
        const uint64_t* si = sets.data() + std::size_t(i) * words;
        for (int j = 0; j < c; ++j) {
            const uint64_t* sj = sets.data() + std::size_t(j) * words;
            bool j_in_i = true, meet = false;
            for (std::size_t w = 0; w < words; ++w) {
                uint64_t both = si[w] & sj[w];
                j_in_i = j_in_i && both == sj[w];
                // the identity (element 0) never counts as a meet
                uint64_t nontrivial = w == 0 ? both & ~uint64_t(1) : both;
                meet = meet || nontrivial != 0;
            }
            if (j_in_i) L.contains_.set(i, j);
            if (meet) L.meets_.set(i, j);
        }
    }

    L.primes_ = prime_divisors(n);
    return L;
}

std::vector<int> CyclicLattice::maximal_class_ids() const {
    std::vector<int> out;
    int c = num_classes();
    for (int a = 0; a < c; ++a) {
        bool maximal = true;
        for (int b = 0; b < c && maximal; ++b)
            if (b != a && contains_.get(b, a)) maximal = false;
        if (maximal) out.push_back(a);
    }
    return out;
}

std::vector<long> pi_of_center(const FiniteGroup& g) {
    return prime_divisors(long(g.center().size()));
}

}  // namespace ggraph
