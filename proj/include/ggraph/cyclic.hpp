#pragma once
// Cyclic subgroup lattice of a finite group: elements grouped into
// generator classes (x and y are equivalent when <x> = <y>), plus the
// two pairwise relations every graph construction reads off: subgroup
// containment and nontrivial intersection.

#include <vector>

#include "ggraph/bits.hpp"
#include "ggraph/exec.hpp"
#include "ggraph/group.hpp"

namespace ggraph {

struct GeneratorClass {
    int class_id = 0;
    int representative = 0;        // least member element id
    std::vector<int> members;      // sorted; |members| = phi(subgroup_order)
    std::vector<int> subgroup;     // sorted element ids of <representative>
    long subgroup_order = 0;
};

class CyclicLattice {
public:
    // Class ids are assigned in ascending (subgroup_order, representative)
    // order, so the identity class is always id 0.  The pairwise relation
    // pass is the data-parallel kernel; both policies give equal results.
    static CyclicLattice build(const FiniteGroup& g, Exec mode = Exec::Parallel);

    const FiniteGroup& group() const { return group_; }
    int num_classes() const { return int(classes_.size()); }
    const GeneratorClass& cls(int id) const { return classes_[id]; }
    const std::vector<GeneratorClass>& classes() const { return classes_; }
    int class_of(int element) const { return class_of_[element]; }

    // subgroup of b contained in subgroup of a (reflexive)
    bool contains(int a, int b) const { return contains_.get(a, b); }
    // <a> and <b> share a non-identity element; computed by intersecting
    // the element sets, never from subgroup orders
    bool meets_nontrivially(int a, int b) const { return meets_.get(a, b); }

    std::vector<int> maximal_class_ids() const;
    const std::vector<long>& prime_set() const { return primes_; }

private:
    FiniteGroup group_;
    std::vector<GeneratorClass> classes_;
    std::vector<int> class_of_;
    BitMatrix contains_;
    BitMatrix meets_;
    std::vector<long> primes_;
};

// Primes dividing the center's order.
std::vector<long> pi_of_center(const FiniteGroup& g);

}  // namespace ggraph
