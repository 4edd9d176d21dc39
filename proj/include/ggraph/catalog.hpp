#pragma once
// Group catalogs the verification sweeps run over.  Everything is
// expressed as spec strings so reports can name instances exactly the
// way a user would type them.

#include <string>
#include <vector>

namespace ggraph {

// Every abelian group of order 2..max_order, one spec per isomorphism
// type, written in invariant-factor form "Z(d1) x Z(d2) x ..." with
// d1 | d2 | ... ascending.
std::vector<std::string> abelian_specs_upto(long max_order);

// The subset with prime-power order.
std::vector<std::string> abelian_p_group_specs_upto(long max_order);

std::vector<std::string> cyclic_specs_upto(long max_m);  // Z(2)..Z(max_m)

// Generalized quaternion groups Q(8), Q(16), ... up to max_order.
std::vector<std::string> quaternion_specs_upto(long max_order);

// Dihedral groups, quaternion groups, odd-cyclic x quaternion products,
// and a handful of nonabelian permutation and matrix groups, all of
// order <= max_order.
std::vector<std::string> named_family_specs(long max_order);

// Abelian sweep plus named families, duplicates (by spec text) removed.
std::vector<std::string> full_catalog(long abelian_cap, long named_cap);

}  // namespace ggraph
