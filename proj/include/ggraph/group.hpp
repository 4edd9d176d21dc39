#pragma once
// Finite groups with dense element indices.  Identity is always index 0.
// Small groups (order <= 4096) carry a full multiplication table; larger
// ones multiply on demand through a per-family rule (cyclic, dihedral,
// generalized quaternion), componentwise for direct products, or by byte
// string composition plus a hash index for closure-built groups.
//
// Groups are immutable once built and cheap to copy (shared internals),
// so concurrent queries from parallel kernels are safe.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ggraph/errors.hpp"

namespace ggraph {

class FiniteGroup {
public:
    struct Impl;

    FiniteGroup() = default;
    explicit FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    bool valid() const { return impl_ != nullptr; }
    long order() const;
    const std::string& name() const;

    int mul(int a, int b) const;
    int inv(int a) const;
    long element_order(int g) const;
    const std::string& display(int g) const;
    bool is_abelian() const;

    // Power chain of g: {e, g, g^2, ...} as sorted element ids.
    std::vector<int> cyclic_subgroup(int g) const;
    int power(int g, long k) const;

    std::vector<int> elements_of_order(long k) const;
    std::vector<int> center() const;

    // Element of order 2 if there is exactly one; nullopt otherwise.
    std::optional<int> unique_involution() const;

    // True iff some element generates the whole group.
    bool is_cyclic() const;

    std::shared_ptr<const Impl> impl() const { return impl_; }

private:
    std::shared_ptr<const Impl> impl_;
};

struct BuildOptions {
    long order_cap = 50000;
};

// One atom of a group expression, e.g. Z(12) or Perm("(1 2)(3 4)").
struct AtomSpec {
    std::string atom;
    std::vector<long> nums;
    std::vector<std::string> strs;
    std::string text() const;
};

// Parsed group expression: a direct product of atoms.
struct GroupSpec {
    std::vector<AtomSpec> factors;
    std::string text() const;
};

// Grammar:  spec := term { "x" term }
//           term := ATOM "(" args ")" | "M11"
// Whitespace insensitive.  Throws SyntaxError with a byte offset.
GroupSpec parse_group_spec(const std::string& text);

// Validates atom arguments (InvalidParameter), enforces the order cap
// (OrderLimitExceeded), and spot-checks the group axioms on the result
// (GroupConstructionError).  Product element indices are row-major over
// the factor indices, so (a, b) in A x B gets index a*|B| + b.
FiniteGroup build_group(const GroupSpec& spec, const BuildOptions& opt = {});
FiniteGroup build_group(const std::string& spec_text, const BuildOptions& opt = {});

// --- closure machinery, shared by the permutation and matrix builders ---

using ComposeFn = std::function<void(const uint8_t*, const uint8_t*, uint8_t*)>;
using DisplayFn = std::function<std::string(const uint8_t*)>;

// Breadth-first closure of the generators under compose, starting from
// the identity word.  Discovery order is deterministic (BFS layers, then
// generator order), the identity gets index 0, and the result is frozen
// into a multiplication table when the order allows.  Throws
// OrderLimitExceeded past order_cap and GroupConstructionError when
// expected_order is given and missed.
FiniteGroup closure_group(const std::string& name, int width,
                          const std::vector<std::vector<uint8_t>>& generators,
                          const std::vector<uint8_t>& identity,
                          ComposeFn compose, DisplayFn display,
                          long order_cap,
                          std::optional<long> expected_order = std::nullopt);

// --- permutation words (0-based images, one byte per point) ---

std::vector<uint8_t> perm_identity(int degree);
// Cycle notation with 1-based points, e.g. "(1 2 3)(4 5)"; commas or
// spaces separate points.  degree 0 means "largest point mentioned".
std::vector<uint8_t> perm_from_cycles(const std::string& cycles, int degree = 0);
std::string perm_to_cycles(const uint8_t* p, int degree);

FiniteGroup perm_closure_group(const std::string& name, int degree,
                               const std::vector<std::vector<uint8_t>>& gens,
                               long order_cap,
                               std::optional<long> expected_order = std::nullopt);

}  // namespace ggraph
