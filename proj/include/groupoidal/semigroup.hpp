#ifndef GROUPOIDAL_SEMIGROUP_HPP
#define GROUPOIDAL_SEMIGROUP_HPP

#include <string>
#include <vector>

#include "groupoidal/errors.hpp"
#include "groupoidal/partial_injection.hpp"

namespace groupoidal {

// A finite inverse semigroup on dense indices 0..n-1, with involution table,
// idempotent set and detected zero. Immutable after construction.
struct InverseSemigroup {
  int n = 0;
  std::vector<int> mul;           // n*n, row-major
  std::vector<int> inv;           // involution
  std::vector<int> idempotents;   // sorted element indices
  std::vector<char> is_idem;      // size n
  int zero = -1;                  // -1 when absent
  std::vector<std::string> labels;

  int prod(int s, int t) const { return mul[size_t(s) * n + t]; }
  bool has_zero() const { return zero >= 0; }
  const std::string& label(int s) const { return labels[s]; }

  // e <= f in the idempotent order (ef = e). Both must be idempotents.
  bool idem_leq(int e, int f) const { return prod(e, f) == e; }
};

// Validates the table as an inverse semigroup: closure, associativity
// (witness triple on failure), a unique generalized inverse per element
// (witness on failure), commuting idempotents; detects the zero.
InverseSemigroup build_from_table(const std::vector<std::vector<int>>& table,
                                  std::vector<std::string> labels = {});

// Closure of gens and their inverses under composition, re-indexed to a
// table. The empty map is included iff it arises (it is then the zero).
// max_closure caps the closure size (ClosureTooLarge beyond it).
InverseSemigroup build_from_partial_injections(const std::vector<PartialInjection>& gens,
                                               int max_closure = 100000);

// e <= s in the natural order, for an idempotent e (equivalently e = se).
inline bool nat_leq_idem(const InverseSemigroup& S, int e, int s) { return S.prod(s, e) == e; }

// Natural partial order: leq(s,t) iff s = te for some idempotent e. The
// equivalent left-sided definition, reflexivity, antisymmetry and
// compatibility with multiplication and involution are all checked.
std::vector<char> natural_order(const InverseSemigroup& S);

inline bool nat_leq(const std::vector<char>& leq, int n, int s, int t) {
  return leq[size_t(s) * n + t] != 0;
}

// Elements of the maximal subgroup G_e = {s : s*s = e = ss*}; verified to be
// a group with identity e.
std::vector<int> maximal_subgroup(const InverseSemigroup& S, int e);

// All congruences (as partitions in canonical class-id form), computed as the
// join-closure of the principal congruences. Hard cap |S| <= 8.
std::vector<std::vector<int>> enumerate_congruences(const InverseSemigroup& S);

// Principal congruence generated by identifying a and b.
std::vector<int> principal_congruence(const InverseSemigroup& S, int a, int b);

// Canonical form of a partition given as class ids: classes renumbered by
// first occurrence.
std::vector<int> canonical_partition(std::vector<int> part);

}  // namespace groupoidal

#endif  // GROUPOIDAL_SEMIGROUP_HPP
