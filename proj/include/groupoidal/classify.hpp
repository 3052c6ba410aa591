#ifndef GROUPOIDAL_CLASSIFY_HPP
#define GROUPOIDAL_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "groupoidal/semigroup.hpp"
#include "groupoidal/spectrum.hpp"

namespace groupoidal {

// nullopt means "not applicable" (0-dependent predicate on a zero-free
// semigroup, or on the trivial one-element semigroup).
using TriBool = std::optional<bool>;

inline std::string tri_to_string(TriBool t) {
  return t.has_value() ? (*t ? "true" : "false") : "na";
}

struct SemigroupPropertyReport {
  bool is_e_unitary = false;
  TriBool is_0_e_unitary;
  bool is_hausdorff = true;   // always true at finite scale; witnesses carried
  bool is_fundamental = false;
  TriBool is_0_disjunctive;
  TriBool is_0_simple;
  TriBool is_congruence_free;
  TriBool is_tight;
  bool is_pseudofinite = true;  // always true at finite scale; witnesses carried
  // per element s: maximal elements of (s*s)down ∩ s down (the Hausdorff witness)
  std::vector<std::vector<int>> hausdorff_witness;
  // per idempotent e: maximal elements of the set strictly below e
  std::vector<std::vector<int>> pseudofinite_witness;
  std::vector<int> max_subgroup_order;  // parallel to S.idempotents
};

// All flags computed by the quoted paper definitions. 0-dependent flags are
// not-applicable when no zero is present or when |S| = 1.
SemigroupPropertyReport classify(const InverseSemigroup& S);

// Maximum idempotent-separating congruence test: s mu t iff s*es = t*et for
// all idempotents e. Fundamental iff mu is equality; used by tests as a
// cross-check of the centralizer characterization.
bool is_fundamental_via_mu(const InverseSemigroup& S);

}  // namespace groupoidal

#endif  // GROUPOIDAL_CLASSIFY_HPP
