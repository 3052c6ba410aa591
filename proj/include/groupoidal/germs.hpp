#ifndef GROUPOIDAL_GERMS_HPP
#define GROUPOIDAL_GERMS_HPP

#include <string>
#include <vector>

#include "groupoidal/spectrum.hpp"

namespace groupoidal {

// A finite discrete groupoid: explicit arrow set with domain, range,
// composition (dense table, -1 = undefined), inversion and units. All axioms
// verified at construction. Immutable afterwards.
struct FiniteGroupoid {
  int num_objects = 0;
  std::vector<int> d, r;         // per arrow
  std::vector<int> unit;         // object -> unit arrow
  std::vector<int> inv;          // arrow -> arrow
  std::vector<int> compose_tab;  // arrows x arrows; g.h defined iff d(g) = r(h)
  std::vector<std::string> object_labels;
  std::vector<std::string> arrow_labels;

  int num_arrows() const { return static_cast<int>(d.size()); }
  bool composable(int g, int h) const { return d[g] == r[h]; }
  int compose(int g, int h) const { return compose_tab[size_t(g) * num_arrows() + h]; }
  bool is_unit(int g) const { return unit[d[g]] == g && d[g] == r[g]; }

  void verify() const;  // all groupoid axioms; InternalInconsistency on failure
};

// A groupoid of germs S ⋉ X together with its provenance: the character of
// each object and, per arrow, the canonical representative (least element
// index in the germ class) and the full class.
struct GermGroupoid {
  FiniteGroupoid g;
  const InverseSemigroup* S = nullptr;
  const Spectrum* spec = nullptr;
  std::vector<int> object_char;               // object -> character index
  std::vector<int> germ_rep;                  // arrow -> semigroup element
  std::vector<std::vector<int>> germ_members; // arrow -> all class members
  std::vector<int> char_to_object;            // character index -> object or -1

  // arrow of the germ [s, chi] (chi given as a character index)
  int germ_arrow(int s, int char_id) const;
};

enum class GroupoidKind { Universal, Contracted, Tight };

// Groupoid of germs over an invariant character subset X (NotInvariant with a
// witness otherwise).
GermGroupoid germ_groupoid(const InverseSemigroup& S, const Spectrum& spec,
                           const std::vector<int>& X);

// Universal / contracted / tight groupoid. Contracted and tight require a
// zero. Arrow counts |S| (universal) and |S|-1 (contracted) are verified.
GermGroupoid standard_groupoid(const InverseSemigroup& S, const Spectrum& spec, GroupoidKind kind);

struct OrbitsAndIsotropy {
  std::vector<int> orbit_of;                  // object -> orbit id
  std::vector<std::vector<int>> orbits;       // orbit id -> objects
  std::vector<std::vector<int>> isotropy;     // object -> isotropy arrows
};

OrbitsAndIsotropy orbits_and_isotropy(const FiniteGroupoid& G);

// Discrete closure is the identity: minimal iff a single orbit.
bool is_minimal(const FiniteGroupoid& G);

// Method 1 (discrete): every arrow with d = r is a unit.
bool is_effective(const FiniteGroupoid& G);

// Both methods: all-isotropy-trivial and X_s = Fix(s) for all s. Their
// agreement is a bug-trap invariant (InternalInconsistency on disagreement).
bool is_effective_dual(const GermGroupoid& GG);

// For the universal groupoid: the isotropy group at each principal character
// chi_e must be isomorphic to the maximal subgroup G_e via s -> [s, chi_e];
// verified multiplicative and bijective.
void verify_isotropy_matches_max_subgroups(const GermGroupoid& GG);

struct LocalBisection {
  std::vector<int> arrows;  // sorted
};

bool is_valid_bisection(const FiniteGroupoid& G, const LocalBisection& U);

// UV = {uv : composable}, U* = {u^-1}. NotABisection if an input is invalid.
LocalBisection bisection_product(const FiniteGroupoid& G, const LocalBisection& U,
                                 const LocalBisection& V);
LocalBisection bisection_star(const FiniteGroupoid& G, const LocalBisection& U);

// Orbit of an object under the natural action of all local bisections
// (singleton bisections suffice at finite scale; asserted equal to groupoid
// orbits by tests).
std::vector<int> bisection_orbit(const FiniteGroupoid& G, int x);

// Full subgroupoid on an object subset Y (corner style, no invariance
// required); old-object and old-arrow maps returned alongside.
struct RestrictedGroupoid {
  FiniteGroupoid g;
  std::vector<int> old_object;  // new object -> old object
  std::vector<int> old_arrow;   // new arrow -> old arrow
};

RestrictedGroupoid restrict_groupoid(const FiniteGroupoid& G, const std::vector<int>& Y);

// Variant requiring Y to be invariant (a union of orbits); NotInvariant
// otherwise.
RestrictedGroupoid restrict_invariant(const FiniteGroupoid& G, const std::vector<int>& Y);

// Abstract constructions used by tests and fixtures.
FiniteGroupoid pair_groupoid(int num_objects);
FiniteGroupoid group_as_groupoid(const InverseSemigroup& group_table);
FiniteGroupoid disjoint_units_groupoid(int num_objects);

}  // namespace groupoidal

#endif  // GROUPOIDAL_GERMS_HPP
