#ifndef GROUPOIDAL_SPECTRUM_HPP
#define GROUPOIDAL_SPECTRUM_HPP

#include <utility>
#include <vector>

#include "groupoidal/semigroup.hpp"

namespace groupoidal {

// A character of E(S), i.e. the characteristic function of a filter. Stored
// as a bitset over the idempotent list; in the finite case the filter is the
// up-set of its minimum.
struct Character {
  std::vector<char> in_filter;  // indexed by position in Spectrum::eidx
  int minimum = -1;             // element index of the filter's minimum
  bool proper = true;           // theta(0) = 0, when a zero exists
};

// The spectrum of E(S): all characters, with D(e) materialized as bitsets
// over the character list.
struct Spectrum {
  const InverseSemigroup* S = nullptr;
  std::vector<int> eidx;  // idempotent element indices (positions used by bitsets)
  std::vector<int> epos;  // element index -> position in eidx, or -1
  std::vector<Character> chars;
  // D[p] = bitset over chars: which characters contain idempotent eidx[p]
  std::vector<std::vector<char>> D;

  int num_chars() const { return static_cast<int>(chars.size()); }
  bool theta(int char_id, int e) const { return chars[char_id].in_filter[epos[e]] != 0; }
  // index of the principal character at idempotent e
  int principal_char(int e) const;
  std::vector<int> proper_chars() const;
};

// One character per filter; in the finite case every filter is principal, so
// there are exactly |E| of them (asserted).
Spectrum all_characters(const InverseSemigroup& S);

// Maximal proper filters: up-sets of the atoms of E minus 0. Requires zero.
std::vector<int> ultrafilter_characters(const InverseSemigroup& S, const Spectrum& spec);

// F covers e iff every nonzero z <= e has zf != 0 for some f in F.
// Elements of F must lie below e (NotBelowE otherwise).
bool is_cover(const InverseSemigroup& S, int e, const std::vector<int>& F);

// All tight characters. Requires zero. Must equal ultrafilter_characters in
// the finite case (checked), sandwiched between ultrafilters and proper
// characters.
std::vector<int> tight_characters(const InverseSemigroup& S, const Spectrum& spec);

// (s theta)(e) = theta(s* e s); defined when theta(s*s) = 1 (OutOfDomain
// otherwise). Returns the index of the resulting character.
int act_character(const InverseSemigroup& S, const Spectrum& spec, int s, int char_id);

// Fix(s) = {theta in X ∩ D(s*s) : s theta = theta};
// X_s = {theta in X : theta(e) = 1 for some idempotent e <= s}.
std::pair<std::vector<int>, std::vector<int>> fixed_and_interior(const InverseSemigroup& S,
                                                                 const Spectrum& spec, int s,
                                                                 const std::vector<int>& X);

// Idempotents strictly below e (excluding e itself), as element indices.
std::vector<int> idem_strictly_below(const InverseSemigroup& S, int e);

// All inclusion-minimal covers of e avoiding e itself, i.e. minimal
// transversals of the hypergraph {f <= e strict : zf != 0} over nonzero
// z <= e. Covers containing e are redundant for relator purposes (their
// relator vanishes).
std::vector<std::vector<int>> minimal_covers(const InverseSemigroup& S, int e);

}  // namespace groupoidal

#endif  // GROUPOIDAL_SPECTRUM_HPP
