#include "groupoidal/classify.hpp"

#include <algorithm>
#include <set>

namespace groupoidal {

namespace {

// Maximal elements of a set of semigroup elements under the natural order.
std::vector<int> maximal_elements(const InverseSemigroup& S, const std::vector<char>& leq,
                                  const std::vector<int>& set) {
  std::vector<int> out;
  for (int x : set) {
    bool maximal = true;
    for (int y : set)
      if (y != x && nat_leq(leq, S.n, x, y)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(x);
  }
  return out;
}

}  // namespace

bool is_fundamental_via_mu(const InverseSemigroup& S) {
  for (int s = 0; s < S.n; ++s)
    for (int t = s + 1; t < S.n; ++t) {
      bool related = true;
      for (int e : S.idempotents)
        if (S.prod(S.prod(S.inv[s], e), s) != S.prod(S.prod(S.inv[t], e), t)) {
          related = false;
          break;
        }
      if (related) return false;
    }
  return true;
}

SemigroupPropertyReport classify(const InverseSemigroup& S) {
  SemigroupPropertyReport r;
  const int n = S.n;
  auto leq = natural_order(S);
  const bool zero_applicable = S.has_zero() && n > 1;

  // E-unitary: e <= s with e idempotent implies s idempotent.
  r.is_e_unitary = true;
  for (int s = 0; s < n && r.is_e_unitary; ++s) {
    if (S.is_idem[s]) continue;
    for (int e : S.idempotents)
      if (nat_leq(leq, n, e, s)) {
        r.is_e_unitary = false;
        break;
      }
  }

  if (zero_applicable) {
    bool v = true;
    for (int s = 0; s < n && v; ++s) {
      if (S.is_idem[s]) continue;
      for (int e : S.idempotents)
        if (e != S.zero && nat_leq(leq, n, e, s)) {
          v = false;
          break;
        }
    }
    r.is_0_e_unitary = v;
  }

  // Hausdorff: (s*s)down ∩ s down is finitely generated as a lower set;
  // trivially so here, the witness is its antichain of maximal elements.
  r.is_hausdorff = true;
  r.hausdorff_witness.resize(n);
  for (int s = 0; s < n; ++s) {
    const int dom = S.prod(S.inv[s], s);
    std::vector<int> both;
    for (int x = 0; x < n; ++x)
      if (nat_leq(leq, n, x, dom) && nat_leq(leq, n, x, s)) both.push_back(x);
    r.hausdorff_witness[s] = maximal_elements(S, leq, both);
  }

  // fundamental: the centralizer of E(S) is E(S)
  r.is_fundamental = true;
  for (int s = 0; s < n && r.is_fundamental; ++s) {
    if (S.is_idem[s]) continue;
    bool centralizes = true;
    for (int e : S.idempotents)
      if (S.prod(s, e) != S.prod(e, s)) {
        centralizes = false;
        break;
      }
    if (centralizes) r.is_fundamental = false;
  }

  if (zero_applicable) {
    // 0-disjunctive: for all 0 < e < f there is 0 < e' < f with ee' = 0
    bool v = true;
    for (int e : S.idempotents) {
      if (e == S.zero) continue;
      for (int f : S.idempotents) {
        if (f == S.zero || f == e || !S.idem_leq(e, f)) continue;
        bool found = false;
        for (int ep : S.idempotents) {
          if (ep == S.zero || ep == f || !S.idem_leq(ep, f)) continue;
          if (S.prod(e, ep) == S.zero) {
            found = true;
            break;
          }
        }
        if (!found) {
          v = false;
          break;
        }
      }
      if (!v) break;
    }
    r.is_0_disjunctive = v;

    // 0-simple: SsS = S for all s != 0
    bool simple0 = true;
    for (int s = 0; s < n && simple0; ++s) {
      if (s == S.zero) continue;
      std::set<int> ideal;
      for (int u = 0; u < n; ++u)
        for (int v2 = 0; v2 < n; ++v2) ideal.insert(S.prod(S.prod(u, s), v2));
      if (static_cast<int>(ideal.size()) != n) simple0 = false;
    }
    r.is_0_simple = simple0;

    r.is_congruence_free = simple0 && r.is_fundamental && *r.is_0_disjunctive;

    // tight: every cover of a nonzero idempotent e contains e; equivalently
    // the full set of idempotents strictly below e never covers e.
    bool tight = true;
    for (int e : S.idempotents) {
      if (e == S.zero) continue;
      if (is_cover(S, e, idem_strictly_below(S, e))) {
        tight = false;
        break;
      }
    }
    r.is_tight = tight;
  }

  // pseudofinite: elements strictly below e finitely generated as a lower
  // set; trivially so here, witnesses carried.
  r.is_pseudofinite = true;
  for (int e : S.idempotents) {
    std::vector<int> strictly_below;
    for (int x = 0; x < n; ++x)
      if (x != e && nat_leq(leq, n, x, e)) strictly_below.push_back(x);
    r.pseudofinite_witness.push_back(maximal_elements(S, leq, strictly_below));
  }

  for (int e : S.idempotents)
    r.max_subgroup_order.push_back(static_cast<int>(maximal_subgroup(S, e).size()));
  return r;
}

}  // namespace groupoidal
