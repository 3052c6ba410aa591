#include "groupoidal/spectrum.hpp"

#include <algorithm>
#include <set>

namespace groupoidal {

int Spectrum::principal_char(int e) const {
  for (int i = 0; i < num_chars(); ++i)
    if (chars[i].minimum == e) return i;
  fail(ErrorKind::InternalInconsistency, "no principal character at requested idempotent");
}

std::vector<int> Spectrum::proper_chars() const {
  std::vector<int> out;
  for (int i = 0; i < num_chars(); ++i)
    if (chars[i].proper) out.push_back(i);
  return out;
}

Spectrum all_characters(const InverseSemigroup& S) {
  Spectrum spec;
  spec.S = &S;
  spec.eidx = S.idempotents;
  spec.epos.assign(S.n, -1);
  for (size_t p = 0; p < spec.eidx.size(); ++p) spec.epos[spec.eidx[p]] = static_cast<int>(p);

  const int m = static_cast<int>(spec.eidx.size());
  for (int p = 0; p < m; ++p) {
    const int e = spec.eidx[p];
    Character c;
    c.in_filter.assign(m, 0);
    for (int q = 0; q < m; ++q)
      if (S.idem_leq(e, spec.eidx[q])) c.in_filter[q] = 1;
    c.minimum = e;
    c.proper = !S.has_zero() || e != S.zero;
    // filter axioms: nonempty, meet-closed, upward closed, up-set of minimum
    check(c.in_filter[p] == 1, ErrorKind::InternalInconsistency, "filter misses its minimum");
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (c.in_filter[a] && c.in_filter[b]) {
          int meet = S.prod(spec.eidx[a], spec.eidx[b]);
          check(c.in_filter[spec.epos[meet]], ErrorKind::InternalInconsistency,
                "filter not meet-closed");
        }
    for (int a = 0; a < m; ++a)
      if (c.in_filter[a])
        check(S.idem_leq(e, spec.eidx[a]), ErrorKind::InternalInconsistency,
              "filter is not the up-set of its minimum");
    spec.chars.push_back(std::move(c));
  }
  check(static_cast<int>(spec.chars.size()) == m, ErrorKind::InternalInconsistency,
        "character count must equal |E| in the finite case");

  spec.D.assign(m, std::vector<char>(m, 0));
  for (int p = 0; p < m; ++p)
    for (int c = 0; c < m; ++c) spec.D[p][c] = spec.chars[c].in_filter[p];
  return spec;
}

std::vector<int> ultrafilter_characters(const InverseSemigroup& S, const Spectrum& spec) {
  check(S.has_zero(), ErrorKind::NoZero, "ultrafilters need a zero");
  std::vector<int> out;
  for (int e : S.idempotents) {
    if (e == S.zero) continue;
    bool atom = true;
    for (int f : S.idempotents)
      if (f != e && f != S.zero && S.idem_leq(f, e)) {
        atom = false;
        break;
      }
    if (atom) out.push_back(spec.principal_char(e));
  }
  return out;
}

bool is_cover(const InverseSemigroup& S, int e, const std::vector<int>& F) {
  check(e >= 0 && e < S.n && S.is_idem[e], ErrorKind::NotIdempotent, "cover base not idempotent");
  for (int f : F) {
    check(f >= 0 && f < S.n && S.is_idem[f], ErrorKind::NotBelowE, "cover member not idempotent");
    check(S.idem_leq(f, e), ErrorKind::NotBelowE,
          "cover member " + S.label(f) + " not below " + S.label(e));
  }
  for (int z : S.idempotents) {
    if (S.has_zero() && z == S.zero) continue;
    if (!S.idem_leq(z, e)) continue;
    bool hit = false;
    for (int f : F) {
      int zf = S.prod(z, f);
      if (!(S.has_zero() && zf == S.zero)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

std::vector<int> tight_characters(const InverseSemigroup& S, const Spectrum& spec) {
  check(S.has_zero(), ErrorKind::NoZero, "tight characters need a zero");
  // A filter fails tightness iff some member e admits a cover disjoint from
  // the filter; by monotonicity it suffices to test the maximal candidate,
  // the set of all idempotents below e outside the filter.
  std::vector<int> out;
  for (int c = 0; c < spec.num_chars(); ++c) {
    const Character& ch = spec.chars[c];
    bool tight = true;
    for (size_t p = 0; p < spec.eidx.size() && tight; ++p) {
      if (!ch.in_filter[p]) continue;
      const int e = spec.eidx[p];
      std::vector<int> candidate;
      for (int f : S.idempotents)
        if (S.idem_leq(f, e) && !ch.in_filter[spec.epos[f]]) candidate.push_back(f);
      if (is_cover(S, e, candidate)) tight = false;
    }
    if (tight) out.push_back(c);
  }
  // finite-case sandwich: ultrafilters = tight ⊆ proper
  auto uf = ultrafilter_characters(S, spec);
  std::set<int> tset(out.begin(), out.end());
  for (int c : out)
    check(spec.chars[c].proper, ErrorKind::InternalInconsistency, "tight character not proper");
  for (int u : uf)
    check(tset.count(u), ErrorKind::InternalInconsistency, "ultrafilter not tight");
  check(uf.size() == out.size(), ErrorKind::InternalInconsistency,
        "tight characters must equal ultrafilters at finite scale");
  return out;
}

int act_character(const InverseSemigroup& S, const Spectrum& spec, int s, int char_id) {
  const Character& ch = spec.chars[char_id];
  const int dom = S.prod(S.inv[s], s);
  check(ch.in_filter[spec.epos[dom]], ErrorKind::OutOfDomain,
        "character outside D(s*s) for s = " + S.label(s));
  const int m = static_cast<int>(spec.eidx.size());
  std::vector<char> bits(m, 0);
  for (int p = 0; p < m; ++p) {
    int conj = S.prod(S.prod(S.inv[s], spec.eidx[p]), s);
    bits[p] = S.is_idem[conj] ? ch.in_filter[spec.epos[conj]] : 0;
  }
  for (int c = 0; c < spec.num_chars(); ++c)
    if (spec.chars[c].in_filter == bits) return c;
  fail(ErrorKind::InternalInconsistency, "image of character action is not a character");
}

std::pair<std::vector<int>, std::vector<int>> fixed_and_interior(const InverseSemigroup& S,
                                                                 const Spectrum& spec, int s,
                                                                 const std::vector<int>& X) {
  std::vector<int> fix, xs;
  const int dom = S.prod(S.inv[s], s);
  for (int c : X) {
    if (spec.chars[c].in_filter[spec.epos[dom]] && act_character(S, spec, s, c) == c)
      fix.push_back(c);
    bool below = false;
    for (int e : S.idempotents)
      if (nat_leq_idem(S, e, s) && spec.chars[c].in_filter[spec.epos[e]]) {
        below = true;
        break;
      }
    if (below) xs.push_back(c);
  }
  // X_s ⊆ Fix(s) always
  for (int c : xs)
    check(std::find(fix.begin(), fix.end(), c) != fix.end(), ErrorKind::InternalInconsistency,
          "X_s not contained in Fix(s)");
  return {fix, xs};
}

std::vector<int> idem_strictly_below(const InverseSemigroup& S, int e) {
  std::vector<int> out;
  for (int f : S.idempotents)
    if (f != e && S.idem_leq(f, e)) out.push_back(f);
  return out;
}

namespace {

// Minimal hitting sets of the hypergraph (sets over ground), by branching on
// the elements of a smallest unhit set.
void minimal_transversals(const std::vector<std::vector<int>>& sets,
                          const std::vector<int>& ground, std::vector<int>& partial,
                          std::set<std::vector<int>>& out) {
  int pick = -1;
  size_t best = SIZE_MAX;
  for (size_t i = 0; i < sets.size(); ++i) {
    bool hit = false;
    for (int g : partial)
      if (std::find(sets[i].begin(), sets[i].end(), g) != sets[i].end()) {
        hit = true;
        break;
      }
    if (!hit && sets[i].size() < best) {
      best = sets[i].size();
      pick = static_cast<int>(i);
    }
  }
  if (pick < 0) {
    std::vector<int> t = partial;
    std::sort(t.begin(), t.end());
    // keep only inclusion-minimal transversals
    for (const auto& existing : out) {
      if (std::includes(t.begin(), t.end(), existing.begin(), existing.end())) return;
    }
    for (auto it = out.begin(); it != out.end();) {
      if (std::includes(it->begin(), it->end(), t.begin(), t.end()))
        it = out.erase(it);
      else
        ++it;
    }
    out.insert(t);
    return;
  }
  for (int g : sets[pick]) {
    partial.push_back(g);
    minimal_transversals(sets, ground, partial, out);
    partial.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> minimal_covers(const InverseSemigroup& S, int e) {
  check(S.is_idem[e], ErrorKind::NotIdempotent, "covers of a non-idempotent");
  std::vector<int> ground = idem_strictly_below(S, e);
  if (S.has_zero())
    ground.erase(std::remove(ground.begin(), ground.end(), S.zero), ground.end());
  std::vector<std::vector<int>> sets;
  for (int z : S.idempotents) {
    if (S.has_zero() && z == S.zero) continue;
    if (!S.idem_leq(z, e)) continue;
    std::vector<int> hz;
    for (int f : ground) {
      int zf = S.prod(z, f);
      if (!(S.has_zero() && zf == S.zero)) hz.push_back(f);
    }
    if (hz.empty()) return {};  // no cover of e avoids e
    sets.push_back(std::move(hz));
  }
  std::set<std::vector<int>> out;
  std::vector<int> partial;
  if (sets.empty()) {
    // no nonzero z below e, i.e. e is the zero: the empty set covers it
    return {{}};
  }
  minimal_transversals(sets, ground, partial, out);
  return {out.begin(), out.end()};
}

}  // namespace groupoidal
