#include "groupoidal/germs.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace groupoidal {

void FiniteGroupoid::verify() const {
  const int A = num_arrows();
  for (int x = 0; x < num_objects; ++x) {
    int u = unit[x];
    check(u >= 0 && u < A && d[u] == x && r[u] == x, ErrorKind::InternalInconsistency,
          "unit arrow of object has wrong endpoints");
  }
  for (int g = 0; g < A; ++g)
    for (int h = 0; h < A; ++h) {
      int c = compose_tab[size_t(g) * A + h];
      if (composable(g, h)) {
        check(c >= 0 && c < A, ErrorKind::InternalInconsistency, "missing composite");
        check(d[c] == d[h] && r[c] == r[g], ErrorKind::InternalInconsistency,
              "composite has wrong endpoints");
      } else {
        check(c == -1, ErrorKind::InternalInconsistency, "composite defined off-domain");
      }
    }
  for (int g = 0; g < A; ++g)
    for (int h = 0; h < A; ++h) {
      if (!composable(g, h)) continue;
      for (int k = 0; k < A; ++k) {
        if (!composable(h, k)) continue;
        check(compose(compose(g, h), k) == compose(g, compose(h, k)),
              ErrorKind::InternalInconsistency, "composition not associative");
      }
    }
  for (int g = 0; g < A; ++g) {
    int gi = inv[g];
    check(d[gi] == r[g] && r[gi] == d[g], ErrorKind::InternalInconsistency,
          "inverse has wrong endpoints");
    check(compose(g, gi) == unit[r[g]] && compose(gi, g) == unit[d[g]],
          ErrorKind::InternalInconsistency, "inverse is not two-sided onto units");
  }
  for (int g = 0; g < A; ++g) {
    check(compose(g, unit[d[g]]) == g && compose(unit[r[g]], g) == g,
          ErrorKind::InternalInconsistency, "units are not neutral");
  }
}

int GermGroupoid::germ_arrow(int s, int char_id) const {
  int x = char_to_object[char_id];
  check(x >= 0, ErrorKind::InternalInconsistency, "character not an object of this groupoid");
  for (int a = 0; a < g.num_arrows(); ++a)
    if (g.d[a] == x &&
        std::find(germ_members[a].begin(), germ_members[a].end(), s) != germ_members[a].end())
      return a;
  fail(ErrorKind::OutOfDomain,
       "no germ [" + S->label(s) + ", char] : character outside D(s*s)");
}

GermGroupoid germ_groupoid(const InverseSemigroup& S, const Spectrum& spec,
                           const std::vector<int>& X) {
  GermGroupoid GG;
  GG.S = &S;
  GG.spec = &spec;
  GG.object_char = X;
  GG.char_to_object.assign(spec.num_chars(), -1);
  for (size_t i = 0; i < X.size(); ++i) GG.char_to_object[X[i]] = static_cast<int>(i);

  // invariance of X under the action
  for (int s = 0; s < S.n; ++s)
    for (int c : X) {
      if (!spec.theta(c, S.prod(S.inv[s], s))) continue;
      int img = act_character(S, spec, s, c);
      if (GG.char_to_object[img] < 0)
        fail(ErrorKind::NotInvariant, "witness (s, chi) = (" + S.label(s) + ", chi_" +
                                          S.label(spec.chars[c].minimum) + ")");
    }

  FiniteGroupoid& G = GG.g;
  G.num_objects = static_cast<int>(X.size());
  for (int c : X)
    G.object_labels.push_back("chi_" + S.label(spec.chars[c].minimum));

  // Germ classes per base character: (s,chi) ~ (t,chi) iff some u <= s,t has
  // chi(u*u) = 1; computed by exhaustive pairwise test. u <= s iff u = s(u*u).
  auto equivalent = [&](int s, int t, int c) {
    for (int u = 0; u < S.n; ++u) {
      int uu = S.prod(S.inv[u], u);
      if (S.prod(s, uu) != u || S.prod(t, uu) != u) continue;
      if (spec.theta(c, uu)) return true;
    }
    return false;
  };

  for (int obj = 0; obj < G.num_objects; ++obj) {
    const int c = X[obj];
    std::vector<int> defined;
    for (int s = 0; s < S.n; ++s)
      if (spec.theta(c, S.prod(S.inv[s], s))) defined.push_back(s);
    std::vector<int> cls(defined.size());
    std::iota(cls.begin(), cls.end(), 0);
    for (size_t i = 0; i < defined.size(); ++i)
      for (size_t j = i + 1; j < defined.size(); ++j)
        if (equivalent(defined[i], defined[j], c)) {
          int ci = cls[i], cj = cls[j];
          if (ci != cj)
            for (auto& v : cls)
              if (v == cj) v = ci;
        }
    std::set<int> class_ids(cls.begin(), cls.end());
    for (int id : class_ids) {
      std::vector<int> members;
      for (size_t i = 0; i < defined.size(); ++i)
        if (cls[i] == id) members.push_back(defined[i]);
      std::sort(members.begin(), members.end());
      GG.germ_rep.push_back(members.front());
      GG.germ_members.push_back(members);
      G.d.push_back(obj);
      // r([s, chi]) = s chi, the same for every member of the class
      int img = act_character(S, spec, members.front(), c);
      G.r.push_back(GG.char_to_object[img]);
      G.arrow_labels.push_back("[" + S.label(members.front()) + ",chi_" +
                               S.label(spec.chars[c].minimum) + "]");
    }
  }

  const int A = G.num_arrows();
  // units: the germ of (e, chi) for any idempotent e in the filter is the
  // unit at chi; locate it as the class containing the filter's minimum.
  G.unit.assign(G.num_objects, -1);
  for (int a = 0; a < A; ++a) {
    int obj = G.d[a];
    int min_e = spec.chars[X[obj]].minimum;
    if (std::find(GG.germ_members[a].begin(), GG.germ_members[a].end(), min_e) !=
        GG.germ_members[a].end())
      G.unit[obj] = a;
  }
  for (int x = 0; x < G.num_objects; ++x)
    check(G.unit[x] >= 0, ErrorKind::InternalInconsistency, "object without unit germ");

  // composition [s, t chi][t, chi] = [st, chi]; inversion [s, chi]^-1 = [s*, s chi]
  auto find_germ = [&](int s, int obj) {
    for (int a = 0; a < A; ++a)
      if (G.d[a] == obj && std::find(GG.germ_members[a].begin(), GG.germ_members[a].end(), s) !=
                               GG.germ_members[a].end())
        return a;
    fail(ErrorKind::InternalInconsistency, "germ class lookup failed");
  };
  G.compose_tab.assign(size_t(A) * A, -1);
  for (int g1 = 0; g1 < A; ++g1)
    for (int g2 = 0; g2 < A; ++g2) {
      if (!G.composable(g1, g2)) continue;
      int s = GG.germ_rep[g1], t = GG.germ_rep[g2];
      G.compose_tab[size_t(g1) * A + g2] = find_germ(S.prod(s, t), G.d[g2]);
    }
  G.inv.assign(A, -1);
  for (int a = 0; a < A; ++a) G.inv[a] = find_germ(S.inv[GG.germ_rep[a]], G.r[a]);

  G.verify();
  return GG;
}

GermGroupoid standard_groupoid(const InverseSemigroup& S, const Spectrum& spec,
                               GroupoidKind kind) {
  std::vector<int> X;
  switch (kind) {
    case GroupoidKind::Universal: {
      X.resize(spec.num_chars());
      std::iota(X.begin(), X.end(), 0);
      break;
    }
    case GroupoidKind::Contracted: {
      check(S.has_zero(), ErrorKind::NoZero, "contracted groupoid needs a zero");
      X = spec.proper_chars();
      break;
    }
    case GroupoidKind::Tight: {
      check(S.has_zero(), ErrorKind::NoZero, "tight groupoid needs a zero");
      X = tight_characters(S, spec);
      break;
    }
  }
  GermGroupoid GG = germ_groupoid(S, spec, X);
  if (kind == GroupoidKind::Universal)
    check(GG.g.num_arrows() == S.n, ErrorKind::VerificationFailed,
          "universal groupoid must have |S| arrows");
  if (kind == GroupoidKind::Contracted)
    check(GG.g.num_arrows() == S.n - 1, ErrorKind::VerificationFailed,
          "contracted groupoid must have |S|-1 arrows");
  if (kind == GroupoidKind::Universal) verify_isotropy_matches_max_subgroups(GG);
  return GG;
}

OrbitsAndIsotropy orbits_and_isotropy(const FiniteGroupoid& G) {
  OrbitsAndIsotropy out;
  std::vector<int> parent(G.num_objects);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < G.num_arrows(); ++a) {
    int x = find(G.d[a]), y = find(G.r[a]);
    if (x != y) parent[y] = x;
  }
  out.orbit_of.assign(G.num_objects, -1);
  for (int x = 0; x < G.num_objects; ++x) {
    int root = find(x);
    int id = -1;
    for (size_t i = 0; i < out.orbits.size(); ++i)
      if (find(out.orbits[i][0]) == root) id = static_cast<int>(i);
    if (id < 0) {
      id = static_cast<int>(out.orbits.size());
      out.orbits.emplace_back();
    }
    out.orbit_of[x] = id;
    out.orbits[id].push_back(x);
  }
  out.isotropy.assign(G.num_objects, {});
  for (int a = 0; a < G.num_arrows(); ++a)
    if (G.d[a] == G.r[a]) out.isotropy[G.d[a]].push_back(a);
  // isotropy sets are groups under composition
  for (int x = 0; x < G.num_objects; ++x)
    for (int a : out.isotropy[x])
      for (int b : out.isotropy[x])
        check(G.compose(a, b) >= 0, ErrorKind::InternalInconsistency, "isotropy not closed");
  return out;
}

bool is_minimal(const FiniteGroupoid& G) {
  return orbits_and_isotropy(G).orbits.size() == 1 || G.num_objects == 0;
}

bool is_effective(const FiniteGroupoid& G) {
  for (int a = 0; a < G.num_arrows(); ++a)
    if (G.d[a] == G.r[a] && !G.is_unit(a)) return false;
  return true;
}

bool is_effective_dual(const GermGroupoid& GG) {
  const bool m1 = is_effective(GG.g);
  // method 2: X_s = Fix(s) for every s (interiors are trivial here)
  const InverseSemigroup& S = *GG.S;
  bool m2 = true;
  for (int s = 0; s < S.n && m2; ++s) {
    auto [fix, xs] = fixed_and_interior(S, *GG.spec, s, GG.object_char);
    if (fix != xs) m2 = false;
  }
  check(m1 == m2, ErrorKind::InternalInconsistency,
        "effectiveness methods disagree (isotropy vs fixed-point)");
  return m1;
}

void verify_isotropy_matches_max_subgroups(const GermGroupoid& GG) {
  const InverseSemigroup& S = *GG.S;
  auto oi = orbits_and_isotropy(GG.g);
  for (int e : S.idempotents) {
    int c = GG.spec->principal_char(e);
    int obj = GG.char_to_object[c];
    if (obj < 0) continue;
    auto ge = maximal_subgroup(S, e);
    const auto& iso = oi.isotropy[obj];
    check(ge.size() == iso.size(), ErrorKind::VerificationFailed,
          "isotropy at principal character has wrong order at e = " + S.label(e));
    // s -> [s, chi_e] is a bijective homomorphism
    std::vector<int> image;
    for (int s : ge) {
      int a = GG.germ_arrow(s, c);
      check(GG.g.d[a] == obj && GG.g.r[a] == obj, ErrorKind::VerificationFailed,
            "maximal subgroup element maps outside isotropy");
      image.push_back(a);
    }
    std::sort(image.begin(), image.end());
    auto uniq = std::unique(image.begin(), image.end());
    check(uniq == image.end() && image.size() == iso.size(), ErrorKind::VerificationFailed,
          "G_e -> G_{chi_e} not bijective at e = " + S.label(e));
    for (int s : ge)
      for (int t : ge)
        check(GG.g.compose(GG.germ_arrow(s, c), GG.germ_arrow(t, c)) ==
                  GG.germ_arrow(S.prod(s, t), c),
              ErrorKind::VerificationFailed, "G_e -> G_{chi_e} not multiplicative");
  }
}

bool is_valid_bisection(const FiniteGroupoid& G, const LocalBisection& U) {
  std::set<int> ds, rs;
  for (int a : U.arrows) {
    if (!ds.insert(G.d[a]).second) return false;
    if (!rs.insert(G.r[a]).second) return false;
  }
  return true;
}

LocalBisection bisection_product(const FiniteGroupoid& G, const LocalBisection& U,
                                 const LocalBisection& V) {
  check(is_valid_bisection(G, U) && is_valid_bisection(G, V), ErrorKind::NotABisection,
        "bisection product of invalid bisection");
  std::set<int> out;
  for (int u : U.arrows)
    for (int v : V.arrows)
      if (G.composable(u, v)) out.insert(G.compose(u, v));
  LocalBisection P{std::vector<int>(out.begin(), out.end())};
  check(is_valid_bisection(G, P), ErrorKind::InternalInconsistency,
        "product of bisections not a bisection");
  return P;
}

LocalBisection bisection_star(const FiniteGroupoid& G, const LocalBisection& U) {
  check(is_valid_bisection(G, U), ErrorKind::NotABisection, "star of invalid bisection");
  std::set<int> out;
  for (int a : U.arrows) out.insert(G.inv[a]);
  return LocalBisection{std::vector<int>(out.begin(), out.end())};
}

std::vector<int> bisection_orbit(const FiniteGroupoid& G, int x) {
  // singleton bisections generate all moves at finite scale
  std::set<int> orbit{x};
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < G.num_arrows(); ++a)
      if (orbit.count(G.d[a]) && orbit.insert(G.r[a]).second) grew = true;
  }
  return {orbit.begin(), orbit.end()};
}

RestrictedGroupoid restrict_groupoid(const FiniteGroupoid& G, const std::vector<int>& Y) {
  RestrictedGroupoid R;
  std::vector<int> new_obj(G.num_objects, -1);
  for (int y : Y) {
    check(y >= 0 && y < G.num_objects, ErrorKind::BadParams, "restriction object out of range");
    if (new_obj[y] < 0) {
      new_obj[y] = static_cast<int>(R.old_object.size());
      R.old_object.push_back(y);
    }
  }
  R.g.num_objects = static_cast<int>(R.old_object.size());
  for (int y : R.old_object) R.g.object_labels.push_back(
      y < static_cast<int>(G.object_labels.size()) ? G.object_labels[y] : std::to_string(y));
  std::vector<int> new_arrow(G.num_arrows(), -1);
  for (int a = 0; a < G.num_arrows(); ++a) {
    if (new_obj[G.d[a]] < 0 || new_obj[G.r[a]] < 0) continue;
    new_arrow[a] = static_cast<int>(R.old_arrow.size());
    R.old_arrow.push_back(a);
    R.g.d.push_back(new_obj[G.d[a]]);
    R.g.r.push_back(new_obj[G.r[a]]);
    R.g.arrow_labels.push_back(a < static_cast<int>(G.arrow_labels.size()) ? G.arrow_labels[a]
                                                                           : std::to_string(a));
  }
  const int A = R.g.num_arrows();
  R.g.unit.assign(R.g.num_objects, -1);
  for (int x = 0; x < R.g.num_objects; ++x) R.g.unit[x] = new_arrow[G.unit[R.old_object[x]]];
  R.g.inv.assign(A, -1);
  for (int a = 0; a < A; ++a) R.g.inv[a] = new_arrow[G.inv[R.old_arrow[a]]];
  R.g.compose_tab.assign(size_t(A) * A, -1);
  for (int a = 0; a < A; ++a)
    for (int b = 0; b < A; ++b)
      if (R.g.composable(a, b))
        R.g.compose_tab[size_t(a) * A + b] = new_arrow[G.compose(R.old_arrow[a], R.old_arrow[b])];
  R.g.verify();
  return R;
}

RestrictedGroupoid restrict_invariant(const FiniteGroupoid& G, const std::vector<int>& Y) {
  auto oi = orbits_and_isotropy(G);
  std::set<int> yset(Y.begin(), Y.end());
  for (int y : Y)
    for (int z : oi.orbits[oi.orbit_of[y]])
      if (!yset.count(z))
        fail(ErrorKind::NotInvariant,
             "object subset not invariant: orbit of " + std::to_string(y) + " leaves it");
  return restrict_groupoid(G, Y);
}

FiniteGroupoid pair_groupoid(int num_objects) {
  FiniteGroupoid G;
  G.num_objects = num_objects;
  const int A = num_objects * num_objects;
  G.d.resize(A);
  G.r.resize(A);
  auto id = [num_objects](int from, int to) { return to * num_objects + from; };
  for (int x = 0; x < num_objects; ++x)
    for (int y = 0; y < num_objects; ++y) {
      G.d[id(x, y)] = x;
      G.r[id(x, y)] = y;
      G.arrow_labels.push_back(std::to_string(x) + ">" + std::to_string(y));
    }
  G.unit.resize(num_objects);
  for (int x = 0; x < num_objects; ++x) {
    G.unit[x] = id(x, x);
    G.object_labels.push_back(std::to_string(x));
  }
  G.inv.resize(A);
  for (int x = 0; x < num_objects; ++x)
    for (int y = 0; y < num_objects; ++y) G.inv[id(x, y)] = id(y, x);
  G.compose_tab.assign(size_t(A) * A, -1);
  for (int g = 0; g < A; ++g)
    for (int h = 0; h < A; ++h)
      if (G.composable(g, h)) G.compose_tab[size_t(g) * A + h] = id(G.d[h], G.r[g]);
  G.verify();
  return G;
}

FiniteGroupoid group_as_groupoid(const InverseSemigroup& T) {
  check(T.idempotents.size() == 1, ErrorKind::BadParams, "not a group table");
  FiniteGroupoid G;
  G.num_objects = 1;
  G.object_labels = {"*"};
  const int A = T.n;
  G.d.assign(A, 0);
  G.r.assign(A, 0);
  G.unit = {T.idempotents[0]};
  G.inv = T.inv;
  G.arrow_labels = T.labels;
  G.compose_tab.assign(size_t(A) * A, -1);
  for (int g = 0; g < A; ++g)
    for (int h = 0; h < A; ++h) G.compose_tab[size_t(g) * A + h] = T.prod(g, h);
  G.verify();
  return G;
}

FiniteGroupoid disjoint_units_groupoid(int num_objects) {
  FiniteGroupoid G;
  G.num_objects = num_objects;
  G.d.resize(num_objects);
  G.r.resize(num_objects);
  G.unit.resize(num_objects);
  G.inv.resize(num_objects);
  for (int x = 0; x < num_objects; ++x) {
    G.d[x] = G.r[x] = x;
    G.unit[x] = x;
    G.inv[x] = x;
    G.object_labels.push_back(std::to_string(x));
    G.arrow_labels.push_back("id" + std::to_string(x));
  }
  G.compose_tab.assign(size_t(num_objects) * num_objects, -1);
  for (int x = 0; x < num_objects; ++x) G.compose_tab[size_t(x) * num_objects + x] = x;
  G.verify();
  return G;
}

}  // namespace groupoidal
