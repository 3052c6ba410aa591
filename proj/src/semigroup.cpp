#include "groupoidal/semigroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

namespace groupoidal {

InverseSemigroup build_from_table(const std::vector<std::vector<int>>& table,
                                  std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  check(n > 0, ErrorKind::BadParams, "empty multiplication table");
  InverseSemigroup S;
  S.n = n;
  S.mul.assign(size_t(n) * n, -1);
  for (int i = 0; i < n; ++i) {
    check(static_cast<int>(table[i].size()) == n, ErrorKind::BadParams,
          "multiplication table is not square");
    for (int j = 0; j < n; ++j) {
      check(table[i][j] >= 0 && table[i][j] < n, ErrorKind::BadParams,
            "table entry out of range at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      S.mul[size_t(i) * n + j] = table[i][j];
    }
  }
  if (labels.empty()) {
    labels.resize(n);
    for (int i = 0; i < n; ++i) labels[i] = "s" + std::to_string(i);
  }
  check(static_cast<int>(labels.size()) == n, ErrorKind::BadParams, "label count mismatch");
  S.labels = std::move(labels);

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (S.prod(S.prod(a, b), c) != S.prod(a, S.prod(b, c)))
          fail(ErrorKind::NotAssociative,
               "witness (" + S.label(a) + "," + S.label(b) + "," + S.label(c) + ")");

  S.inv.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    int found = -1;
    for (int t = 0; t < n; ++t) {
      if (S.prod(S.prod(s, t), s) == s && S.prod(S.prod(t, s), t) == t) {
        if (found >= 0)
          fail(ErrorKind::NotInverse, "non-unique inverse for " + S.label(s) + ": both " +
                                          S.label(found) + " and " + S.label(t));
        found = t;
      }
    }
    if (found < 0) fail(ErrorKind::NotInverse, "no generalized inverse for " + S.label(s));
    S.inv[s] = found;
  }

  S.is_idem.assign(n, 0);
  for (int e = 0; e < n; ++e)
    if (S.prod(e, e) == e) {
      S.is_idem[e] = 1;
      S.idempotents.push_back(e);
    }
  for (int e : S.idempotents)
    for (int f : S.idempotents)
      if (S.prod(e, f) != S.prod(f, e))
        fail(ErrorKind::NotInverse,
             "idempotents do not commute: " + S.label(e) + ", " + S.label(f));
  // anti-homomorphism of the involution (implied by uniqueness; cheap to confirm)
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      check(S.inv[S.prod(s, t)] == S.prod(S.inv[t], S.inv[s]), ErrorKind::InternalInconsistency,
            "involution is not anti-multiplicative");

  for (int z = 0; z < n; ++z) {
    bool is_zero = true;
    for (int s = 0; s < n && is_zero; ++s)
      if (S.prod(z, s) != z || S.prod(s, z) != z) is_zero = false;
    if (is_zero) {
      S.zero = z;
      break;
    }
  }
  return S;
}

InverseSemigroup build_from_partial_injections(const std::vector<PartialInjection>& gens,
                                               int max_closure) {
  check(!gens.empty(), ErrorKind::BadParams, "no generators");
  const int ambient = gens[0].ambient();
  for (const auto& g : gens)
    check(g.ambient() == ambient, ErrorKind::BadParams, "generators over different ambient sets");
  if (const char* env = std::getenv("GROUPOIDAL_MAX_CLOSURE")) max_closure = std::atoi(env);

  std::vector<PartialInjection> elems;
  std::map<PartialInjection, int> index;
  auto intern = [&](const PartialInjection& p) {
    auto it = index.find(p);
    if (it != index.end()) return it->second;
    check(static_cast<int>(elems.size()) < max_closure, ErrorKind::ClosureTooLarge,
          "closure exceeds cap " + std::to_string(max_closure));
    int id = static_cast<int>(elems.size());
    elems.push_back(p);
    index.emplace(p, id);
    return id;
  };

  std::vector<PartialInjection> seeds = gens;
  for (const auto& g : gens) seeds.push_back(g.inverse());
  for (const auto& g : seeds) intern(g);

  // closure under products with the seed set on both sides
  for (size_t i = 0; i < elems.size(); ++i) {
    PartialInjection cur = elems[i];
    for (const auto& g : seeds) {
      intern(cur.compose(g));
      intern(g.compose(cur));
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = index.find(elems[i].compose(elems[j]));
      check(it != index.end(), ErrorKind::InternalInconsistency, "closure not closed");
      table[i][j] = it->second;
    }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = elems[i].empty() ? "0" : elems[i].to_string();
  return build_from_table(table, labels);
}

std::vector<char> natural_order(const InverseSemigroup& S) {
  const int n = S.n;
  std::vector<char> leq(size_t(n) * n, 0), leq_left(size_t(n) * n, 0);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      for (int e : S.idempotents) {
        if (S.prod(t, e) == s) leq[size_t(s) * n + t] = 1;
        if (S.prod(e, t) == s) leq_left[size_t(s) * n + t] = 1;
      }
    }
  check(leq == leq_left, ErrorKind::InternalInconsistency,
        "the two definitions of the natural order disagree");
  for (int s = 0; s < n; ++s)
    check(leq[size_t(s) * n + s], ErrorKind::InternalInconsistency, "natural order not reflexive");
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (s != t)
        check(!(leq[size_t(s) * n + t] && leq[size_t(t) * n + s]),
              ErrorKind::InternalInconsistency, "natural order not antisymmetric");
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (!leq[size_t(s) * n + t]) continue;
      check(leq[size_t(S.inv[s]) * n + S.inv[t]], ErrorKind::InternalInconsistency,
            "natural order not stable under involution");
      for (int u = 0; u < n; ++u) {
        check(leq[size_t(S.prod(u, s)) * n + S.prod(u, t)], ErrorKind::InternalInconsistency,
              "natural order not left compatible");
        check(leq[size_t(S.prod(s, u)) * n + S.prod(t, u)], ErrorKind::InternalInconsistency,
              "natural order not right compatible");
      }
    }
  return leq;
}

std::vector<int> maximal_subgroup(const InverseSemigroup& S, int e) {
  check(e >= 0 && e < S.n && S.is_idem[e], ErrorKind::NotIdempotent,
        "maximal subgroup base must be an idempotent");
  std::vector<int> g;
  for (int s = 0; s < S.n; ++s)
    if (S.prod(S.inv[s], s) == e && S.prod(s, S.inv[s]) == e) g.push_back(s);
  // sanity: closed, with identity e
  for (int a : g)
    for (int b : g)
      check(std::find(g.begin(), g.end(), S.prod(a, b)) != g.end(),
            ErrorKind::InternalInconsistency, "maximal subgroup not closed");
  for (int a : g)
    check(S.prod(e, a) == a && S.prod(a, e) == a, ErrorKind::InternalInconsistency,
          "idempotent is not an identity of its maximal subgroup");
  return g;
}

std::vector<int> canonical_partition(std::vector<int> part) {
  std::map<int, int> renum;
  for (int& c : part) {
    auto it = renum.find(c);
    if (it == renum.end()) {
      int id = static_cast<int>(renum.size());
      renum.emplace(c, id);
      c = id;
    } else {
      c = it->second;
    }
  }
  return part;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

// Smallest congruence containing the given pairs: close merges under left and
// right translation.
std::vector<int> congruence_closure(const InverseSemigroup& S,
                                    const std::vector<std::pair<int, int>>& pairs) {
  UnionFind uf(S.n);
  std::vector<std::pair<int, int>> work = pairs;
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    if (!uf.unite(a, b)) continue;
    for (int u = 0; u < S.n; ++u) {
      work.emplace_back(S.prod(u, a), S.prod(u, b));
      work.emplace_back(S.prod(a, u), S.prod(b, u));
    }
  }
  std::vector<int> part(S.n);
  for (int i = 0; i < S.n; ++i) part[i] = uf.find(i);
  return canonical_partition(part);
}

}  // namespace

std::vector<int> principal_congruence(const InverseSemigroup& S, int a, int b) {
  return congruence_closure(S, {{a, b}});
}

std::vector<std::vector<int>> enumerate_congruences(const InverseSemigroup& S) {
  check(S.n <= 8, ErrorKind::TooLarge,
        "congruence enumeration capped at |S| = 8, got " + std::to_string(S.n));
  std::set<std::vector<int>> seen;
  std::vector<int> equality(S.n);
  std::iota(equality.begin(), equality.end(), 0);
  seen.insert(equality);
  for (int a = 0; a < S.n; ++a)
    for (int b = a + 1; b < S.n; ++b) seen.insert(principal_congruence(S, a, b));
  // join-closure: the join of two congruences is the congruence generated by
  // identifying along both partitions
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> current(seen.begin(), seen.end());
    for (size_t i = 0; i < current.size(); ++i)
      for (size_t j = i + 1; j < current.size(); ++j) {
        std::vector<std::pair<int, int>> pairs;
        for (int x = 0; x < S.n; ++x)
          for (int y = x + 1; y < S.n; ++y)
            if (current[i][x] == current[i][y] || current[j][x] == current[j][y])
              pairs.emplace_back(x, y);
        auto join = congruence_closure(S, pairs);
        if (seen.insert(join).second) grew = true;
      }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace groupoidal
