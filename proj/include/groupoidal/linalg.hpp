#ifndef GROUPOIDAL_LINALG_HPP
#define GROUPOIDAL_LINALG_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "groupoidal/errors.hpp"

namespace groupoidal {

template <class F>
using Vec = std::vector<typename F::Elem>;

template <class F>
class Mat {
 public:
  using Elem = typename F::Elem;

  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols, Elem fill) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, fill) {}
  static Mat zero(int rows, int cols, const F& f) { return Mat(rows, cols, f.zero()); }
  static Mat identity(int n, const F& f) {
    Mat m(n, n, f.zero());
    for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Elem& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
  const Elem& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

  Vec<F> row(int i) const {
    return Vec<F>(data_.begin() + size_t(i) * cols_, data_.begin() + size_t(i + 1) * cols_);
  }
  void set_row(int i, const Vec<F>& v) {
    std::copy(v.begin(), v.end(), data_.begin() + size_t(i) * cols_);
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Mat transpose(const F& f) const {
    Mat t(cols_, rows_, f.zero());
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

 private:
  int rows_, cols_;
  std::vector<Elem> data_;
};

template <class F>
Mat<F> matmul(const Mat<F>& a, const Mat<F>& b, const F& f) {
  check(a.cols() == b.rows(), ErrorKind::InternalInconsistency, "matmul shape mismatch");
  Mat<F> c(a.rows(), b.cols(), f.zero());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const auto& aik = a.at(i, k);
      if (f.is_zero(aik)) continue;
      for (int j = 0; j < b.cols(); ++j)
        c.at(i, j) = f.add(c.at(i, j), f.mul(aik, b.at(k, j)));
    }
  return c;
}

template <class F>
Vec<F> mat_vec(const Mat<F>& a, const Vec<F>& x, const F& f) {
  Vec<F> y(a.rows(), f.zero());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!f.is_zero(a.at(i, j))) y[i] = f.add(y[i], f.mul(a.at(i, j), x[j]));
  return y;
}

template <class F>
bool is_zero_vec(const Vec<F>& v, const F& f) {
  for (const auto& x : v)
    if (!f.is_zero(x)) return false;
  return true;
}

template <class F>
Vec<F> vec_add(const Vec<F>& a, const Vec<F>& b, const F& f) {
  Vec<F> r(a.size(), f.zero());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

template <class F>
Vec<F> vec_sub(const Vec<F>& a, const Vec<F>& b, const F& f) {
  Vec<F> r(a.size(), f.zero());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

template <class F>
Vec<F> vec_scale(const Vec<F>& a, const typename F::Elem& c, const F& f) {
  Vec<F> r(a.size(), f.zero());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
  return r;
}

// In-place reduced row echelon form; returns the pivot column of each
// surviving (nonzero) row, in order.
template <class F>
std::vector<int> rref(Mat<F>& m, const F& f) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int sel = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!f.is_zero(m.at(i, c))) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
    auto piv_inv = f.inv(m.at(r, c));
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), piv_inv);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m.at(i, c))) continue;
      auto factor = m.at(i, c);
      for (int j = 0; j < m.cols(); ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
int rank(Mat<F> m, const F& f) {
  return static_cast<int>(rref(m, f).size());
}

// Basis of the right kernel {x : m x = 0}.
template <class F>
std::vector<Vec<F>> kernel(Mat<F> m, const F& f) {
  auto pivots = rref(m, f);
  std::vector<char> is_pivot(m.cols(), 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<Vec<F>> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec<F> v(m.cols(), f.zero());
    v[c] = f.one();
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m.at(int(r), c));
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of m x = b, if any.
template <class F>
std::optional<Vec<F>> solve(const Mat<F>& m, const Vec<F>& b, const F& f) {
  Mat<F> aug(m.rows(), m.cols() + 1, f.zero());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  auto pivots = rref(aug, f);
  for (int c : pivots)
    if (c == m.cols()) return std::nullopt;  // inconsistent row
  Vec<F> x(m.cols(), f.zero());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(int(r), m.cols());
  return x;
}

// A subspace kept in reduced row echelon form, supporting incremental
// insertion, membership tests and coordinate extraction.
template <class F>
class Subspace {
 public:
  explicit Subspace(int ambient, const F& f) : ambient_(ambient), field_(f) {}

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec<F>>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Reduces v against the current rows; the residual is returned.
  Vec<F> reduce(Vec<F> v) const {
    const F& f = field_;
    for (size_t r = 0; r < rows_.size(); ++r) {
      const auto& c = v[pivots_[r]];
      if (f.is_zero(c)) continue;
      auto factor = c;
      for (int j = 0; j < ambient_; ++j) v[j] = f.sub(v[j], f.mul(factor, rows_[r][j]));
    }
    return v;
  }

  bool contains(const Vec<F>& v) const { return is_zero_vec(reduce(v), field_); }

  // Inserts v; returns true if the dimension grew.
  bool insert(const Vec<F>& v) {
    const F& f = field_;
    Vec<F> res = reduce(v);
    int pc = -1;
    for (int j = 0; j < ambient_; ++j)
      if (!f.is_zero(res[j])) {
        pc = j;
        break;
      }
    if (pc < 0) return false;
    auto piv_inv = f.inv(res[pc]);
    for (int j = 0; j < ambient_; ++j) res[j] = f.mul(res[j], piv_inv);
    // back-substitute into existing rows
    for (size_t r = 0; r < rows_.size(); ++r) {
      auto c = rows_[r][pc];
      if (f.is_zero(c)) continue;
      for (int j = 0; j < ambient_; ++j) rows_[r][j] = f.sub(rows_[r][j], f.mul(c, res[j]));
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < pc) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(res));
    pivots_.insert(pivots_.begin() + pos, pc);
    return true;
  }

  // Coordinates of v in the stored (echelon) basis; v must be contained.
  Vec<F> coords(const Vec<F>& v) const {
    check(contains(v), ErrorKind::InternalInconsistency, "coords of vector outside subspace");
    Vec<F> c(rows_.size(), field_.zero());
    for (size_t r = 0; r < rows_.size(); ++r) c[r] = v[pivots_[r]];
    return c;
  }

  bool same_space(const Subspace& o) const {
    if (dim() != o.dim()) return false;
    for (const auto& r : rows_)
      if (!o.contains(r)) return false;
    return true;
  }

 private:
  int ambient_;
  F field_;
  std::vector<Vec<F>> rows_;
  std::vector<int> pivots_;
};

template <class F>
Subspace<F> span_of(const std::vector<Vec<F>>& vecs, int ambient, const F& f) {
  Subspace<F> s(ambient, f);
  for (const auto& v : vecs) s.insert(v);
  return s;
}

// Intersection of two subspaces of the same ambient space.
template <class F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b, const F& f) {
  int n = a.ambient();
  int ra = a.dim(), rb = b.dim();
  Subspace<F> out(n, f);
  if (ra == 0 || rb == 0) return out;
  // columns: a-basis vectors then negated b-basis vectors
  Mat<F> m(n, ra + rb, f.zero());
  for (int j = 0; j < ra; ++j)
    for (int i = 0; i < n; ++i) m.at(i, j) = a.basis()[j][i];
  for (int j = 0; j < rb; ++j)
    for (int i = 0; i < n; ++i) m.at(i, ra + j) = f.neg(b.basis()[j][i]);
  for (const auto& k : kernel(m, f)) {
    Vec<F> v(n, f.zero());
    for (int j = 0; j < ra; ++j)
      if (!f.is_zero(k[j])) v = vec_add(v, vec_scale(a.basis()[j], k[j], f), f);
    out.insert(v);
  }
  return out;
}

// Characteristic polynomial det(xI - M), monic, coefficients low-to-high.
// Hessenberg reduction followed by the leading-minor recurrence; valid over
// any exact field.
template <class F>
std::vector<typename F::Elem> charpoly(Mat<F> m, const F& f) {
  int n = m.rows();
  check(n == m.cols(), ErrorKind::InternalInconsistency, "charpoly of non-square matrix");
  // reduce to upper Hessenberg by similarity transformations
  for (int c = 0; c + 2 < n; ++c) {
    int piv = -1;
    for (int i = c + 1; i < n; ++i)
      if (!f.is_zero(m.at(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != c + 1) {
      for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c + 1, j));
      for (int i = 0; i < n; ++i) std::swap(m.at(i, piv), m.at(i, c + 1));
    }
    auto d = f.inv(m.at(c + 1, c));
    for (int i = c + 2; i < n; ++i) {
      auto t = f.mul(m.at(i, c), d);
      if (f.is_zero(t)) continue;
      for (int j = 0; j < n; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(t, m.at(c + 1, j)));
      for (int j = 0; j < n; ++j) m.at(j, c + 1) = f.add(m.at(j, c + 1), f.mul(t, m.at(j, i)));
    }
  }
  // p_k = charpoly of leading k x k block of the Hessenberg matrix
  std::vector<std::vector<typename F::Elem>> p(n + 1);
  p[0] = {f.one()};
  for (int k = 1; k <= n; ++k) {
    // p_k(x) = (x - h[k-1][k-1]) p_{k-1}(x)
    //          - sum_{i<k-1} h[i][k-1] (prod_{j=i+1}^{k-1} h[j][j-1]) p_i(x)
    std::vector<typename F::Elem> pk(k + 1, f.zero());
    for (int d = 0; d < k; ++d) {
      pk[d + 1] = f.add(pk[d + 1], p[k - 1][d]);
      pk[d] = f.sub(pk[d], f.mul(m.at(k - 1, k - 1), p[k - 1][d]));
    }
    auto prod = f.one();
    for (int i = k - 2; i >= 0; --i) {
      prod = f.mul(prod, m.at(i + 1, i));
      if (f.is_zero(prod)) break;
      auto coeff = f.mul(m.at(i, k - 1), prod);
      if (f.is_zero(coeff)) continue;
      for (int d = 0; d <= i; ++d) pk[d] = f.sub(pk[d], f.mul(coeff, p[i][d]));
    }
    p[k] = std::move(pk);
  }
  return p[n];
}

}  // namespace groupoidal

#endif  // GROUPOIDAL_LINALG_HPP
