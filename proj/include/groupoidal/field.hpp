#ifndef GROUPOIDAL_FIELD_HPP
#define GROUPOIDAL_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "groupoidal/errors.hpp"

namespace groupoidal {

// Exact rational scalar. All linear algebra over Q goes through this type;
// floating point is never used.
using BigRat = mpq_class;

struct QField {
  using Elem = BigRat;
  static constexpr bool is_rational = true;

  std::uint32_t characteristic() const { return 0; }
  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return Elem(v); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    check(a != 0, ErrorKind::InternalInconsistency, "division by zero in Q");
    return Elem(1) / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string to_string(const Elem& a) const { return a.get_str(); }
  std::string name() const { return "Q"; }
};

// GF(p), p prime, p < 2^16. Elements are canonical residues in [0, p).
class FpField {
 public:
  using Elem = std::uint32_t;
  static constexpr bool is_rational = false;

  explicit FpField(std::uint32_t p) : p_(p) {
    check(p >= 2 && p < (1u << 16) && is_prime(p), ErrorKind::BadField,
          "field order must be a prime < 2^16, got " + std::to_string(p));
  }

  std::uint32_t characteristic() const { return p_; }
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }
  Elem add(Elem a, Elem b) const { return (a + b) % p_; }
  Elem sub(Elem a, Elem b) const { return (a + p_ - b) % p_; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem neg(Elem a) const { return (p_ - a) % p_; }
  Elem inv(Elem a) const {
    check(a != 0, ErrorKind::InternalInconsistency, "division by zero in GF(p)");
    return pow(a, p_ - 2);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = one(), base = a % p_;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  std::string to_string(Elem a) const { return std::to_string(a); }
  std::string name() const { return "F" + std::to_string(p_); }

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  std::uint32_t p_;
};

// Runtime field selection for the CLI: "q" or "fp:<p>".
using FieldSpec = std::variant<QField, FpField>;

inline FieldSpec parse_field(const std::string& s) {
  if (s == "q" || s == "Q") return QField{};
  if (s.rfind("fp:", 0) == 0) {
    unsigned long p = 0;
    try {
      p = std::stoul(s.substr(3));
    } catch (...) {
      fail(ErrorKind::BadField, "cannot parse field spec '" + s + "'");
    }
    return FpField(static_cast<std::uint32_t>(p));
  }
  fail(ErrorKind::BadField, "expected 'q' or 'fp:<p>', got '" + s + "'");
}

}  // namespace groupoidal

#endif  // GROUPOIDAL_FIELD_HPP
