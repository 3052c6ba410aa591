#ifndef GROUPOIDAL_PARTIAL_INJECTION_HPP
#define GROUPOIDAL_PARTIAL_INJECTION_HPP

#include <string>
#include <vector>

#include "groupoidal/errors.hpp"

namespace groupoidal {

// A partial injection on {0, ..., ambient-1}. Undefined points map to -1.
class PartialInjection {
 public:
  PartialInjection() = default;
  explicit PartialInjection(int ambient) : map_(ambient, -1) {}
  PartialInjection(int ambient, const std::vector<std::pair<int, int>>& pairs);

  static PartialInjection identity(int ambient);

  int ambient() const { return static_cast<int>(map_.size()); }
  int apply(int x) const { return map_[x]; }
  bool defined(int x) const { return map_[x] >= 0; }
  bool empty() const;
  int domain_size() const;

  // Usual composition of partial functions: (a.compose(b))(x) = a(b(x)).
  PartialInjection compose(const PartialInjection& b) const;
  PartialInjection inverse() const;

  bool operator==(const PartialInjection& o) const { return map_ == o.map_; }
  bool operator<(const PartialInjection& o) const { return map_ < o.map_; }

  std::string to_string() const;

 private:
  std::vector<int> map_;
};

}  // namespace groupoidal

#endif  // GROUPOIDAL_PARTIAL_INJECTION_HPP
