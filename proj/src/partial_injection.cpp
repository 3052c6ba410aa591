#include "groupoidal/partial_injection.hpp"

#include <algorithm>

namespace groupoidal {

PartialInjection::PartialInjection(int ambient, const std::vector<std::pair<int, int>>& pairs)
    : map_(ambient, -1) {
  std::vector<char> hit(ambient, 0);
  for (auto [x, y] : pairs) {
    check(x >= 0 && x < ambient && y >= 0 && y < ambient, ErrorKind::BadParams,
          "partial injection pair out of ambient range");
    check(map_[x] < 0, ErrorKind::BadParams, "partial injection defined twice at " + std::to_string(x));
    check(!hit[y], ErrorKind::BadParams, "partial injection not injective at image " + std::to_string(y));
    map_[x] = y;
    hit[y] = 1;
  }
}

PartialInjection PartialInjection::identity(int ambient) {
  PartialInjection p(ambient);
  for (int i = 0; i < ambient; ++i) p.map_[i] = i;
  return p;
}

bool PartialInjection::empty() const {
  return std::all_of(map_.begin(), map_.end(), [](int v) { return v < 0; });
}

int PartialInjection::domain_size() const {
  return static_cast<int>(std::count_if(map_.begin(), map_.end(), [](int v) { return v >= 0; }));
}

PartialInjection PartialInjection::compose(const PartialInjection& b) const {
  check(ambient() == b.ambient(), ErrorKind::BadParams, "composition over different ambient sets");
  PartialInjection r(ambient());
  for (int x = 0; x < ambient(); ++x) {
    int y = b.map_[x];
    if (y >= 0 && map_[y] >= 0) r.map_[x] = map_[y];
  }
  return r;
}

PartialInjection PartialInjection::inverse() const {
  PartialInjection r(ambient());
  for (int x = 0; x < ambient(); ++x)
    if (map_[x] >= 0) r.map_[map_[x]] = x;
  return r;
}

std::string PartialInjection::to_string() const {
  std::string s = "[";
  bool first = true;
  for (int x = 0; x < ambient(); ++x) {
    if (map_[x] < 0) continue;
    if (!first) s += ",";
    s += std::to_string(x) + ">" + std::to_string(map_[x]);
    first = false;
  }
  return s + "]";
}

}  // namespace groupoidal
