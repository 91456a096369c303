#include "pbci/isomorphism.hpp"

#include <array>

namespace pbci {

namespace {

using Profile = std::array<std::size_t, 3>;

std::vector<Profile> profiles(const Algebra& a) {
  const auto n = static_cast<Element>(a.size());
  std::vector<Profile> out(n, Profile{0, 0, 0});
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (a.leq(y, x)) ++out[x][0];
      if (a.leq(x, y)) ++out[x][1];
    }
    out[x][2] = a.leq(x, a.unit()) ? 1 : 0;
  }
  return out;
}

class Matcher {
 public:
  Matcher(const Algebra& a, const Algebra& b, bool bijective)
      : a_(a), b_(b), bijective_(bijective), map_(a.size(), kUnset), used_(b.size(), false) {
    if (bijective_) {
      pa_ = profiles(a);
      pb_ = profiles(b);
    }
    order_.push_back(a.unit());
    for (Element x = 0; x < a.size(); ++x) {
      if (x != a.unit()) order_.push_back(x);
    }
  }

  std::optional<ElementMap> run() {
    if (bijective_ && a_.size() != b_.size()) return std::nullopt;
    if (a_.size() > b_.size()) return std::nullopt;
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr Element kUnset = ~Element{0};

  bool consistent(Element x) const {
    const Element fx = map_[x];
    for (Element u = 0; u < a_.size(); ++u) {
      const Element fu = map_[u];
      if (fu == kUnset) continue;
      const Element r[4] = {a_.arrow(x, u), a_.arrow(u, x), a_.squig(x, u), a_.squig(u, x)};
      const Element s[4] = {b_.arrow(fx, fu), b_.arrow(fu, fx), b_.squig(fx, fu), b_.squig(fu, fx)};
      for (int k = 0; k < 4; ++k) {
        if (map_[r[k]] != kUnset && map_[r[k]] != s[k]) return false;
      }
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return is_homomorphism(a_, b_, map_);
    const Element x = order_[depth];
    for (Element y = 0; y < b_.size(); ++y) {
      if (used_[y]) continue;
      if (depth == 0 && y != b_.unit()) continue;
      if (bijective_ && pa_[x] != pb_[y]) continue;
      map_[x] = y;
      used_[y] = true;
      if (consistent(x) && extend(depth + 1)) return true;
      used_[y] = false;
      map_[x] = kUnset;
    }
    return false;
  }

  const Algebra& a_;
  const Algebra& b_;
  bool bijective_;
  ElementMap map_;
  std::vector<bool> used_;
  std::vector<Element> order_;
  std::vector<Profile> pa_, pb_;
};

}  // namespace

std::optional<ElementMap> find_isomorphism(const Algebra& a, const Algebra& b) {
  return Matcher(a, b, true).run();
}

std::optional<ElementMap> find_embedding(const Algebra& a, const Algebra& b) {
  return Matcher(a, b, false).run();
}

}  // namespace pbci
