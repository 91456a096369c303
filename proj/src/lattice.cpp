#include "pbci/lattice.hpp"

#include <algorithm>
#include <array>

namespace pbci {

FiniteLattice::FiniteLattice(std::vector<std::string> labels, std::vector<char> leq)
    : labels_(std::move(labels)), leq_(std::move(leq)) {
  const std::size_t m = labels_.size();
  if (m == 0) throw InvalidInput("lattice must be nonempty");
  if (leq_.size() != m * m) throw InvalidInput("order relation has the wrong size");
  for (std::size_t x = 0; x < m; ++x) {
    if (!this->leq(x, x)) throw InvalidInput("order is not reflexive at " + labels_[x]);
    for (std::size_t y = 0; y < m; ++y) {
      if (x != y && this->leq(x, y) && this->leq(y, x)) throw InvalidInput("order is not antisymmetric");
      for (std::size_t z = 0; z < m; ++z) {
        if (this->leq(x, y) && this->leq(y, z) && !this->leq(x, z)) throw InvalidInput("order is not transitive");
      }
    }
  }
  join_.assign(m * m, m);
  meet_.assign(m * m, m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      // least upper bound / greatest lower bound, if unique
      for (std::size_t u = 0; u < m; ++u) {
        if (!this->leq(x, u) || !this->leq(y, u)) continue;
        bool least = true;
        for (std::size_t v = 0; v < m && least; ++v) {
          if (this->leq(x, v) && this->leq(y, v) && !this->leq(u, v)) least = false;
        }
        if (least) join_[x * m + y] = u;
      }
      for (std::size_t u = 0; u < m; ++u) {
        if (!this->leq(u, x) || !this->leq(u, y)) continue;
        bool greatest = true;
        for (std::size_t v = 0; v < m && greatest; ++v) {
          if (this->leq(v, x) && this->leq(v, y) && !this->leq(v, u)) greatest = false;
        }
        if (greatest) meet_[x * m + y] = u;
      }
      if (join_[x * m + y] == m || meet_[x * m + y] == m) {
        throw InvalidInput("not a lattice: " + labels_[x] + " and " + labels_[y] + " lack a join or meet");
      }
    }
  }
  top_ = bottom_ = 0;
  for (std::size_t x = 1; x < m; ++x) {
    top_ = join_[top_ * m + x];
    bottom_ = meet_[bottom_ * m + x];
  }
}

FiniteLattice FiniteLattice::from_closed_family(std::vector<Subset> family,
                                                const std::function<std::string(const Subset&)>& label) {
  const std::size_t m = family.size();
  if (m == 0) throw InvalidInput("empty family");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (family[i] == family[j]) throw InvalidInput("family has repeated members");
    }
  }
  auto find = [&](const Subset& s) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < m; ++i) {
      if (family[i] == s) return i;
    }
    return std::nullopt;
  };
  Subset all = family[0];
  for (const auto& s : family) all |= s;
  if (!find(all)) throw InvalidInput("family has no greatest member");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!find(family[i] & family[j])) throw InvalidInput("family is not closed under intersection");
    }
  }
  std::vector<std::string> labels;
  std::vector<char> leq(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    if (label) {
      labels.push_back(label(family[i]));
    } else {
      std::string s = "{";
      for (auto x : family[i].members()) s += (s.size() > 1 ? "," : "") + std::to_string(x);
      labels.push_back(s + "}");
    }
    for (std::size_t j = 0; j < m; ++j) leq[i * m + j] = family[i].subset_of(family[j]);
  }
  FiniteLattice l(std::move(labels), std::move(leq));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (family[l.meet(i, j)] != (family[i] & family[j])) {
        throw InconsistencyError("lattice meet differs from intersection");
      }
    }
  }
  l.carriers_ = std::move(family);
  return l;
}

FiniteLattice FiniteLattice::from_closed_family(const Algebra& a, std::vector<Subset> family) {
  return from_closed_family(std::move(family), [&a](const Subset& s) { return format_subset(a, s); });
}

std::optional<std::size_t> FiniteLattice::index_of(const Subset& s) const {
  if (!carriers_) return std::nullopt;
  for (std::size_t i = 0; i < carriers_->size(); ++i) {
    if ((*carriers_)[i] == s) return i;
  }
  return std::nullopt;
}

namespace {

std::vector<std::string> labels_of(const FiniteLattice& l, std::initializer_list<std::size_t> xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(l.label(x));
  return out;
}

}  // namespace

IdentityCheck is_modular(const FiniteLattice& l) {
  const std::size_t m = l.size();
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      for (std::size_t z = 0; z < m; ++z) {
        if (!l.leq(x, z)) continue;
        if (l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z)) return {false, labels_of(l, {x, y, z})};
      }
    }
  }
  return {};
}

IdentityCheck is_distributive(const FiniteLattice& l) {
  const std::size_t m = l.size();
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      for (std::size_t z = 0; z < m; ++z) {
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return {false, labels_of(l, {x, y, z})};
      }
    }
  }
  return {};
}

IdentityCheck is_arguesian(const FiniteLattice& l, std::size_t cap) {
  const std::size_t m = l.size();
  if (m > cap) throw CapExceeded("arguesian check limited to " + std::to_string(cap) + " elements");
  auto J = [&](std::size_t a, std::size_t b) { return l.join(a, b); };
  auto M = [&](std::size_t a, std::size_t b) { return l.meet(a, b); };
  // Swapping every xi with yi leaves both sides unchanged, so x1 <= y1 by
  // index suffices.
  for (std::size_t x1 = 0; x1 < m; ++x1) {
    for (std::size_t y1 = x1; y1 < m; ++y1) {
      const std::size_t p1 = J(x1, y1);
      for (std::size_t x2 = 0; x2 < m; ++x2) {
        for (std::size_t y2 = 0; y2 < m; ++y2) {
          const std::size_t p = M(p1, J(x2, y2));
          // The right side is at least (x1 ^ x2) v (y1 ^ y2).
          if (p == l.bottom() || l.leq(p, J(M(x1, x2), M(y1, y2)))) continue;
          const std::size_t z12 = M(J(x1, x2), J(y1, y2));
          for (std::size_t x3 = 0; x3 < m; ++x3) {
            for (std::size_t y3 = 0; y3 < m; ++y3) {
              const std::size_t lhs = M(p, J(x3, y3));
              if (lhs == l.bottom()) continue;
              const std::size_t z13 = M(J(x1, x3), J(y1, y3));
              const std::size_t z23 = M(J(x2, x3), J(y2, y3));
              const std::size_t z = M(z12, J(z13, z23));
              const std::size_t rhs = J(M(x1, J(x2, z)), M(y1, J(y2, z)));
              if (!l.leq(lhs, rhs)) return {false, labels_of(l, {x1, x2, x3, y1, y2, y3})};
            }
          }
        }
      }
    }
  }
  return {};
}

std::optional<std::vector<std::string>> find_pentagon(const FiniteLattice& l) {
  const std::size_t m = l.size();
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      for (std::size_t z = 0; z < m; ++z) {
        if (!l.leq(x, z)) continue;
        const std::size_t a = l.join(x, l.meet(y, z));
        const std::size_t b = l.meet(l.join(x, y), z);
        if (a == b) continue;
        const std::size_t bot = l.meet(a, y), top = l.join(a, y);
        const std::array<std::size_t, 5> e{bot, a, b, y, top};
        const bool ok = l.meet(b, y) == bot && l.join(b, y) == top && l.leq(a, b) && bot != a && b != top &&
                        bot != y && y != top && !l.leq(y, b) && !l.leq(a, y);
        if (!ok) throw InconsistencyError("modular failure did not yield a pentagon");
        return labels_of(l, {e[0], e[1], e[2], e[3], e[4]});
      }
    }
  }
  return std::nullopt;
}

bool is_sublattice(const FiniteLattice& sub, const FiniteLattice& super) {
  if (!sub.carriers() || !super.carriers()) throw InvalidInput("sublattice test needs subset families");
  std::vector<std::size_t> image;
  for (const auto& s : *sub.carriers()) {
    auto idx = super.index_of(s);
    if (!idx) throw InvalidInput("element of the sublattice missing from the lattice");
    image.push_back(*idx);
  }
  for (std::size_t i = 0; i < sub.size(); ++i) {
    for (std::size_t j = 0; j < sub.size(); ++j) {
      if (super.join(image[i], image[j]) != image[sub.join(i, j)]) return false;
      if (super.meet(image[i], image[j]) != image[sub.meet(i, j)]) return false;
    }
  }
  return true;
}

namespace {

class LatticeMatcher {
 public:
  LatticeMatcher(const FiniteLattice& l, const FiniteLattice& r) : l_(l), r_(r), map_(l.size(), kUnset), used_(r.size()) {
    pl_ = profile(l);
    pr_ = profile(r);
  }
  std::optional<std::vector<std::size_t>> run() {
    if (l_.size() != r_.size()) return std::nullopt;
    auto a = pl_, b = pr_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kUnset = ~std::size_t{0};
  static std::vector<std::pair<std::size_t, std::size_t>> profile(const FiniteLattice& l) {
    std::vector<std::pair<std::size_t, std::size_t>> p(l.size());
    for (std::size_t x = 0; x < l.size(); ++x) {
      for (std::size_t y = 0; y < l.size(); ++y) {
        if (l.leq(y, x)) ++p[x].first;
        if (l.leq(x, y)) ++p[x].second;
      }
    }
    return p;
  }
  bool extend(std::size_t x) {
    if (x == l_.size()) return true;
    for (std::size_t y = 0; y < r_.size(); ++y) {
      if (used_[y] || pl_[x] != pr_[y]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < x && ok; ++u) {
        ok = l_.leq(u, x) == r_.leq(map_[u], y) && l_.leq(x, u) == r_.leq(y, map_[u]);
      }
      if (!ok) continue;
      map_[x] = y;
      used_[y] = true;
      if (extend(x + 1)) return true;
      used_[y] = false;
      map_[x] = kUnset;
    }
    return false;
  }
  const FiniteLattice& l_;
  const FiniteLattice& r_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
  std::vector<std::pair<std::size_t, std::size_t>> pl_, pr_;
};

}  // namespace

std::optional<std::vector<std::size_t>> lattice_isomorphism(const FiniteLattice& l, const FiniteLattice& r) {
  return LatticeMatcher(l, r).run();
}

}  // namespace pbci
