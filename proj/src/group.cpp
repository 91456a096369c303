#include "pbci/group.hpp"

namespace pbci {

Group::Group(std::vector<std::string> names, std::vector<std::size_t> table)
    : names_(std::move(names)), mult_(std::move(table)) {
  const std::size_t k = names_.size();
  if (k == 0) throw InvalidInput("not a group: empty carrier");
  if (mult_.size() != k * k) throw InvalidInput("not a group: table must be " + std::to_string(k) + "x" + std::to_string(k));
  for (auto v : mult_) {
    if (v >= k) throw InvalidInput("not a group: table entry out of range");
  }
  bool found = false;
  for (std::size_t e = 0; e < k && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < k && ok; ++x) ok = mult(e, x) == x && mult(x, e) == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw InvalidInput("not a group: no identity element");
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      for (std::size_t z = 0; z < k; ++z) {
        if (mult(mult(x, y), z) != mult(x, mult(y, z))) {
          throw InvalidInput("not a group: associativity fails at (" + names_[x] + "," + names_[y] + "," +
                             names_[z] + ")");
        }
      }
    }
  }
  inverse_.assign(k, k);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      if (mult(x, y) == identity_ && mult(y, x) == identity_) inverse_[x] = y;
    }
    if (inverse_[x] == k) throw InvalidInput("not a group: no inverse for " + names_[x]);
  }
}

Group Group::cyclic(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::size_t> mult(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(i == 0 ? "1" : i == 1 ? "g" : "g" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) mult[i * n + j] = (i + j) % n;
  }
  return Group(std::move(names), std::move(mult));
}

Group Group::dihedral(std::size_t n) {
  const std::size_t k = 2 * n;
  std::vector<std::string> names(k);
  std::vector<std::size_t> mult(k * k);
  auto rpow = [](std::size_t i) { return i == 0 ? std::string() : i == 1 ? std::string("r") : "r" + std::to_string(i); };
  for (std::size_t j = 0; j < 2; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      std::string nm = rpow(i) + (j ? "s" : "");
      names[i + n * j] = nm.empty() ? "1" : nm;
    }
  }
  // (r^i s^a)(r^k s^b) = r^(i + (-1)^a k) s^(a+b)
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t b = 0; b < 2; ++b) {
        for (std::size_t kk = 0; kk < n; ++kk) {
          const std::size_t rot = a ? (i + n - kk) % n : (i + kk) % n;
          mult[(i + n * a) * k + (kk + n * b)] = rot + n * ((a + b) % 2);
        }
      }
    }
  }
  return Group(std::move(names), std::move(mult));
}

Group Group::direct_product(const Group& g, const Group& h) {
  const std::size_t k = g.size() * h.size();
  std::vector<std::string> names;
  std::vector<std::size_t> mult(k * k);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < h.size(); ++j) names.push_back("(" + g.name(i) + "," + h.name(j) + ")");
  }
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      const std::size_t gi = g.mult(x / h.size(), y / h.size());
      const std::size_t hj = h.mult(x % h.size(), y % h.size());
      mult[x * k + y] = gi * h.size() + hj;
    }
  }
  return Group(std::move(names), std::move(mult));
}

Algebra group_to_algebra(const Group& g) {
  const std::size_t k = g.size();
  std::vector<Element> arrow(k * k), squig(k * k);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      arrow[x * k + y] = static_cast<Element>(g.mult(y, g.inverse(x)));
      squig[x * k + y] = static_cast<Element>(g.mult(g.inverse(x), y));
    }
  }
  return Algebra(g.names(), static_cast<Element>(g.identity()), std::move(arrow), std::move(squig));
}

}  // namespace pbci
