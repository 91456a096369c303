#include "pbci/congruences.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pbci/filters.hpp"

namespace pbci {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  explicit UnionFind(const Partition& p) : UnionFind(p.size()) {
    const auto reps = p.representatives();
    for (std::size_t x = 0; x < p.size(); ++x) unite(x, reps[p.block_of(static_cast<Element>(x))]);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[std::max(x, y)] = std::min(x, y);
    return true;
  }
  Partition partition() {
    std::vector<std::size_t> l(parent_.size());
    for (std::size_t x = 0; x < l.size(); ++x) l[x] = find(x);
    return Partition(std::move(l));
  }

 private:
  std::vector<std::size_t> parent_;
};

// Closes uf under compatibility with both arrows.
Partition close_congruence(const Algebra& a, UnionFind& uf) {
  const Element n = static_cast<Element>(a.size());
  for (bool grew = true; grew;) {
    grew = false;
    for (Element x = 0; x < n; ++x) {
      for (Element y = x + 1; y < n; ++y) {
        if (uf.find(x) != uf.find(y)) continue;
        for (Element z = 0; z < n; ++z) {
          grew |= uf.unite(a.arrow(x, z), a.arrow(y, z));
          grew |= uf.unite(a.arrow(z, x), a.arrow(z, y));
          grew |= uf.unite(a.squig(x, z), a.squig(y, z));
          grew |= uf.unite(a.squig(z, x), a.squig(z, y));
        }
      }
    }
  }
  return uf.partition();
}

bool partition_less(const Partition& p, const Partition& q) {
  if (p.num_blocks() != q.num_blocks()) return p.num_blocks() > q.num_blocks();
  return p.labels() < q.labels();
}

void require_congruence(const Algebra& a, const Partition& theta) {
  if (theta.size() != a.size()) throw PreconditionError("partition size differs from the carrier");
  if (auto w = incompatibility(a, theta)) {
    throw PreconditionError("not a congruence: incompatible at (" + (*w)[0] + "," + (*w)[1] + "," + (*w)[2] + ")");
  }
}

}  // namespace

std::optional<std::vector<std::string>> incompatibility(const Algebra& a, const Partition& theta) {
  const Element n = static_cast<Element>(a.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (x == y || !theta.related(x, y)) continue;
      for (Element z = 0; z < n; ++z) {
        if (!theta.related(a.arrow(x, z), a.arrow(y, z)) || !theta.related(a.arrow(z, x), a.arrow(z, y)) ||
            !theta.related(a.squig(x, z), a.squig(y, z)) || !theta.related(a.squig(z, x), a.squig(z, y))) {
          return std::vector<std::string>{a.name(x), a.name(y), a.name(z)};
        }
      }
    }
  }
  return std::nullopt;
}

Partition congruence_generated(const Algebra& a, const std::vector<std::pair<Element, Element>>& pairs) {
  UnionFind uf(a.size());
  for (auto [x, y] : pairs) {
    if (x >= a.size() || y >= a.size()) throw InvalidInput("pair outside the carrier");
    uf.unite(x, y);
  }
  return close_congruence(a, uf);
}

std::vector<Partition> all_congruences(const Algebra& a) {
  const Element n = static_cast<Element>(a.size());
  std::set<std::vector<std::size_t>> seen;
  std::vector<Partition> out;
  auto add = [&](const Partition& p) {
    if (seen.insert(p.labels()).second) out.push_back(p);
  };
  add(Partition::identity(n));
  std::vector<Partition> principal;
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      Partition p = congruence_generated(a, {{x, y}});
      if (seen.insert(p.labels()).second) {
        out.push_back(p);
        principal.push_back(p);
      }
    }
  }
  // Joins of congruences taken as equivalences are congruences; close under
  // joining with principal ones.
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& p : principal) {
      Partition j = out[i].join(p);
      if (seen.insert(j.labels()).second) out.push_back(j);
    }
  }
  std::sort(out.begin(), out.end(), partition_less);
  return out;
}

Algebra quotient(const Algebra& a, const Partition& theta) {
  require_congruence(a, theta);
  const auto reps = theta.representatives();
  const std::size_t k = reps.size();
  std::vector<std::string> names;
  for (auto r : reps) names.push_back(a.name(r));
  std::vector<Element> arrow(k * k), squig(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      arrow[i * k + j] = static_cast<Element>(theta.block_of(a.arrow(reps[i], reps[j])));
      squig[i * k + j] = static_cast<Element>(theta.block_of(a.squig(reps[i], reps[j])));
    }
  }
  return Algebra(std::move(names), static_cast<Element>(theta.block_of(a.unit())), std::move(arrow), std::move(squig));
}

bool is_relative(const Algebra& a, const Partition& theta) { return is_pseudo_bci(quotient(a, theta)); }

std::vector<Partition> all_relative_congruences(const Algebra& a) {
  std::vector<Partition> out;
  for (auto& p : all_congruences(a)) {
    if (is_relative(a, p)) out.push_back(std::move(p));
  }
  return out;
}

Partition relative_join(const Algebra& a, const Partition& phi, const Partition& psi) {
  require_congruence(a, phi);
  require_congruence(a, psi);
  Partition j = phi.join(psi);
  for (;;) {
    const auto reps = j.representatives();
    UnionFind uf(j);
    bool merged = false;
    for (std::size_t p = 0; p < reps.size(); ++p) {
      for (std::size_t q = p + 1; q < reps.size(); ++q) {
        const bool pq = j.related(a.arrow(reps[p], reps[q]), a.unit());
        const bool qp = j.related(a.arrow(reps[q], reps[p]), a.unit());
        if (pq && qp) merged |= uf.unite(reps[p], reps[q]);
      }
    }
    if (!merged) return j;
    j = close_congruence(a, uf);
  }
}

RelconLattice relcong_lattice(const Algebra& a) {
  std::vector<Partition> cons = all_relative_congruences(a);
  const std::size_t m = cons.size();
  std::vector<std::string> labels;
  std::vector<char> leq(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(format_partition(a, cons[i]));
    for (std::size_t j = 0; j < m; ++j) leq[i * m + j] = cons[i].refines(cons[j]);
  }
  FiniteLattice l(std::move(labels), std::move(leq));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (cons[l.join(i, j)] != relative_join(a, cons[i], cons[j])) {
        throw InconsistencyError("relative congruence join disagrees with the lattice order");
      }
      if (cons[l.meet(i, j)] != cons[i].meet(cons[j])) {
        throw InconsistencyError("relative congruence meet is not the intersection");
      }
    }
  }
  return RelconLattice{std::move(cons), std::move(l)};
}

IsoCheck iso_with_filters(const Algebra& a) {
  const auto cons = all_relative_congruences(a);
  const auto fils = all_filters(a);
  if (cons.size() != fils.size()) {
    return {false, std::to_string(cons.size()) + " relative congruences but " + std::to_string(fils.size()) + " filters"};
  }
  std::vector<Subset> kernels;
  for (const auto& c : cons) {
    Subset k = kernel(a, c);
    if (std::find(fils.begin(), fils.end(), k) == fils.end()) {
      return {false, "kernel " + format_subset(a, k) + " of " + format_partition(a, c) + " is not a filter"};
    }
    if (theta_from_filter(a, k) != c) return {false, "theta of kernel differs from " + format_partition(a, c)};
    kernels.push_back(k);
  }
  for (const auto& f : fils) {
    if (kernel(a, theta_from_filter(a, f)) != f) return {false, "kernel of theta differs from " + format_subset(a, f)};
  }
  for (std::size_t i = 0; i < cons.size(); ++i) {
    for (std::size_t j = 0; j < cons.size(); ++j) {
      if (cons[i].refines(cons[j]) != kernels[i].subset_of(kernels[j])) {
        return {false, "order not preserved between " + format_partition(a, cons[i]) + " and " +
                           format_partition(a, cons[j])};
      }
    }
  }
  return {};
}

IdentityCheck join_characterization(const Algebra& a, const Partition& phi, const Partition& psi) {
  const Partition j = relative_join(a, phi, psi);
  const Element n = static_cast<Element>(a.size());
  auto composed = [&](const Partition& p, const Partition& q, Element x) {
    for (Element z = 0; z < n; ++z) {
      if (p.related(x, z) && q.related(z, a.unit())) return true;
    }
    return false;
  };
  for (Element x = 0; x < n; ++x) {
    const bool in_join = j.related(x, a.unit());
    if (in_join != composed(phi, psi, x) || in_join != composed(psi, phi, x)) return {false, {a.name(x)}};
  }
  return {};
}

}  // namespace pbci
