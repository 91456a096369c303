#include "pbci/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "pbci/decomposition.hpp"
#include "pbci/filters.hpp"
#include "pbci/group.hpp"
#include "pbci/lattice.hpp"
#include "pbci/congruences.hpp"
#include "pbci/structure.hpp"

namespace pbci {

const char* class_name(AlgebraClass c) {
  switch (c) {
    case AlgebraClass::pbci: return "pbci";
    case AlgebraClass::pbck: return "pbck";
    case AlgebraClass::group: return "group";
  }
  return "?";
}

AlgebraClass parse_class(std::string_view s) {
  if (s == "pbci") return AlgebraClass::pbci;
  if (s == "pbck") return AlgebraClass::pbck;
  if (s == "group") return AlgebraClass::group;
  throw InvalidInput("unknown class '" + std::string(s) + "'");
}

std::size_t max_search_size(AlgebraClass c) {
  std::size_t cap = 6;
  if (const char* env = std::getenv("PBCI_MAX_SIZE")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) cap = v;
  }
  return c == AlgebraClass::group ? std::max<std::size_t>(cap, 8) : cap;
}

namespace {

FiniteLattice prefilter_lattice(const Algebra& a) { return FiniteLattice::from_closed_family(a, all_prefilters(a)); }
FiniteLattice filter_lattice(const Algebra& a) { return FiniteLattice::from_closed_family(a, all_filters(a)); }

bool is_bci(const Algebra& a) {
  return std::equal(a.arrow_table().begin(), a.arrow_table().end(), a.squig_table().begin());
}

struct Predicate {
  PredicateInfo info;
  bool (*test)(const Algebra&);
};

const std::vector<Predicate>& registry() {
  static const std::vector<Predicate> preds = {
      {{"g-not-filter", "the group part is not a filter"},
       [](const Algebra& a) { return !is_filter(a, group_part(a)); }},
      {{"dot-neq-star-bci", "a BCI-algebra in which x.y and x*y differ somewhere"},
       [](const Algebra& a) { return is_bci(a) && !dot_equals_star(a).holds; }},
      {{"prefilter-lattice-nonmodular", "the prefilter lattice is not modular"},
       [](const Algebra& a) { return !is_modular(prefilter_lattice(a)).holds; }},
      {{"prefilter-lattice-nondistributive", "the prefilter lattice is not distributive"},
       [](const Algebra& a) { return !is_distributive(prefilter_lattice(a)).holds; }},
      {{"filter-lattice-nonmodular", "the filter lattice is not modular"},
       [](const Algebra& a) { return !is_modular(filter_lattice(a)).holds; }},
      {{"filter-lattice-nondistributive", "the filter lattice is not distributive"},
       [](const Algebra& a) { return !is_distributive(filter_lattice(a)).holds; }},
      {{"pbck-filter-lattice-nondistributive", "a pseudo-BCK-algebra whose filter lattice is not distributive"},
       [](const Algebra& a) { return is_pseudo_bck(a) && !is_distributive(filter_lattice(a)).holds; }},
      {{"non-relative-congruence", "some congruence has a quotient outside the class"},
       [](const Algebra& a) {
         for (const auto& c : all_congruences(a)) {
           if (!is_relative(a, c)) return true;
         }
         return false;
       }},
      {{"lemJ1-without-12", "all six associativity conditions hold but g->x = g~>x fails"},
       [](const Algebra& a) {
         for (const auto& v : check_lemJ1_conditions(a)) {
           if (!v.holds) return false;
         }
         return !check_condition_12(a).holds;
       }},
      {{"not-decomposable", "not isomorphic to I x G"},
       [](const Algebra& a) { return !decompose(a).decomposable(); }},
      {{"proper-pseudo", "the two arrows differ somewhere"}, [](const Algebra& a) { return !is_bci(a); }},
  };
  return preds;
}

const Predicate* lookup_predicate(std::string_view name) {
  for (const auto& p : registry()) {
    if (p.info.name == name) return &p;
  }
  return nullptr;
}

using Perm = std::vector<int>;

// All permutations of 0..n-1 fixing 0.
std::vector<Perm> unit_fixing_perms(int n) {
  std::vector<Perm> out;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

// ---------------------------------------------------------------- groups

// Labelled group tables on 0..k-1 with identity 0, via Latin squares with
// associativity checked on every defined triple.
class GroupTables {
 public:
  explicit GroupTables(int k) : k_(k), t_(k * k, -1) {
    for (int i = 0; i < k; ++i) t_[i] = t_[i * k] = static_cast<signed char>(i);
  }
  template <typename Sink>
  bool run(Sink& sink) {
    return fill(sink);
  }

 private:
  int at(int x, int y) const { return x < 0 || y < 0 ? -1 : t_[x * k_ + y]; }

  // Sets (x, y) to v unless that breaks the Latin property; queues the cell
  // for associativity propagation.
  bool assign(int x, int y, int v) {
    const int cur = at(x, y);
    if (cur >= 0) return cur == v;
    for (int m = 0; m < k_; ++m) {
      if (t_[x * k_ + m] == v || t_[m * k_ + y] == v) return false;
    }
    t_[x * k_ + y] = static_cast<signed char>(v);
    trail_.push_back(x * k_ + y);
    queue_.push_back(x * k_ + y);
    return true;
  }
  // (ab)c = a(bc): fails on a clash, forces one side when the other is known.
  bool equate(int a, int b, int c) {
    const int p = at(a, b), q = at(b, c);
    if (p < 0 || q < 0) return true;
    const int l = at(p, c), r = at(a, q);
    if (l >= 0 && r >= 0) return l == r;
    if (l >= 0) return assign(a, q, l);
    if (r >= 0) return assign(p, c, r);
    return true;
  }
  bool propagate() {
    while (!queue_.empty()) {
      const int c = queue_.back();
      queue_.pop_back();
      const int i = c / k_, j = c % k_;
      for (int z = 0; z < k_; ++z) {
        if (!equate(i, j, z) || !equate(z, i, j)) return false;
      }
      for (int x = 0; x < k_; ++x) {
        for (int y = 0; y < k_; ++y) {
          if (at(x, y) == i && !equate(x, y, j)) return false;
          if (at(x, y) == j && !equate(i, x, y)) return false;
        }
      }
    }
    return true;
  }
  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      t_[trail_.back()] = -1;
      trail_.pop_back();
    }
    queue_.clear();
  }
  template <typename Sink>
  bool fill(Sink& sink) {
    int c = 0;
    while (c < k_ * k_ && t_[c] >= 0) ++c;
    if (c == k_ * k_) return sink(t_);
    const int i = c / k_, j = c % k_;
    for (int v = 0; v < k_; ++v) {
      const std::size_t mark = trail_.size();
      if (assign(i, j, v) && propagate() && !fill(sink)) return false;
      undo(mark);
    }
    return true;
  }

  int k_;
  std::vector<signed char> t_;
  std::vector<int> trail_, queue_;
};

// ---------------------------------------------------------------- posets

// Labelled posets on 0..n-1 in which 0 is maximal and every element lies
// below exactly one maximal element (0 greatest for pbck), kept only when
// lexicographically least among their images under unit-fixing
// permutations.
class PosetGen {
 public:
  PosetGen(int n, bool integral) : n_(n), integral_(integral), le_(n * n, 0), perms_(unit_fixing_perms(n)) {
    for (int i = 0; i < n; ++i) le_[i * n + i] = 1;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) pairs_.emplace_back(i, j);
    }
  }
  // sink(le, automorphisms) returns false to stop.
  template <typename Sink>
  bool run(Sink& sink) {
    return rec(0, sink);
  }

 private:
  bool le(int a, int b) const { return le_[a * n_ + b] != 0; }
  bool triple_ok(int i, int j, int k) const {
    const int v[3] = {i, j, k};
    for (int a : v) {
      for (int b : v) {
        for (int c : v) {
          if (a != b && b != c && a != c && le(a, b) && le(b, c) && !le(a, c)) return false;
        }
      }
    }
    return true;
  }
  template <typename Sink>
  bool rec(std::size_t idx, Sink& sink) {
    if (idx == pairs_.size()) return finish(sink);
    const auto [i, j] = pairs_[idx];
    for (int choice = 0; choice < 3; ++choice) {
      if (i == 0 && choice == 1) continue;          // the unit is maximal
      if (i == 0 && integral_ && choice != 2) continue;  // the unit is greatest
      le_[i * n_ + j] = choice == 1;
      le_[j * n_ + i] = choice == 2;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k) ok = triple_ok(i, j, k);
      if (ok && !rec(idx + 1, sink)) return false;
    }
    le_[i * n_ + j] = le_[j * n_ + i] = 0;
    return true;
  }
  template <typename Sink>
  bool finish(Sink& sink) {
    std::vector<int> maxes;
    for (int x = 0; x < n_; ++x) {
      bool is_max = true;
      for (int y = 0; y < n_ && is_max; ++y) is_max = y == x || !le(x, y);
      if (is_max) maxes.push_back(x);
    }
    for (int x = 0; x < n_; ++x) {
      int above = 0;
      for (int g : maxes) above += le(x, g);
      if (above != 1) return true;
    }
    std::vector<Perm> autos;
    for (const auto& p : perms_) {
      int cmp = 0;
      for (int x = 0; x < n_ && cmp == 0; ++x) {
        for (int y = 0; y < n_ && cmp == 0; ++y) {
          // image relation at (x, y) is le(p^-1 x, p^-1 y); compare via the
          // equivalent pull-back ordering below
          cmp = static_cast<int>(le_[p[x] * n_ + p[y]]) - static_cast<int>(le_[x * n_ + y]);
        }
      }
      if (cmp < 0) return true;
      if (cmp == 0) autos.push_back(p);
    }
    return sink(le_, autos);
  }

  int n_;
  bool integral_;
  std::vector<char> le_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<Perm> perms_;
};

// ---------------------------------------------------------------- tables

class TableSearch {
 public:
  TableSearch(int n, const std::vector<char>& le, const std::vector<Perm>& autos, SearchStats& stats)
      : n_(n), le_(le), autos_(autos), stats_(stats), top_(n) {
    for (int x = 0; x < n; ++x) {
      bool is_max = true;
      for (int y = 0; y < n && is_max; ++y) is_max = y == x || !leq(x, y);
      if (is_max) maxes_.push_back(x);
    }
    for (int x = 0; x < n; ++x) {
      for (int g : maxes_) {
        if (leq(x, g)) top_[x] = g;
      }
    }
  }

  // sink(arrow, squig) returns false to stop.
  template <typename Sink>
  bool run(Sink& sink) {
    const int k = static_cast<int>(maxes_.size());
    GroupTables groups(k);
    bool go = true;
    auto on_group = [&](const std::vector<signed char>& mult) {
      go = with_group(mult, sink);
      return go;
    };
    groups.run(on_group);
    return go;
  }

 private:
  bool leq(int x, int y) const { return le_[x * n_ + y] != 0; }
  signed char& A(int x, int y) { return a_[x * n_ + y]; }
  signed char& S(int x, int y) { return s_[x * n_ + y]; }

  template <typename Sink>
  bool with_group(const std::vector<signed char>& mult, Sink& sink) {
    const int k = static_cast<int>(maxes_.size());
    std::vector<int> gidx(n_, -1);
    for (int i = 0; i < k; ++i) gidx[maxes_[i]] = i;
    std::vector<int> inv(k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        if (mult[i * k + j] == 0) inv[i] = j;
      }
    }
    a_.assign(n_ * n_, -1);
    s_.assign(n_ * n_, -1);
    for (int y = 0; y < n_; ++y) A(0, y) = S(0, y) = static_cast<signed char>(y);
    for (int x = 0; x < n_; ++x) {
      const auto g = static_cast<signed char>(maxes_[inv[gidx[top_[x]]]]);
      A(x, 0) = S(x, 0) = g;  // x -> 1 = top(x)^-1
      for (int y = 0; y < n_; ++y) {
        if (leq(x, y)) A(x, y) = S(x, y) = 0;
      }
    }
    for (int g : maxes_) {
      for (int h : maxes_) {
        const int gi = gidx[g], hi = gidx[h];
        A(g, h) = static_cast<signed char>(maxes_[mult[hi * k + inv[gi]]]);
        S(g, h) = static_cast<signed char>(maxes_[mult[inv[gi] * k + hi]]);
      }
    }
    if (!consistent()) return true;
    // free cells with domains below the top prescribed by delta
    cells_.clear();
    for (int x = 0; x < n_; ++x) {
      for (int y = 0; y < n_; ++y) {
        for (int t = 0; t < 2; ++t) {
          auto& tab = t == 0 ? a_ : s_;
          if (tab[x * n_ + y] >= 0) continue;
          const int target = t == 0 ? A(top_[x], top_[y]) : S(top_[x], top_[y]);
          Cell c{t, x * n_ + y, {}};
          for (int z = 1; z < n_; ++z) {
            if (top_[z] == target) c.domain.push_back(static_cast<signed char>(z));
          }
          if (c.domain.empty()) return true;
          cells_.push_back(std::move(c));
        }
      }
    }
    return fill(0, sink);
  }

  struct Cell {
    int table;
    int pos;
    std::vector<signed char> domain;
  };

  template <typename Sink>
  bool fill(std::size_t idx, Sink& sink) {
    ++stats_.nodes;
    if (idx == cells_.size()) {
      if (!orderly()) return true;
      return sink(a_, s_);
    }
    Cell& c = cells_[idx];
    auto& tab = c.table == 0 ? a_ : s_;
    for (auto v : c.domain) {
      tab[c.pos] = v;
      if (consistent() && !fill(idx + 1, sink)) {
        tab[c.pos] = -1;
        return false;
      }
    }
    tab[c.pos] = -1;
    return true;
  }

  // Necessary laws of pseudo-BCI-algebras, checked wherever the tables are
  // defined: (rpom1a), (rpom1b), x->(y~>z) = y~>(x->z), x <= y->z iff
  // y <= x~>z, x <= (x->y)~>y, x <= (x~>y)->y and monotonicity.
  bool consistent() const {
    const int n = n_;
    auto a = [&](int x, int y) -> int { return x < 0 || y < 0 ? -1 : a_[x * n + y]; };
    auto s = [&](int x, int y) -> int { return x < 0 || y < 0 ? -1 : s_[x * n + y]; };
    auto le = [&](int x, int y) { return le_[x * n + y] != 0; };
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        const int axy = a(x, y), sxy = s(x, y);
        if (axy >= 0) {
          const int t = s(axy, y);
          if (t >= 0 && !le(x, t)) return false;
        }
        if (sxy >= 0) {
          const int t = a(sxy, y);
          if (t >= 0 && !le(x, t)) return false;
        }
        for (int z = 0; z < n; ++z) {
          const int ayz = a(y, z), axz = a(x, z), syz = s(y, z), sxz = s(x, z);
          if (axy >= 0) {
            const int r = s(ayz, axz);
            if (r >= 0 && !le(axy, r)) return false;
          }
          if (sxy >= 0) {
            const int r = a(syz, sxz);
            if (r >= 0 && !le(sxy, r)) return false;
          }
          const int l6 = a(x, syz), r6 = s(y, axz);
          if (l6 >= 0 && r6 >= 0 && l6 != r6) return false;
          if (ayz >= 0 && sxz >= 0 && le(x, ayz) != le(y, sxz)) return false;
          if (le(y, z)) {
            if (axy >= 0 && axz >= 0 && !le(axy, axz)) return false;
            if (sxy >= 0 && sxz >= 0 && !le(sxy, sxz)) return false;
          }
          if (le(x, y)) {
            if (ayz >= 0 && axz >= 0 && !le(ayz, axz)) return false;
            if (syz >= 0 && sxz >= 0 && !le(syz, sxz)) return false;
          }
        }
      }
    }
    return true;
  }

  // Tables (arrow then squig, row-major) are least among their images under
  // automorphisms of the order.
  bool orderly() const {
    const int n = n_;
    for (const auto& p : autos_) {
      // image: A'(p x, p y) = p(A(x, y)); compare at positions in order
      // through the inverse permutation
      std::vector<int> q(n);
      for (int x = 0; x < n; ++x) q[p[x]] = x;
      int cmp = 0;
      for (int t = 0; t < 2 && cmp == 0; ++t) {
        const auto& tab = t == 0 ? a_ : s_;
        for (int u = 0; u < n && cmp == 0; ++u) {
          for (int v = 0; v < n && cmp == 0; ++v) {
            cmp = p[tab[q[u] * n + q[v]]] - tab[u * n + v];
          }
        }
      }
      if (cmp < 0) return false;
    }
    return true;
  }

  int n_;
  const std::vector<char>& le_;
  const std::vector<Perm>& autos_;
  SearchStats& stats_;
  std::vector<int> maxes_;
  std::vector<int> top_;
  std::vector<signed char> a_, s_;
  std::vector<Cell> cells_;
};

Algebra make_algebra(int n, const std::vector<signed char>& a, const std::vector<signed char>& s) {
  std::vector<Element> ar(a.begin(), a.end()), sq(s.begin(), s.end());
  return Algebra(default_names(n, 0), 0, std::move(ar), std::move(sq));
}

SearchStats enumerate_groups(const SearchSpec& spec, const Predicate* pred,
                             const std::function<bool(const Algebra&)>& sink) {
  SearchStats stats;
  const int n = static_cast<int>(spec.size);
  const auto perms = unit_fixing_perms(n);
  std::vector<Perm> inverses;
  for (const auto& p : perms) {
    Perm q(n);
    for (int x = 0; x < n; ++x) q[p[x]] = x;
    inverses.push_back(std::move(q));
  }
  GroupTables groups(n);
  auto on_table = [&](const std::vector<signed char>& t) {
    ++stats.nodes;
    for (std::size_t pi = 0; pi < perms.size(); ++pi) {
      const Perm &p = perms[pi], &q = inverses[pi];
      int cmp = 0;
      for (int u = 0; u < n && cmp == 0; ++u) {
        for (int v = 0; v < n && cmp == 0; ++v) cmp = p[t[q[u] * n + q[v]]] - t[u * n + v];
      }
      if (cmp < 0) return true;
    }
    ++stats.models;
    Group g(default_names(n, 0), std::vector<std::size_t>(t.begin(), t.end()));
    Algebra a = group_to_algebra(g);
    if (pred && !pred->test(a)) return true;
    ++stats.emitted;
    if (!sink(a)) return false;
    return spec.limit == 0 || stats.emitted < spec.limit;
  };
  groups.run(on_table);
  return stats;
}

}  // namespace

const std::vector<PredicateInfo>& predicates() {
  static const std::vector<PredicateInfo> infos = [] {
    std::vector<PredicateInfo> out;
    for (const auto& p : registry()) out.push_back(p.info);
    return out;
  }();
  return infos;
}

bool evaluate_predicate(std::string_view name, const Algebra& a) {
  const Predicate* p = lookup_predicate(name);
  if (!p) throw InvalidInput("unknown predicate '" + std::string(name) + "'");
  return p->test(a);
}

SearchStats enumerate(const SearchSpec& spec, const std::function<bool(const Algebra&)>& sink) {
  if (spec.size == 0) throw InvalidInput("size must be at least 1");
  const Predicate* pred = nullptr;
  if (!spec.predicate.empty()) {
    pred = lookup_predicate(spec.predicate);
    if (!pred) throw InvalidInput("unknown predicate '" + spec.predicate + "'");
  }
  const std::size_t cap = max_search_size(spec.cls);
  if (spec.size > cap) {
    throw CapExceeded("size " + std::to_string(spec.size) + " exceeds the search cap " + std::to_string(cap) +
                      " (set PBCI_MAX_SIZE to raise it)");
  }
  if (spec.cls == AlgebraClass::group) return enumerate_groups(spec, pred, sink);

  SearchStats stats;
  const int n = static_cast<int>(spec.size);
  PosetGen posets(n, spec.cls == AlgebraClass::pbck);
  bool go = true;
  auto on_poset = [&](const std::vector<char>& le, const std::vector<Perm>& autos) {
    ++stats.posets;
    TableSearch ts(n, le, autos, stats);
    auto on_tables = [&](const std::vector<signed char>& a, const std::vector<signed char>& s) {
      Algebra alg = make_algebra(n, a, s);
      if (!is_pseudo_bci(alg)) throw InconsistencyError("search produced a table failing the axioms");
      ++stats.models;
      if (pred && !pred->test(alg)) return true;
      ++stats.emitted;
      go = sink(alg) && (spec.limit == 0 || stats.emitted < spec.limit);
      return go;
    };
    ts.run(on_tables);
    return go;
  };
  posets.run(on_poset);
  return stats;
}

std::vector<Algebra> enumerate_all(const SearchSpec& spec) {
  std::vector<Algebra> out;
  enumerate(spec, [&](const Algebra& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

std::optional<Algebra> find_counterexample(const SearchSpec& spec) {
  SearchSpec s = spec;
  s.limit = 1;
  std::optional<Algebra> out;
  enumerate(s, [&](const Algebra& a) {
    out = a;
    return false;
  });
  return out;
}

}  // namespace pbci
