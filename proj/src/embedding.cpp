#include "pbci/embedding.hpp"

#include <algorithm>
#include <unordered_map>

#include "pbci/structure.hpp"

namespace pbci {

namespace {

constexpr std::size_t kMaxAlternates = 3;

Subset image(const Algebra& a, std::span<const Element> word) {
  Subset s(a.size());
  for (Element x = 0; x < a.size(); ++x) {
    if (word_arrow(a, word, x) == a.unit()) s.insert(x);
  }
  return s;
}

// {x : w -> x in j}
Subset pull_back(const Algebra& a, const Subset& j, std::span<const Element> w) {
  Subset s(a.size());
  for (Element x = 0; x < a.size(); ++x) {
    if (j.contains(word_arrow(a, w, x))) s.insert(x);
  }
  return s;
}

std::vector<Element> concat(const std::vector<Element>& v, const std::vector<Element>& w) {
  std::vector<Element> out = v;
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

std::string fname(std::size_t i) { return "F" + std::to_string(i); }

}  // namespace

std::optional<std::size_t> OrderedMonoid::index_of(const Subset& s) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].subset == s) return i;
  }
  return std::nullopt;
}

OrderedMonoid build_J(const Algebra& a) {
  const Element n = static_cast<Element>(a.size());
  std::vector<WordImageSet> els;
  std::unordered_map<Subset, std::size_t, SubsetHash> index;
  auto add = [&](Subset s, std::vector<Element> word) {
    auto [it, fresh] = index.try_emplace(s, els.size());
    if (fresh) {
      els.push_back(WordImageSet{s, std::move(word), {}});
    } else if (auto& e = els[it->second]; e.alternates.size() < kMaxAlternates && e.rep != word) {
      e.alternates.push_back(std::move(word));
    }
  };
  for (Element c = 0; c < n; ++c) add(image(a, std::vector<Element>{c}), {c});
  // J(w c) = {x : c -> x in J(w)}; breadth first, so representatives are
  // shortest words.
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (Element c = 0; c < n; ++c) {
      const Subset j = els[i].subset;
      Subset next(a.size());
      for (Element x = 0; x < n; ++x) {
        if (j.contains(a.arrow(c, x))) next.insert(x);
      }
      std::vector<Element> w = els[i].rep;
      w.push_back(c);
      if (next != image(a, w)) throw InconsistencyError("J(wc) differs from its word image");
      add(next, std::move(w));
    }
  }

  OrderedMonoid m;
  m.elements = std::move(els);
  Subset one(a.size());
  one.insert(a.unit());
  const auto u = m.index_of(one);
  if (!u) throw InconsistencyError("J(1) is not {1}");
  m.unit = *u;

  const GroupView gv = group_view(a);
  for (auto g : gv.members) {
    const auto idx = m.index_of(Subset::of(a.size(), {g}));
    if (!idx) throw InconsistencyError("J(g) is not a singleton for " + a.name(g));
    m.minimal.push_back(*idx);
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    bool is_min = true;
    for (std::size_t j = 0; j < m.size() && is_min; ++j) is_min = j == i || !m.leq(j, i);
    if (is_min != (std::find(m.minimal.begin(), m.minimal.end(), i) != m.minimal.end())) {
      throw InconsistencyError("minimal elements of J(A) are not the singletons of G_A");
    }
  }
  m.group = gv.group;

  const std::size_t k = m.size();
  m.star.assign(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t p = monoid_product(a, m, i, j);
      std::vector<const std::vector<Element>*> lefts{&m.elements[i].rep}, rights{&m.elements[j].rep};
      for (const auto& w : m.elements[i].alternates) lefts.push_back(&w);
      for (const auto& w : m.elements[j].alternates) rights.push_back(&w);
      for (const auto* l : lefts) {
        for (const auto* r : rights) {
          if (image(a, concat(*l, *r)) != m.elements[p].subset) {
            throw InconsistencyError("J-product depends on the representative words");
          }
        }
      }
      m.star[i * k + j] = p;
    }
  }
  return m;
}

std::size_t monoid_product(const Algebra& a, const OrderedMonoid& m, std::size_t i, std::size_t j) {
  const auto& s = m.elements.at(i);
  const auto& t = m.elements.at(j);
  const Subset viaset = pull_back(a, s.subset, t.rep);
  if (viaset != image(a, concat(s.rep, t.rep))) throw InconsistencyError("J-product formulas disagree");
  const auto idx = m.index_of(viaset);
  if (!idx) throw InconsistencyError("J(A) not closed under products");
  return *idx;
}

std::optional<std::size_t> ResiduatedPoMonoid::index_of(const Subset& s) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == s) return i;
  }
  return std::nullopt;
}

bool ResiduatedPoMonoid::semi_integral() const noexcept {
  for (std::size_t x = 0; x < size(); ++x) {
    if (x != unit && leq(unit, x)) return false;
  }
  return true;
}

bool ResiduatedPoMonoid::integral() const noexcept {
  for (std::size_t x = 0; x < size(); ++x) {
    if (!leq(x, unit)) return false;
  }
  return true;
}

Algebra ResiduatedPoMonoid::reduct() const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < size(); ++i) names.push_back(fname(i));
  std::vector<Element> ar(res_l.begin(), res_l.end()), sq(res_r.begin(), res_r.end());
  return Algebra(std::move(names), static_cast<Element>(unit), std::move(ar), std::move(sq));
}

ResiduatedPoMonoid build_F(const OrderedMonoid& m, BuildOptions opts) {
  const std::size_t k = m.size();
  if (k > opts.max_monoid) {
    throw CapExceeded("monoid has " + std::to_string(k) + " elements, cap is " + std::to_string(opts.max_monoid));
  }
  auto hypothesis = [](const std::string& what) { throw PreconditionError("hypothesis failed: " + what); };
  if (m.star.size() != k * k || m.unit >= k) hypothesis("malformed monoid");
  for (std::size_t x = 0; x < k; ++x) {
    if (m.product(m.unit, x) != x || m.product(x, m.unit) != x) hypothesis("unit law");
    for (std::size_t y = 0; y < k; ++y) {
      for (std::size_t z = 0; z < k; ++z) {
        if (m.product(m.product(x, y), z) != m.product(x, m.product(y, z))) hypothesis("associativity");
        if (m.leq(x, y) && (!m.leq(m.product(x, z), m.product(y, z)) || !m.leq(m.product(z, x), m.product(z, y)))) {
          hypothesis("product not monotone");
        }
      }
    }
  }
  // minimal elements, and a unique one below every element
  std::vector<std::size_t> mins;
  for (std::size_t x = 0; x < k; ++x) {
    bool is_min = true;
    for (std::size_t y = 0; y < k && is_min; ++y) is_min = y == x || !m.leq(y, x);
    if (is_min) mins.push_back(x);
  }
  {
    auto listed = m.minimal;
    std::sort(listed.begin(), listed.end());
    if (listed != mins) hypothesis("listed minimal elements differ from the actual ones");
  }
  if (std::find(mins.begin(), mins.end(), m.unit) == mins.end()) hypothesis("unit is not minimal");
  std::vector<std::size_t> below(k);
  for (std::size_t x = 0; x < k; ++x) {
    std::size_t count = 0;
    for (auto g : mins) {
      if (m.leq(g, x)) {
        below[x] = g;
        ++count;
      }
    }
    if (count != 1) hypothesis("element above " + std::to_string(count) + " minimal elements");
  }
  if (m.group.size() != mins.size() || m.minimal[m.group.identity()] != m.unit) {
    hypothesis("group on the minimal elements does not match");
  }
  for (std::size_t g = 0; g < mins.size(); ++g) {
    for (std::size_t h = 0; h < mins.size(); ++h) {
      const std::size_t gh = m.minimal[m.group.mult(g, h)];
      if (!m.leq(gh, m.product(m.minimal[g], m.minimal[h]))) hypothesis("g.h <= g*h fails");
    }
  }

  std::vector<std::uint64_t> up(k, 0);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      if (m.leq(x, y)) up[x] |= std::uint64_t{1} << y;
    }
  }
  auto upclose = [&](std::uint64_t t) {
    std::uint64_t out = 0;
    for (std::uint64_t b = t; b; b &= b - 1) out |= up[std::countr_zero(b)];
    return out;
  };

  // Up-sets within [g) for each minimal g, as masks over the members of [g).
  std::vector<Subset> els;
  for (auto g : mins) {
    std::vector<std::size_t> members;
    for (std::uint64_t b = up[g]; b; b &= b - 1) members.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    const std::size_t c = members.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << c); ++mask) {
      std::uint64_t bits = 0;
      for (std::size_t i = 0; i < c; ++i) {
        if ((mask >> i) & 1U) bits |= std::uint64_t{1} << members[i];
      }
      if (upclose(bits) == bits) els.emplace_back(k, bits);
    }
  }
  std::sort(els.begin(), els.end(), canonical_less);

  ResiduatedPoMonoid r;
  r.elements = std::move(els);
  const std::size_t f = r.size();
  std::unordered_map<std::uint64_t, std::size_t> idx;
  for (std::size_t i = 0; i < f; ++i) idx.emplace(r.elements[i].bits(), i);
  auto lookup = [&](std::uint64_t bits, const char* what) {
    auto it = idx.find(bits);
    if (it == idx.end()) throw InconsistencyError(std::string("F is not closed under ") + what);
    return it->second;
  };
  r.unit = lookup(up[m.unit], "the unit");
  std::vector<std::size_t> principal(k);
  for (std::size_t x = 0; x < k; ++x) principal[x] = lookup(up[x], "principal filters");

  r.prod.assign(f * f, 0);
  for (std::size_t i = 0; i < f; ++i) {
    const auto xs = r.elements[i].members();
    for (std::size_t j = 0; j < f; ++j) {
      std::uint64_t t = 0;
      for (auto x : xs) {
        for (auto y : r.elements[j].members()) t |= std::uint64_t{1} << m.product(x, y);
      }
      r.prod[i * f + j] = lookup(upclose(t), "the product");
    }
  }
  r.res_l.assign(f * f, 0);
  r.res_r.assign(f * f, 0);
  for (std::size_t i = 0; i < f; ++i) {
    for (std::size_t j = 0; j < f; ++j) {
      std::uint64_t l = 0, rr = 0;
      for (std::size_t x = 0; x < k; ++x) {
        if (r.elements[r.product(principal[x], i)].subset_of(r.elements[j])) l |= std::uint64_t{1} << x;
        if (r.elements[r.product(i, principal[x])].subset_of(r.elements[j])) rr |= std::uint64_t{1} << x;
      }
      r.res_l[i * f + j] = lookup(l, "->");
      r.res_r[i * f + j] = lookup(rr, "~>");
    }
  }
  return r;
}

Report check_residuated_pomonoid(const ResiduatedPoMonoid& r, CheckOptions opts) {
  Report rep;
  const std::size_t f = r.size();
  const std::size_t e = r.unit;
  auto record = [&](const char* rule, std::initializer_list<std::size_t> w) {
    for (const auto& v : rep.violations) {
      if (v.rule == rule) return;
    }
    if (rep.violations.size() >= opts.max_violations) return;
    Violation v{rule, {}, {}};
    for (auto x : w) v.witness.push_back(fname(x));
    rep.violations.push_back(std::move(v));
  };
  bool axioms_ok = true, rl_ok = true;
  auto A = [&](std::size_t x, std::size_t y) { return r.arrow(x, y); };
  auto S = [&](std::size_t x, std::size_t y) { return r.squig(x, y); };
  auto P = [&](std::size_t x, std::size_t y) { return r.product(x, y); };

  for (std::size_t x = 0; x < f; ++x) {
    if (P(e, x) != x || P(x, e) != x) {
      record("monoid", {x});
      axioms_ok = rl_ok = false;
    }
    if (A(e, x) != x) {
      record("rpom2a", {x});
      axioms_ok = false;
    }
    if (S(e, x) != x) {
      record("rpom2b", {x});
      axioms_ok = false;
    }
    if (x != e && r.leq(e, x)) {
      record("order", {e, x});
      rl_ok = false;
    }
    for (std::size_t y = 0; y < f; ++y) {
      if (r.leq(x, y) != (A(x, y) == e) || r.leq(x, y) != (S(x, y) == e)) {
        record("order", {x, y});
        rl_ok = false;
      }
      if (x != y && A(x, y) == e && A(y, x) == e) {
        record("rpom4", {x, y});
        axioms_ok = false;
      }
      for (std::size_t z = 0; z < f; ++z) {
        if (P(P(x, y), z) != P(x, P(y, z))) {
          record("monoid", {x, y, z});
          axioms_ok = rl_ok = false;
        }
        if (S(A(x, y), S(A(y, z), A(x, z))) != e) {
          record("rpom1a", {x, y, z});
          axioms_ok = false;
        }
        if (A(S(x, y), A(S(y, z), S(x, z))) != e) {
          record("rpom1b", {x, y, z});
          axioms_ok = false;
        }
        if (A(P(x, y), z) != A(x, A(y, z))) {
          record("rpom3", {x, y, z});
          axioms_ok = false;
        }
        if (r.leq(x, A(y, z)) != r.leq(P(x, y), z) || r.leq(x, S(y, z)) != r.leq(P(y, x), z)) {
          record("rl", {x, y, z});
          rl_ok = false;
        }
      }
    }
  }
  if (axioms_ok != rl_ok) {
    rep.violations.push_back(Violation{"routes", {}, axioms_ok ? "axioms pass, residuation law fails"
                                                               : "residuation law passes, axioms fail"});
  }
  return rep;
}

Embedding embed(const Algebra& a, BuildOptions opts) {
  Embedding out;
  out.monoid = build_J(a);
  out.target = build_F(out.monoid, opts);
  const std::size_t k = out.monoid.size();
  for (Element x = 0; x < a.size(); ++x) {
    Subset s(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (out.monoid.elements[i].subset.contains(x)) s.insert(i);
    }
    const auto idx = out.target.index_of(s);
    if (!idx) throw InconsistencyError("[J(" + a.name(x) + ")) is not an element of F");
    out.map.push_back(static_cast<Element>(*idx));
  }
  auto sorted = out.map;
  std::sort(sorted.begin(), sorted.end());
  out.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  out.homomorphism = is_homomorphism(a, out.target.reduct(), out.map);
  return out;
}

}  // namespace pbci
