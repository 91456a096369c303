#include "pbci/structure.hpp"

#include <algorithm>
#include <set>

namespace pbci {

Subset integral_part(const Algebra& a) {
  Subset s(a.size());
  for (Element x = 0; x < a.size(); ++x) {
    if (a.leq(x, a.unit())) s.insert(x);
  }
  return s;
}

Subset group_part(const Algebra& a) {
  Subset s(a.size());
  for (Element x = 0; x < a.size(); ++x) s.insert(a.arrow(x, a.unit()));
  return s;
}

bool is_p_semisimple(const Algebra& a) { return group_part(a).is_full(); }

std::size_t GroupView::index_of(Element x) const {
  auto it = std::lower_bound(members.begin(), members.end(), x);
  if (it == members.end() || *it != x) throw InvalidInput("element is not in the group part");
  return static_cast<std::size_t>(it - members.begin());
}

GroupView group_view(const Algebra& a) {
  const Subset g = group_part(a);
  std::vector<Element> members;
  for (auto x : g.members()) members.push_back(static_cast<Element>(x));
  const std::size_t k = members.size();
  auto idx = [&](Element x) -> std::size_t {
    auto it = std::lower_bound(members.begin(), members.end(), x);
    if (it == members.end() || *it != x) throw InconsistencyError("group part not closed under the group product");
    return static_cast<std::size_t>(it - members.begin());
  };
  std::vector<std::string> names;
  std::vector<std::size_t> mult(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back(a.name(members[i]));
    for (std::size_t j = 0; j < k; ++j) {
      mult[i * k + j] = idx(a.squig(a.arrow(members[i], a.unit()), members[j]));
    }
  }
  std::optional<Group> grp;
  try {
    grp.emplace(std::move(names), std::move(mult));
  } catch (const InvalidInput& e) {
    throw InconsistencyError(std::string("group part: ") + e.what());
  }
  const Group& G = *grp;
  if (members[G.identity()] != a.unit()) throw InconsistencyError("group part: identity is not the unit");
  for (std::size_t i = 0; i < k; ++i) {
    if (members[G.inverse(i)] != a.arrow(members[i], a.unit())) {
      throw InconsistencyError("group part: inverse differs from g -> 1 at " + a.name(members[i]));
    }
    for (std::size_t j = 0; j < k; ++j) {
      const Element gi = members[i], hj = members[j];
      if (a.arrow(gi, hj) != members[G.mult(j, G.inverse(i))] ||
          a.squig(gi, hj) != members[G.mult(G.inverse(i), j)]) {
        throw InconsistencyError("group part: recovery identity fails at (" + a.name(gi) + "," + a.name(hj) + ")");
      }
    }
  }
  return GroupView{g, G, std::move(members)};
}

namespace {

HomomorphismWitness onto_group_part(const Algebra& a, bool use_dagger, Element (*f)(const Algebra&, Element),
                                    const char* label) {
  const Subset g = group_part(a);
  Algebra sub = subalgebra(a, g);
  if (use_dagger) sub = dagger(sub);
  const auto members = g.members();
  std::vector<Element> map(a.size());
  Subset kernel(a.size());
  for (Element x = 0; x < a.size(); ++x) {
    const Element fx = f(a, x);
    auto it = std::find(members.begin(), members.end(), fx);
    if (it == members.end()) throw InconsistencyError(std::string(label) + " leaves the group part");
    map[x] = static_cast<Element>(it - members.begin());
    if (fx == a.unit()) kernel.insert(x);
  }
  if (!is_homomorphism(a, sub, map)) throw InconsistencyError(std::string(label) + " is not a homomorphism");
  return HomomorphismWitness{std::move(sub), std::move(map), kernel};
}

Element gamma_of(const Algebra& a, Element x) { return a.arrow(x, a.unit()); }
Element delta_of(const Algebra& a, Element x) { return a.arrow(a.arrow(x, a.unit()), a.unit()); }

}  // namespace

HomomorphismWitness gamma(const Algebra& a) { return onto_group_part(a, true, gamma_of, "gamma"); }
HomomorphismWitness delta(const Algebra& a) { return onto_group_part(a, false, delta_of, "delta"); }

Element integral_residue(const Algebra& a, Element x) { return a.arrow(delta_of(a, x), x); }

Algebra direct_product(const Algebra& a, const Algebra& b, ProductOptions opts) {
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  if (n > opts.max_size) {
    throw CapExceeded("product size " + std::to_string(n) + " exceeds cap " + std::to_string(opts.max_size));
  }
  std::vector<std::string> names;
  names.reserve(n);
  for (Element x = 0; x < na; ++x) {
    for (Element y = 0; y < nb; ++y) names.push_back("(" + a.name(x) + "," + b.name(y) + ")");
  }
  std::vector<Element> arrow(n * n), squig(n * n);
  for (std::size_t p = 0; p < n; ++p) {
    const auto px = static_cast<Element>(p / nb), py = static_cast<Element>(p % nb);
    for (std::size_t q = 0; q < n; ++q) {
      const auto qx = static_cast<Element>(q / nb), qy = static_cast<Element>(q % nb);
      arrow[p * n + q] = static_cast<Element>(a.arrow(px, qx) * nb + b.arrow(py, qy));
      squig[p * n + q] = static_cast<Element>(a.squig(px, qx) * nb + b.squig(py, qy));
    }
  }
  return Algebra(std::move(names), static_cast<Element>(a.unit() * nb + b.unit()), std::move(arrow),
                 std::move(squig));
}

Algebra union_construction(const Algebra& b, const Group& h, bool rename) {
  if (!is_pseudo_bck(b)) throw PreconditionError("union construction needs a pseudo-BCK-algebra");
  const std::size_t nb = b.size(), n = nb + h.size() - 1;
  std::vector<std::string> names = b.names();
  std::set<std::string> taken(names.begin(), names.end());
  // hidx[i]: index in the union of group element i.
  std::vector<Element> hidx(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i == h.identity()) {
      hidx[i] = b.unit();
      continue;
    }
    std::string nm = h.name(i);
    if (taken.count(nm)) {
      if (!rename) throw InvalidInput("name clash between B and H: " + nm);
      while (taken.count(nm)) nm += "_h";
    }
    taken.insert(nm);
    hidx[i] = static_cast<Element>(names.size());
    names.push_back(std::move(nm));
  }
  // back[x] for x in H-part of the union: the group index.
  std::vector<std::size_t> back(n, h.size());
  for (std::size_t i = 0; i < h.size(); ++i) back[hidx[i]] = i;
  auto in_h = [&](Element x) { return back[x] != h.size(); };
  auto in_b = [&](Element x) { return x < nb; };

  std::vector<Element> arrow(n * n), squig(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element r, s;
      if (in_b(x) && in_b(y)) {
        r = b.arrow(x, y);
        s = b.squig(x, y);
      } else if (in_h(x) && in_h(y)) {
        const std::size_t g = back[x], k = back[y];
        r = hidx[h.mult(k, h.inverse(g))];
        s = hidx[h.mult(h.inverse(g), k)];
      } else if (in_b(x)) {  // y in H \ {1}
        r = s = y;
      } else {  // x in H \ {1}, y in B \ {1}
        r = s = hidx[h.inverse(back[x])];
      }
      arrow[x * n + y] = r;
      squig[x * n + y] = s;
    }
  }
  return Algebra(std::move(names), b.unit(), std::move(arrow), std::move(squig));
}

}  // namespace pbci
