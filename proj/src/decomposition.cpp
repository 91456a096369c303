#include "pbci/decomposition.hpp"

#include "pbci/io.hpp"
#include "pbci/structure.hpp"
#include "pbci/term.hpp"

namespace pbci {

namespace {

class Recorder {
 public:
  Recorder(const Algebra& a, CheckOptions opts) : a_(a), opts_(opts) {}
  void check(bool ok, const char* rule, std::initializer_list<Element> w) {
    if (ok) return;
    for (const auto& v : rep_.violations) {
      if (v.rule == rule) return;
    }
    if (rep_.violations.size() >= opts_.max_violations) return;
    Violation v{rule, {}, {}};
    for (auto x : w) v.witness.push_back(a_.name(x));
    rep_.violations.push_back(std::move(v));
  }
  Report take() { return std::move(rep_); }

 private:
  const Algebra& a_;
  CheckOptions opts_;
  Report rep_;
};

std::vector<Element> elements_of(const Subset& s) {
  std::vector<Element> out;
  for (auto x : s.members()) out.push_back(static_cast<Element>(x));
  return out;
}

Verdict fails(const Algebra& a, std::initializer_list<Element> w) {
  Verdict v{false, {}, {}};
  for (auto x : w) v.witness.push_back(a.name(x));
  return v;
}

}  // namespace

Report check_lemma_L3(const Algebra& a, CheckOptions opts) {
  Recorder r(a, opts);
  const Element n = static_cast<Element>(a.size()), one = a.unit();
  for (Element x = 0; x < n; ++x) {
    r.check(dot(a, one, x) == x && star(a, x, one) == x, "L3.1", {x});
    r.check(dot(a, x, a.arrow(x, one)) == one && star(a, a.squig(x, one), x) == one, "L3.2", {x});
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        r.check(dot(a, x, star(a, y, z)) == star(a, dot(a, x, y), z), "L3.3", {x, y, z});
        r.check(a.leq(dot(a, dot(a, x, y), z), dot(a, x, dot(a, y, z))), "L3.4", {x, y, z});
        r.check(a.leq(star(a, x, star(a, y, z)), star(a, star(a, x, y), z)), "L3.5", {x, y, z});
      }
    }
  }
  return r.take();
}

Report check_lemma_L4(const Algebra& a, CheckOptions opts) {
  Recorder r(a, opts);
  const Element one = a.unit();
  for (Element x = 0; x < a.size(); ++x) {
    for (Element g : elements_of(group_part(a))) {
      const Element inv = a.arrow(g, one);
      r.check(a.arrow(x, g) == a.arrow(a.arrow(g, x), one) && a.squig(x, g) == a.arrow(a.squig(g, x), one), "L4.1",
              {x, g});
      r.check(a.arrow(g, x) == star(a, x, inv) && a.squig(g, x) == dot(a, inv, x), "L4.2", {x, g});
      r.check(a.arrow(a.arrow(x, g), one) == dot(a, x, inv) && a.arrow(a.squig(x, g), one) == star(a, inv, x), "L4.3",
              {x, g});
    }
  }
  return r.take();
}

std::array<Verdict, 6> check_lemJ1_conditions(const Algebra& a) {
  std::array<Verdict, 6> out;
  const Element n = static_cast<Element>(a.size()), one = a.unit();
  const auto G = elements_of(group_part(a));
  auto first = [&](std::size_t k, bool ok, std::initializer_list<Element> w) {
    if (!ok && out[k].holds) out[k] = fails(a, w);
  };
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        first(0, dot(a, dot(a, x, y), z) == dot(a, x, dot(a, y, z)), {x, y, z});
        first(3, star(a, star(a, x, y), z) == star(a, x, star(a, y, z)), {x, y, z});
      }
    }
  }
  for (Element g : G) {
    const Element inv = a.arrow(g, one);
    for (Element h : G) {
      for (Element x = 0; x < n; ++x) {
        first(1, dot(a, dot(a, g, h), x) == dot(a, g, dot(a, h, x)), {g, h, x});
        first(4, star(a, x, star(a, h, g)) == star(a, star(a, x, h), g), {g, h, x});
      }
    }
    for (Element x = 0; x < n; ++x) {
      first(2, a.squig(inv, a.squig(g, x)) == x, {g, x});
      first(5, a.arrow(inv, a.arrow(g, x)) == x, {g, x});
    }
  }
  return out;
}

Verdict check_condition_12(const Algebra& a) {
  const auto I = elements_of(integral_part(a));
  for (Element g : elements_of(group_part(a))) {
    for (Element x : I) {
      if (a.arrow(g, x) != a.squig(g, x)) {
        Verdict v = fails(a, {g, x});
        v.detail = a.name(g) + "->" + a.name(x) + "=" + a.name(a.arrow(g, x)) + ", " + a.name(g) + "~>" + a.name(x) +
                   "=" + a.name(a.squig(g, x));
        return v;
      }
    }
  }
  return {};
}

bool DecompositionReport::conditions_agree() const noexcept {
  for (const auto& c : conditions) {
    if (c.holds != conditions[0].holds) return false;
  }
  return true;
}

bool DecompositionReport::theorem_condition_3() const noexcept {
  for (const auto& c : conditions) {
    if (!c.holds) return false;
  }
  return condition_12.holds;
}

bool DecompositionReport::triad_agrees() const noexcept {
  const bool c1 = isomorphic_to_product, c2 = g_filter.holds, c3 = theorem_condition_3();
  return c1 == c2 && c2 == c3 && eta.has_value() == c1;
}

DecompositionReport decompose(const Algebra& a) {
  DecompositionReport rep;
  rep.conditions = check_lemJ1_conditions(a);
  rep.condition_12 = check_condition_12(a);
  const Subset Gs = group_part(a), Is = integral_part(a);
  rep.g_filter = check_filter(a, Gs);

  const Algebra I = subalgebra(a, Is);
  const Algebra G = subalgebra(a, Gs);
  const Algebra Gd = dagger(G);
  const Algebra IxG = direct_product(I, G);
  Algebra IxGd = direct_product(I, Gd);
  rep.isomorphic_to_product = find_isomorphism(a, IxG).has_value();
  rep.product_dagger_isomorphic = find_isomorphism(IxG, IxGd).has_value();

  // eta(i, g) = g -> i; product element (i, g) has index i * |G| + g.
  const auto ie = elements_of(Is), ge = elements_of(Gs);
  ElementMap eta(IxGd.size());
  std::vector<bool> hit(a.size(), false);
  bool bijective = IxGd.size() == a.size();
  for (std::size_t i = 0; i < ie.size(); ++i) {
    for (std::size_t g = 0; g < ge.size(); ++g) {
      const Element v = a.arrow(ge[g], ie[i]);
      eta[i * ge.size() + g] = v;
      if (hit[v]) bijective = false;
      hit[v] = true;
    }
  }
  if (bijective && is_homomorphism(IxGd, a, eta)) {
    rep.product = std::move(IxGd);
    rep.eta = std::move(eta);
  }
  return rep;
}

DeltaIdentities check_delta_identities(const Algebra& a) {
  const Term one = Term::one();
  auto delta = [&](const Term& t) { return arrow(arrow(t, one), one); };
  const Term x = Term::var("x"), y = Term::var("y"), y1 = Term::var("y1"), y2 = Term::var("y2");
  auto t1 = [&](const Term& u, const Term& v1, const Term& v2) { return arrow(arrow(v1, arrow(v2, u)), u); };
  auto t2 = [&](const Term& u, const Term& v) { return squig(squig(v, u), u); };

  DeltaIdentities out;
  Report r1 = check_term_identity(a, delta(t1(x, y1, y2)), t1(x, delta(y1), delta(y2)), "delta-t1");
  Report r2 = check_term_identity(a, delta(t2(x, y)), t2(x, delta(y)), "delta-t2");
  out.filter_identities = std::move(r1);
  for (auto& v : r2.violations) out.filter_identities.violations.push_back(std::move(v));
  const Term inner = arrow(delta(x), x);
  out.condition_12_identity = check_term_identity(a, arrow(delta(y), inner), squig(delta(y), inner), "delta-12");
  return out;
}

Verdict dot_equals_star(const Algebra& a) {
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      if (dot(a, x, y) != star(a, x, y)) return fails(a, {x, y});
    }
  }
  return {};
}

Verdict mixed_law(const Algebra& a) {
  const Element n = static_cast<Element>(a.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (star(a, x, dot(a, y, z)) != dot(a, star(a, x, y), z)) return fails(a, {x, y, z});
      }
    }
  }
  return {};
}

Algebra builtin_example() {
  static const char* const kText =
      "elements: a b x y g 1\n"
      "unit: 1\n"
      "arrow:\n"
      "1 b g y g 1\n"
      "a 1 x g g 1\n"
      "g x 1 a 1 g\n"
      "y g b 1 1 g\n"
      "y x b a 1 g\n"
      "a b x y g 1\n"
      "squig:\n"
      "1 b x g g 1\n"
      "a 1 g y g 1\n"
      "x g 1 b 1 g\n"
      "g y a 1 1 g\n"
      "x y a b 1 g\n"
      "a b x y g 1\n";
  return parse_algebra(kText);
}

}  // namespace pbci
