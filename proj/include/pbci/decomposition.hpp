#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pbci/algebra.hpp"
#include "pbci/filters.hpp"
#include "pbci/isomorphism.hpp"

namespace pbci {

// x . y = (x -> 1) ~> y and x * y = (y ~> 1) -> x.
inline Element dot(const Algebra& a, Element x, Element y) { return a.squig(a.arrow(x, a.unit()), y); }
inline Element star(const Algebra& a, Element x, Element y) { return a.arrow(a.squig(y, a.unit()), x); }

// Rules "L3.1" .. "L3.5":
//   1.x = x = x*1;  x.(x->1) = 1 = (x~>1)*x;  x.(y*z) = (x.y)*z;
//   (x.y).z <= x.(y.z);  x*(y*z) <= (x*y)*z.
Report check_lemma_L3(const Algebra& a, CheckOptions opts = {});

// Rules "L4.1" .. "L4.3", for x in A and g in G_A:
//   x->g = (g->x)->1, x~>g = (g~>x)->1;  g->x = x*g^-1, g~>x = g^-1.x;
//   (x->g)->1 = x.g^-1, (x~>g)->1 = g^-1*x.
Report check_lemma_L4(const Algebra& a, CheckOptions opts = {});

struct Verdict {
  bool holds = true;
  std::vector<std::string> witness;  // element names
  std::string detail;
  explicit operator bool() const noexcept { return holds; }
};

// The six associativity conditions, g, h ranging over G_A:
//   (1) . associative            (4) * associative
//   (2) (g.h).x = g.(h.x)        (5) x*(h*g) = (x*h)*g
//   (3) g^-1 ~> (g ~> x) = x     (6) g^-1 -> (g -> x) = x
std::array<Verdict, 6> check_lemJ1_conditions(const Algebra& a);

// g -> x = g ~> x for g in G_A, x in I_A. The witness is (g, x) and the
// detail reads "g->x=y, g~>x=z".
Verdict check_condition_12(const Algebra& a);

struct DecompositionReport {
  std::array<Verdict, 6> conditions;
  Verdict condition_12;
  ConditionCheck g_filter;  // G_A against (i)-(iv)
  // A isomorphic to I x G, decided by exhaustive search.
  bool isomorphic_to_product = false;
  // I x G and I x G-dagger are isomorphic (always, via inversion).
  bool product_dagger_isomorphic = false;
  // eta: (i, g) |-> g -> i from I x G-dagger, indexed like `product`.
  // Present only when verified to be a bijective homomorphism.
  std::optional<Algebra> product;
  std::optional<ElementMap> eta;

  bool conditions_agree() const noexcept;
  bool theorem_condition_3() const noexcept;
  // iso exists <=> G_A filter <=> (lemJ1 conditions and condition (12)),
  // and eta present <=> iso exists.
  bool triad_agrees() const noexcept;
  bool decomposable() const noexcept { return eta.has_value(); }
};

DecompositionReport decompose(const Algebra& a);

// The identity reformulations with delta(t) = (t -> 1) -> 1 expanded as a
// term: G_A is a filter iff both `filter_identities` hold; condition (12)
// iff `condition_12_identity` holds.
struct DeltaIdentities {
  Report filter_identities;
  Report condition_12_identity;
};
DeltaIdentities check_delta_identities(const Algebra& a);

// x . y = x * y for all x, y.
Verdict dot_equals_star(const Algebra& a);
// x * (y . z) = (x * y) . z for all x, y, z.
Verdict mixed_law(const Algebra& a);

// The six-element algebra on a, b, x, y, g, 1 with G = {g, 1} a non-filter.
Algebra builtin_example();

}  // namespace pbci
