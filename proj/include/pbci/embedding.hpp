#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbci/algebra.hpp"
#include "pbci/group.hpp"
#include "pbci/subset.hpp"

namespace pbci {

// J(w) = {x : w -> x = 1} for a nonempty word w, with the shortest word found
// as representative. `alternates` keeps a few other words with the same
// image; products are cross-checked against them.
struct WordImageSet {
  Subset subset;
  std::vector<Element> rep;
  std::vector<std::vector<Element>> alternates;
};

// A finite po-monoid ordered by inclusion of the underlying subsets.
// `minimal` lists the minimal elements; `group` is a group structure on them
// (group index i is element minimal[i]) that need not agree with star.
struct OrderedMonoid {
  std::vector<WordImageSet> elements;
  std::vector<std::size_t> star;  // row-major
  std::size_t unit = 0;
  std::vector<std::size_t> minimal;
  Group group;

  std::size_t size() const noexcept { return elements.size(); }
  bool leq(std::size_t i, std::size_t j) const noexcept { return elements[i].subset.subset_of(elements[j].subset); }
  std::size_t product(std::size_t i, std::size_t j) const noexcept { return star[i * size() + j]; }
  std::optional<std::size_t> index_of(const Subset& s) const;
};

// J(A): all word images, closed under J(v) * J(w) = J(vw), unit J(1) = {1}.
// The group on the minimal singletons {g} is the group of G_A. Throws
// InconsistencyError if a product depends on the representative words.
OrderedMonoid build_J(const Algebra& a);

// J(v) * J(w) computed as {x : w -> x in J(v)}, checked against the
// concatenated representative word.
std::size_t monoid_product(const Algebra& a, const OrderedMonoid& m, std::size_t i, std::size_t j);

// (F, <=, prod, ->, ~>, unit) with the elements as subsets of a monoid's
// elements, ordered by inclusion.
struct ResiduatedPoMonoid {
  std::vector<Subset> elements;
  std::vector<std::size_t> prod, res_l, res_r;  // row-major
  std::size_t unit = 0;

  std::size_t size() const noexcept { return elements.size(); }
  bool leq(std::size_t i, std::size_t j) const noexcept { return elements[i].subset_of(elements[j]); }
  std::size_t product(std::size_t i, std::size_t j) const noexcept { return prod[i * size() + j]; }
  std::size_t arrow(std::size_t i, std::size_t j) const noexcept { return res_l[i * size() + j]; }
  std::size_t squig(std::size_t i, std::size_t j) const noexcept { return res_r[i * size() + j]; }
  std::optional<std::size_t> index_of(const Subset& s) const;
  bool semi_integral() const noexcept;
  bool integral() const noexcept;
  // The {->, ~>, 1}-reduct, elements named "F0", "F1", ...
  Algebra reduct() const;
};

struct BuildOptions {
  std::size_t max_monoid = 18;
};

// Nonempty order filters of m lying above a single minimal element, with
//   X . Y  = {a : a >= x * y for some x in X, y in Y}
//   X -> Y = {a : [a) . X within Y},  X ~> Y = {a : X . [a) within Y}.
// Throws PreconditionError naming the failed hypothesis on m, CapExceeded if
// m is larger than the cap, and InconsistencyError if F is not closed.
ResiduatedPoMonoid build_F(const OrderedMonoid& m, BuildOptions opts = {});

// Rules: "monoid" (associativity, unit), "order" (partial order, leq agrees
// with x -> y = 1 and x ~> y = 1), "rpom1a", "rpom1b", "rpom2a", "rpom2b",
// "rpom3", "rpom4", and "rl" for the residuation law checked directly. When
// exactly one of the axiom route and the rl route fails, "routes" is added.
Report check_residuated_pomonoid(const ResiduatedPoMonoid& r, CheckOptions opts = {});

struct Embedding {
  OrderedMonoid monoid;
  ResiduatedPoMonoid target;
  std::vector<Element> map;  // x |-> index of [J(x)) in target
  bool injective = false;
  bool homomorphism = false;
};

// x |-> {J(w) : x in J(w)} into the reduct of build_F(build_J(a)).
Embedding embed(const Algebra& a, BuildOptions opts = {});

}  // namespace pbci
