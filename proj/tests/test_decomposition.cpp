#include <doctest.h>

#include "common.hpp"
#include "pbci/decomposition.hpp"
#include "pbci/group.hpp"
#include "pbci/isomorphism.hpp"
#include "pbci/structure.hpp"

using namespace pbci;
using fixture::el;
using fixture::ex6;

namespace {

bool arrows_coincide(const Algebra& a) {
  return std::equal(a.arrow_table().begin(), a.arrow_table().end(), a.squig_table().begin());
}

std::vector<Algebra> touched() {
  std::vector<Algebra> all = fixture::models_upto(4);
  all.push_back(ex6());
  const Algebra z2 = group_to_algebra(Group::cyclic(2));
  all.push_back(direct_product(chain(2), z2));
  all.push_back(direct_product(ex6(), chain(2)));
  for (const auto& b : fixture::models_upto(3, true)) {
    all.push_back(union_construction(b, Group::cyclic(2)));
    all.push_back(union_construction(b, Group::cyclic(3)));
  }
  return all;
}

}  // namespace

TEST_CASE("the example's tables") {
  const Algebra& a = ex6();
  CHECK(a.arrow(el(a, "x"), el(a, "y")) == el(a, "a"));
  CHECK(a.squig(el(a, "x"), el(a, "y")) == el(a, "b"));
  CHECK(dot(a, el(a, "g"), el(a, "a")) == el(a, "x"));
  CHECK(arrows_coincide(subalgebra(a, integral_part(a))));
  CHECK(arrows_coincide(subalgebra(a, group_part(a))));
  CHECK_FALSE(arrows_coincide(a));
  // x -> g = (g -> x) -> 1
  CHECK(a.arrow(el(a, "x"), el(a, "g")) == a.arrow(a.arrow(el(a, "g"), el(a, "x")), a.unit()));
}

TEST_CASE("dot and star basics") {
  for (const auto& a : fixture::models_upto(4)) {
    for (Element x = 0; x < a.size(); ++x) {
      CHECK(dot(a, a.unit(), x) == x);
      CHECK(star(a, x, a.unit()) == x);
      CHECK(dot(a, x, a.arrow(x, a.unit())) == a.unit());
    }
  }
}

TEST_CASE("the example's decomposition profile") {
  const Algebra& a = ex6();
  const auto c = check_lemJ1_conditions(a);
  for (const auto& v : c) CHECK(v.holds);
  const Verdict v12 = check_condition_12(a);
  CHECK_FALSE(v12.holds);
  CHECK(v12.witness == std::vector<std::string>{"g", "a"});
  CHECK(v12.detail == "g->a=y, g~>a=x");
  const DecompositionReport r = decompose(a);
  CHECK_FALSE(r.g_filter.holds);
  CHECK_FALSE(r.isomorphic_to_product);
  CHECK_FALSE(r.decomposable());
  CHECK(r.triad_agrees());
  CHECK(r.product_dagger_isomorphic);
}

TEST_CASE("decomposable instances") {
  const Algebra z2 = group_to_algebra(Group::cyclic(2));
  const DecompositionReport r = decompose(direct_product(chain(2), z2));
  CHECK(r.decomposable());
  CHECK(r.triad_agrees());
  REQUIRE(r.eta);
  CHECK(is_homomorphism(*r.product, direct_product(chain(2), z2), *r.eta));
  CHECK(decompose(chain(1)).decomposable());
  CHECK(check_condition_12(direct_product(chain(2), z2)).holds);
  for (const auto& a : fixture::models_upto(4)) {
    if (arrows_coincide(a)) CHECK(check_condition_12(a).holds);
  }
  const auto dg = check_lemJ1_conditions(group_to_algebra(Group::dihedral(4)));
  for (const auto& v : dg) CHECK(v.holds);
}

TEST_CASE("lemmas and the triad on every touched algebra") {
  for (const auto& a : touched()) {
    REQUIRE(is_pseudo_bci(a));
    CHECK(check_lemma_L3(a).passed());
    CHECK(check_lemma_L4(a).passed());
    const DecompositionReport r = decompose(a);
    CHECK(r.conditions_agree());
    CHECK(r.triad_agrees());
    CHECK(r.product_dagger_isomorphic);
    if (r.decomposable()) {
      CHECK(is_homomorphism(*r.product, a, *r.eta));
    }
  }
}

TEST_CASE("delta identities") {
  for (const auto& a : touched()) {
    const DeltaIdentities d = check_delta_identities(a);
    CHECK(d.filter_identities.passed() == is_filter(a, group_part(a)));
    CHECK(d.condition_12_identity.passed() == check_condition_12(a).holds);
  }
}

TEST_CASE("remarks on dot and star") {
  for (const auto& a : touched()) {
    const bool p = is_p_semisimple(a);
    CHECK(dot_equals_star(a).holds == p);
    if (mixed_law(a).holds) CHECK(p);
  }
}

TEST_CASE("dot and star may differ in a BCI-algebra") {
  std::optional<Algebra> found;
  std::size_t size = 0;
  for (std::size_t n = 1; n <= 5 && !found; ++n) {
    SearchSpec s;
    s.size = n;
    s.predicate = "dot-neq-star-bci";
    found = find_counterexample(s);
    size = n;
  }
  REQUIRE(found);
  MESSAGE("smallest BCI-algebra with dot != star has " << size << " elements");
  CHECK(arrows_coincide(*found));
  CHECK_FALSE(dot_equals_star(*found).holds);
}
