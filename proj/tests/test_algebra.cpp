#include <doctest.h>

#include "common.hpp"
#include "pbci/error.hpp"
#include "pbci/group.hpp"
#include "pbci/io.hpp"
#include "pbci/isomorphism.hpp"
#include "pbci/structure.hpp"
#include "pbci/term.hpp"

using namespace pbci;
using fixture::el;
using fixture::ex6;

namespace {

Algebra with_arrow(const Algebra& a, Element x, Element y, Element v) {
  std::vector<Element> ar(a.arrow_table().begin(), a.arrow_table().end());
  std::vector<Element> sq(a.squig_table().begin(), a.squig_table().end());
  ar[x * a.size() + y] = v;
  return Algebra(a.names(), a.unit(), ar, sq);
}

const Term X = Term::var("x"), Y = Term::var("y"), Z = Term::var("z");

}  // namespace

TEST_CASE("construction rejects malformed tables") {
  CHECK_THROWS_AS(Algebra({"1", "a"}, 0, {0, 1, 1}, {0, 1, 1, 0}), InvalidInput);
  CHECK_THROWS_AS(Algebra({"1", "a"}, 0, {0, 1, 1, 2}, {0, 1, 1, 0}), InvalidInput);
  CHECK_THROWS_AS(Algebra({"1", "1"}, 0, {0, 1, 1, 0}, {0, 1, 1, 0}), InvalidInput);
  CHECK_THROWS_AS(Algebra({"1", "a"}, 2, {0, 1, 1, 0}, {0, 1, 1, 0}), InvalidInput);
  CHECK_THROWS_AS(Algebra({"1", "a b"}, 0, {0, 1, 1, 0}, {0, 1, 1, 0}), InvalidInput);
}

TEST_CASE("axiom checks on the basic examples") {
  CHECK(check_pseudo_bci(chain(1)).passed());
  CHECK(check_pseudo_bck(chain(1)).passed());
  CHECK(check_pseudo_bci(ex6()).passed());
  CHECK(check_pseudo_bck(chain(2)).passed());

  const Report bck = check_pseudo_bck(ex6());
  REQUIRE_FALSE(bck.passed());
  REQUIRE(bck.violations.size() == 1);
  CHECK(bck.violations[0].rule == "integral");
  CHECK(bck.violations[0].witness == std::vector<std::string>{"x"});

  const Algebra z2 = group_to_algebra(Group::cyclic(2));
  const Report zr = check_pseudo_bck(z2);
  REQUIRE_FALSE(zr.passed());
  CHECK(zr.find("integral")->witness == std::vector<std::string>{"g"});
}

TEST_CASE("mutating the example breaks it") {
  const Algebra m = with_arrow(ex6(), el(ex6(), "g"), el(ex6(), "a"), ex6().unit());
  const Report r = check_pseudo_bci(m);
  REQUIRE_FALSE(r.passed());
  bool expected = false;
  for (const auto& v : r.violations) expected = expected || v.rule == "rpom1a" || v.rule == "rpom4";
  CHECK(expected);
  CHECK(r.violations.size() <= 10);
  CHECK(check_pseudo_bci(m, {1}).violations.size() == 1);
}

TEST_CASE("first witness is lexicographically least") {
  // Brute force the least failing triple of (rpom1a) on a broken table.
  const Algebra m = with_arrow(ex6(), el(ex6(), "g"), el(ex6(), "a"), ex6().unit());
  const Report report = check_pseudo_bci(m);
  const Violation* v = report.find("rpom1a");
  REQUIRE(v != nullptr);
  const Element n = static_cast<Element>(m.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (m.squig(m.arrow(x, y), m.squig(m.arrow(y, z), m.arrow(x, z))) != m.unit()) {
          CHECK(v->witness == std::vector<std::string>{m.name(x), m.name(y), m.name(z)});
          return;
        }
      }
    }
  }
  FAIL("no failing triple found by brute force");
}

TEST_CASE("derived order") {
  const DerivedOrder c = derive_order(chain(2));
  CHECK(c.leq(0, 1));
  CHECK_FALSE(c.leq(1, 0));

  const Algebra& a = ex6();
  const DerivedOrder o = derive_order(a);
  CHECK(o.is_partial_order());
  std::vector<std::pair<std::string, std::string>> strict;
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      if (o.less(x, y)) strict.emplace_back(a.name(x), a.name(y));
    }
  }
  const std::vector<std::pair<std::string, std::string>> expected = {{"a", "1"}, {"b", "1"}, {"x", "g"}, {"y", "g"}};
  CHECK(strict == expected);
  CHECK(format_subset(a, o.maximal()) == "{g,1}");

  const Algebra p = direct_product(chain(2), group_to_algebra(Group::cyclic(2)));
  const DerivedOrder po = derive_order(p);
  for (Element u = 0; u < p.size(); ++u) {
    for (Element v = 0; v < p.size(); ++v) {
      const bool comp = (u / 2 <= v / 2) && (u % 2 == v % 2);
      CHECK(po.leq(u, v) == comp);
    }
  }
}

TEST_CASE("derive_order detects disagreeing arrows") {
  const Algebra bad({"1", "a"}, 0, {0, 1, 0, 0}, {0, 1, 1, 0});
  CHECK_THROWS_AS(derive_order(bad), InconsistencyError);
}

TEST_CASE("basic laws hold everywhere") {
  CHECK(check_lemma1(ex6()).passed());
  CHECK(check_lemma1(chain(1)).passed());
  for (const auto& a : fixture::models_upto(4)) CHECK(check_lemma1(a).passed());
}

TEST_CASE("term identities") {
  const Term one = Term::one();
  CHECK(check_term_identity(chain(2), arrow(one, X), X).passed());
  CHECK(check_term_identity(chain(2), arrow(X, X), one).passed());
  const Term prelin = arrow(arrow(arrow(X, Y), Z), arrow(arrow(arrow(Y, X), Z), Z));
  CHECK_FALSE(check_term_identity(ex6(), prelin, one).passed());
  CHECK(check_term_identity(ex6(), arrow(X, squig(Y, Z)), squig(Y, arrow(X, Z))).passed());
  CHECK_THROWS_AS(check_term_identity(ex6(), product(X, Y), X), InvalidInput);
  CHECK_THROWS_AS(evaluate(ex6(), X, {}), InvalidInput);
}

TEST_CASE("term parsing") {
  const Term t = parse_term("x -> (y ~> z)");
  CHECK(t.to_string() == arrow(X, squig(Y, Z)).to_string());
  CHECK(parse_term("x -> y -> z").to_string() == arrow(X, arrow(Y, Z)).to_string());
  CHECK(parse_term("1").kind() == Term::Kind::unit);
  CHECK_THROWS_AS(parse_term("x ->"), InvalidInput);
  CHECK_THROWS_AS(parse_term("(x"), InvalidInput);
  const Algebra& a = ex6();
  CHECK(evaluate(a, parse_term("x -> y"), {{"x", el(a, "x")}, {"y", el(a, "y")}}) == el(a, "a"));
  CHECK(evaluate(a, parse_term("x ~> y"), {{"x", el(a, "x")}, {"y", el(a, "y")}}) == el(a, "b"));
}

TEST_CASE("words") {
  const Algebra& a = ex6();
  const Element g = el(a, "g"), one = a.unit();
  std::vector<Element> w{one, one};
  for (Element x = 0; x < a.size(); ++x) CHECK(word_arrow(a, w, x) == x);
  w = {g, g};
  CHECK(word_arrow(a, w, el(a, "a")) == el(a, "a"));
  CHECK_THROWS_AS(word_arrow(a, std::vector<Element>{}, g), InvalidInput);
  // unit tests agree for every word of length <= 3
  for (const auto& m : fixture::models_upto(3)) {
    const Element n = static_cast<Element>(m.size());
    for (Element p = 0; p < n; ++p) {
      for (Element q = 0; q < n; ++q) {
        for (Element r = 0; r < n; ++r) {
          const std::vector<Element> word{p, q, r};
          for (Element x = 0; x < n; ++x) {
            CHECK((word_arrow(m, word, x) == m.unit()) == (word_squig(m, word, x) == m.unit()));
          }
        }
      }
    }
  }
}

TEST_CASE("isomorphism search") {
  const Algebra& a = ex6();
  const auto id = find_isomorphism(a, a);
  REQUIRE(id);
  for (Element x = 0; x < a.size(); ++x) CHECK((*id)[x] == x);

  const Algebra prod = direct_product(subalgebra(a, integral_part(a)), subalgebra(a, group_part(a)));
  CHECK_FALSE(find_isomorphism(a, prod));
  CHECK_FALSE(find_isomorphism(prod, a));
  CHECK(find_isomorphism(subalgebra(a, group_part(a)), group_to_algebra(Group::cyclic(2))));

  const auto& ms = fixture::models_upto(3);
  for (const auto& p : ms) {
    for (const auto& q : ms) CHECK(are_isomorphic(p, q) == are_isomorphic(q, p));
  }
}

TEST_CASE("dagger") {
  CHECK(dagger(chain(2)).same_tables(chain(2)));
  const Algebra d = dagger(ex6());
  CHECK(check_pseudo_bci(d).passed());
  CHECK(dagger(d) == ex6());
  for (const auto& a : fixture::models_upto(4)) {
    CHECK(is_pseudo_bci(dagger(a)));
    CHECK(dagger(dagger(a)) == a);
  }
}

TEST_CASE("text format") {
  const std::string text = format_algebra(ex6());
  CHECK(parse_algebra(text) == ex6());
  CHECK(text.rfind("elements: a b x y g 1\nunit: 1\narrow:\n", 0) == 0);
  const Algebra c = parse_algebra("# comment\n\nelements: 1 a\nunit: 1\narrow:\n1 a\n1 1\nsquig:\n1 a\n1 1\n");
  CHECK(c.size() == 2);
  CHECK_THROWS_AS(parse_algebra(""), ParseError);
  CHECK_THROWS_AS(parse_algebra("elements: 1 a\nunit: 1\narrow:\n1 a\n1\nsquig:\n1 a\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra("elements: 1 a\nunit: 1\narrow:\n1 a\n1 q\nsquig:\n1 a\n1 1\n"), ParseError);
  try {
    parse_algebra("elements: 1 a\nunit: z\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  for (const auto& a : fixture::models_upto(4)) CHECK(parse_algebra(format_algebra(a)) == a);
}
