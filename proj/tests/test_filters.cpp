#include <doctest.h>

#include "common.hpp"
#include "oracles.hpp"
#include "pbci/error.hpp"
#include "pbci/filters.hpp"
#include "pbci/group.hpp"
#include "pbci/isomorphism.hpp"
#include "pbci/congruences.hpp"
#include "pbci/structure.hpp"

using namespace pbci;
using fixture::el;
using fixture::ex6;
using fixture::sub;

TEST_CASE("prefilter and filter membership") {
  const Algebra& a = ex6();
  CHECK(is_prefilter(a, sub(a, "1")));
  CHECK(is_prefilter(a, sub(a, "a,b,1")));
  CHECK(is_filter(a, sub(a, "a,b,1")));
  CHECK(is_filter(a, Subset::full(a.size())));
  const ConditionCheck g = check_filter(a, sub(a, "g,1"));
  CHECK_FALSE(g.holds);
  CHECK(g.condition == "(iv)");
  CHECK(is_prefilter(a, sub(a, "g,1")));
  const ConditionCheck none = check_prefilter(a, sub(a, "a"));
  CHECK(none.condition == "(i)");
}

TEST_CASE("group-derived algebras: prefilters are subgroups, filters normal subgroups") {
  const Group d4 = Group::dihedral(4);
  const Algebra a = group_to_algebra(d4);
  for (std::uint64_t bits = 0; bits < 256; ++bits) {
    const Subset s(8, bits);
    CHECK(is_prefilter(a, s) == oracle::subgroup(d4, s));
    CHECK(is_filter(a, s) == oracle::normal_subgroup(d4, s));
  }
  CHECK_FALSE(is_filter(a, sub(a, "1,s")));
  CHECK(is_filter(a, sub(a, "1,r,r2,r3")));
  CHECK(all_prefilters(a).size() == 10);
  CHECK(all_filters(a).size() == 6);
}

TEST_CASE("filter definitions agree with the oracle and with ideal-term closure") {
  for (const auto& m : fixture::models_upto(4)) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m.size()); ++bits) {
      const Subset s(m.size(), bits);
      CHECK(is_prefilter(m, s) == oracle::prefilter(m, s));
      CHECK(is_filter(m, s) == oracle::filter(m, s));
      CHECK(is_filter(m, s) == (s.contains(m.unit()) && closed_under_ideal_terms(m, s)));
      if (is_filter(m, s)) CHECK(is_prefilter(m, s));
    }
  }
}

TEST_CASE("generated prefilters and filters") {
  const Algebra& a = ex6();
  CHECK(prefilter_generated(a, sub(a, "1")) == sub(a, "1"));
  CHECK(filter_generated(a, sub(a, "1")) == sub(a, "1"));
  const Algebra z2 = group_to_algebra(Group::cyclic(2));
  CHECK(prefilter_generated(z2, sub(z2, "g")) == Subset::full(2));
  const Subset px = prefilter_generated(a, sub(a, "x"));
  CHECK(px.contains(el(a, "x")));
  CHECK(px.contains(el(a, "g")));
  CHECK(px == oracle::prefilter_closure(a, sub(a, "x")));
  const Subset fg = filter_generated(a, sub(a, "g"));
  CHECK(sub(a, "g,1").subset_of(fg));
  CHECK(fg != sub(a, "g,1"));
  const Algebra d4 = group_to_algebra(Group::dihedral(4));
  CHECK(filter_generated(d4, sub(d4, "r")) == sub(d4, "1,r,r2,r3"));
  CHECK_THROWS_AS(prefilter_generated(a, Subset(a.size())), InvalidInput);
  CHECK_THROWS_AS(filter_generated(a, Subset(a.size())), InvalidInput);
}

TEST_CASE("closure operator laws") {
  for (const auto& m : fixture::models_upto(3)) {
    const std::size_t n = m.size();
    for (std::uint64_t b1 = 1; b1 < (std::uint64_t{1} << n); ++b1) {
      const Subset s(n, b1);
      const Subset p = prefilter_generated(m, s), f = filter_generated(m, s);
      CHECK(s.subset_of(p));
      CHECK(p.subset_of(f));
      CHECK(prefilter_generated(m, p) == p);
      CHECK(filter_generated(m, f) == f);
      for (std::uint64_t b2 = 1; b2 < (std::uint64_t{1} << n); ++b2) {
        const Subset t(n, b2);
        if (!s.subset_of(t)) continue;
        CHECK(p.subset_of(prefilter_generated(m, t)));
        CHECK(f.subset_of(filter_generated(m, t)));
      }
    }
  }
}

TEST_CASE("families") {
  CHECK(all_prefilters(chain(1)).size() == 1);
  CHECK(all_filters(chain(1)).size() == 1);
  const Algebra& a = ex6();
  const auto f = all_filters(a);
  CHECK(std::find(f.begin(), f.end(), sub(a, "a,b,1")) != f.end());
  CHECK(f.back() == Subset::full(a.size()));
  CHECK(f.front() == sub(a, "1"));
  CHECK(f == oracle::scan(a, oracle::filter));
  auto pf = oracle::scan(a, oracle::prefilter);
  std::sort(pf.begin(), pf.end(), canonical_less);
  CHECK(all_prefilters(a) == pf);
  // the closure-driven route agrees with the subset scan
  for (const auto& m : fixture::models_upto(4)) {
    CHECK(all_prefilters(m, {0}) == all_prefilters(m));
    CHECK(all_filters(m, {0}) == all_filters(m));
  }
}

TEST_CASE("theta and kernel") {
  const Algebra& a = ex6();
  CHECK(theta_from_filter(a, sub(a, "1")) == Partition::identity(a.size()));
  CHECK(theta_from_filter(a, Subset::full(a.size())) == Partition::total(a.size()));
  const Partition t = theta_from_filter(a, sub(a, "a,b,1"));
  CHECK(format_partition(a, t) == "{a,b,1 | x,y,g}");
  CHECK(are_isomorphic(quotient(a, t), group_to_algebra(Group::cyclic(2))));
  CHECK_THROWS_AS(theta_from_filter(a, sub(a, "g,1")), PreconditionError);
  for (const auto& m : fixture::models_upto(4)) {
    for (const auto& f : all_filters(m)) {
      const Partition th = theta_from_filter(m, f);
      CHECK(is_congruence(m, th));
      CHECK(is_pseudo_bci(quotient(m, th)));
      CHECK(kernel(m, th) == f);
    }
    for (const auto& th : all_relative_congruences(m)) CHECK(theta_from_filter(m, kernel(m, th)) == th);
  }
}

TEST_CASE("ideal terms") {
  const Algebra& a = ex6();
  const Element one = a.unit();
  CHECK(ideal_term_eval(a, IdealTerm::t3, std::vector<Element>{one}) == one);
  CHECK_THROWS_AS(ideal_term_eval(a, IdealTerm::t3, std::vector<Element>{one, one}), InvalidInput);
  CHECK(ideal_term_arity(IdealTerm::w) == std::pair<std::size_t, std::size_t>{2, 2});
  // t1(b, a->b, a) = b
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      CHECK(ideal_term_eval(a, IdealTerm::t1, std::vector<Element>{y, a.arrow(x, y), x}) == y);
    }
  }
  // ideal-term law for every term over every size <= 4 algebra and EX6
  std::vector<Algebra> all = fixture::models_upto(4);
  all.push_back(a);
  for (const auto& m : all) {
    const Element n = static_cast<Element>(m.size());
    for (Element x1 = 0; x1 < n; ++x1) {
      for (Element x2 = 0; x2 < n; ++x2) {
        const Element u = m.unit();
        CHECK(ideal_term_eval(m, IdealTerm::t1, std::vector<Element>{x1, u, u}) == u);
        CHECK(ideal_term_eval(m, IdealTerm::t2, std::vector<Element>{x1, u}) == u);
        CHECK(ideal_term_eval(m, IdealTerm::w, std::vector<Element>{x1, x2, u, u}) == u);
      }
    }
    CHECK(ideal_term_eval(m, IdealTerm::t3, std::vector<Element>{m.unit()}) == m.unit());
  }
  // the term objects evaluate like the direct route
  CHECK(ideal_term(IdealTerm::t2).variables().size() == 2);
  CHECK(std::string(ideal_term_name(IdealTerm::t1)) == "t1");
}
