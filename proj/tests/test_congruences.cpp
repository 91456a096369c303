#include <doctest.h>

#include "common.hpp"
#include "pbci/congruences.hpp"
#include "pbci/error.hpp"
#include "pbci/filters.hpp"
#include "pbci/group.hpp"
#include "pbci/isomorphism.hpp"
#include "pbci/lattice.hpp"
#include "pbci/structure.hpp"

using namespace pbci;
using fixture::ex6;

namespace {

// Every partition of 0..n-1 as restricted-growth strings.
std::vector<Partition> all_partitions(std::size_t n) {
  std::vector<Partition> out;
  std::vector<std::size_t> rg(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t k) {
    if (i == n) {
      out.emplace_back(rg);
      return;
    }
    for (std::size_t b = 0; b <= k; ++b) {
      rg[i] = b;
      rec(i + 1, std::max(k, b + 1));
    }
  };
  if (n > 0) rec(1, 1);
  return out;
}

}  // namespace

TEST_CASE("partitions") {
  const Algebra& a = ex6();
  const Partition p = parse_partition(a, "a,b,1|x,y,g");
  CHECK(p.num_blocks() == 2);
  CHECK(format_partition(a, p) == "{a,b,1 | x,y,g}");
  CHECK(parse_partition(a, "a,b").num_blocks() == 5);
  CHECK(Partition::identity(3).refines(Partition::total(3)));
  CHECK(p.meet(Partition::identity(6)) == Partition::identity(6));
  CHECK(p.join(Partition::total(6)) == Partition::total(6));
  CHECK_THROWS_AS(parse_partition(a, "a,b|b,x"), InvalidInput);
}

TEST_CASE("congruence enumeration matches a brute-force scan") {
  CHECK(all_congruences(chain(1)).size() == 1);
  CHECK(all_congruences(chain(2)).size() == 2);
  const auto ec = all_congruences(ex6());
  CHECK(std::find(ec.begin(), ec.end(), parse_partition(ex6(), "a,b,1|x,y,g")) != ec.end());
  std::vector<Algebra> all = fixture::models_upto(4);
  all.push_back(ex6());
  for (const auto& m : all) {
    std::vector<Partition> brute;
    for (const auto& p : all_partitions(m.size())) {
      if (is_congruence(m, p)) brute.push_back(p);
    }
    auto got = all_congruences(m);
    CHECK(got.size() == brute.size());
    for (const auto& p : brute) CHECK(std::find(got.begin(), got.end(), p) != got.end());
  }
}

TEST_CASE("quotients") {
  const Algebra& a = ex6();
  CHECK(are_isomorphic(quotient(a, parse_partition(a, "a,b,1|x,y,g")), group_to_algebra(Group::cyclic(2))));
  CHECK(are_isomorphic(quotient(a, Partition::identity(6)), a));
  CHECK(quotient(a, Partition::total(6)).size() == 1);
  CHECK_THROWS_AS(quotient(a, parse_partition(a, "a,x")), PreconditionError);
  CHECK(incompatibility(a, parse_partition(a, "a,x")).has_value());
}

TEST_CASE("relative congruences") {
  const Algebra& a = ex6();
  CHECK(is_relative(a, Partition::identity(6)));
  CHECK(is_relative(a, Partition::total(6)));
  CHECK_THROWS_AS(is_relative(a, parse_partition(a, "a,x")), PreconditionError);
  std::size_t non_relative = 0;
  for (const auto& m : fixture::models_upto(4)) {
    for (const auto& c : all_congruences(m)) {
      const bool rel = is_relative(m, c);
      CHECK(rel == is_pseudo_bci(quotient(m, c)));
      if (rel) CHECK(is_filter(m, kernel(m, c)));
      non_relative += !rel;
    }
  }
  MESSAGE("non-relative congruences among algebras of size <= 4: " << non_relative);
}

TEST_CASE("relative congruence lattice and filters") {
  CHECK(relcong_lattice(chain(1)).lattice.size() == 1);
  std::vector<Algebra> all = fixture::models_upto(4);
  all.push_back(ex6());
  all.push_back(group_to_algebra(Group::dihedral(4)));
  for (const auto& m : all) {
    const RelconLattice r = relcong_lattice(m);
    const FiniteLattice f = FiniteLattice::from_closed_family(m, all_filters(m));
    CHECK(iso_with_filters(m));
    CHECK(lattice_isomorphism(r.lattice, f));
    CHECK(is_arguesian(r.lattice));
    for (std::size_t i = 0; i < r.congruences.size(); ++i) {
      for (std::size_t j = 0; j < r.congruences.size(); ++j) {
        const Partition& p = r.congruences[i];
        const Partition& q = r.congruences[j];
        CHECK(r.congruences[r.lattice.meet(i, j)] == p.meet(q));
        CHECK(r.congruences[r.lattice.join(i, j)] == relative_join(m, p, q));
        CHECK(join_characterization(m, p, q));
      }
    }
  }
  CHECK(relcong_lattice(group_to_algebra(Group::dihedral(4))).lattice.size() == 6);
}

TEST_CASE("pseudo-BCK relative congruence lattices are distributive") {
  for (std::size_t n = 1; n <= 5; ++n) {
    SearchSpec s;
    s.size = n;
    s.cls = AlgebraClass::pbck;
    enumerate(s, [](const Algebra& m) {
      CHECK(is_distributive(relcong_lattice(m).lattice));
      return true;
    });
  }
}
