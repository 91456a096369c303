#include "pbci/catalog.hpp"

#include "pbci/decomposition.hpp"
#include "pbci/group.hpp"
#include "pbci/structure.hpp"

namespace pbci {

Algebra chain(std::size_t n) {
  if (n == 0) throw InvalidInput("a chain needs at least one element");
  std::vector<std::string> names;
  for (std::size_t i = 0; i + 1 < n; ++i) names.push_back(i == 0 ? "0" : "c" + std::to_string(i));
  names.push_back("1");
  std::vector<Element> t(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) t[x * n + y] = x <= y ? static_cast<Element>(n - 1) : y;
  }
  return Algebra(std::move(names), static_cast<Element>(n - 1), t, t);
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"ex6", "six-element algebra whose group part is not a filter"},
      {"trivial", "the one-element algebra"},
      {"chain2", "two-element chain (BCK)"},
      {"chain3", "three-element chain (BCK)"},
      {"z2", "cyclic group of order 2"},
      {"z3", "cyclic group of order 3"},
      {"z4", "cyclic group of order 4"},
      {"klein", "Klein four-group"},
      {"s3", "symmetric group of order 6"},
      {"d4", "dihedral group of order 8"},
      {"chain2xz2", "direct product of the two-element chain and Z2"},
  };
  return entries;
}

Algebra catalog_algebra(std::string_view name) {
  if (name == "ex6") return builtin_example();
  if (name == "trivial") return chain(1);
  if (name == "chain2") return chain(2);
  if (name == "chain3") return chain(3);
  if (name == "z2") return group_to_algebra(Group::cyclic(2));
  if (name == "z3") return group_to_algebra(Group::cyclic(3));
  if (name == "z4") return group_to_algebra(Group::cyclic(4));
  if (name == "klein") return group_to_algebra(Group::direct_product(Group::cyclic(2), Group::cyclic(2)));
  if (name == "s3") return group_to_algebra(Group::dihedral(3));
  if (name == "d4") return group_to_algebra(Group::dihedral(4));
  if (name == "chain2xz2") return direct_product(chain(2), group_to_algebra(Group::cyclic(2)));
  throw InvalidInput("unknown example '" + std::string(name) + "'");
}

}  // namespace pbci
