#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pbci/algebra.hpp"

namespace pbci {

struct CatalogEntry {
  std::string name;
  std::string description;
};

// Named algebras used by the command line and the tests.
const std::vector<CatalogEntry>& catalog();
// Throws InvalidInput for an unknown name.
Algebra catalog_algebra(std::string_view name);

// The n-element chain 0 < a1 < ... < 1 with x -> y = x ~> y = 1 if x <= y,
// else y. Elements are listed bottom-up, the unit last.
Algebra chain(std::size_t n);

}  // namespace pbci
