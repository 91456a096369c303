#pragma once

#include <string>
#include <vector>

#include "pbci/algebra.hpp"

namespace pbci {

// A finite group given by its multiplication table over indices 0..k-1.
class Group {
 public:
  // Validates identity, inverses and associativity; throws InvalidInput
  // naming the failing axiom and its witness.
  Group(std::vector<std::string> names, std::vector<std::size_t> table);
  // The trivial group {1}.
  Group() : Group({"1"}, {0}) {}

  // Z_n with elements "1", "g", "g2", ..., "g{n-1}".
  static Group cyclic(std::size_t n);
  // Dihedral group of order 2n from r^n = s^2 = 1, srs = r^-1. Elements are
  // r^i s^j in order i + n*j, named "1", "r", "r2", ..., "s", "rs", "r2s", ...
  static Group dihedral(std::size_t n);
  static Group direct_product(const Group& g, const Group& h);

  std::size_t size() const noexcept { return names_.size(); }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t mult(std::size_t g, std::size_t h) const noexcept { return mult_[g * size() + h]; }
  std::size_t inverse(std::size_t g) const noexcept { return inverse_[g]; }
  const std::string& name(std::size_t g) const { return names_.at(g); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<std::size_t>& table() const noexcept { return mult_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::size_t> mult_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

// The group regarded as a pseudo-BCI-algebra: g -> h = h * g^-1 and
// g ~> h = g^-1 * h, unit the identity.
Algebra group_to_algebra(const Group& g);

}  // namespace pbci
