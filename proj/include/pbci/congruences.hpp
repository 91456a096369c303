#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pbci/algebra.hpp"
#include "pbci/lattice.hpp"
#include "pbci/partition.hpp"

namespace pbci {

// First (x, y, z) with x ~ y but x op z, y op z or z op x, z op y in
// different blocks; nullopt if theta is compatible with both arrows.
std::optional<std::vector<std::string>> incompatibility(const Algebra& a, const Partition& theta);
inline bool is_congruence(const Algebra& a, const Partition& theta) { return !incompatibility(a, theta); }

// Least congruence containing the given pairs.
Partition congruence_generated(const Algebra& a, const std::vector<std::pair<Element, Element>>& pairs);

// All congruences: the identity, the principal ones and their joins. Sorted by
// decreasing block count, then by labels.
std::vector<Partition> all_congruences(const Algebra& a);

// A/theta with each block named after its least element, blocks in id order.
// Throws PreconditionError with an incompatibility witness.
Algebra quotient(const Algebra& a, const Partition& theta);

// theta is a congruence whose quotient is again a pseudo-BCI-algebra.
// Throws PreconditionError if theta is not a congruence.
bool is_relative(const Algebra& a, const Partition& theta);

std::vector<Partition> all_relative_congruences(const Algebra& a);

// Least relative congruence above phi and psi: join as congruences, then merge
// blocks that the quotient's antisymmetry law identifies until none are left.
Partition relative_join(const Algebra& a, const Partition& phi, const Partition& psi);

struct RelconLattice {
  std::vector<Partition> congruences;  // indexed like the lattice elements
  FiniteLattice lattice;
};

// Relative congruences ordered by refinement. The order-derived joins are
// checked against relative_join (InconsistencyError on disagreement).
RelconLattice relcong_lattice(const Algebra& a);

struct IsoCheck {
  bool holds = true;
  std::string detail;  // first failure, empty if holds
  explicit operator bool() const noexcept { return holds; }
};

// theta |-> [1]_theta is an order isomorphism from the relative congruences
// onto the filters, inverse to F |-> theta_F.
IsoCheck iso_with_filters(const Algebra& a);

// For every x: (x,1) in phi v psi iff (x,1) in phi o psi iff (x,1) in
// psi o phi. The witness is the first failing x.
IdentityCheck join_characterization(const Algebra& a, const Partition& phi, const Partition& psi);

}  // namespace pbci
