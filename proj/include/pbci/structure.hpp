#pragma once

#include <vector>

#include "pbci/algebra.hpp"
#include "pbci/group.hpp"
#include "pbci/subset.hpp"

namespace pbci {

// I_A = {x : x <= 1}.
Subset integral_part(const Algebra& a);
// G_A = {x -> 1 : x in A}, the maximal elements.
Subset group_part(const Algebra& a);

bool is_p_semisimple(const Algebra& a);

// G_A with g.h = (g -> 1) ~> h. members[i] is the algebra element carried by
// group index i (increasing), so the group shares the algebra's names.
struct GroupView {
  Subset carrier;
  Group group;
  std::vector<Element> members;

  // Group index of an element of G_A; throws InvalidInput otherwise.
  std::size_t index_of(Element x) const;
};

// Throws InconsistencyError if the group axioms or the recovery identities
// g -> h = h.g^-1, g ~> h = g^-1.h fail (the input was not verified).
GroupView group_view(const Algebra& a);

// A surjective homomorphism onto `codomain`; map[x] indexes the codomain.
struct HomomorphismWitness {
  Algebra codomain;
  std::vector<Element> map;
  Subset kernel;  // preimage of the unit, over the domain
};

// gamma: x |-> x -> 1 onto (G_A)-dagger; delta: x |-> (x -> 1) -> 1 onto G_A.
// The codomain is the subalgebra on G_A (dagger for gamma). Both verify the
// homomorphism property and throw InconsistencyError if it fails.
HomomorphismWitness gamma(const Algebra& a);
HomomorphismWitness delta(const Algebra& a);

// ((x -> 1) -> 1) -> x, always in I_A.
Element integral_residue(const Algebra& a, Element x);

struct ProductOptions {
  std::size_t max_size = Subset::max_universe;
};

// Componentwise operations on A x B; element (x, y) has index x * |B| + y and
// name "(x,y)". Throws CapExceeded beyond opts.max_size.
Algebra direct_product(const Algebra& a, const Algebra& b, ProductOptions opts = {});

// B u H for a pseudo-BCK-algebra B and a group H, units identified:
//   x op y = x op y     if x, y in B or x, y in H
//   x op y = y          if x in B, y in H
//   x op y = x^-1       if x in H \ {1}, y in B
// Elements of B come first, then H without its identity. Clashing names of H
// get the suffix "_h" (repeated as needed); with rename = false a clash
// throws InvalidInput. Throws PreconditionError if B is not pseudo-BCK.
Algebra union_construction(const Algebra& b, const Group& h, bool rename = true);
inline Algebra union_construction(const Algebra& b, const GroupView& h, bool rename = true) {
  return union_construction(b, h.group, rename);
}

}  // namespace pbci
