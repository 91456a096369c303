#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pbci/algebra.hpp"
#include "pbci/subset.hpp"

namespace pbci {

// A finite lattice over indices 0..m-1 with opaque labels. Join and meet are
// tabulated on construction.
class FiniteLattice {
 public:
  // leq is row-major m x m. Throws InvalidInput unless it is a lattice order.
  FiniteLattice(std::vector<std::string> labels, std::vector<char> leq);

  // Meet is intersection; join is the least member containing the union.
  // Throws InvalidInput if the family is not closed under intersection or has
  // no greatest member. Elements keep the family order.
  static FiniteLattice from_closed_family(std::vector<Subset> family,
                                          const std::function<std::string(const Subset&)>& label = {});
  static FiniteLattice from_closed_family(const Algebra& a, std::vector<Subset> family);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool leq(std::size_t x, std::size_t y) const noexcept { return leq_[x * size() + y] != 0; }
  std::size_t join(std::size_t x, std::size_t y) const noexcept { return join_[x * size() + y]; }
  std::size_t meet(std::size_t x, std::size_t y) const noexcept { return meet_[x * size() + y]; }
  std::size_t top() const noexcept { return top_; }
  std::size_t bottom() const noexcept { return bottom_; }
  // Present for lattices built from a subset family.
  const std::optional<std::vector<Subset>>& carriers() const noexcept { return carriers_; }
  std::optional<std::size_t> index_of(const Subset& s) const;

 private:
  std::vector<std::string> labels_;
  std::vector<char> leq_;
  std::vector<std::size_t> join_, meet_;
  std::size_t top_ = 0, bottom_ = 0;
  std::optional<std::vector<Subset>> carriers_;
};

// Verdict of a lattice identity; the witness holds element labels of the
// first failing tuple in the identity's variable order.
struct IdentityCheck {
  bool holds = true;
  std::vector<std::string> witness;
  explicit operator bool() const noexcept { return holds; }
};

// x <= z implies x v (y ^ z) = (x v y) ^ z; witness (x, y, z).
IdentityCheck is_modular(const FiniteLattice& l);
// x ^ (y v z) = (x ^ y) v (x ^ z); witness (x, y, z).
IdentityCheck is_distributive(const FiniteLattice& l);
// The arguesian identity over all 6-tuples; witness (x1,x2,x3,y1,y2,y3).
// Throws CapExceeded if the lattice has more than `cap` elements.
IdentityCheck is_arguesian(const FiniteLattice& l, std::size_t cap = 40);

// A pentagon sublattice {0, a, b, c, 1} with 0 < a < b < 1, 0 < c < 1, c
// incomparable to a and b. Labels in the order 0, a, b, c, 1.
std::optional<std::vector<std::string>> find_pentagon(const FiniteLattice& l);

// Both lattices must carry subset families. True iff joins and meets of sub's
// elements computed in super agree with sub's own. Throws InvalidInput if some
// element of sub is not an element of super.
bool is_sublattice(const FiniteLattice& sub, const FiniteLattice& super);

// Order isomorphism l -> r (map[i] indexes r), or nullopt. Exhaustive.
std::optional<std::vector<std::size_t>> lattice_isomorphism(const FiniteLattice& l, const FiniteLattice& r);

}  // namespace pbci
