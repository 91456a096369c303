#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pbci/subset.hpp"

namespace pbci {

using Element = std::uint32_t;

// A finite algebra (A, ->, ~>, 1) given by two operation tables.
//
// Elements are indices 0..n-1; names are only used for I/O. Both tables are
// stored row-major with the row being the left operand. Instances are
// immutable once constructed.
class Algebra {
 public:
  // Throws InvalidInput if the tables are not total and closed, the names are
  // not distinct identifiers or the unit is out of range.
  Algebra(std::vector<std::string> names, Element unit, std::vector<Element> arrow,
          std::vector<Element> squig);

  std::size_t size() const noexcept { return names_.size(); }
  Element unit() const noexcept { return unit_; }

  Element arrow(Element x, Element y) const noexcept { return arrow_[x * size() + y]; }
  Element squig(Element x, Element y) const noexcept { return squig_[x * size() + y]; }

  // x <= y in the derived order, i.e. x -> y = 1.
  bool leq(Element x, Element y) const noexcept { return arrow(x, y) == unit_; }

  const std::string& name(Element x) const { return names_.at(x); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Element> find(std::string_view name) const;
  // Like find, but throws InvalidInput for unknown names.
  Element element(std::string_view name) const;

  std::span<const Element> arrow_table() const noexcept { return arrow_; }
  std::span<const Element> squig_table() const noexcept { return squig_; }

  // Same tables and unit; names may differ.
  bool same_tables(const Algebra& other) const noexcept {
    return unit_ == other.unit_ && arrow_ == other.arrow_ && squig_ == other.squig_;
  }
  bool operator==(const Algebra& other) const noexcept = default;

 private:
  std::vector<std::string> names_;
  Element unit_;
  std::vector<Element> arrow_;
  std::vector<Element> squig_;
};

// True if s is usable as an element name in the text format.
bool is_valid_name(std::string_view s) noexcept;

// Default element names: the unit is "1", the rest "a", "b", ... (then "e26"...).
std::vector<std::string> default_names(std::size_t n, Element unit);

struct Violation {
  std::string rule;
  std::vector<std::string> witness;  // element names, in variable order
  std::string note;                  // empty unless the rule is flagged
};

struct Report {
  std::vector<Violation> violations;

  bool passed() const noexcept { return violations.empty(); }
  const Violation* find(std::string_view rule) const noexcept;
};

struct CheckOptions {
  // Cap on the number of violations reported; one witness per rule.
  std::size_t max_violations = 10;
};

// Identities (rpom1a), (rpom1b), (rpom2a), (rpom2b) and the antisymmetry
// quasi-identity x->y = 1 & y->x = 1 => x = y, quantified over all tuples.
Report check_pseudo_bci(const Algebra& a, CheckOptions opts = {});
// The above plus integrality x -> 1 = 1.
Report check_pseudo_bck(const Algebra& a, CheckOptions opts = {});

inline bool is_pseudo_bci(const Algebra& a) { return check_pseudo_bci(a, {1}).passed(); }
inline bool is_pseudo_bck(const Algebra& a) { return check_pseudo_bck(a, {1}).passed(); }

// The twelve basic arithmetic laws of pseudo-BCI-algebras, rules "L1.1" to
// "L1.12". Violations of "L1.12" carry the note "supplementary".
Report check_lemma1(const Algebra& a, CheckOptions opts = {});

// The relation x <= y iff x -> y = 1, materialized.
class DerivedOrder {
 public:
  DerivedOrder(std::size_t n, std::vector<char> rel) : n_(n), rel_(std::move(rel)) {}

  std::size_t size() const noexcept { return n_; }
  bool leq(Element x, Element y) const noexcept { return rel_[x * n_ + y] != 0; }
  bool less(Element x, Element y) const noexcept { return x != y && leq(x, y); }

  Subset down_set(Element x) const;
  Subset up_set(Element x) const;
  Subset maximal() const;
  // Covering pairs (x, y): x < y with nothing strictly between.
  std::vector<std::pair<Element, Element>> hasse() const;
  bool is_partial_order() const noexcept;

  bool operator==(const DerivedOrder&) const = default;

 private:
  std::size_t n_;
  std::vector<char> rel_;
};

// Throws InconsistencyError if the arrow-order and the squig-order differ,
// which can only happen if the algebra was not verified first.
DerivedOrder derive_order(const Algebra& a);

// A† = (A, ~>, ->, 1).
Algebra dagger(const Algebra& a);

// a1 -> (a2 -> ... (an -> x)) and an ~> (... (a1 ~> x)). Throw InvalidInput
// on an empty word.
Element word_arrow(const Algebra& a, std::span<const Element> word, Element x);
Element word_squig(const Algebra& a, std::span<const Element> word, Element x);

// map[x] is the image of x; checks unit and both operations.
bool is_homomorphism(const Algebra& from, const Algebra& to, std::span<const Element> map);

// Contains the unit and is closed under both arrows.
bool is_subuniverse(const Algebra& a, const Subset& s);

// Induced subalgebra on s, elements kept in index order. Throws
// PreconditionError if s is not a subuniverse.
Algebra subalgebra(const Algebra& a, const Subset& s);

// Name list "{a,b,1}" for a subset.
std::string format_subset(const Algebra& a, const Subset& s);
// Parses "a,b,1" (braces optional) into a subset. Throws InvalidInput.
Subset parse_subset(const Algebra& a, std::string_view text);

}  // namespace pbci
