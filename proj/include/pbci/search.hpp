#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pbci/algebra.hpp"

namespace pbci {

enum class AlgebraClass { pbci, pbck, group };

const char* class_name(AlgebraClass c);
// "pbci", "pbck" or "group"; throws InvalidInput otherwise.
AlgebraClass parse_class(std::string_view s);

struct SearchSpec {
  std::size_t size = 1;
  AlgebraClass cls = AlgebraClass::pbci;
  std::string predicate;  // empty: every model
  std::size_t limit = 0;  // 0: no limit
};

// Size cap for the pbci and pbck classes: PBCI_MAX_SIZE if set, else 6. The
// group class is capped at the larger of this and 8.
std::size_t max_search_size(AlgebraClass c);

struct PredicateInfo {
  std::string name;
  std::string description;
};
const std::vector<PredicateInfo>& predicates();
// Throws InvalidInput for an unknown name.
bool evaluate_predicate(std::string_view name, const Algebra& a);

struct SearchStats {
  std::size_t posets = 0;    // canonical order shapes tried
  std::size_t nodes = 0;     // search tree nodes
  std::size_t models = 0;    // models passing the class (before the predicate)
  std::size_t emitted = 0;
};

// Streams one algebra per isomorphism class of the given size and class that
// satisfies the predicate, in a deterministic order; `sink` returns false to
// stop early. Elements are named "1", "a", "b", ... with the unit first.
// Throws InvalidInput (size 0, unknown predicate) or CapExceeded.
SearchStats enumerate(const SearchSpec& spec, const std::function<bool(const Algebra&)>& sink);
std::vector<Algebra> enumerate_all(const SearchSpec& spec);

// First model satisfying the predicate, or nullopt after exhausting the class.
std::optional<Algebra> find_counterexample(const SearchSpec& spec);

}  // namespace pbci
