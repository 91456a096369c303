#pragma once

#include <span>
#include <string>
#include <vector>

#include "pbci/algebra.hpp"
#include "pbci/partition.hpp"
#include "pbci/subset.hpp"
#include "pbci/term.hpp"

namespace pbci {

// Outcome of a filter-condition check. `condition` names the first failing
// condition: "(i)" 1 in S; "(ii)" a, a->b in S => b in S; "(iii)" a in S =>
// a->1 in S; "(iv)" a->b in S iff a~>b in S. The witness lists element names
// (a for (iii), a,b otherwise).
struct ConditionCheck {
  bool holds = true;
  std::string condition;
  std::vector<std::string> witness;
  explicit operator bool() const noexcept { return holds; }
};

// Conditions (i)-(iii). Modus ponens is also evaluated with ~> and must agree;
// a disagreement throws InconsistencyError.
ConditionCheck check_prefilter(const Algebra& a, const Subset& s);
// Conditions (i)-(iv). The equivalent route (i)-(iii) plus
// "(v)" (b->a)->a, (b~>a)~>a in S for b in S is evaluated too; a disagreement
// throws InconsistencyError.
ConditionCheck check_filter(const Algebra& a, const Subset& s);

inline bool is_prefilter(const Algebra& a, const Subset& s) { return check_prefilter(a, s).holds; }
inline bool is_filter(const Algebra& a, const Subset& s) { return check_filter(a, s).holds; }

// Least prefilter containing s: the elements x with a1...an -> x = 1 for a
// word over s u (s -> 1). Cross-checked against plain closure under
// (i)-(iii). Throws InvalidInput if s is empty.
Subset prefilter_generated(const Algebra& a, const Subset& s);
// Least filter containing s: closure of s u {1} under t1, t2, t3 with
// arbitrary x-arguments. Throws InvalidInput if s is empty.
Subset filter_generated(const Algebra& a, const Subset& s);

struct FamilyOptions {
  // Subset scan up to this carrier size, closure-driven enumeration above.
  std::size_t scan_cap = 20;
};

// Complete families in canonical order (by size, then members).
std::vector<Subset> all_prefilters(const Algebra& a, FamilyOptions opts = {});
std::vector<Subset> all_filters(const Algebra& a, FamilyOptions opts = {});

// theta_F: a ~ b iff a -> b, b -> a in F. Throws PreconditionError with the
// failing condition if F is not a filter.
Partition theta_from_filter(const Algebra& a, const Subset& f);
// [1]_theta.
Subset kernel(const Algebra& a, const Partition& theta);

enum class IdealTerm { t1, t2, t3, w };

// t1(x,y1,y2) = (y1 -> (y2 -> x)) -> x
// t2(x,y)     = (y ~> x) ~> x
// t3(y)       = y -> 1
// w(x1,x2,y1,y2) = ([(y1 -> (y2 -> x1)) -> x1] ~> x2) ~> x2
Term ideal_term(IdealTerm t);
const char* ideal_term_name(IdealTerm t);
// Number of x-arguments and y-arguments.
std::pair<std::size_t, std::size_t> ideal_term_arity(IdealTerm t);
// Arguments in order x..., y...; throws InvalidInput on an arity mismatch.
Element ideal_term_eval(const Algebra& a, IdealTerm t, std::span<const Element> args);

// 1 in s and s closed under t1, t2, t3 (x-arguments arbitrary).
bool closed_under_ideal_terms(const Algebra& a, const Subset& s);

}  // namespace pbci
