#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pbci/algebra.hpp"

namespace pbci {

enum class Op { arrow, squig, product };

// Expression tree over variables, the unit constant and binary operations.
// Nodes are shared and immutable, so copying a Term is cheap.
class Term {
 public:
  enum class Kind { variable, unit, binary };

  static Term var(std::string name);
  static Term one();
  static Term binary(Op op, Term lhs, Term rhs);

  Kind kind() const noexcept { return node_->kind; }
  const std::string& name() const noexcept { return node_->name; }
  Op op() const noexcept { return node_->op; }
  Term lhs() const { return Term(node_->lhs); }
  Term rhs() const { return Term(node_->rhs); }

  // Variables in order of first occurrence.
  std::vector<std::string> variables() const;
  bool uses(Op op) const;
  // Replaces each variable by the given term; unmapped variables stay.
  Term substitute(const std::map<std::string, Term>& sub) const;

  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    Op op = Op::arrow;
    std::shared_ptr<const Node> lhs, rhs;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

inline Term arrow(Term a, Term b) { return Term::binary(Op::arrow, std::move(a), std::move(b)); }
inline Term squig(Term a, Term b) { return Term::binary(Op::squig, std::move(a), std::move(b)); }
inline Term product(Term a, Term b) { return Term::binary(Op::product, std::move(a), std::move(b)); }

// Parses "x -> (y ~> z)", "1", "x * y". Operators are right-associative and
// share one precedence level; use parentheses to group. Throws InvalidInput.
Term parse_term(std::string_view text);

// Evaluates with variables bound by `env` (variable name -> element). Throws
// InvalidInput for an unbound variable or for the product symbol, which a
// two-arrow algebra does not interpret.
Element evaluate(const Algebra& a, const Term& t, const std::map<std::string, Element>& env);

// lhs = rhs under every assignment of elements to the variables of both
// sides. The witness lists "var=name" bindings of the first failing
// assignment in lexicographic order.
Report check_term_identity(const Algebra& a, const Term& lhs, const Term& rhs,
                           std::string rule = "identity");

}  // namespace pbci
