#include "pbci/term.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace pbci {

Term Term::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::variable;
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::one() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::unit;
  n->name = "1";
  return Term(std::move(n));
}

Term Term::binary(Op op, Term lhs, Term rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::binary;
  n->op = op;
  n->lhs = std::move(lhs.node_);
  n->rhs = std::move(rhs.node_);
  return Term(std::move(n));
}

std::vector<std::string> Term::variables() const {
  std::vector<std::string> out;
  std::function<void(const Term&)> walk = [&](const Term& t) {
    switch (t.kind()) {
      case Kind::variable:
        if (std::find(out.begin(), out.end(), t.name()) == out.end()) out.push_back(t.name());
        break;
      case Kind::unit:
        break;
      case Kind::binary:
        walk(t.lhs());
        walk(t.rhs());
        break;
    }
  };
  walk(*this);
  return out;
}

bool Term::uses(Op op) const {
  if (kind() != Kind::binary) return false;
  return this->op() == op || lhs().uses(op) || rhs().uses(op);
}

Term Term::substitute(const std::map<std::string, Term>& sub) const {
  switch (kind()) {
    case Kind::variable: {
      auto it = sub.find(name());
      return it == sub.end() ? *this : it->second;
    }
    case Kind::unit:
      return *this;
    case Kind::binary:
      return binary(op(), lhs().substitute(sub), rhs().substitute(sub));
  }
  return *this;
}

std::string Term::to_string() const {
  switch (kind()) {
    case Kind::variable:
    case Kind::unit:
      return name();
    case Kind::binary: {
      auto side = [](const Term& t) {
        return t.kind() == Kind::binary ? "(" + t.to_string() + ")" : t.to_string();
      };
      const char* sym = op() == Op::arrow ? " -> " : op() == Op::squig ? " ~> " : " * ";
      return side(lhs()) + sym + side(rhs());
    }
  }
  return {};
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view s) : s_(s) {}

  Term parse() {
    Term t = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return t;
  }

 private:
  Term expr() {
    Term lhs = atom();
    skip();
    if (eat("->")) return arrow(std::move(lhs), expr());
    if (eat("~>")) return squig(std::move(lhs), expr());
    if (eat("*")) return product(std::move(lhs), expr());
    return lhs;
  }

  Term atom() {
    skip();
    if (eat("(")) {
      Term t = expr();
      skip();
      if (!eat(")")) fail("expected ')'");
      return t;
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a variable, '1' or '('");
    std::string tok(s_.substr(start, pos_ - start));
    if (tok == "1") return Term::one();
    if (std::isdigit(static_cast<unsigned char>(tok[0]))) fail("bad variable '" + tok + "'");
    return Term::var(std::move(tok));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(std::string_view tok) {
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("term: " + what + " at offset " + std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

// Term with variables replaced by slot indices, for fast repeated evaluation.
struct Compiled {
  struct Instr {
    Term::Kind kind;
    Op op;
    int slot;      // variable slot
    int lhs, rhs;  // child instructions
  };
  std::vector<Instr> code;
  int root = -1;

  Compiled(const Term& t, const std::vector<std::string>& vars) { root = emit(t, vars); }

  Element eval(const Algebra& a, const std::vector<Element>& env) const { return run(a, env, root); }

 private:
  int emit(const Term& t, const std::vector<std::string>& vars) {
    Instr in{t.kind(), Op::arrow, -1, -1, -1};
    if (t.kind() == Term::Kind::variable) {
      in.slot = static_cast<int>(std::find(vars.begin(), vars.end(), t.name()) - vars.begin());
    } else if (t.kind() == Term::Kind::binary) {
      in.op = t.op();
      in.lhs = emit(t.lhs(), vars);
      in.rhs = emit(t.rhs(), vars);
    }
    code.push_back(in);
    return static_cast<int>(code.size()) - 1;
  }
  Element run(const Algebra& a, const std::vector<Element>& env, int i) const {
    const Instr& in = code[i];
    switch (in.kind) {
      case Term::Kind::variable:
        return env[in.slot];
      case Term::Kind::unit:
        return a.unit();
      case Term::Kind::binary: {
        const Element l = run(a, env, in.lhs), r = run(a, env, in.rhs);
        return in.op == Op::arrow ? a.arrow(l, r) : a.squig(l, r);
      }
    }
    return a.unit();
  }
};

void require_two_arrow(const Term& t) {
  if (t.uses(Op::product)) {
    throw InvalidInput("unbound symbol '*': the algebra has no product operation");
  }
}

}  // namespace

Term parse_term(std::string_view text) { return TermParser(text).parse(); }

Element evaluate(const Algebra& a, const Term& t, const std::map<std::string, Element>& env) {
  require_two_arrow(t);
  const auto vars = t.variables();
  std::vector<Element> slots;
  for (const auto& v : vars) {
    auto it = env.find(v);
    if (it == env.end()) throw InvalidInput("unbound variable '" + v + "'");
    if (it->second >= a.size()) throw InvalidInput("value for '" + v + "' out of range");
    slots.push_back(it->second);
  }
  return Compiled(t, vars).eval(a, slots);
}

Report check_term_identity(const Algebra& a, const Term& lhs, const Term& rhs, std::string rule) {
  require_two_arrow(lhs);
  require_two_arrow(rhs);
  auto vars = lhs.variables();
  for (const auto& v : rhs.variables()) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  }
  const Compiled l(lhs, vars), r(rhs, vars);
  const auto n = static_cast<Element>(a.size());
  std::vector<Element> env(vars.size(), 0);
  Report report;
  while (true) {
    if (l.eval(a, env) != r.eval(a, env)) {
      Violation v;
      v.rule = std::move(rule);
      for (std::size_t i = 0; i < vars.size(); ++i) v.witness.push_back(vars[i] + "=" + a.name(env[i]));
      report.violations.push_back(std::move(v));
      return report;
    }
    // Odometer with the last variable fastest, so the first failure found is
    // lexicographically least.
    std::size_t i = vars.size();
    while (i > 0 && ++env[i - 1] == n) env[--i] = 0;
    if (i == 0) break;
  }
  return report;
}

}  // namespace pbci
