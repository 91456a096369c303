#include "pbci/filters.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace pbci {

namespace {

using Op2 = Element (Algebra::*)(Element, Element) const noexcept;

ConditionCheck fail(std::string cond, std::vector<std::string> witness = {}) {
  return ConditionCheck{false, std::move(cond), std::move(witness)};
}

// First a, b with a, a op b in s and b outside.
std::optional<std::pair<Element, Element>> modus_ponens_gap(const Algebra& a, const Subset& s, Op2 op) {
  for (auto x : s.members()) {
    for (Element y = 0; y < a.size(); ++y) {
      if (!s.contains(y) && s.contains((a.*op)(static_cast<Element>(x), y))) {
        return std::pair{static_cast<Element>(x), y};
      }
    }
  }
  return std::nullopt;
}

ConditionCheck prefilter_conditions(const Algebra& a, const Subset& s) {
  if (!s.contains(a.unit())) return fail("(i)");
  const auto mp = modus_ponens_gap(a, s, &Algebra::arrow);
  const auto mq = modus_ponens_gap(a, s, &Algebra::squig);
  if (mp.has_value() != mq.has_value()) {
    throw InconsistencyError("modus ponens with -> and ~> disagree on " + format_subset(a, s));
  }
  if (mp) return fail("(ii)", {a.name(mp->first), a.name(mp->second)});
  for (auto x : s.members()) {
    if (!s.contains(a.arrow(static_cast<Element>(x), a.unit()))) return fail("(iii)", {a.name(static_cast<Element>(x))});
  }
  return {};
}

ConditionCheck condition_iv(const Algebra& a, const Subset& s) {
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      if (s.contains(a.arrow(x, y)) != s.contains(a.squig(x, y))) return fail("(iv)", {a.name(x), a.name(y)});
    }
  }
  return {};
}

ConditionCheck condition_v(const Algebra& a, const Subset& s) {
  for (auto b : s.members()) {
    const auto bb = static_cast<Element>(b);
    for (Element x = 0; x < a.size(); ++x) {
      if (!s.contains(a.arrow(a.arrow(bb, x), x)) || !s.contains(a.squig(a.squig(bb, x), x))) {
        return fail("(v)", {a.name(bb), a.name(x)});
      }
    }
  }
  return {};
}

void require_nonempty(const Subset& s) {
  if (s.empty()) throw InvalidInput("generating set must be nonempty");
}

// Closure of s u {1} under (ii) and (iii).
Subset naive_prefilter_closure(const Algebra& a, Subset s) {
  s.insert(a.unit());
  for (bool grew = true; grew;) {
    grew = false;
    for (auto x : s.members()) {
      const auto e = static_cast<Element>(x);
      const Element up = a.arrow(e, a.unit());
      if (!s.contains(up)) {
        s.insert(up);
        grew = true;
      }
      for (Element y = 0; y < a.size(); ++y) {
        if (!s.contains(y) && s.contains(a.arrow(e, y))) {
          s.insert(y);
          grew = true;
        }
      }
    }
  }
  return s;
}

// Least member containing s of a family with closure `close`, enumerated by
// adjoining one element at a time starting from close({1}).
template <typename Close>
std::vector<Subset> closure_family(const Algebra& a, Close close) {
  Subset bottom(a.size());
  bottom.insert(a.unit());
  std::vector<Subset> out;
  std::unordered_set<Subset, SubsetHash> seen;
  std::deque<Subset> todo{close(bottom)};
  seen.insert(todo.front());
  while (!todo.empty()) {
    Subset p = todo.front();
    todo.pop_front();
    out.push_back(p);
    for (Element x = 0; x < a.size(); ++x) {
      if (p.contains(x)) continue;
      Subset q = p;
      q.insert(x);
      q = close(q);
      if (seen.insert(q).second) todo.push_back(q);
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

template <typename Pred>
std::vector<Subset> scan_family(const Algebra& a, Pred pred) {
  const std::size_t n = a.size();
  std::vector<Subset> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    if (!((bits >> a.unit()) & 1U)) continue;
    Subset s(n, bits);
    if (pred(s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace

ConditionCheck check_prefilter(const Algebra& a, const Subset& s) { return prefilter_conditions(a, s); }

ConditionCheck check_filter(const Algebra& a, const Subset& s) {
  ConditionCheck pre = prefilter_conditions(a, s);
  if (!pre) return pre;
  ConditionCheck iv = condition_iv(a, s);
  ConditionCheck v = condition_v(a, s);
  if (iv.holds != v.holds) {
    throw InconsistencyError("conditions (iv) and (v) disagree on " + format_subset(a, s));
  }
  return iv;
}

Subset prefilter_generated(const Algebra& a, const Subset& s) {
  require_nonempty(s);
  const std::size_t n = a.size();
  std::vector<Element> letters;
  for (auto x : s.members()) {
    letters.push_back(static_cast<Element>(x));
    letters.push_back(a.arrow(static_cast<Element>(x), a.unit()));
  }
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());

  // J(w) = {x : w -> x = 1}; J(w c) = {x : c -> x in J(w)}. Every reachable
  // J-set is visited once.
  std::unordered_set<Subset, SubsetHash> seen;
  std::deque<Subset> todo;
  for (auto c : letters) {
    Subset j(n);
    for (Element x = 0; x < n; ++x) {
      if (a.leq(c, x)) j.insert(x);
    }
    if (seen.insert(j).second) todo.push_back(j);
  }
  Subset result(n);
  while (!todo.empty()) {
    const Subset j = todo.front();
    todo.pop_front();
    result |= j;
    for (auto c : letters) {
      Subset next(n);
      for (Element x = 0; x < n; ++x) {
        if (j.contains(a.arrow(c, x))) next.insert(x);
      }
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  if (result != naive_prefilter_closure(a, s)) {
    throw InconsistencyError("word description and closure of the generated prefilter differ");
  }
  return result;
}

Subset filter_generated(const Algebra& a, const Subset& s) {
  require_nonempty(s);
  Subset f = s;
  f.insert(a.unit());
  const Element n = static_cast<Element>(a.size());
  for (bool grew = true; grew;) {
    grew = false;
    auto add = [&](Element e) {
      if (!f.contains(e)) {
        f.insert(e);
        grew = true;
      }
    };
    const auto ys = f.members();
    for (auto y1 : ys) {
      add(a.arrow(static_cast<Element>(y1), a.unit()));
      for (Element x = 0; x < n; ++x) {
        add(a.squig(a.squig(static_cast<Element>(y1), x), x));
        for (auto y2 : ys) {
          add(a.arrow(a.arrow(static_cast<Element>(y1), a.arrow(static_cast<Element>(y2), x)), x));
        }
      }
    }
  }
  if (!is_filter(a, f)) throw InconsistencyError("ideal-term closure is not a filter");
  return f;
}

std::vector<Subset> all_prefilters(const Algebra& a, FamilyOptions opts) {
  if (a.size() <= opts.scan_cap) return scan_family(a, [&](const Subset& s) { return is_prefilter(a, s); });
  return closure_family(a, [&](const Subset& s) { return prefilter_generated(a, s); });
}

std::vector<Subset> all_filters(const Algebra& a, FamilyOptions opts) {
  if (a.size() <= opts.scan_cap) return scan_family(a, [&](const Subset& s) { return is_filter(a, s); });
  return closure_family(a, [&](const Subset& s) { return filter_generated(a, s); });
}

Partition theta_from_filter(const Algebra& a, const Subset& f) {
  const ConditionCheck c = check_filter(a, f);
  if (!c) {
    std::string w;
    for (const auto& x : c.witness) w += (w.empty() ? "" : ",") + x;
    throw PreconditionError("not a filter: condition " + c.condition + (w.empty() ? "" : " fails at (" + w + ")"));
  }
  std::vector<std::size_t> labels(a.size());
  for (Element x = 0; x < a.size(); ++x) {
    labels[x] = x;
    for (Element y = 0; y < x; ++y) {
      if (f.contains(a.arrow(x, y)) && f.contains(a.arrow(y, x))) {
        labels[x] = labels[y];
        break;
      }
    }
  }
  return Partition(std::move(labels));
}

Subset kernel(const Algebra& a, const Partition& theta) { return theta.class_of(a.unit()); }

Term ideal_term(IdealTerm t) {
  const Term x = Term::var("x"), y = Term::var("y"), y1 = Term::var("y1"), y2 = Term::var("y2");
  const Term one = Term::one();
  switch (t) {
    case IdealTerm::t1:
      return arrow(arrow(y1, arrow(y2, x)), x);
    case IdealTerm::t2:
      return squig(squig(y, x), x);
    case IdealTerm::t3:
      return arrow(y, one);
    case IdealTerm::w: {
      const Term x1 = Term::var("x1"), x2 = Term::var("x2");
      return squig(squig(arrow(arrow(y1, arrow(y2, x1)), x1), x2), x2);
    }
  }
  throw InvalidInput("unknown ideal term");
}

const char* ideal_term_name(IdealTerm t) {
  switch (t) {
    case IdealTerm::t1: return "t1";
    case IdealTerm::t2: return "t2";
    case IdealTerm::t3: return "t3";
    case IdealTerm::w: return "w";
  }
  return "?";
}

std::pair<std::size_t, std::size_t> ideal_term_arity(IdealTerm t) {
  switch (t) {
    case IdealTerm::t1: return {1, 2};
    case IdealTerm::t2: return {1, 1};
    case IdealTerm::t3: return {0, 1};
    case IdealTerm::w: return {2, 2};
  }
  return {0, 0};
}

Element ideal_term_eval(const Algebra& a, IdealTerm t, std::span<const Element> args) {
  const auto [nx, ny] = ideal_term_arity(t);
  if (args.size() != nx + ny) {
    throw InvalidInput(std::string(ideal_term_name(t)) + " takes " + std::to_string(nx + ny) + " arguments, got " +
                       std::to_string(args.size()));
  }
  for (auto e : args) {
    if (e >= a.size()) throw InvalidInput("argument out of range");
  }
  switch (t) {
    case IdealTerm::t1:
      return a.arrow(a.arrow(args[1], a.arrow(args[2], args[0])), args[0]);
    case IdealTerm::t2:
      return a.squig(a.squig(args[1], args[0]), args[0]);
    case IdealTerm::t3:
      return a.arrow(args[0], a.unit());
    case IdealTerm::w:
      return a.squig(a.squig(a.arrow(a.arrow(args[2], a.arrow(args[3], args[0])), args[0]), args[1]), args[1]);
  }
  return a.unit();
}

bool closed_under_ideal_terms(const Algebra& a, const Subset& s) {
  if (!s.contains(a.unit())) return false;
  const auto ys = s.members();
  for (auto y1 : ys) {
    const auto e1 = static_cast<Element>(y1);
    if (!s.contains(a.arrow(e1, a.unit()))) return false;
    for (Element x = 0; x < a.size(); ++x) {
      if (!s.contains(a.squig(a.squig(e1, x), x))) return false;
      for (auto y2 : ys) {
        if (!s.contains(a.arrow(a.arrow(e1, a.arrow(static_cast<Element>(y2), x)), x))) return false;
      }
    }
  }
  return true;
}

}  // namespace pbci
