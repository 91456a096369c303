#include "pbci/algebra.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace pbci {

bool is_valid_name(std::string_view s) noexcept {
  if (s.empty() || s.front() == '#') return false;
  int depth = 0;
  for (char c : s) {
    const auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || u >= 0x7f || c == '{' || c == '}' || c == '|') return false;
    if (c == '(') ++depth;
    if (c == ')' && --depth < 0) return false;
    if (c == ',' && depth == 0) return false;
  }
  return depth == 0;
}

std::vector<std::string> default_names(std::size_t n, Element unit) {
  std::vector<std::string> out;
  out.reserve(n);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == unit) {
      out.emplace_back("1");
    } else if (next < 26) {
      out.emplace_back(1, static_cast<char>('a' + next++));
    } else {
      out.push_back("e" + std::to_string(next++));
    }
  }
  return out;
}

Algebra::Algebra(std::vector<std::string> names, Element unit, std::vector<Element> arrow,
                 std::vector<Element> squig)
    : names_(std::move(names)), unit_(unit), arrow_(std::move(arrow)), squig_(std::move(squig)) {
  const std::size_t n = names_.size();
  if (n == 0) throw InvalidInput("algebra must have at least one element");
  if (unit_ >= n) throw InvalidInput("unit index out of range");
  if (arrow_.size() != n * n || squig_.size() != n * n) {
    throw InvalidInput("operation tables must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  std::set<std::string_view> seen;
  for (const auto& s : names_) {
    if (!is_valid_name(s)) throw InvalidInput("invalid element name '" + s + "'");
    if (!seen.insert(s).second) throw InvalidInput("duplicate element name '" + s + "'");
  }
  auto closed = [n](const std::vector<Element>& t) {
    return std::all_of(t.begin(), t.end(), [n](Element e) { return e < n; });
  };
  if (!closed(arrow_) || !closed(squig_)) throw InvalidInput("table entry out of range");
}

std::optional<Element> Algebra::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Element>(i);
  }
  return std::nullopt;
}

Element Algebra::element(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw InvalidInput("unknown element '" + std::string(name) + "'");
}

const Violation* Report::find(std::string_view rule) const noexcept {
  for (const auto& v : violations) {
    if (v.rule == rule) return &v;
  }
  return nullptr;
}

namespace {

// Collects the first witness per rule, up to the configured cap.
class Collector {
 public:
  Collector(const Algebra& a, CheckOptions opts) : a_(a), opts_(opts) {}

  bool full() const { return report_.violations.size() >= opts_.max_violations; }

  // Scans all k-tuples in lexicographic order and records the first tuple
  // for which ok(...) is false.
  void over_pairs(const char* rule, const std::function<bool(Element, Element)>& ok,
                  const char* note = "") {
    if (full()) return;
    const auto n = static_cast<Element>(a_.size());
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (!ok(x, y)) {
          add(rule, {x, y}, note);
          return;
        }
      }
    }
  }
  void over_triples(const char* rule, const std::function<bool(Element, Element, Element)>& ok,
                    const char* note = "") {
    if (full()) return;
    const auto n = static_cast<Element>(a_.size());
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element z = 0; z < n; ++z) {
          if (!ok(x, y, z)) {
            add(rule, {x, y, z}, note);
            return;
          }
        }
      }
    }
  }
  void over_singles(const char* rule, const std::function<bool(Element)>& ok,
                    const char* note = "") {
    if (full()) return;
    for (Element x = 0; x < a_.size(); ++x) {
      if (!ok(x)) {
        add(rule, {x}, note);
        return;
      }
    }
  }

  Report take() { return std::move(report_); }

 private:
  void add(const char* rule, std::initializer_list<Element> xs, const char* note) {
    Violation v;
    v.rule = rule;
    v.note = note;
    for (auto x : xs) v.witness.push_back(a_.name(x));
    report_.violations.push_back(std::move(v));
  }

  const Algebra& a_;
  CheckOptions opts_;
  Report report_;
};

void bci_rules(const Algebra& a, Collector& c) {
  const Element one = a.unit();
  auto ar = [&a](Element x, Element y) { return a.arrow(x, y); };
  auto sq = [&a](Element x, Element y) { return a.squig(x, y); };
  c.over_triples("rpom1a", [&](Element x, Element y, Element z) {
    return sq(ar(x, y), sq(ar(y, z), ar(x, z))) == one;
  });
  c.over_triples("rpom1b", [&](Element x, Element y, Element z) {
    return ar(sq(x, y), ar(sq(y, z), sq(x, z))) == one;
  });
  c.over_singles("rpom2a", [&](Element x) { return ar(one, x) == x; });
  c.over_singles("rpom2b", [&](Element x) { return sq(one, x) == x; });
  c.over_pairs("rpom4", [&](Element x, Element y) {
    return !(ar(x, y) == one && ar(y, x) == one) || x == y;
  });
}

}  // namespace

Report check_pseudo_bci(const Algebra& a, CheckOptions opts) {
  Collector c(a, opts);
  bci_rules(a, c);
  return c.take();
}

Report check_pseudo_bck(const Algebra& a, CheckOptions opts) {
  Collector c(a, opts);
  bci_rules(a, c);
  c.over_singles("integral", [&](Element x) { return a.arrow(x, a.unit()) == a.unit(); });
  return c.take();
}

Report check_lemma1(const Algebra& a, CheckOptions opts) {
  Collector c(a, opts);
  const Element one = a.unit();
  auto ar = [&a](Element x, Element y) { return a.arrow(x, y); };
  auto sq = [&a](Element x, Element y) { return a.squig(x, y); };
  auto le = [&a](Element x, Element y) { return a.leq(x, y); };

  c.over_singles("L1.1", [&](Element x) { return ar(x, x) == one && sq(x, x) == one; });
  c.over_triples("L1.2", [&](Element x, Element y, Element z) {
    return le(ar(x, y), sq(ar(y, z), ar(x, z))) && le(sq(x, y), ar(sq(y, z), sq(x, z)));
  });
  c.over_pairs("L1.3", [&](Element x, Element y) {
    return le(x, sq(ar(x, y), y)) && le(x, ar(sq(x, y), y));
  });
  c.over_pairs("L1.4", [&](Element x, Element y) { return (ar(x, y) == one) == (sq(x, y) == one); });
  c.over_triples("L1.5", [&](Element x, Element y, Element z) {
    return !le(x, y) || (le(ar(y, z), ar(x, z)) && le(sq(y, z), sq(x, z)));
  });
  c.over_triples("L1.6", [&](Element x, Element y, Element z) {
    return ar(x, sq(y, z)) == sq(y, ar(x, z));
  });
  c.over_triples("L1.7", [&](Element x, Element y, Element z) {
    return le(x, ar(y, z)) == le(y, sq(x, z));
  });
  c.over_triples("L1.8", [&](Element x, Element y, Element z) {
    return le(ar(x, y), ar(ar(z, x), ar(z, y))) && le(sq(x, y), sq(sq(z, x), sq(z, y)));
  });
  c.over_triples("L1.9", [&](Element x, Element y, Element z) {
    return !le(x, y) || (le(ar(z, x), ar(z, y)) && le(sq(z, x), sq(z, y)));
  });
  c.over_singles("L1.10", [&](Element x) { return ar(x, one) == sq(x, one); });
  c.over_pairs("L1.11", [&](Element x, Element y) {
    return ar(ar(x, y), one) == sq(ar(x, one), ar(y, one)) &&
           sq(sq(x, y), one) == ar(sq(x, one), sq(y, one));
  });
  c.over_pairs(
      "L1.12",
      [&](Element x, Element y) {
        return ar(sq(ar(x, y), y), y) == ar(x, y) && sq(ar(sq(x, y), y), y) == sq(x, y);
      },
      "supplementary");
  return c.take();
}

Subset DerivedOrder::down_set(Element x) const {
  Subset s(n_);
  for (Element y = 0; y < n_; ++y) {
    if (leq(y, x)) s.insert(y);
  }
  return s;
}

Subset DerivedOrder::up_set(Element x) const {
  Subset s(n_);
  for (Element y = 0; y < n_; ++y) {
    if (leq(x, y)) s.insert(y);
  }
  return s;
}

Subset DerivedOrder::maximal() const {
  Subset s(n_);
  for (Element x = 0; x < n_; ++x) {
    bool top = true;
    for (Element y = 0; y < n_ && top; ++y) top = !less(x, y);
    if (top) s.insert(x);
  }
  return s;
}

std::vector<std::pair<Element, Element>> DerivedOrder::hasse() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < n_; ++x) {
    for (Element y = 0; y < n_; ++y) {
      if (!less(x, y)) continue;
      bool cover = true;
      for (Element z = 0; z < n_ && cover; ++z) cover = !(less(x, z) && less(z, y));
      if (cover) out.emplace_back(x, y);
    }
  }
  return out;
}

bool DerivedOrder::is_partial_order() const noexcept {
  for (Element x = 0; x < n_; ++x) {
    if (!leq(x, x)) return false;
    for (Element y = 0; y < n_; ++y) {
      if (x != y && leq(x, y) && leq(y, x)) return false;
      for (Element z = 0; z < n_; ++z) {
        if (leq(x, y) && leq(y, z) && !leq(x, z)) return false;
      }
    }
  }
  return true;
}

DerivedOrder derive_order(const Algebra& a) {
  const std::size_t n = a.size();
  std::vector<char> rel(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const bool by_arrow = a.arrow(x, y) == a.unit();
      const bool by_squig = a.squig(x, y) == a.unit();
      if (by_arrow != by_squig) {
        throw InconsistencyError("arrow-order and squig-order disagree at (" + a.name(x) + "," +
                                 a.name(y) + ")");
      }
      rel[x * n + y] = by_arrow;
    }
  }
  return DerivedOrder(n, std::move(rel));
}

Algebra dagger(const Algebra& a) {
  return Algebra(a.names(), a.unit(), {a.squig_table().begin(), a.squig_table().end()},
                 {a.arrow_table().begin(), a.arrow_table().end()});
}

Element word_arrow(const Algebra& a, std::span<const Element> word, Element x) {
  if (word.empty()) throw InvalidInput("word must be nonempty");
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = a.arrow(*it, x);
  return x;
}

Element word_squig(const Algebra& a, std::span<const Element> word, Element x) {
  if (word.empty()) throw InvalidInput("word must be nonempty");
  for (Element letter : word) x = a.squig(letter, x);
  return x;
}

bool is_homomorphism(const Algebra& from, const Algebra& to, std::span<const Element> map) {
  const std::size_t n = from.size();
  if (map.size() != n) return false;
  if (std::any_of(map.begin(), map.end(), [&](Element e) { return e >= to.size(); })) return false;
  if (map[from.unit()] != to.unit()) return false;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (map[from.arrow(x, y)] != to.arrow(map[x], map[y])) return false;
      if (map[from.squig(x, y)] != to.squig(map[x], map[y])) return false;
    }
  }
  return true;
}

bool is_subuniverse(const Algebra& a, const Subset& s) {
  if (!s.contains(a.unit())) return false;
  for (auto x : s.members()) {
    for (auto y : s.members()) {
      const auto ex = static_cast<Element>(x), ey = static_cast<Element>(y);
      if (!s.contains(a.arrow(ex, ey)) || !s.contains(a.squig(ex, ey))) return false;
    }
  }
  return true;
}

Algebra subalgebra(const Algebra& a, const Subset& s) {
  if (!is_subuniverse(a, s)) {
    throw PreconditionError(format_subset(a, s) + " is not a subuniverse");
  }
  const auto members = s.members();
  const std::size_t k = members.size();
  std::vector<Element> pos(a.size(), 0);
  for (std::size_t i = 0; i < k; ++i) pos[members[i]] = static_cast<Element>(i);
  std::vector<std::string> names;
  std::vector<Element> arrow(k * k), squig(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back(a.name(static_cast<Element>(members[i])));
    for (std::size_t j = 0; j < k; ++j) {
      const auto x = static_cast<Element>(members[i]), y = static_cast<Element>(members[j]);
      arrow[i * k + j] = pos[a.arrow(x, y)];
      squig[i * k + j] = pos[a.squig(x, y)];
    }
  }
  return Algebra(std::move(names), pos[a.unit()], std::move(arrow), std::move(squig));
}

std::string format_subset(const Algebra& a, const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (auto x : s.members()) {
    if (!first) out += ',';
    out += a.name(static_cast<Element>(x));
    first = false;
  }
  return out + "}";
}

Subset parse_subset(const Algebra& a, std::string_view text) {
  if (!text.empty() && text.front() == '{') text.remove_prefix(1);
  if (!text.empty() && text.back() == '}') text.remove_suffix(1);
  Subset s(a.size());
  auto flush = [&](std::string_view tok) {
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty()) s.insert(a.element(tok));
  };
  // Split at top-level commas; composite names like (x,y) keep theirs.
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0) {
      flush(text.substr(start, i - start));
      start = i + 1;
    }
  }
  flush(text.substr(start));
  return s;
}

}  // namespace pbci
