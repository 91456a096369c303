#pragma once

#include <map>
#include <vector>

#include "pbci/algebra.hpp"
#include "pbci/catalog.hpp"
#include "pbci/decomposition.hpp"
#include "pbci/search.hpp"

namespace fixture {

inline const pbci::Algebra& ex6() {
  static const pbci::Algebra a = pbci::builtin_example();
  return a;
}

// Every pseudo-BCI-algebra with at most `max_n` elements, one per
// isomorphism class, cached per bound.
inline const std::vector<pbci::Algebra>& models_upto(std::size_t max_n, bool bck = false) {
  static std::map<std::pair<std::size_t, bool>, std::vector<pbci::Algebra>> cache;
  auto& v = cache[{max_n, bck}];
  if (v.empty()) {
    for (std::size_t n = 1; n <= max_n; ++n) {
      pbci::SearchSpec s;
      s.size = n;
      s.cls = bck ? pbci::AlgebraClass::pbck : pbci::AlgebraClass::pbci;
      for (auto& a : pbci::enumerate_all(s)) v.push_back(std::move(a));
    }
  }
  return v;
}

inline pbci::Subset sub(const pbci::Algebra& a, const char* text) { return pbci::parse_subset(a, text); }

inline pbci::Element el(const pbci::Algebra& a, const char* name) { return a.element(name); }

}  // namespace fixture
