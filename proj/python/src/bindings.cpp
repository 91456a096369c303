#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pbci/algebra.hpp"
#include "pbci/catalog.hpp"
#include "pbci/congruences.hpp"
#include "pbci/decomposition.hpp"
#include "pbci/embedding.hpp"
#include "pbci/error.hpp"
#include "pbci/filters.hpp"
#include "pbci/io.hpp"
#include "pbci/isomorphism.hpp"
#include "pbci/lattice.hpp"
#include "pbci/search.hpp"
#include "pbci/structure.hpp"

namespace py = pybind11;
using namespace pbci;

namespace {

std::vector<std::string> names_of(const Algebra& a, const Subset& s) {
  std::vector<std::string> out;
  for (auto x : s.members()) out.push_back(a.name(static_cast<Element>(x)));
  return out;
}

Subset subset_of(const Algebra& a, const std::vector<std::string>& names) {
  Subset s(a.size());
  for (const auto& n : names) s.insert(a.element(n));
  return s;
}

std::vector<std::vector<std::string>> families(const Algebra& a, const std::vector<Subset>& fs) {
  std::vector<std::vector<std::string>> out;
  for (const auto& f : fs) out.push_back(names_of(a, f));
  return out;
}

std::vector<std::vector<std::vector<std::string>>> partitions(const Algebra& a, const std::vector<Partition>& ps) {
  std::vector<std::vector<std::vector<std::string>>> out;
  for (const auto& p : ps) out.push_back(families(a, p.blocks()));
  return out;
}

py::list violations(const Report& r) {
  py::list out;
  for (const auto& v : r.violations) {
    py::dict d;
    d["rule"] = v.rule;
    d["witness"] = v.witness;
    if (!v.note.empty()) d["note"] = v.note;
    out.append(d);
  }
  return out;
}

py::dict verdict(const Verdict& v) {
  py::dict d;
  d["holds"] = v.holds;
  d["witness"] = v.witness;
  d["detail"] = v.detail;
  return d;
}

SearchSpec spec_of(std::size_t size, const std::string& cls, const std::string& predicate, std::size_t limit) {
  SearchSpec s;
  s.size = size;
  s.cls = parse_class(cls);
  s.predicate = predicate;
  s.limit = limit;
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);

  py::class_<Algebra>(m, "Algebra")
      .def(py::init<std::vector<std::string>, Element, std::vector<Element>, std::vector<Element>>(), py::arg("names"),
           py::arg("unit"), py::arg("arrow"), py::arg("squig"))
      .def_static("parse", &parse_algebra)
      .def_static("read", [](const std::string& path) { return read_algebra(path); })
      .def_static("example", [](const std::string& name) { return catalog_algebra(name); }, py::arg("name") = "ex6")
      .def("format", &format_algebra)
      .def("write", [](const Algebra& a, const std::string& path) { write_algebra(path, a); })
      .def_property_readonly("size", &Algebra::size)
      .def_property_readonly("names", &Algebra::names)
      .def_property_readonly("unit", [](const Algebra& a) { return a.name(a.unit()); })
      .def("arrow", [](const Algebra& a, const std::string& x, const std::string& y) {
        return a.name(a.arrow(a.element(x), a.element(y)));
      })
      .def("squig", [](const Algebra& a, const std::string& x, const std::string& y) {
        return a.name(a.squig(a.element(x), a.element(y)));
      })
      .def("leq", [](const Algebra& a, const std::string& x, const std::string& y) {
        return a.leq(a.element(x), a.element(y));
      })
      .def_property_readonly("arrow_table", [](const Algebra& a) {
        return std::vector<Element>(a.arrow_table().begin(), a.arrow_table().end());
      })
      .def_property_readonly("squig_table", [](const Algebra& a) {
        return std::vector<Element>(a.squig_table().begin(), a.squig_table().end());
      })
      .def("__len__", &Algebra::size)
      .def("__eq__", [](const Algebra& a, const Algebra& b) { return a == b; })
      .def("__repr__", [](const Algebra& a) { return "<Algebra of size " + std::to_string(a.size()) + ">"; });

  m.def("check_pseudo_bci", [](const Algebra& a) { return violations(check_pseudo_bci(a)); });
  m.def("check_pseudo_bck", [](const Algebra& a) { return violations(check_pseudo_bck(a)); });
  m.def("is_pseudo_bci", &is_pseudo_bci);
  m.def("is_pseudo_bck", &is_pseudo_bck);
  m.def("is_p_semisimple", &is_p_semisimple);
  m.def("integral_part", [](const Algebra& a) { return names_of(a, integral_part(a)); });
  m.def("group_part", [](const Algebra& a) { return names_of(a, group_part(a)); });
  m.def("dagger", &dagger);
  m.def("direct_product", [](const Algebra& a, const Algebra& b) { return direct_product(a, b); });
  m.def("are_isomorphic", &are_isomorphic);
  m.def("find_isomorphism", [](const Algebra& a, const Algebra& b) -> std::optional<std::vector<std::string>> {
    const auto iso = find_isomorphism(a, b);
    if (!iso) return std::nullopt;
    std::vector<std::string> out;
    for (auto x : *iso) out.push_back(b.name(x));
    return out;
  });

  m.def("is_prefilter", [](const Algebra& a, const std::vector<std::string>& s) { return is_prefilter(a, subset_of(a, s)); });
  m.def("is_filter", [](const Algebra& a, const std::vector<std::string>& s) { return is_filter(a, subset_of(a, s)); });
  m.def("prefilter_generated", [](const Algebra& a, const std::vector<std::string>& s) {
    return names_of(a, prefilter_generated(a, subset_of(a, s)));
  });
  m.def("filter_generated", [](const Algebra& a, const std::vector<std::string>& s) {
    return names_of(a, filter_generated(a, subset_of(a, s)));
  });
  m.def("prefilters", [](const Algebra& a) { return families(a, all_prefilters(a)); });
  m.def("filters", [](const Algebra& a) { return families(a, all_filters(a)); });
  m.def("congruences", [](const Algebra& a) { return partitions(a, all_congruences(a)); });
  m.def("relative_congruences", [](const Algebra& a) { return partitions(a, all_relative_congruences(a)); });

  m.def("lattice_identities", [](const Algebra& a, const std::string& kind) {
    FiniteLattice l = kind == "prefilters"   ? FiniteLattice::from_closed_family(a, all_prefilters(a))
                      : kind == "filters"    ? FiniteLattice::from_closed_family(a, all_filters(a))
                      : kind == "congruences" ? relcong_lattice(a).lattice
                                              : throw InvalidInput("unknown lattice kind '" + kind + "'");
    py::dict d;
    d["size"] = l.size();
    d["modular"] = is_modular(l).holds;
    d["distributive"] = is_distributive(l).holds;
    d["arguesian"] = is_arguesian(l).holds;
    return d;
  }, py::arg("a"), py::arg("kind") = "filters");

  m.def("decompose", [](const Algebra& a) {
    const DecompositionReport r = decompose(a);
    py::dict d;
    py::list conds;
    for (const auto& v : r.conditions) conds.append(verdict(v));
    d["conditions"] = conds;
    d["condition_12"] = verdict(r.condition_12);
    d["g_filter"] = r.g_filter.holds;
    d["isomorphic_to_product"] = r.isomorphic_to_product;
    d["triad_agrees"] = r.triad_agrees();
    d["decomposable"] = r.decomposable();
    return d;
  });

  m.def("embed", [](const Algebra& a, std::size_t max_monoid) {
    const Embedding e = embed(a, {max_monoid});
    py::dict d;
    d["monoid_size"] = e.monoid.size();
    d["target_size"] = e.target.size();
    d["injective"] = e.injective;
    d["homomorphism"] = e.homomorphism;
    d["integral"] = e.target.integral();
    d["report"] = violations(check_residuated_pomonoid(e.target));
    return d;
  }, py::arg("a"), py::arg("max_monoid") = BuildOptions{}.max_monoid);

  m.def("enumerate", [](std::size_t size, const std::string& cls, const std::string& predicate, std::size_t limit) {
    return enumerate_all(spec_of(size, cls, predicate, limit));
  }, py::arg("size"), py::arg("cls") = "pbci", py::arg("predicate") = "", py::arg("limit") = 0);
  m.def("find_counterexample", [](std::size_t size, const std::string& cls, const std::string& predicate) {
    return find_counterexample(spec_of(size, cls, predicate, 1));
  }, py::arg("size"), py::arg("cls") = "pbci", py::arg("predicate") = "");
  m.def("predicates", [] {
    std::vector<std::string> out;
    for (const auto& p : predicates()) out.push_back(p.name);
    return out;
  });
  m.def("catalog", [] {
    std::vector<std::string> out;
    for (const auto& e : catalog()) out.push_back(e.name);
    return out;
  });
}
