#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "pbci/catalog.hpp"
#include "pbci/congruences.hpp"
#include "pbci/decomposition.hpp"
#include "pbci/embedding.hpp"
#include "pbci/filters.hpp"
#include "pbci/io.hpp"
#include "pbci/isomorphism.hpp"
#include "pbci/lattice.hpp"
#include "pbci/search.hpp"
#include "pbci/structure.hpp"

namespace pbci::cli {

namespace {

using json = nlohmann::ordered_json;

struct Outcome {
  json j = json::object();
  std::string text;
  int code = 0;
};

// The input is well-formed but fails the verification a verb needs.
struct VerdictFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Algebra load(const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') return catalog_algebra(spec.substr(1));
  return read_algebra(spec);
}

std::string tuple(const std::vector<std::string>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + w[i];
  return s + ")";
}

json names_of(const Algebra& a, const Subset& s) {
  json out = json::array();
  for (auto x : s.members()) out.push_back(a.name(static_cast<Element>(x)));
  return out;
}

json report_json(const Report& r) {
  json v = json::array();
  for (const auto& x : r.violations) {
    json e = {{"rule", x.rule}, {"witness", x.witness}};
    if (!x.note.empty()) e["note"] = x.note;
    v.push_back(e);
  }
  return {{"passed", r.passed()}, {"violations", v}};
}

std::string describe(const Algebra& a, const Violation& v) {
  if (v.rule == "integral" && v.witness.size() == 1) {
    const Element x = a.element(v.witness[0]);
    return v.witness[0] + "→1=" + a.name(a.arrow(x, a.unit()));
  }
  std::string s = v.rule + " at " + tuple(v.witness);
  if (!v.note.empty()) s += " [" + v.note + "]";
  return s;
}

std::string verdict_line(const Algebra& a, const char* label, const Report& r) {
  std::string s = std::string(label) + ": " + (r.passed() ? "PASS" : "FAIL");
  if (!r.passed()) s += " (" + describe(a, r.violations.front()) + ")";
  return s;
}

void require_bci(const Algebra& a) {
  const Report r = check_pseudo_bci(a, {1});
  if (!r.passed()) throw VerdictFailure("not a pseudo-BCI-algebra: " + describe(a, r.violations.front()));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string map_text(const Algebra& a, const std::vector<Element>& map, const Algebra& to) {
  std::string s;
  for (Element x = 0; x < a.size(); ++x) s += (x ? " " : "") + a.name(x) + ":" + to.name(map[x]);
  return s;
}

json map_json(const Algebra& a, const std::vector<Element>& map, const Algebra& to) {
  json m = json::object();
  for (Element x = 0; x < a.size(); ++x) m[a.name(x)] = to.name(map[x]);
  return m;
}

std::string family_text(const Algebra& a, const std::vector<Subset>& fam) {
  std::string s;
  for (const auto& f : fam) s += "  " + format_subset(a, f) + "\n";
  return s;
}

json family_json(const Algebra& a, const std::vector<Subset>& fam) {
  json out = json::array();
  for (const auto& f : fam) out.push_back(names_of(a, f));
  return out;
}

// ---------------------------------------------------------------- verbs

Outcome do_check(const Algebra& a, bool lemmas) {
  Outcome o;
  const Report bci = check_pseudo_bci(a), bck = check_pseudo_bck(a);
  o.j["pseudo_bci"] = report_json(bci);
  o.j["pseudo_bck"] = report_json(bck);
  o.text = verdict_line(a, "pseudo-BCI", bci) + "; " + verdict_line(a, "pseudo-BCK", bck) + "\n";
  if (lemmas && bci.passed()) {
    const Report l1 = check_lemma1(a);
    o.j["lemma1"] = report_json(l1);
    o.text += verdict_line(a, "basic laws", l1) + "\n";
  }
  o.code = bci.passed() ? 0 : 1;
  return o;
}

Outcome do_info(const Algebra& a) {
  require_bci(a);
  Outcome o;
  const DerivedOrder ord = derive_order(a);
  const Subset I = integral_part(a), G = group_part(a);
  const GroupView gv = group_view(a);
  const auto g = gamma(a), d = delta(a);
  json covers = json::array();
  std::string cover_text;
  for (auto [x, y] : ord.hasse()) {
    covers.push_back({a.name(x), a.name(y)});
    cover_text += " " + a.name(x) + "<" + a.name(y);
  }
  std::vector<Element> res(a.size());
  for (Element x = 0; x < a.size(); ++x) res[x] = integral_residue(a, x);
  const bool bck = is_pseudo_bck(a);
  o.j = {{"size", a.size()},
         {"elements", a.names()},
         {"unit", a.name(a.unit())},
         {"pseudo_bck", bck},
         {"covers", covers},
         {"integral_part", names_of(a, I)},
         {"group_part", names_of(a, G)},
         {"group_order", gv.group.size()},
         {"p_semisimple", is_p_semisimple(a)},
         {"gamma", map_json(a, g.map, g.codomain)},
         {"delta", map_json(a, d.map, d.codomain)},
         {"integral_residue", map_json(a, res, a)}};
  std::ostringstream t;
  t << "size: " << a.size() << "\n";
  t << "elements:";
  for (const auto& n : a.names()) t << " " << n;
  t << "\nunit: " << a.name(a.unit()) << "\n";
  t << "class: " << (bck ? "pseudo-BCK" : "pseudo-BCI (not pseudo-BCK)") << "\n";
  t << "covers:" << (cover_text.empty() ? " none" : cover_text) << "\n";
  t << "integral part: " << format_subset(a, I) << "\n";
  t << "group part: " << format_subset(a, G) << " (order " << gv.group.size() << ")\n";
  t << "p-semisimple: " << yes_no(is_p_semisimple(a)) << "\n";
  t << "gamma: " << map_text(a, g.map, g.codomain) << "\n";
  t << "delta: " << map_text(a, d.map, d.codomain) << "\n";
  t << "integral residue: " << map_text(a, res, a) << "\n";
  json table = json::array();
  t << "group table of G_A (g.h):\n";
  for (std::size_t i = 0; i < gv.group.size(); ++i) {
    json row = json::array();
    t << " ";
    for (std::size_t k = 0; k < gv.group.size(); ++k) {
      const std::string& v = a.name(gv.members[gv.group.mult(i, k)]);
      row.push_back(v);
      t << " " << v;
    }
    table.push_back(row);
    t << "\n";
  }
  o.j["group_table"] = table;
  o.text = t.str();
  return o;
}

Outcome do_filters(const Algebra& a, bool prefilters, const std::string& generate) {
  require_bci(a);
  Outcome o;
  const auto f = all_filters(a);
  const bool g_filter = is_filter(a, group_part(a));
  o.j["filters"] = family_json(a, f);
  std::string t = "filters (" + std::to_string(f.size()) + "):\n" + family_text(a, f);
  if (prefilters) {
    const auto pf = all_prefilters(a);
    o.j["prefilters"] = family_json(a, pf);
    t += "prefilters (" + std::to_string(pf.size()) + "):\n" + family_text(a, pf);
  }
  o.j["group_part_is_filter"] = g_filter;
  t += "group part is a filter: " + yes_no(g_filter) + "\n";
  if (!generate.empty()) {
    const Subset s = parse_subset(a, generate);
    const Subset p = prefilter_generated(a, s), q = filter_generated(a, s);
    o.j["generated"] = {{"by", names_of(a, s)}, {"prefilter", names_of(a, p)}, {"filter", names_of(a, q)}};
    t += "generated by " + format_subset(a, s) + ": prefilter " + format_subset(a, p) + ", filter " +
         format_subset(a, q) + "\n";
  }
  o.text = t;
  return o;
}

Outcome do_congruences(const Algebra& a, bool only_relative, const std::string& quotient_spec) {
  require_bci(a);
  Outcome o;
  if (!quotient_spec.empty()) {
    const Partition p = parse_partition(a, quotient_spec);
    if (const auto w = incompatibility(a, p)) throw VerdictFailure("not a congruence: incompatible at " + tuple(*w));
    const Algebra q = quotient(a, p);
    const bool rel = is_relative(a, p);
    o.text = "# quotient by " + format_partition(a, p) + (rel ? " (relative)" : " (not relative)") + "\n" +
             format_algebra(q);
    o.j = {{"blocks", format_partition(a, p)}, {"relative", rel}, {"text", format_algebra(q)}};
    return o;
  }
  auto cons = all_congruences(a);
  if (only_relative) std::erase_if(cons, [&](const Partition& c) { return !is_relative(a, c); });
  json list = json::array();
  std::string t = std::string(only_relative ? "relative congruences (" : "congruences (") +
                  std::to_string(cons.size()) + "):\n";
  std::size_t relative = 0;
  for (const auto& c : cons) {
    const bool rel = is_relative(a, c);
    relative += rel;
    const Subset k = kernel(a, c);
    list.push_back({{"blocks", format_partition(a, c)}, {"relative", rel}, {"kernel", names_of(a, k)}});
    t += "  " + format_partition(a, c) + "  " + (rel ? "relative" : "not relative") + "  kernel " +
         format_subset(a, k) + "\n";
  }
  const IsoCheck iso = iso_with_filters(a);
  o.j["congruences"] = list;
  o.j["relative_count"] = relative;
  o.j["filters_correspond"] = iso.holds;
  if (!iso.holds) o.j["detail"] = iso.detail;
  t += "relative congruences: " + std::to_string(relative) + "\n";
  t += "relative congruences correspond to filters: " + yes_no(iso.holds) + (iso.holds ? "" : " (" + iso.detail + ")") +
       "\n";
  o.text = t;
  return o;
}

FiniteLattice lattice_of(const Algebra& a, const std::string& kind) {
  if (kind == "filters") return FiniteLattice::from_closed_family(a, all_filters(a));
  if (kind == "prefilters") return FiniteLattice::from_closed_family(a, all_prefilters(a));
  if (kind == "congruences" || kind == "relcon") {
    std::vector<std::string> labels;
    const auto rel = all_relative_congruences(a);
    for (const auto& p : rel) labels.push_back(format_partition(a, p));
    std::vector<char> leq(rel.size() * rel.size());
    for (std::size_t i = 0; i < rel.size(); ++i) {
      for (std::size_t j = 0; j < rel.size(); ++j) leq[i * rel.size() + j] = rel[i].refines(rel[j]);
    }
    return FiniteLattice(std::move(labels), std::move(leq));
  }
  throw InvalidInput("unknown lattice kind '" + kind + "' (filters, prefilters, congruences)");
}

Outcome do_lattice(const Algebra& a, const std::string& kind, const std::string& check) {
  if (check != "all" && check != "modular" && check != "distributive" && check != "arguesian") {
    throw InvalidInput("unknown check '" + check + "' (modular, distributive, arguesian, all)");
  }
  require_bci(a);
  Outcome o;
  const FiniteLattice l = lattice_of(a, kind);
  o.j = {{"kind", kind}, {"size", l.size()}, {"elements", l.labels()}};
  std::string t = kind + " lattice (" + std::to_string(l.size()) + " elements):\n";
  for (const auto& s : l.labels()) t += "  " + s + "\n";
  auto report = [&](const char* name, const IdentityCheck& c) {
    o.j[name] = c.holds;
    if (!c.holds) o.j[std::string(name) + "_witness"] = c.witness;
    t += std::string(name) + ": " + (c.holds ? std::string("yes") : "no " + tuple(c.witness)) + "\n";
    if (!c.holds) o.code = 1;
  };
  if (check == "all" || check == "modular") report("modular", is_modular(l));
  if (check == "all" || check == "distributive") report("distributive", is_distributive(l));
  if (check == "all" || check == "arguesian") {
    try {
      report("arguesian", is_arguesian(l));
    } catch (const CapExceeded& e) {
      o.j["arguesian"] = nullptr;
      t += std::string("arguesian: not checked (") + e.what() + ")\n";
    }
  }
  const auto pent = find_pentagon(l);
  o.j["pentagon"] = pent ? json(*pent) : json(nullptr);
  t += "pentagon: " + (pent ? tuple(*pent) : std::string("none")) + "\n";
  o.text = t;
  return o;
}

json monoid_json(const Algebra& a, const OrderedMonoid& m) {
  json elems = json::array();
  for (const auto& w : m.elements) {
    json rep = json::array();
    for (auto x : w.rep) rep.push_back(a.name(x));
    elems.push_back({{"set", names_of(a, w.subset)}, {"word", rep}});
  }
  json star = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m.product(i, j));
    star.push_back(row);
  }
  return {{"elements", elems}, {"unit", m.unit}, {"minimal", m.minimal}, {"product", star}};
}

Outcome do_embed(const Algebra& a, std::size_t max_monoid, const std::string& emit) {
  require_bci(a);
  Outcome o;
  const Embedding e = embed(a, {max_monoid});
  if (!emit.empty()) {
    std::ofstream f(emit);
    if (!f) throw InvalidInput("cannot write " + emit);
    f << monoid_json(a, e.monoid).dump(2) << "\n";
  }
  const Report r = check_residuated_pomonoid(e.target);
  const Algebra red = e.target.reduct();
  const bool ok = e.injective && e.homomorphism && r.passed();
  o.j = {{"monoid_size", e.monoid.size()},
         {"target_size", e.target.size()},
         {"residuated", report_json(r)},
         {"semi_integral", e.target.semi_integral()},
         {"integral", e.target.integral()},
         {"injective", e.injective},
         {"homomorphism", e.homomorphism},
         {"map", map_json(a, e.map, red)}};
  std::ostringstream t;
  t << "J(A): " << e.monoid.size() << " elements\n";
  t << "F: " << e.target.size() << " elements\n";
  t << verdict_line(red, "residuated po-monoid", r) << "\n";
  t << "semi-integral: " << yes_no(e.target.semi_integral()) << "\n";
  t << "integral: " << yes_no(e.target.integral()) << "\n";
  t << "injective: " << yes_no(e.injective) << "\n";
  t << "homomorphism: " << yes_no(e.homomorphism) << "\n";
  t << "map: " << map_text(a, e.map, red) << "\n";
  o.text = t.str();
  o.code = ok ? 0 : 1;
  return o;
}

Outcome do_decompose(const Algebra& a) {
  require_bci(a);
  Outcome o;
  const DecompositionReport r = decompose(a);
  static const char* const labels[] = {"(1)", "(2)", "(3)", "(4)", "(5)", "(6)"};
  json conds = json::array();
  std::string t;
  std::string first_failure;
  for (std::size_t k = 0; k < 6; ++k) {
    const auto& v = r.conditions[k];
    conds.push_back({{"condition", labels[k]}, {"holds", v.holds}, {"witness", v.witness}});
    t += std::string("condition ") + labels[k] + ": " + (v.holds ? "holds" : "fails at " + tuple(v.witness)) + "\n";
    if (!v.holds && first_failure.empty()) first_failure = std::string("condition ") + labels[k] + " fails at " + tuple(v.witness);
  }
  const auto& c12 = r.condition_12;
  t += "condition (12): " + (c12.holds ? std::string("holds") : "fails at " + tuple(c12.witness) + ": " + c12.detail) +
       "\n";
  if (!c12.holds && first_failure.empty()) first_failure = "condition (12) fails at " + tuple(c12.witness);
  t += "G_A filter: " + (r.g_filter.holds ? std::string("yes")
                                           : "no (" + r.g_filter.condition + " at " + tuple(r.g_filter.witness) + ")") +
       "\n";
  t += "A isomorphic to I x G: " + yes_no(r.isomorphic_to_product) + "\n";
  t += "three conditions agree: " + yes_no(r.triad_agrees()) + "\n";
  std::string verdict;
  if (r.decomposable()) {
    verdict = "decomposable: eta(i,g) = g->i is an isomorphism from I x G-dagger";
    std::vector<Element> eta(r.eta->begin(), r.eta->end());
    t += "eta: " + map_text(*r.product, eta, a) + "\n";
    o.j["eta"] = map_json(*r.product, eta, a);
  } else {
    verdict = r.g_filter.holds ? "G_A is a filter" : "G_A not a filter";
    if (!first_failure.empty()) verdict += "; " + first_failure;
    o.code = 1;
  }
  t += verdict + "\n";
  o.j["conditions"] = conds;
  o.j["condition_12"] = {{"holds", c12.holds}, {"witness", c12.witness}, {"detail", c12.detail}};
  o.j["g_filter"] = {{"holds", r.g_filter.holds}, {"condition", r.g_filter.condition}, {"witness", r.g_filter.witness}};
  o.j["isomorphic_to_product"] = r.isomorphic_to_product;
  o.j["triad_agrees"] = r.triad_agrees();
  o.j["decomposable"] = r.decomposable();
  o.j["verdict"] = verdict;
  o.text = t;
  return o;
}

struct SearchArgs {
  std::size_t size = 0;
  bool pbck = false;
  std::string cls;
  std::string predicate;
  std::size_t limit = 0;
  std::string out_dir;
  bool list = false;
};

Outcome do_search(const SearchArgs& s) {
  Outcome o;
  if (s.list) {
    json list = json::array();
    for (const auto& p : predicates()) {
      list.push_back({{"name", p.name}, {"description", p.description}});
      o.text += p.name + "  " + p.description + "\n";
    }
    o.j["predicates"] = list;
    return o;
  }
  if (s.size == 0) throw InvalidInput("--size is required and must be positive");
  SearchSpec spec;
  spec.size = s.size;
  spec.cls = !s.cls.empty() ? parse_class(s.cls) : s.pbck ? AlgebraClass::pbck : AlgebraClass::pbci;
  spec.predicate = s.predicate;
  spec.limit = s.limit;
  if (!s.out_dir.empty()) std::filesystem::create_directories(s.out_dir);
  json models = json::array();
  json manifest_models = json::array();
  std::string listing;
  std::size_t k = 0;
  const SearchStats st = enumerate(spec, [&](const Algebra& a) {
    ++k;
    const std::string text = format_algebra(a);
    if (!s.out_dir.empty()) {
      char file[32];
      std::snprintf(file, sizeof file, "model-%04zu.alg", k);
      write_algebra(std::filesystem::path(s.out_dir) / file, a);
      manifest_models.push_back({{"file", file}, {"size", a.size()}, {"pseudo_bck", is_pseudo_bck(a)}});
    } else {
      models.push_back(text);
      listing += "# model " + std::to_string(k) + "\n" + text + "\n";
    }
    return true;
  });
  json stats = {{"posets", st.posets}, {"nodes", st.nodes}, {"models", st.models}, {"emitted", st.emitted}};
  json sp = {{"size", spec.size}, {"class", class_name(spec.cls)}, {"predicate", spec.predicate}, {"limit", spec.limit}};
  if (!s.out_dir.empty()) {
    json manifest = {{"spec", sp}, {"stats", stats}, {"models", manifest_models}};
    std::ofstream(std::filesystem::path(s.out_dir) / "manifest.json") << manifest.dump(2) << "\n";
    o.j["out"] = s.out_dir;
  } else {
    o.j["models"] = models;
  }
  o.j["spec"] = sp;
  o.j["stats"] = stats;
  o.text = listing + "emitted: " + std::to_string(st.emitted) + " (class models " + std::to_string(st.models) +
           ", order shapes " + std::to_string(st.posets) + ", nodes " + std::to_string(st.nodes) + ")\n";
  if (!s.out_dir.empty()) o.text += "written to " + s.out_dir + "\n";
  if (!spec.predicate.empty() && st.emitted == 0) o.code = 1;
  return o;
}

Outcome do_iso(const Algebra& a, const Algebra& b) {
  Outcome o;
  const auto m = find_isomorphism(a, b);
  o.j["isomorphic"] = m.has_value();
  o.text = "isomorphic: " + yes_no(m.has_value()) + "\n";
  if (m) {
    o.j["map"] = map_json(a, *m, b);
    o.text += "map: " + map_text(a, *m, b) + "\n";
  } else {
    o.code = 1;
  }
  return o;
}

Outcome algebra_outcome(const Algebra& a, const std::string& file = {}) {
  Outcome o;
  const std::string text = format_algebra(a);
  o.j = {{"elements", a.names()}, {"unit", a.name(a.unit())}, {"text", text}};
  if (file.empty()) {
    o.text = text;
  } else {
    write_algebra(file, a);
    o.j["out"] = file;
    o.text = "written to " + file + "\n";
  }
  return o;
}

Outcome do_example(const std::string& name, bool list_all) {
  if (!list_all) return algebra_outcome(catalog_algebra(name));
  Outcome o;
  json list = json::array();
  for (const auto& e : catalog()) {
    list.push_back({{"name", e.name}, {"description", e.description}});
    o.text += e.name + "  " + e.description + "\n";
  }
  o.j["examples"] = list;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite pseudo-BCI/BCK-algebra laboratory. Algebra arguments are files or @name for a built-in example.",
               "pbci"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable report");

  std::string f1, f2, generate, kind = "filters", lattice_check = "all", example_name = "ex6", out_file, quotient_spec,
      emit_monoid;
  bool lemmas = false, no_rename = false, with_prefilters = false, only_relative = false, list_examples = false;
  std::size_t max_monoid = 18;
  SearchArgs sa;

  auto* check = app.add_subcommand("check", "verify the pseudo-BCI and pseudo-BCK axioms");
  check->add_option("algebra", f1)->required();
  check->add_flag("--lemmas", lemmas, "also check the basic arithmetic laws");
  auto* info = app.add_subcommand("info", "order, integral and group parts, gamma and delta");
  info->add_option("algebra", f1)->required();
  auto* filters = app.add_subcommand("filters", "all prefilters and filters");
  filters->add_option("algebra", f1)->required();
  filters->add_flag("--prefilters", with_prefilters, "also list the prefilters");
  filters->add_option("--generate", generate, "subset to generate from, e.g. a,b");
  auto* congr = app.add_subcommand("congruences", "all congruences, relative ones marked");
  congr->add_option("algebra", f1)->required();
  congr->add_flag("--relative", only_relative, "list relative congruences only");
  congr->add_option("--quotient", quotient_spec, "print the quotient by blocks such as a,b,1|x,y,g");
  auto* lattice = app.add_subcommand("lattice", "lattice identities of filters, prefilters or relative congruences");
  lattice->add_option("algebra", f1)->required();
  lattice->add_option("--kind", kind, "filters | prefilters | congruences");
  lattice->add_option("--check", lattice_check, "modular | distributive | arguesian | all");
  auto* emb = app.add_subcommand("embed", "embed into a residuated po-monoid");
  emb->add_option("algebra", f1)->required();
  emb->add_option("--max-monoid", max_monoid, "cap on |J(A)|");
  emb->add_option("--emit-monoid", emit_monoid, "write J(A) as JSON to this file");
  auto* dec = app.add_subcommand("decompose", "decide A = I x G");
  dec->add_option("algebra", f1)->required();
  auto* search = app.add_subcommand("search", "enumerate models up to isomorphism");
  search->add_option("--size", sa.size, "carrier size");
  search->add_flag("--pbck", sa.pbck, "pseudo-BCK-algebras only");
  search->add_option("--class", sa.cls, "pbci | pbck | group");
  search->add_option("--predicate", sa.predicate, "keep models with this property");
  search->add_option("--limit", sa.limit, "stop after this many models");
  search->add_option("--out", sa.out_dir, "write models and manifest.json here");
  search->add_flag("--list-predicates", sa.list, "list the known predicates");
  auto* iso = app.add_subcommand("iso", "find an isomorphism");
  iso->add_option("first", f1)->required();
  iso->add_option("second", f2)->required();
  auto* prod = app.add_subcommand("product", "direct product");
  prod->add_option("first", f1)->required();
  prod->add_option("second", f2)->required();
  prod->add_option("-o,--out", out_file, "write the algebra here");
  auto* uni = app.add_subcommand("union", "union of a pseudo-BCK-algebra and a group");
  uni->add_option("bck", f1)->required();
  uni->add_option("group", f2, "a p-semisimple algebra")->required();
  uni->add_flag("--no-rename", no_rename, "reject clashing names instead of renaming");
  uni->add_option("-o,--out", out_file, "write the algebra here");
  auto* dag = app.add_subcommand("dagger", "swap the two arrows");
  dag->add_option("algebra", f1)->required();
  dag->add_option("-o,--out", out_file, "write the algebra here");
  auto* ex = app.add_subcommand("example", "print a built-in example (default ex6)");
  ex->add_option("name", example_name);
  ex->add_flag("--list", list_examples, "list the built-in examples");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    Outcome o;
    if (check->parsed()) o = do_check(load(f1), lemmas);
    else if (info->parsed()) o = do_info(load(f1));
    else if (filters->parsed()) o = do_filters(load(f1), with_prefilters, generate);
    else if (congr->parsed()) o = do_congruences(load(f1), only_relative, quotient_spec);
    else if (lattice->parsed()) o = do_lattice(load(f1), kind, lattice_check);
    else if (emb->parsed()) o = do_embed(load(f1), max_monoid, emit_monoid);
    else if (dec->parsed()) o = do_decompose(load(f1));
    else if (search->parsed()) o = do_search(sa);
    else if (iso->parsed()) o = do_iso(load(f1), load(f2));
    else if (prod->parsed()) o = algebra_outcome(direct_product(load(f1), load(f2)), out_file);
    else if (uni->parsed()) {
      const Algebra h = load(f2);
      if (!is_pseudo_bci(h) || !is_p_semisimple(h)) throw PreconditionError("the second algebra is not a group");
      o = algebra_outcome(union_construction(load(f1), group_view(h), !no_rename), out_file);
    } else if (dag->parsed()) {
      const Algebra a = load(f1);
      require_bci(a);
      o = algebra_outcome(dagger(a), out_file);
    } else if (ex->parsed()) o = do_example(example_name, list_examples);
    if (as_json) {
      o.j["exit_code"] = o.code;
      out << o.j.dump(2) << "\n";
    } else {
      out << o.text;
    }
    return o.code;
  } catch (const VerdictFailure& e) {
    if (as_json) {
      out << json{{"error", e.what()}, {"exit_code", 1}}.dump(2) << "\n";
    } else {
      out << e.what() << "\n";
    }
    return 1;
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace pbci::cli
