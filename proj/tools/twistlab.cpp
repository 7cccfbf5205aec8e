// twistlab: command-line front end to the matrices, twist constructions and checks.
//
// Exit status: 0 the property holds / the command succeeded, 1 it fails
// (a counterexample is printed), 2 usage or input error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twistlab/io.hpp"
#include "twistlab/twistlab.hpp"

namespace {

using namespace twistlab;

constexpr int exit_holds = 0;
constexpr int exit_fails = 1;
constexpr int exit_usage = 2;

struct options {
  bool json = false;
  std::string matrix, algebra_ref, formula, op, format = "text", law, class_name, kind, factor1, factor2, spec,
    target, term_text;
  std::vector<std::string> premises, basis;
  std::string conclusion;
  std::size_t cap = 200000, limit = 100000;
  bool list = false;
};

int emit(const options& o, const ojson& j, const std::string& text, bool holds) {
  if (o.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
  return holds ? exit_holds : exit_fails;
}

// Named matrices carry the full connective library so tables and formulas can mention it.
logical_matrix matrix_arg(const options& o) {
  if (o.matrix.empty()) throw input_error("--matrix is required");
  return with_library(load_matrix(o.matrix));
}

twist_spec spec_arg(const options& o) {
  if (!o.spec.empty()) return load_twist_spec(o.spec);
  if (o.kind.empty() || o.factor1.empty()) throw input_error("give --spec FILE or --kind with --factor1");
  twist_spec s;
  s.kind = parse_twist_kind(o.kind);
  s.factor1 = load_algebra(o.factor1);
  if (!o.factor2.empty()) s.factor2 = load_algebra(o.factor2);
  return s;
}

std::string labels_of(const algebra& a, const std::vector<elem>& es) {
  std::string s = "{";
  for (std::size_t i = 0; i < es.size(); ++i) s += (i ? ", " : "") + a.label(es[i]);
  return s + "}";
}

int cmd_table(const options& o) {
  auto m = matrix_arg(o);
  std::vector<value_table> tables;
  if (!o.formula.empty())
    tables.push_back(connective_table(m, std::string_view(o.formula)));
  else if (!o.op.empty())
    tables.push_back(connective_table(m, std::string_view(o.op)));
  else
    for (const auto& name : load_matrix(o.matrix).alg.signature())
      tables.push_back(connective_table(m, std::string_view(name)));
  if (o.format == "json" || o.json) {
    ojson arr = ojson::array();
    for (const auto& t : tables) arr.push_back(ojson::parse(to_json(m.alg, t).dump()));
    std::cout << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
  } else if (o.format == "csv") {
    for (const auto& t : tables) std::cout << to_csv(m.alg, t);
  } else if (o.format == "text") {
    for (std::size_t i = 0; i < tables.size(); ++i) std::cout << (i ? "\n" : "") << to_text(m.alg, tables[i]);
  } else {
    throw input_error("unknown format '" + o.format + "' (text, csv, json)");
  }
  return exit_holds;
}

int report_verdict(const options& o, const logical_matrix& m, const verdict& v) {
  std::string text = v.valid ? "valid\n" : "invalid: " + describe(m, v) + "\n";
  return emit(o, to_json(m, v), text, v.valid);
}

int cmd_valid(const options& o) {
  auto m = matrix_arg(o);
  return report_verdict(o, m, is_valid(m, parse_formula(o.formula)));
}

int cmd_entail(const options& o) {
  auto m = matrix_arg(o);
  std::vector<formula> ps;
  for (const auto& p : o.premises) ps.push_back(parse_formula(p));
  return report_verdict(o, m, entails(m, ps, parse_formula(o.conclusion)));
}

int cmd_theses(const options& o) {
  auto m = load_matrix(o.matrix);
  auto r = check_theses(m);
  ojson j;
  j["matrix"] = m.name();
  j["all_valid"] = r.all_valid();
  ojson items = ojson::array();
  std::string text;
  for (std::size_t i = 0; i < r.items.size(); ++i) {
    const auto& [name, v] = r.items[i];
    const auto& f = thesis_formulas()[i].second;
    ojson x = to_json(m, v);
    x["thesis"] = name;
    x["formula"] = f;
    items.push_back(x);
    text += name + "  " + f + ": " + (v.valid ? "valid" : "invalid at " + describe(m, v)) + "\n";
  }
  j["theses"] = items;
  return emit(o, j, text, r.all_valid());
}

int cmd_classify(const options& o) {
  auto a = load_algebra(o.algebra_ref);
  auto r = classify(a, o.class_name);
  ojson j = to_json(a, r);
  j["algebra"] = a.name();
  j["class"] = o.class_name;
  std::string text = r.holds ? a.name() + " is a " + o.class_name + "\n"
                             : a.name() + " is not a " + o.class_name + ": " + r.law + " fails at " + describe(a, r) + "\n";
  return emit(o, j, text, r.holds);
}

int cmd_eq(const options& o) {
  auto a = load_algebra(o.algebra_ref);
  check_result r;
  if (o.law.find("=>") != std::string::npos)
    r = check_quasiequation(a, parse_quasiequation(o.law, o.law));
  else
    r = check_equation(a, parse_equation(o.law, o.law));
  ojson j = to_json(a, r);
  std::string text = r.holds ? "holds\n" : "fails at " + describe(a, r) + "\n";
  return emit(o, j, text, r.holds);
}

int cmd_twist(const options& o) {
  auto t = twist_build(spec_arg(o));
  ojson j = to_json(t.alg);
  j["kind"] = to_string(t.kind);
  std::string text = to_string(t.kind) + "-twist over " + t.factor1.name() +
                     (has_two_factors(t.kind) ? " and " + t.factor2.name() : "") + ": " + std::to_string(t.alg.size()) +
                     " elements\n";
  for (const auto& op : t.alg.operations()) {
    value_table v{op.name, {}, op.table};
    if (op.arity >= 1) v.variables.push_back("x");
    if (op.arity == 2) v.variables.push_back("y");
    text += "\n" + to_text(t.alg, v);
  }
  return emit(o, j, text, true);
}

int cmd_subalgebras(const options& o) {
  ojson arr = ojson::array();
  std::string text;
  if (!o.algebra_ref.empty()) {
    auto a = load_algebra(o.algebra_ref);
    for (const auto& s : subuniverses(a, o.limit)) {
      ojson x = ojson::array();
      for (elem e : s) x.push_back(a.label(e));
      arr.push_back(x);
      text += labels_of(a, s) + "\n";
    }
  } else {
    auto t = twist_build(spec_arg(o));
    for (const auto& [sub, inc] : enumerate_pi1_full_subalgebras(t, o.limit)) {
      bool full = sub.alg.size() == t.alg.size();
      ojson x;
      x["size"] = sub.alg.size();
      x["full"] = full;
      x["elements"] = sub.alg.labels();
      arr.push_back(x);
      text += std::to_string(sub.alg.size()) + (full ? " (full) " : " ") + labels_of(t.alg, inc.map) + "\n";
    }
  }
  return emit(o, arr, text, true);
}

std::string report_text(const representation_report& r) {
  std::string s = to_string(r.kind) + " representation of " + r.source + " (" +
                  (r.theorem_mode ? "theorem" : "exploratory") + "): " + (r.overall ? "holds" : "fails") + "\n";
  for (const auto& v : r.verdicts)
    s += std::string(v.ok ? "  ok    " : "  FAIL  ") + v.name + (v.witness.empty() ? "" : ": " + v.witness) + "\n";
  if (r.iota && r.image)
    for (std::size_t i = 0; i < r.iota->map.size(); ++i)
      s += "  " + r.source_labels.at(i) + " -> " + r.image->alg.label(r.iota->map[i]) + "\n";
  if (!r.note.empty()) s += "  " + r.note + "\n";
  return s;
}

int cmd_represent(const options& o) {
  auto a = load_algebra(o.algebra_ref);
  auto r = verify_representation(a, parse_twist_kind(o.kind));
  return emit(o, to_json(r), report_text(r), r.overall);
}

int cmd_roundtrip(const options& o) {
  auto r = roundtrip_check(spec_arg(o));
  return emit(o, to_json(r), report_text(r), r.overall);
}

// Default basis: the primitive connectives of the matrix, without the target.
std::vector<std::string> basis_arg(const options& o) {
  if (!o.basis.empty()) return o.basis;
  std::vector<std::string> b;
  const auto m = load_matrix(o.matrix);
  for (const auto& op : m.alg.operations())
    if (op.arity > 0 && op.name != o.target) b.push_back(op.name);
  return b;
}

int cmd_define(const options& o) {
  auto m = matrix_arg(o);
  if (o.target.empty()) throw input_error("--target is required");
  if (!o.term_text.empty()) {
    auto f = parse_formula(o.term_text);
    auto r = check_definition(m, to_term(f, variables(f)), o.target);
    if (!r.holds) r.variables = variables(f);
    ojson j = to_json(m.alg, r);
    std::string text = r.holds ? "defines " + o.target + "\n" : "differs from " + o.target + " at " + describe(m.alg, r) + "\n";
    return emit(o, j, text, r.holds);
  }
  auto basis = basis_arg(o);
  auto r = is_definable(m, o.target, basis, o.cap);
  ojson j;
  j["matrix"] = m.name();
  j["target"] = o.target;
  j["basis"] = basis;
  j["status"] = to_string(r.status);
  if (r.witness) j["witness"] = render(*r.witness);
  j["clone_size"] = r.clone_size;
  j["closed"] = r.closed;
  std::string text = to_string(r.status) + (r.witness ? ": " + render(*r.witness) : "") + "\n";
  return emit(o, j, text, r.status == definability::yes);
}

int cmd_clone(const options& o) {
  auto m = matrix_arg(o);
  auto basis = basis_arg(o);
  auto c = binary_clone(m, basis, o.cap);
  ojson j;
  j["matrix"] = m.name();
  j["basis"] = basis;
  j["size"] = c.size();
  j["closed"] = c.closed;
  j["levels"] = c.level_totals;
  std::string text = "clone of {";
  for (std::size_t i = 0; i < basis.size(); ++i) text += (i ? ", " : "") + basis[i];
  text += "} on " + m.name() + ": " + std::to_string(c.size()) + " binary operations, " +
          (c.closed ? "closed" : "cap reached") + "\n";
  if (o.list) {
    ojson members = ojson::array();
    for (std::size_t i = 0; i < c.size(); ++i) {
      ojson x;
      x["depth"] = c.depth(i);
      x["witness"] = render(c.witness(i));
      std::vector<std::string> cells;
      for (elem e : c.table(i)) cells.push_back(m.alg.label(e));
      x["table"] = cells;
      members.push_back(x);
      text += std::to_string(c.depth(i)) + "  " + render(c.witness(i)) + "\n";
    }
    j["members"] = members;
  }
  return emit(o, j, text, c.closed);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite many-valued matrices, twist algebras and their representations"};
  app.require_subcommand(1);
  options o;
  app.add_flag("--json", o.json, "Machine-readable output");

  auto matrix_opt = [&](CLI::App* c) { c->add_option("--matrix,-m", o.matrix, "Named matrix or JSON file")->required(); };
  auto twist_opts = [&](CLI::App* c) {
    c->add_option("--spec", o.spec, "Twist spec JSON file");
    c->add_option("--kind,-k", o.kind, "Twist kind (DF, CN, F, OL, ...)");
    c->add_option("--factor1", o.factor1, "First factor algebra");
    c->add_option("--factor2", o.factor2, "Second factor algebra");
  };

  auto* table = app.add_subcommand("table", "Print connective tables");
  matrix_opt(table);
  table->add_option("--op", o.op, "Connective name");
  table->add_option("--formula,-f", o.formula, "Formula to tabulate");
  table->add_option("--format", o.format, "text, csv or json");

  auto* valid = app.add_subcommand("valid", "Check validity of a formula");
  matrix_opt(valid);
  valid->add_option("--formula,-f", o.formula)->required();

  auto* entail = app.add_subcommand("entail", "Check an entailment");
  matrix_opt(entail);
  entail->add_option("--premise,-p", o.premises);
  entail->add_option("--conclusion,-c", o.conclusion)->required();

  auto* theses = app.add_subcommand("theses", "Check A1, A2, B1, B2");
  matrix_opt(theses);

  auto* cls = app.add_subcommand("classify", "Check membership in an equational class");
  cls->add_option("--algebra,-a", o.algebra_ref)->required();
  cls->add_option("--class,-c", o.class_name)->required();

  auto* eq = app.add_subcommand("eq", "Check an equation or quasi-equation");
  eq->add_option("--algebra,-a", o.algebra_ref)->required();
  eq->add_option("--law,-l", o.law, "\"l = r\" or \"a = b, c = d => l = r\"")->required();

  auto* twist = app.add_subcommand("twist", "Build a twist algebra");
  twist_opts(twist);

  auto* subs = app.add_subcommand("subalgebras", "Subuniverses, or pi1-full subalgebras of a twist");
  subs->add_option("--algebra,-a", o.algebra_ref);
  twist_opts(subs);
  subs->add_option("--limit", o.limit);

  auto* represent = app.add_subcommand("represent", "Verify a twist representation");
  represent->add_option("--algebra,-a", o.algebra_ref)->required();
  represent->add_option("--kind,-k", o.kind)->required();

  auto* roundtrip = app.add_subcommand("roundtrip", "Build, represent and recover the factors");
  twist_opts(roundtrip);

  auto* define = app.add_subcommand("define", "Definability of a connective");
  matrix_opt(define);
  define->add_option("--target,-t", o.target)->required();
  define->add_option("--term", o.term_text, "Candidate definition to check");
  define->add_option("--basis,-b", o.basis)->delimiter(',');
  define->add_option("--cap", o.cap);

  auto* clone = app.add_subcommand("clone", "Binary fragment of a clone");
  matrix_opt(clone);
  clone->add_option("--basis,-b", o.basis)->delimiter(',');
  clone->add_option("--cap", o.cap);
  clone->add_flag("--list", o.list, "List every member with its witness");

  for (auto* c : app.get_subcommands({})) c->add_flag("--json", o.json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*table) return cmd_table(o);
    if (*valid) return cmd_valid(o);
    if (*entail) return cmd_entail(o);
    if (*theses) return cmd_theses(o);
    if (*cls) return cmd_classify(o);
    if (*eq) return cmd_eq(o);
    if (*twist) return cmd_twist(o);
    if (*subs) return cmd_subalgebras(o);
    if (*represent) return cmd_represent(o);
    if (*roundtrip) return cmd_roundtrip(o);
    if (*define) return cmd_define(o);
    if (*clone) return cmd_clone(o);
  } catch (const parse_error& e) {
    std::cerr << "twistlab: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "twistlab: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
