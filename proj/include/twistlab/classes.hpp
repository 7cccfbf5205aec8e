#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "twistlab/check.hpp"
#include "twistlab/formula.hpp"

namespace twistlab {

/// One axiom of a class: an equation or a quasi-equation.
struct law {
  std::string name;
  std::variant<equation, quasi_equation> body;
};

/// Operation names a term mentions.
inline void collect_ops(const term& t, std::set<std::string>& out) {
  if (t.is_var()) return;
  out.insert(t.op);
  for (const auto& a : t.args) collect_ops(a, out);
}

inline std::set<std::string> required_ops(const std::vector<law>& laws) {
  std::set<std::string> out;
  for (const auto& l : laws) {
    if (auto* e = std::get_if<equation>(&l.body)) {
      collect_ops(e->lhs, out);
      collect_ops(e->rhs, out);
    } else {
      const auto& q = std::get<quasi_equation>(l.body);
      for (const auto& p : q.premises) {
        collect_ops(p.lhs, out);
        collect_ops(p.rhs, out);
      }
      collect_ops(q.conclusion.lhs, out);
      collect_ops(q.conclusion.rhs, out);
    }
  }
  return out;
}

/// Checks laws in order; the first failure wins.
inline check_result check_laws(const algebra& a, const std::vector<law>& laws) {
  for (const auto& l : laws) {
    check_result r = std::holds_alternative<equation>(l.body)
                       ? check_equation(a, std::get<equation>(l.body))
                       : check_quasiequation(a, std::get<quasi_equation>(l.body));
    if (!r.holds) {
      r.law = l.name;
      return r;
    }
  }
  return check_result::ok();
}

namespace detail {

// Inequalities s <= t are written as s & t = s by the caller.
inline law make_law(std::string name, std::string_view text) {
  if (text.find("=>") != std::string_view::npos) return {name, parse_quasiequation(text, name)};
  return {name, parse_equation(text, name)};
}

using law_table = std::vector<std::pair<const char*, const char*>>;

inline void append(std::vector<law>& out, const law_table& rows) {
  for (auto& [n, t] : rows) out.push_back(make_law(n, t));
}

inline const law_table& lattice_laws() {
  static const law_table t = {
    {"idempotence of &", "x & x = x"},
    {"idempotence of |", "x | x = x"},
    {"commutativity of &", "x & y = y & x"},
    {"commutativity of |", "x | y = y | x"},
    {"associativity of &", "(x & y) & z = x & (y & z)"},
    {"associativity of |", "(x | y) | z = x | (y | z)"},
    {"absorption |&", "x | (x & y) = x"},
    {"absorption &|", "x & (x | y) = x"},
  };
  return t;
}

inline const law_table& cn_laws() {
  static const law_table t = {
    {"CN1", "(x & y) -> z = x -> (y -> z)"},
    {"CN2", "T & (x -> (y -> y)) = T"},
    {"CN3", "T & (((x -> y) -> x) -> x) = T"},
    {"CN4", "(x -> y) & T = (x & T) -> (y & T)"},
    {"CN5", "~(x -> y) = x -> ~y"},
  };
  return t;
}

inline const law_table& f_laws() {
  static const law_table t = {
    {"F1", "x & y = x & (x -> y)"},
    {"F2", "(x -> y) & ((x & y) | T) = x -> y"},
    {"F3", "(x & y) -> z = x -> (y -> z)"},
    {"F4", "T & (x -> (y -> y)) = T"},
    {"F5", "T & (((x -> y) -> x) -> x) = T"},
    {"F6", "(x -> y) & T = (x & T) -> (y & T)"},
  };
  return t;
}

inline std::map<std::string, std::vector<law>> build_libraries() {
  std::map<std::string, std::vector<law>> lib;
  std::vector<law> v;

  append(v, lattice_laws());
  lib["lattice"] = v;

  append(v, {{"distributivity", "x & (y | z) = (x & y) | (x & z)"}});
  lib["distributive-lattice"] = v;
  const auto distributive = v;

  append(v, {{"top", "x & 1 = x"}});
  lib["upper-bounded-distributive-lattice"] = v;
  append(v, {{"bottom", "x & 0 = 0"}});
  lib["bounded-distributive-lattice"] = v;

  v = distributive;
  append(v, {{"involution", "~~x = x"}, {"De Morgan law", "~(x & y) = ~x | ~y"}});
  lib["de-morgan-lattice"] = v;
  const auto de_morgan = v;

  append(v, {{"top", "x & 1 = x"}, {"bottom", "x & 0 = 0"}});
  lib["de-morgan-algebra"] = v;
  const auto de_morgan_algebra = v;

  v = de_morgan;
  append(v, {{"Kleene law", "(~x & x) & (~y | y) = ~x & x"}});
  lib["kleene-algebra"] = v;

  append(v, {{"center", "~T = T"}});
  lib["centered-kleene"] = v;
  const auto centered = v;

  v = de_morgan;
  append(v, {{"center T", "~T = T"},
             {"center B", "~B = B"},
             {"distinct centers", "T = B => x = y"}});
  lib["bi-centered-de-morgan"] = v;

  append(v, {{"bottom", "0 & x = 0"}, {"B & T = 0", "B & T = 0"}});
  lib["dfg-algebra"] = v;
  const auto dfg = v;
  append(v, cn_laws());
  lib["cng-algebra"] = v;
  v = dfg;
  append(v, f_laws());
  lib["fg-algebra"] = v;

  v = centered;
  append(v, cn_laws());
  lib["cn-algebra"] = v;
  v = centered;
  append(v, f_laws());
  lib["f-algebra"] = v;

  v.clear();
  append(v, lattice_laws());
  append(v, {{"top", "x & 1 = x"},
             {"residuation (left)", "(x & y) & z = x & y => x & (y -> z) = x"},
             {"residuation (right)", "x & (y -> z) = x => (x & y) & z = x & y"},
             {"Peirce law", "(x -> y) -> x = x"}});
  lib["generalized-boolean"] = v;
  append(v, {{"bottom", "x & 0 = 0"},
             {"complement &", "x & ~x = 0"},
             {"complement |", "x | ~x = 1"}});
  lib["boolean"] = v;

  v = de_morgan_algebra;
  append(v, {{"B = ~T", "B = ~T"},
             {"DFf1 (T = 1)", "T = 1 => x = y"},
             {"DFf1 (T = 0)", "T = 0 => x = y"},
             {"DFf1 (~T = 1)", "~T = 1 => x = y"},
             {"DFf1 (~T = 0)", "~T = 0 => x = y"},
             {"DFf2", "T & ~T = 0"},
             // Joins with T, not with ~T: the literal ~T variant fails on DFf4 itself.
             {"DFf3", "x & T = y & T, x | T = y | T => x = y"}});
  lib["dff-algebra"] = v;
  append(v, {{"Ff i", "x & y = x & (x -> y)"},
             {"Ff ii", "(x & y) -> z = x -> (y -> z)"},
             {"Ff iii", "T & (((x -> y) -> x) -> x) = T"},
             {"Ff iv", "(x -> y) & T = (x & T) -> (y & T)"},
             {"Ff v", "~(x -> y) & B = ~(x & y) & B"}});
  lib["ff-algebra"] = v;
  return lib;
}

} // namespace detail

/// Class name -> ordered axiom list.
inline const std::map<std::string, std::vector<law>>& class_libraries() {
  static const auto lib = detail::build_libraries();
  return lib;
}

inline std::vector<std::string> class_names() {
  std::vector<std::string> out;
  for (const auto& [k, _] : class_libraries()) out.push_back(k);
  return out;
}

inline const std::vector<law>& class_laws(std::string_view name) {
  const auto& lib = class_libraries();
  auto it = lib.find(std::string(name));
  if (it == lib.end()) throw error("unknown class '" + std::string(name) + "'");
  return it->second;
}

/// Runs the class's law library on `a`. Throws signature_error if `a` lacks an operation the class needs.
inline check_result classify(const algebra& a, std::string_view class_name) {
  const auto& laws = class_laws(class_name);
  for (const auto& op : required_ops(laws))
    if (!a.has(op))
      throw signature_error("class '" + std::string(class_name) + "' needs operation '" + op +
                            "', missing from '" + a.name() + "'");
  return check_laws(a, laws);
}

} // namespace twistlab
