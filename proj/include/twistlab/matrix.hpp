#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "twistlab/algebra.hpp"
#include "twistlab/check.hpp"
#include "twistlab/formula.hpp"

namespace twistlab {

/// An algebra with a designated subset.
struct logical_matrix {
  algebra alg;
  std::vector<elem> designated;  // sorted, nonempty

  logical_matrix() = default;
  logical_matrix(algebra a, std::vector<elem> d) : alg(std::move(a)), designated(std::move(d)) {
    std::sort(designated.begin(), designated.end());
    designated.erase(std::unique(designated.begin(), designated.end()), designated.end());
    if (designated.empty()) throw algebra_error("matrix '" + alg.name() + "' has no designated element");
    for (elem e : designated)
      if (e >= alg.size()) throw algebra_error("designated element out of range in '" + alg.name() + "'");
  }

  const std::string& name() const { return alg.name(); }
  bool is_designated(elem e) const { return std::binary_search(designated.begin(), designated.end(), e); }
};

/// Validity/entailment outcome; the counter-valuation is the lexicographically least one.
struct verdict {
  bool valid = true;
  std::optional<assignment> counter_valuation;
  std::vector<std::string> variables;

  explicit operator bool() const noexcept { return valid; }
};

inline std::string describe(const logical_matrix& m, const verdict& v) {
  if (v.valid || !v.counter_valuation) return {};
  std::string out;
  for (std::size_t i = 0; i < v.variables.size(); ++i) {
    if (i) out += ", ";
    out += v.variables[i] + "=" + m.alg.label((*v.counter_valuation)[i]);
  }
  return out;
}

inline verdict entails(const logical_matrix& m, const std::vector<formula>& premises, const formula& conclusion) {
  std::vector<formula> all = premises;
  all.push_back(conclusion);
  auto vars = variables(all);
  std::vector<compiled_term> prem;
  for (const auto& p : premises) prem.emplace_back(m.alg, to_term(p, vars));
  compiled_term c(m.alg, to_term(conclusion, vars));
  std::optional<assignment> witness;
  detail::for_each_assignment(m.alg.size(), int(vars.size()), [&](const assignment& env) {
    for (auto& p : prem)
      if (!m.is_designated(p(env))) return true;
    if (m.is_designated(c(env))) return true;
    witness = env;
    return false;
  });
  return {!witness.has_value(), witness, vars};
}

inline verdict is_valid(const logical_matrix& m, const formula& f) { return entails(m, {}, f); }

struct thesis_report {
  std::vector<std::pair<std::string, verdict>> items;  // A1, A2, B1, B2

  bool all_valid() const {
    return std::all_of(items.begin(), items.end(), [](const auto& x) { return x.second.valid; });
  }
};

inline const std::vector<std::pair<std::string, std::string>>& thesis_formulas() {
  static const std::vector<std::pair<std::string, std::string>> t = {
    {"A1", "~(p -> ~p)"},
    {"A2", "~(~p -> p)"},
    {"B1", "(p -> q) -> ~(p -> ~q)"},
    {"B2", "(p -> ~q) -> ~(p -> q)"},
  };
  return t;
}

inline thesis_report check_theses(const logical_matrix& m) {
  for (const char* op : {"neg", "imp"})
    if (!m.alg.has(op))
      throw signature_error("matrix '" + m.name() + "' lacks '" + std::string(op) + "' needed for the theses");
  thesis_report r;
  for (const auto& [name, text] : thesis_formulas()) r.items.emplace_back(name, is_valid(m, parse_formula(text)));
  return r;
}

// ---------------------------------------------------------------------------
// Named matrices

namespace tables {

// A3 ids: 0 = 0, 1 = 1/2, 2 = 1.
inline const std::vector<std::string> a3_labels = {"0", "1/2", "1"};
inline const std::vector<elem> neg3 = {2, 1, 0};
inline const std::vector<elem> and_ol3 = {0, 0, 0, 0, 1, 2, 0, 2, 2};
inline const std::vector<elem> or_ol3 = {0, 0, 2, 0, 1, 2, 2, 2, 2};
inline const std::vector<elem> and_k3 = {0, 0, 0, 0, 1, 1, 0, 1, 2};
inline const std::vector<elem> or_k3 = {0, 1, 2, 1, 1, 2, 2, 2, 2};
inline const std::vector<elem> imp_ol3 = {1, 1, 1, 0, 1, 2, 0, 1, 2};
inline const std::vector<elem> imp_df3 = {1, 1, 1, 1, 1, 1, 0, 1, 2};
inline const std::vector<elem> imp_f3 = {1, 1, 1, 0, 1, 1, 0, 1, 2};

// A4 ids: 0 = 0, 1 = bot, 2 = top, 3 = 1.
inline const std::vector<std::string> a4_labels = {"0", "bot", "top", "1"};
inline const std::vector<elem> neg_g4 = {3, 1, 2, 0};
inline const std::vector<elem> neg_f4 = {3, 2, 1, 0};
inline const std::vector<elem> imp_ol4 = {2, 2, 2, 2, 2, 2, 2, 2, 0, 1, 2, 3, 0, 1, 2, 3};
inline const std::vector<elem> and_ol4 = {0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 2, 3, 0, 1, 3, 3};
inline const std::vector<elem> or_ol4 = {0, 1, 0, 3, 1, 3, 1, 3, 0, 1, 2, 3, 3, 3, 3, 3};
inline const std::vector<elem> imp_df4 = {2, 2, 2, 2, 0, 1, 0, 1, 2, 2, 2, 2, 0, 1, 2, 3};
inline const std::vector<elem> and_k4 = {0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 2, 2, 0, 1, 2, 3};
inline const std::vector<elem> or_k4 = {0, 1, 2, 3, 1, 1, 3, 3, 2, 3, 2, 3, 3, 3, 3, 3};
inline const std::vector<elem> imp_f4 = {2, 2, 2, 2, 2, 3, 2, 3, 0, 0, 2, 2, 0, 1, 2, 3};

} // namespace tables

inline const std::vector<std::string>& matrix_names() {
  static const std::vector<std::string> n = {"DF3",  "OL3",  "CN3",  "F3",   "DFg4", "OLg4",
                                             "CNg4", "Fg4",  "DFf4", "OLf4", "CNf4", "Ff4"};
  return n;
}

namespace detail {

inline logical_matrix matrix3(const std::string& name, const std::vector<elem>& conj, const std::vector<elem>& disj,
                              const std::vector<elem>& imp) {
  using namespace tables;
  algebra a(name, a3_labels,
            {operation::unary("neg", neg3), operation::binary("and", conj), operation::binary("or", disj),
             operation::binary("imp", imp), operation::constant("top", 1)});
  return {a, {1, 2}};
}

inline logical_matrix matrix4(const std::string& name, const std::vector<elem>& neg, const std::vector<elem>& conj,
                              const std::vector<elem>& disj, const std::vector<elem>* imp) {
  using namespace tables;
  std::vector<operation> ops = {operation::unary("neg", neg), operation::binary("and", conj),
                                operation::binary("or", disj)};
  if (imp) ops.push_back(operation::binary("imp", *imp));
  for (auto [n, v] : {std::pair{"zero", 0}, std::pair{"bot", 1}, std::pair{"top", 2}, std::pair{"one", 3}})
    ops.push_back(operation::constant(n, elem(v)));
  return {algebra(name, a4_labels, std::move(ops)), {2, 3}};
}

} // namespace detail

/// One of the twelve built-in matrices. Throws error on an unknown name.
inline logical_matrix named_matrix(std::string_view name) {
  using namespace tables;
  using detail::matrix3;
  using detail::matrix4;
  std::string n(name);
  if (n == "DF3") return matrix3(n, and_k3, or_k3, imp_df3);
  if (n == "OL3") return matrix3(n, and_ol3, or_ol3, imp_ol3);
  if (n == "CN3") return matrix3(n, and_k3, or_k3, imp_ol3);
  if (n == "F3") return matrix3(n, and_k3, or_k3, imp_f3);
  if (n == "OLg4") return matrix4(n, neg_g4, and_ol4, or_ol4, &imp_ol4);
  if (n == "DFg4") return matrix4(n, neg_g4, and_k4, or_k4, &imp_df4);
  if (n == "CNg4") return matrix4(n, neg_g4, and_k4, or_k4, &imp_ol4);
  if (n == "Fg4") return matrix4(n, neg_g4, and_k4, or_k4, &imp_f4);
  if (n == "DFf4") return matrix4(n, neg_f4, and_k4, or_k4, nullptr);
  if (n == "OLf4") return matrix4(n, neg_f4, and_ol4, or_ol4, &imp_ol4);
  if (n == "CNf4") return matrix4(n, neg_f4, and_k4, or_k4, &imp_ol4);
  if (n == "Ff4") return matrix4(n, neg_f4, and_k4, or_k4, &imp_f4);
  throw error("unknown matrix '" + n + "'");
}

/// Every table connective defined on the carrier of `m` (3 or 4 elements), by name.
/// Suffixed names are reachable from formulas as ->OL, &K, |K and so on.
inline std::vector<operation> connective_library(std::size_t carrier) {
  using namespace tables;
  if (carrier == 3)
    return {operation::binary("and_k", and_k3),   operation::binary("or_k", or_k3),
            operation::binary("and_ol", and_ol3), operation::binary("or_ol", or_ol3),
            operation::binary("imp_df", imp_df3), operation::binary("imp_ol", imp_ol3),
            operation::binary("imp_f", imp_f3)};
  if (carrier == 4)
    return {operation::unary("neg_g", neg_g4),    operation::unary("neg_f", neg_f4),
            operation::binary("and_k", and_k4),   operation::binary("or_k", or_k4),
            operation::binary("and_ol", and_ol4), operation::binary("or_ol", or_ol4),
            operation::binary("imp_df", imp_df4), operation::binary("imp_ol", imp_ol4),
            operation::binary("imp_f", imp_f4)};
  return {};
}

/// `m` plus any library connective it does not already name. Only meaningful for the built-in carriers.
inline logical_matrix with_library(const logical_matrix& m) {
  algebra a = m.alg;
  for (auto& o : connective_library(a.size()))
    if (!a.has(o.name)) a = with_operation(a, o);
  return {a, m.designated};
}

// ---------------------------------------------------------------------------
// Tables and export

/// Value table of a connective or formula; `values` in lexicographic argument order.
struct value_table {
  std::string title;
  std::vector<std::string> variables;
  std::vector<elem> values;
  int arity() const { return int(variables.size()); }
};

inline value_table connective_table(const logical_matrix& m, const formula& f) {
  auto vars = variables(f);
  return {render(f), vars, term_table(m.alg, to_term(f, vars), int(vars.size()))};
}

/// `item` is a connective name (table of the operation) or formula text.
inline value_table connective_table(const logical_matrix& m, std::string_view item) {
  if (auto idx = m.alg.op_index(item)) {
    const auto& o = m.alg.operations()[*idx];
    std::vector<std::string> vars;
    if (o.arity >= 1) vars.push_back("p");
    if (o.arity == 2) vars.push_back("q");
    return {o.name, vars, o.table};
  }
  return connective_table(m, parse_formula(item));
}

namespace detail {
inline void require_exportable(const value_table& t) {
  if (t.arity() > 2)
    throw error("table of '" + t.title + "' has " + std::to_string(t.arity()) + " variables; export supports at most 2");
}
} // namespace detail

inline std::string to_text(const algebra& a, const value_table& t) {
  detail::require_exportable(t);
  std::size_t w = 0;
  for (const auto& l : a.labels()) w = std::max(w, l.size());
  w = std::max(w, t.title.size());
  auto cell = [&](const std::string& s) { return s + std::string(w - s.size() + 1, ' '); };
  std::ostringstream out;
  const std::size_t n = a.size();
  if (t.arity() == 0) {
    out << t.title << " = " << a.label(t.values[0]) << "\n";
  } else if (t.arity() == 1) {
    w = std::max(w, t.variables[0].size());
    out << cell(t.variables[0]) << "| " << t.title << "\n" << std::string(w + 1, '-') << "+" << std::string(w + 2, '-') << "\n";
    for (std::size_t i = 0; i < n; ++i) out << cell(a.label(elem(i))) << "| " << a.label(t.values[i]) << "\n";
  } else {
    out << cell(t.title) << "|";
    for (std::size_t j = 0; j < n; ++j) out << " " << cell(a.label(elem(j)));
    out << "\n" << std::string(w + 1, '-') << "+" << std::string(n * (w + 2), '-') << "\n";
    for (std::size_t i = 0; i < n; ++i) {
      out << cell(a.label(elem(i))) << "|";
      for (std::size_t j = 0; j < n; ++j) out << " " << cell(a.label(t.values[i * n + j]));
      out << "\n";
    }
  }
  std::string s = out.str();
  // trim trailing spaces per line
  std::string r;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) {
    line.erase(line.find_last_not_of(' ') + 1);
    r += line + "\n";
  }
  return r;
}

inline std::string to_csv(const algebra& a, const value_table& t) {
  detail::require_exportable(t);
  std::ostringstream out;
  const std::size_t n = a.size();
  if (t.arity() == 0) {
    out << a.label(t.values[0]) << "\n";
  } else if (t.arity() == 1) {
    out << t.variables[0] << "," << t.title << "\n";
    for (std::size_t i = 0; i < n; ++i) out << a.label(elem(i)) << "," << a.label(t.values[i]) << "\n";
  } else {
    out << t.title;
    for (std::size_t j = 0; j < n; ++j) out << "," << a.label(elem(j));
    out << "\n";
    for (std::size_t i = 0; i < n; ++i) {
      out << a.label(elem(i));
      for (std::size_t j = 0; j < n; ++j) out << "," << a.label(t.values[i * n + j]);
      out << "\n";
    }
  }
  return out.str();
}

inline nlohmann::json to_json(const algebra& a, const value_table& t) {
  detail::require_exportable(t);
  nlohmann::json j;
  j["title"] = t.title;
  j["variables"] = t.variables;
  j["elements"] = a.labels();
  const std::size_t n = a.size();
  if (t.arity() == 0) {
    j["table"] = a.label(t.values[0]);
  } else if (t.arity() == 1) {
    std::vector<std::string> row;
    for (elem v : t.values) row.push_back(a.label(v));
    j["table"] = row;
  } else {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::string> row;
      for (std::size_t k = 0; k < n; ++k) row.push_back(a.label(t.values[i * n + k]));
      rows.push_back(row);
    }
    j["table"] = rows;
  }
  return j;
}

} // namespace twistlab
