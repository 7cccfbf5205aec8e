#pragma once

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twistlab/error.hpp"
#include "twistlab/term.hpp"

namespace twistlab {

/// Propositional formula: a named variable, or a connective applied to 0-2 children.
///
/// Connectives are stored by signature name ("neg", "and", "imp", "top", ...).
struct formula {
  bool is_var = false;
  std::string name;  // variable name or connective name
  std::vector<formula> args;

  static formula var(std::string n) { return {true, std::move(n), {}}; }
  static formula app(std::string op, std::vector<formula> args = {}) {
    return {false, std::move(op), std::move(args)};
  }

  friend bool operator==(const formula&, const formula&) = default;
};

namespace detail {

// Binding strength of the infix families; higher binds tighter.
enum prec : int { p_imp = 1, p_or = 2, p_and = 3, p_unary = 4, p_atom = 5 };

inline std::string lower(std::string s) {
  for (auto& c : s) c = char(std::tolower(static_cast<unsigned char>(c)));
  return s;
}
inline std::string upper(std::string s) {
  for (auto& c : s) c = char(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

// "imp" -> (p_imp, ""), "or_k" -> (p_or, "K"); 0 when not an infix name.
inline std::pair<int, std::string> infix_of(const std::string& op) {
  auto split = [&](std::string_view base, int p) -> std::pair<int, std::string> {
    if (op == base) return {p, ""};
    if (op.size() > base.size() + 1 && op.compare(0, base.size(), base) == 0 && op[base.size()] == '_') {
      std::string suffix = op.substr(base.size() + 1);
      bool ok = std::all_of(suffix.begin(), suffix.end(), [](char c) { return c >= 'a' && c <= 'z'; });
      if (ok && suffix != "t" && suffix != "b") return {p, upper(suffix)};
    }
    return {0, ""};
  };
  for (auto [base, p] : {std::pair{std::string_view("imp"), int(p_imp)},
                         std::pair{std::string_view("or"), int(p_or)},
                         std::pair{std::string_view("and"), int(p_and)}}) {
    auto r = split(base, p);
    if (r.first) return r;
  }
  return {0, ""};
}

inline const char* infix_token(int p) {
  switch (p) {
    case p_imp: return "->";
    case p_or: return "|";
    default: return "&";
  }
}

inline const char* constant_token(const std::string& op) {
  if (op == "top") return "T";
  if (op == "bot") return "B";
  if (op == "zero") return "0";
  if (op == "one") return "1";
  return nullptr;
}

class parser {
public:
  explicit parser(std::string_view s) : s_(s) {}

  formula run() {
    formula f = parse_imp();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  // Uppercase connective suffix after an infix token; T and B stay constants.
  std::string suffix() {
    std::size_t e = pos_;
    while (e < s_.size() && std::isupper(static_cast<unsigned char>(s_[e]))) ++e;
    std::string run(s_.substr(pos_, e - pos_));
    if (run.empty() || run == "T" || run == "B") return "";
    pos_ = e;
    return "_" + lower(run);
  }

  bool accept(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  formula parse_imp() {
    formula lhs = parse_or();
    if (accept("->")) {
      std::string op = "imp" + suffix();
      formula rhs = parse_imp();
      return formula::app(op, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  formula parse_or() {
    formula lhs = parse_and();
    while (accept("|")) {
      std::string op = "or" + suffix();
      lhs = formula::app(op, {std::move(lhs), parse_and()});
    }
    return lhs;
  }

  formula parse_and() {
    formula lhs = parse_unary();
    while (accept("&")) {
      std::string op = "and" + suffix();
      lhs = formula::app(op, {std::move(lhs), parse_unary()});
    }
    return lhs;
  }

  formula parse_unary() {
    if (accept("~")) return formula::app("neg", {parse_unary()});
    return parse_atom();
  }

  formula parse_atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      formula f = parse_imp();
      if (!accept(")")) fail("expected ')'");
      return f;
    }
    switch (c) {
      case 'T': ++pos_; return formula::app("top");
      case 'B': ++pos_; return formula::app("bot");
      case '0': ++pos_; return formula::app("zero");
      case '1': ++pos_; return formula::app("one");
      default: break;
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t b = pos_;
      while (pos_ < s_.size() && (std::islower(static_cast<unsigned char>(s_[pos_])) ||
                                  std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string id(s_.substr(b, pos_ - b));
      std::size_t save = pos_;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '(') {
        // generic application name(a, b, ...)
        ++pos_;
        std::vector<formula> args;
        skip();
        if (pos_ < s_.size() && s_[pos_] == ')') {
          ++pos_;
        } else {
          args.push_back(parse_imp());
          while (accept(",")) args.push_back(parse_imp());
          if (!accept(")")) fail("expected ')' or ','");
        }
        return formula::app(id, std::move(args));
      }
      pos_ = save;
      return formula::var(id);
    }
    fail("unknown token '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

inline int precedence(const formula& f) {
  if (f.is_var || f.args.empty()) return p_atom;
  if (f.args.size() == 1 && f.name == "neg") return p_unary;
  if (f.args.size() == 2) {
    if (int p = infix_of(f.name).first) return p;
  }
  return p_atom;  // generic application
}

} // namespace detail

/// Parses the ASCII grammar: ~ binds tightest, then &, |, and right-associative ->.
inline formula parse_formula(std::string_view text) { return detail::parser(text).run(); }

/// Minimal-parentheses rendering; parse_formula(render(f)) == f.
inline std::string render(const formula& f) {
  using namespace detail;
  if (f.is_var) return f.name;
  if (f.args.empty()) {
    if (const char* t = constant_token(f.name)) return t;
    return f.name + "()";
  }
  auto wrap = [](const formula& c, bool paren) {
    std::string s = render(c);
    return paren ? "(" + s + ")" : s;
  };
  int p = precedence(f);
  if (p == p_unary) return "~" + wrap(f.args[0], precedence(f.args[0]) < p_unary);
  if (p == p_atom) {
    std::string s = f.name + "(";
    for (std::size_t i = 0; i < f.args.size(); ++i) {
      if (i) s += ", ";
      s += render(f.args[i]);
    }
    return s + ")";
  }
  auto [_, suffix] = infix_of(f.name);
  int pl = precedence(f.args[0]), pr = precedence(f.args[1]);
  // & and | associate left, -> associates right.
  bool left_paren = p == p_imp ? pl <= p : pl < p;
  bool right_paren = p == p_imp ? pr < p : pr <= p;
  return wrap(f.args[0], left_paren) + " " + infix_token(p) + suffix + " " + wrap(f.args[1], right_paren);
}

/// Distinct variable names, sorted.
inline std::vector<std::string> variables(const formula& f) {
  std::set<std::string> acc;
  auto walk = [&](auto&& self, const formula& g) -> void {
    if (g.is_var) {
      acc.insert(g.name);
      return;
    }
    for (const auto& a : g.args) self(self, a);
  };
  walk(walk, f);
  return {acc.begin(), acc.end()};
}

inline std::vector<std::string> variables(const std::vector<formula>& fs) {
  std::set<std::string> acc;
  for (const auto& f : fs)
    for (auto& v : variables(f)) acc.insert(v);
  return {acc.begin(), acc.end()};
}

/// Converts to a term whose variable indices follow `order`.
inline term to_term(const formula& f, const std::vector<std::string>& order) {
  if (f.is_var) {
    auto it = std::find(order.begin(), order.end(), f.name);
    if (it == order.end()) throw evaluation_error("variable '" + f.name + "' is not in the variable order");
    return term::variable(int(it - order.begin()));
  }
  std::vector<term> args;
  args.reserve(f.args.size());
  for (const auto& a : f.args) args.push_back(to_term(a, order));
  return term::apply(f.name, std::move(args));
}

/// Converts a term back to a formula, naming variables from `names` (default p, q, r, s, ...).
inline formula to_formula(const term& t, const std::vector<std::string>& names = {}) {
  if (t.is_var()) {
    if (std::size_t(t.var) < names.size()) return formula::var(names[t.var]);
    static const char* defaults[] = {"p", "q", "r", "s"};
    if (t.var < 4) return formula::var(defaults[t.var]);
    return formula::var("v" + std::to_string(t.var));
  }
  std::vector<formula> args;
  for (const auto& a : t.args) args.push_back(to_formula(a, names));
  return formula::app(t.op, std::move(args));
}

inline std::string render(const term& t, const std::vector<std::string>& names = {}) {
  return render(to_formula(t, names));
}

/// Parses "lhs = rhs" into an equation over the sorted variables of both sides.
inline equation parse_equation(std::string_view text, std::string name = {}) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos) throw parse_error("expected '='", text.size());
  formula l, r;
  try {
    l = parse_formula(text.substr(0, eq));
  } catch (const parse_error& e) {
    throw parse_error("in left-hand side", e.offset());
  }
  try {
    r = parse_formula(text.substr(eq + 1));
  } catch (const parse_error& e) {
    throw parse_error("in right-hand side", eq + 1 + e.offset());
  }
  auto vars = variables(std::vector<formula>{l, r});
  return {to_term(l, vars), to_term(r, vars), std::move(name), vars};
}

/// Parses "a = b, c = d => e = f"; all parts share one variable space.
inline quasi_equation parse_quasiequation(std::string_view text, std::string name = {}) {
  auto arrow = text.find("=>");
  if (arrow == std::string_view::npos) throw parse_error("expected '=>'", text.size());
  std::vector<std::pair<formula, formula>> parts;
  auto side = [&](std::string_view piece, std::size_t base) {
    auto eq = piece.find('=');
    if (eq == std::string_view::npos) throw parse_error("expected '='", base + piece.size());
    try {
      parts.emplace_back(parse_formula(piece.substr(0, eq)), parse_formula(piece.substr(eq + 1)));
    } catch (const parse_error& e) {
      throw parse_error("in quasi-equation", base + e.offset());
    }
  };
  std::string_view prem = text.substr(0, arrow);
  std::size_t start = 0;
  while (start <= prem.size()) {
    std::size_t comma = prem.find(',', start);
    if (comma == std::string_view::npos) comma = prem.size();
    side(prem.substr(start, comma - start), start);
    start = comma + 1;
  }
  side(text.substr(arrow + 2), arrow + 2);
  std::vector<formula> all;
  for (auto& [l, r] : parts) {
    all.push_back(l);
    all.push_back(r);
  }
  auto vars = variables(all);
  quasi_equation q;
  q.name = std::move(name);
  for (std::size_t i = 0; i + 1 < parts.size(); ++i)
    q.premises.push_back({to_term(parts[i].first, vars), to_term(parts[i].second, vars), {}, vars});
  q.conclusion = {to_term(parts.back().first, vars), to_term(parts.back().second, vars), q.name, vars};
  return q;
}

} // namespace twistlab
