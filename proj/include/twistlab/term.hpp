#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "twistlab/algebra.hpp"
#include "twistlab/error.hpp"

namespace twistlab {

/// A term: a variable (by index) or an operation name applied to subterms.
struct term {
  int var = -1;  // >= 0 for variables
  std::string op;
  std::vector<term> args;

  static term variable(int index) {
    term t;
    t.var = index;
    return t;
  }
  static term apply(std::string op, std::vector<term> args = {}) {
    term t;
    t.op = std::move(op);
    t.args = std::move(args);
    return t;
  }

  bool is_var() const noexcept { return var >= 0; }

  /// One more than the largest variable index (0 for ground terms).
  int arity() const {
    if (is_var()) return var + 1;
    int m = 0;
    for (const auto& a : args) m = std::max(m, a.arity());
    return m;
  }

  int depth() const {
    if (is_var()) return 0;
    int d = 0;
    for (const auto& a : args) d = std::max(d, a.depth());
    return d + 1;
  }

  friend bool operator==(const term&, const term&) = default;
};

struct equation {
  term lhs, rhs;
  std::string name;
  std::vector<std::string> variables;  // display names, by index; may be empty

  int arity() const { return std::max(lhs.arity(), rhs.arity()); }
};

struct quasi_equation {
  std::vector<equation> premises;
  equation conclusion;
  std::string name;

  int arity() const {
    int m = conclusion.arity();
    for (const auto& p : premises) m = std::max(m, p.arity());
    return m;
  }
};

/// A term flattened to postfix against one algebra's operation indices.
class compiled_term {
public:
  compiled_term(const algebra& a, const term& t) : alg_(&a) { emit(t); }

  elem operator()(const assignment& env) const {
    stack_.clear();
    for (const auto& in : code_) {
      if (in.var >= 0) {
        if (std::size_t(in.var) >= env.size())
          throw evaluation_error("variable " + std::to_string(in.var) + " is unbound");
        stack_.push_back(env[in.var]);
        continue;
      }
      const auto& o = alg_->operations()[in.op];
      elem r;
      switch (o.arity) {
        case 0: r = o.table[0]; break;
        case 1: r = o.table[stack_.back()]; stack_.pop_back(); break;
        default: {
          elem y = stack_.back(); stack_.pop_back();
          elem x = stack_.back(); stack_.pop_back();
          r = o.table[std::size_t(x) * alg_->size() + y];
        }
      }
      stack_.push_back(r);
    }
    return stack_.back();
  }

private:
  struct instr {
    int var;
    std::size_t op;
  };

  void emit(const term& t) {
    if (t.is_var()) {
      code_.push_back({t.var, 0});
      return;
    }
    auto idx = alg_->op_index(t.op);
    if (!idx)
      throw signature_error("algebra '" + alg_->name() + "' has no operation '" + t.op + "'");
    int arity = alg_->operations()[*idx].arity;
    if (arity != int(t.args.size()))
      throw signature_error("operation '" + t.op + "' has arity " + std::to_string(arity) +
                            ", applied to " + std::to_string(t.args.size()) + " arguments");
    for (const auto& a : t.args) emit(a);
    code_.push_back({-1, *idx});
  }

  const algebra* alg_;
  std::vector<instr> code_;
  mutable std::vector<elem> stack_;
};

inline elem eval_term(const algebra& a, const term& t, const assignment& env) {
  return compiled_term(a, t)(env);
}

/// Full value table of `t` over `k` variables, assignments in lexicographic order
/// (first variable most significant).
inline std::vector<elem> term_table(const algebra& a, const term& t, int k) {
  compiled_term c(a, t);
  const std::size_t n = a.size();
  std::size_t total = 1;
  for (int i = 0; i < k; ++i) total *= n;
  std::vector<elem> out;
  out.reserve(total);
  assignment env(k, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    out.push_back(c(env));
    for (int i = k - 1; i >= 0; --i) {
      if (++env[i] < n) break;
      env[i] = 0;
    }
  }
  return out;
}

} // namespace twistlab
