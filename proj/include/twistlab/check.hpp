#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistlab/algebra.hpp"
#include "twistlab/term.hpp"

namespace twistlab {

/// Outcome of an exhaustive check. A counterexample is present iff `holds`
/// is false and is always the lexicographically least failing assignment.
struct check_result {
  bool holds = true;
  std::optional<assignment> counterexample;
  std::string law;                     // name of the failing law, if any
  std::vector<std::string> variables;  // display names for the counterexample

  explicit operator bool() const noexcept { return holds; }

  static check_result ok() { return {}; }
  static check_result fail(assignment witness, std::string law = {},
                           std::vector<std::string> variables = {}) {
    return {false, std::move(witness), std::move(law), std::move(variables)};
  }
};

/// "x=a, y=b" using element labels; variables default to x0, x1, ...
inline std::string describe(const algebra& a, const check_result& r) {
  if (r.holds || !r.counterexample) return {};
  std::string out;
  const auto& w = *r.counterexample;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += i < r.variables.size() ? r.variables[i] : "x" + std::to_string(i);
    out += "=" + a.label(w[i]);
  }
  return out;
}

namespace detail {

// Visits every assignment of k variables in lexicographic order until `f` returns false.
template <class F>
bool for_each_assignment(std::size_t n, int k, F&& f) {
  assignment env(k, 0);
  while (true) {
    if (!f(env)) return false;
    int i = k - 1;
    for (; i >= 0; --i) {
      if (++env[i] < n) break;
      env[i] = 0;
    }
    if (i < 0) return true;
  }
}

} // namespace detail

inline check_result check_equation(const algebra& a, const equation& eq) {
  compiled_term l(a, eq.lhs), r(a, eq.rhs);
  std::optional<assignment> witness;
  detail::for_each_assignment(a.size(), eq.arity(), [&](const assignment& env) {
    if (l(env) == r(env)) return true;
    witness = env;
    return false;
  });
  if (!witness) return check_result::ok();
  return check_result::fail(*witness, eq.name, eq.variables);
}

inline check_result check_quasiequation(const algebra& a, const quasi_equation& q) {
  std::vector<std::pair<compiled_term, compiled_term>> prem;
  prem.reserve(q.premises.size());
  for (const auto& p : q.premises) prem.emplace_back(compiled_term(a, p.lhs), compiled_term(a, p.rhs));
  compiled_term l(a, q.conclusion.lhs), r(a, q.conclusion.rhs);
  std::optional<assignment> witness;
  detail::for_each_assignment(a.size(), q.arity(), [&](const assignment& env) {
    for (auto& [pl, pr] : prem)
      if (pl(env) != pr(env)) return true;
    if (l(env) == r(env)) return true;
    witness = env;
    return false;
  });
  if (!witness) return check_result::ok();
  return check_result::fail(*witness, q.name, q.conclusion.variables);
}

} // namespace twistlab
