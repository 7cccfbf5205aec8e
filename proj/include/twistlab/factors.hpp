#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "twistlab/algebra.hpp"
#include "twistlab/matrix.hpp"

namespace twistlab {

// Small factor algebras. Each carries and, or, neg, imp, zero, one; class
// membership is decided by classify, not assumed.

namespace detail {

template <class Meet, class Join, class Neg, class Imp>
algebra lattice_algebra(std::string name, std::vector<std::string> labels, elem zero, elem one, Meet meet,
                        Join join, Neg neg, Imp imp) {
  const elem n = elem(labels.size());
  std::vector<elem> m, j, i, u;
  for (elem x = 0; x < n; ++x) {
    u.push_back(neg(x));
    for (elem y = 0; y < n; ++y) {
      m.push_back(meet(x, y));
      j.push_back(join(x, y));
      i.push_back(imp(x, y));
    }
  }
  return algebra(std::move(name), std::move(labels),
                 {operation::binary("and", m), operation::binary("or", j), operation::unary("neg", u),
                  operation::binary("imp", i), operation::constant("zero", zero), operation::constant("one", one)});
}

} // namespace detail

/// The n-element chain 0 < ... < 1 with order-reversing negation and Heyting implication.
inline algebra chain(std::size_t n) {
  static const std::vector<std::vector<std::string>> names = {
    {"0"}, {"0", "1"}, {"0", "a", "1"}, {"0", "a", "b", "1"}};
  std::vector<std::string> labels;
  if (n >= 1 && n <= names.size()) {
    labels = names[n - 1];
  } else {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
  }
  const elem top = elem(n - 1);
  return detail::lattice_algebra(
    "chain" + std::to_string(n), labels, 0, top, [](elem x, elem y) { return std::min(x, y); },
    [](elem x, elem y) { return std::max(x, y); }, [=](elem x) { return top - x; },
    [=](elem x, elem y) { return x <= y ? top : y; });
}

/// The Boolean algebra 2^k; elements are k-bit strings, most significant bit first.
inline algebra boolean_power(unsigned k) {
  const elem n = elem(1u << k), full = n - 1;
  std::vector<std::string> labels;
  for (elem x = 0; x < n; ++x) {
    std::string s;
    for (int b = int(k) - 1; b >= 0; --b) s += (x >> b) & 1 ? '1' : '0';
    labels.push_back(k == 0 ? "0" : s);
  }
  return detail::lattice_algebra(
    "boolean" + std::to_string(n), labels, 0, full, [](elem x, elem y) { return x & y; },
    [](elem x, elem y) { return x | y; }, [=](elem x) { return full & ~x; },
    [=](elem x, elem y) { return (full & ~x) | y; });
}

/// The four-element lattice with top 1, bottom 0 and incomparable a, b; Boolean complement a <-> b.
inline algebra square() {
  // ids 0, a, b, 1 as bit patterns 00, 10, 01, 11
  static const elem bits[] = {0, 2, 1, 3};
  static const elem from_bits[] = {0, 2, 1, 3};
  auto lift = [](auto f) { return [=](elem x, elem y) { return from_bits[f(bits[x], bits[y]) & 3]; }; };
  return detail::lattice_algebra(
    "square", {"0", "a", "b", "1"}, 0, 3, lift([](elem x, elem y) { return x & y; }),
    lift([](elem x, elem y) { return x | y; }), [](elem x) { return from_bits[~bits[x] & 3]; },
    lift([](elem x, elem y) { return ~x | y; }));
}

/// The three-element Kleene algebra (chain with reversal).
inline algebra kleene3() { return chain(3).renamed("kleene3"); }

/// The four-element chain as a De Morgan algebra: neg swaps 0/1 and a/b.
inline algebra demorgan_chain4() { return chain(4).renamed("demorgan-chain4"); }

/// The square with a negation fixing a and b: a De Morgan algebra that is not Kleene.
inline algebra m4() {
  algebra s = square();
  return with_operation(s, operation::unary("neg", {3, 1, 2, 0})).renamed("m4");
}

/// The same algebra with elements renamed by `labels`.
inline algebra relabeled(const algebra& a, std::vector<std::string> labels, std::string name) {
  return algebra(std::move(name), std::move(labels), a.operations());
}

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> n = {"trivial",  "chain1",   "chain2",          "chain3", "chain4",
                                             "square",   "boolean1", "boolean2",        "boolean4", "boolean8",
                                             "kleene3",  "m4",       "demorgan-chain4"};
  return n;
}

/// A built-in factor algebra, or the algebra of a named matrix. Throws error on unknown names.
inline algebra builtin_algebra(std::string_view name) {
  std::string n(name);
  if (n == "trivial") return chain(1).renamed("trivial");
  if (n.rfind("chain", 0) == 0 && n.size() == 6 && n[5] >= '1' && n[5] <= '4') return chain(std::size_t(n[5] - '0'));
  if (n == "square") return square();
  if (n == "boolean1") return boolean_power(0);
  if (n == "boolean2") return boolean_power(1);
  if (n == "boolean4") return boolean_power(2);
  if (n == "boolean8") return boolean_power(3);
  if (n == "kleene3") return kleene3();
  if (n == "m4") return m4();
  if (n == "demorgan-chain4") return demorgan_chain4();
  for (const auto& m : matrix_names())
    if (m == n) return named_matrix(n).alg;
  throw error("unknown built-in algebra '" + n + "'");
}

} // namespace twistlab
