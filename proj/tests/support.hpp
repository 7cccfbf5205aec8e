#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "twistlab/twistlab.hpp"

namespace twistlab::testing {

/// Seed of the current run (--seed N or TWISTLAB_SEED; fixed default otherwise).
std::uint64_t seed();

/// A generator for one test, derived from the run seed and a per-test salt.
inline std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(seed() * 0x9e3779b97f4a7c15ULL + salt); }

inline std::size_t pick(std::mt19937_64& g, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(g); }

/// Random algebra with one unary "f" and binary "g", "h" on n elements.
inline algebra random_algebra(std::mt19937_64& g, std::size_t n, const std::string& name = "R") {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<elem> f(n), b1(n * n), b2(n * n);
  for (auto& x : f) x = elem(pick(g, n));
  for (auto& x : b1) x = elem(pick(g, n));
  for (auto& x : b2) x = elem(pick(g, n));
  return algebra(name, labels, {operation::unary("f", f), operation::binary("g", b1), operation::binary("h", b2)});
}

/// Random term over the operations of `a` with variables 0..vars-1.
inline term random_term(std::mt19937_64& g, const algebra& a, int vars, int depth) {
  if (depth == 0 || pick(g, 4) == 0) return term::variable(int(pick(g, std::size_t(vars))));
  const auto& o = a.operations()[pick(g, a.operations().size())];
  std::vector<term> args;
  for (int i = 0; i < o.arity; ++i) args.push_back(random_term(g, a, vars, depth - 1));
  return term::apply(o.name, std::move(args));
}

/// Reference evaluator: direct recursion over the term with name lookup at every node.
inline elem naive_eval(const algebra& a, const term& t, const std::vector<elem>& env) {
  if (t.var >= 0) return env.at(std::size_t(t.var));
  for (const auto& o : a.operations()) {
    if (o.name != t.op) continue;
    if (o.arity == 0) return o.table.at(0);
    if (o.arity == 1) return o.table.at(naive_eval(a, t.args.at(0), env));
    return o.table.at(naive_eval(a, t.args.at(0), env) * a.size() + naive_eval(a, t.args.at(1), env));
  }
  throw std::logic_error("no operation " + t.op);
}

/// Table from whitespace-separated label rows, e.g. {"0 0 0", "0 1/2 1", "0 1 1"}.
inline std::vector<elem> grid(const std::vector<std::string>& labels, const std::vector<std::string>& rows) {
  std::vector<elem> out;
  for (const auto& r : rows) {
    std::istringstream in(r);
    for (std::string cell; in >> cell;) {
      std::size_t i = 0;
      while (i < labels.size() && labels[i] != cell) ++i;
      if (i == labels.size()) throw std::logic_error("bad cell " + cell);
      out.push_back(elem(i));
    }
  }
  return out;
}

inline std::vector<elem> ids(const algebra& a, const std::vector<std::string>& labels) {
  std::vector<elem> out;
  for (const auto& l : labels) out.push_back(*a.find_label(l));
  return out;
}

} // namespace twistlab::testing
