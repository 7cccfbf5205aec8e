#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "twistlab/check.hpp"
#include "twistlab/matrix.hpp"
#include "twistlab/term.hpp"

namespace twistlab {

/// A binary operation on an n-element carrier as a row-major n*n table.
using binary_table = std::vector<elem>;

namespace detail {

class clone_engine;

// Open-addressing map from nonzero 64-bit codes to member indices.
class code_index {
public:
  std::optional<std::size_t> find(std::uint64_t code) const {
    if (slots_.empty()) return std::nullopt;
    for (std::size_t i = mix(code) & mask_;; i = (i + 1) & mask_) {
      if (slots_[i].code == code) return slots_[i].index;
      if (slots_[i].code == 0) return std::nullopt;
    }
  }

  bool insert(std::uint64_t code, std::size_t index) {
    if ((count_ + 1) * 2 > slots_.size()) grow();
    for (std::size_t i = mix(code) & mask_;; i = (i + 1) & mask_) {
      if (slots_[i].code == code) return false;
      if (slots_[i].code == 0) {
        slots_[i] = {code, std::uint32_t(index)};
        ++count_;
        return true;
      }
    }
  }

private:
  struct slot {
    std::uint64_t code = 0;
    std::uint32_t index = 0;
  };

  static std::size_t mix(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return std::size_t(x);
  }

  void grow() {
    std::vector<slot> old = std::move(slots_);
    slots_.assign(std::max<std::size_t>(64, old.size() * 2), slot{});
    mask_ = slots_.size() - 1;
    count_ = 0;
    for (const auto& e : old)
      if (e.code) insert(e.code, e.index);
  }

  std::vector<slot> slots_;
  std::size_t mask_ = 0, count_ = 0;
};

} // namespace detail

/// The binary fragment of the clone generated by a basis, with a witness term per table.
///
/// Tables are discovered level by level (depth of the witness), and within a
/// level in order of (basis position, rank of first argument, rank of second
/// argument), so every table keeps the least witness in that order.
class clone_fragment {
public:
  std::string matrix;
  std::vector<std::string> basis;
  std::size_t cap = 0;
  bool closed = false;
  std::vector<std::size_t> level_totals;  // cumulative member count after each depth

  std::size_t size() const { return tables_.size(); }
  const binary_table& table(std::size_t i) const { return tables_[i]; }
  int depth(std::size_t i) const { return nodes_[i].depth; }

  std::optional<std::size_t> find(const binary_table& t) const {
    if (packed_) {
      return small_.find(pack(t));
    }
    auto it = large_.find(std::string(t.begin(), t.end()));
    if (it == large_.end()) return std::nullopt;
    return it->second;
  }

  /// Witness over variables p (index 0) and q (index 1).
  term witness(std::size_t i) const { return build(nodes_[i]); }

private:
  friend class detail::clone_engine;

  struct node {
    int op = -1;  // basis position, -1 for leaves
    long a = -1, b = -1;
    int depth = 0;
    term leaf;
  };

  term build(const node& nd) const {
    if (nd.op < 0) return nd.leaf;
    std::vector<term> args;
    if (nd.a >= 0) args.push_back(witness(std::size_t(nd.a)));
    if (nd.b >= 0) args.push_back(witness(std::size_t(nd.b)));
    return term::apply(basis[std::size_t(nd.op)], std::move(args));
  }

  // base-n digits, offset by one so that 0 marks an empty slot
  std::uint64_t pack(const binary_table& t) const {
    std::uint64_t k = 0;
    for (elem v : t) k = k * radix_ + v;
    return k + 1;
  }

  bool insert(const binary_table& t, int op, long a, long b, int depth, term leaf = {}) {
    bool fresh;
    if (packed_)
      fresh = small_.insert(pack(t), tables_.size());
    else
      fresh = large_.try_emplace(std::string(t.begin(), t.end()), tables_.size()).second;
    if (!fresh) return false;
    tables_.push_back(t);
    nodes_.push_back({op, a, b, depth, std::move(leaf)});
    return true;
  }

  bool packed_ = false;
  std::uint64_t radix_ = 0;
  std::vector<binary_table> tables_;
  std::vector<node> nodes_;
  detail::code_index small_;
  std::unordered_map<std::string, std::size_t> large_;
};

namespace detail {

// Builds a clone fragment one depth at a time.
class clone_engine {
public:
  clone_engine(const algebra& a, const std::vector<std::string>& basis, std::size_t cap)
    : n_(a.size()), cells_(n_ * n_) {
    c_.matrix = a.name();
    c_.basis = basis;
    c_.cap = cap;
    for (const auto& b : basis) ops_.push_back(&a.op(b));
    // every table fits a 64-bit base-n code when n^(n*n) < 2^64
    double bits = double(cells_) * std::log2(double(std::max<std::size_t>(n_, 2)));
    c_.packed_ = bits < 63.0;
    c_.radix_ = n_;
    if (c_.packed_) all_functions_ = std::size_t(std::llround(std::pow(double(n_), double(cells_))));

    binary_table p(cells_), q(cells_);
    for (std::size_t i = 0; i < cells_; ++i) {
      p[i] = elem(i / n_);
      q[i] = elem(i % n_);
    }
    c_.insert(p, -1, -1, -1, 0, term::variable(0));
    c_.insert(q, -1, -1, -1, 0, term::variable(1));
    // basis constants are lifted to constant binary tables and count as leaves
    for (std::size_t k = 0; k < ops_.size(); ++k)
      if (ops_[k]->arity == 0)
        c_.insert(binary_table(cells_, ops_[k]->table[0]), -1, -1, -1, 0, term::apply(basis[k]));
    c_.level_totals.push_back(c_.size());
    level_begin_ = 0;
  }

  clone_fragment& fragment() { return c_; }
  int next_depth() const { return int(c_.level_totals.size()); }

  /// Every binary operation on the carrier is already present.
  bool saturated() const { return all_functions_ && c_.size() >= all_functions_; }

  /// Visits the candidates f(table, op, g, h) of the next depth in canonical order; stops early
  /// when f returns false.
  template <class F>
  bool visit_next(F&& f) {
    const std::size_t begin = level_begin_, end = c_.size();
    binary_table t(cells_), tg(cells_);
    for (std::size_t k = 0; k < ops_.size(); ++k) {
      const auto& o = *ops_[k];
      if (o.arity == 1) {
        for (std::size_t g = begin; g < end; ++g) {
          tg = c_.tables_[g];  // copy: f may insert and reallocate
          for (std::size_t i = 0; i < cells_; ++i) t[i] = o.table[tg[i]];
          if (!f(t, int(k), long(g), -1L)) return false;
        }
      } else if (o.arity == 2) {
        for (std::size_t g = 0; g < end; ++g) {
          tg = c_.tables_[g];
          // at least one argument must come from the previous depth
          std::size_t h0 = g >= begin ? 0 : begin;
          for (std::size_t h = h0; h < end; ++h) {
            const elem* th = c_.tables_[h].data();
            for (std::size_t i = 0; i < cells_; ++i) t[i] = o.table[std::size_t(tg[i]) * n_ + th[i]];
            if (!f(t, int(k), long(g), long(h))) return false;
          }
        }
      }
    }
    return true;
  }

  enum class step { grew, closed, capped };

  /// Inserts the next depth.
  step grow() {
    const std::size_t end = c_.size();
    if (saturated()) return finish(step::closed);
    const int d = next_depth();
    bool ok = visit_next([&](const binary_table& t, int op, long g, long h) {
      return !(c_.insert(t, op, g, h, d) && (c_.size() >= c_.cap || saturated()));
    });
    if (!ok) {
      c_.level_totals.push_back(c_.size());
      level_begin_ = end;
      return finish(saturated() ? step::closed : step::capped);
    }
    if (c_.size() == end) return finish(step::closed);
    c_.level_totals.push_back(c_.size());
    level_begin_ = end;
    return step::grew;
  }

  term witness_of(int op, long g, long h) const { return c_.build({op, g, h, 0, {}}); }

private:
  step finish(step s) {
    c_.closed = s == step::closed;
    return s;
  }

  std::size_t n_, cells_;
  std::size_t all_functions_ = 0;
  std::size_t level_begin_ = 0;
  std::vector<const operation*> ops_;
  clone_fragment c_;
};

} // namespace detail

/// Closes {p, q, basis constants} under the basis connectives. Stops with closed = false
/// once `cap` tables exist.
inline clone_fragment binary_clone(const algebra& a, const std::vector<std::string>& basis,
                                   std::size_t cap = 200000) {
  detail::clone_engine e(a, basis, cap);
  while (e.grow() == detail::clone_engine::step::grew) {
  }
  return std::move(e.fragment());
}

inline clone_fragment binary_clone(const logical_matrix& m, const std::vector<std::string>& basis,
                                   std::size_t cap = 200000) {
  return binary_clone(m.alg, basis, cap);
}

/// The connective `name` of `a` as a binary table (unary and nullary ones ignore extra arguments).
inline binary_table as_binary_table(const algebra& a, const std::string& name) {
  const auto& o = a.op(name);
  const std::size_t n = a.size();
  binary_table t(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    switch (o.arity) {
      case 0: t[i] = o.table[0]; break;
      case 1: t[i] = o.table[i / n]; break;
      default: t[i] = o.table[i];
    }
  }
  return t;
}

/// Compares the table of `t` with connective `target` over all argument tuples. The term may
/// use more variables than the target has arguments (up to 2); extra arguments are ignored.
inline check_result check_definition(const algebra& a, const term& t, const std::string& target) {
  const auto& o = a.op(target);
  const int k = std::max(o.arity, t.arity());
  if (k > 2) throw signature_error("definitions are checked for at most 2 variables");
  const std::size_t n = a.size();
  auto got = term_table(a, t, k);
  for (std::size_t i = 0; i < got.size(); ++i) {
    assignment w;
    if (k == 1) w = {elem(i)};
    if (k == 2) w = {elem(i / n), elem(i % n)};
    elem want = o.arity == 0 ? o.table[0] : o.arity == 1 ? o.table[w[0]] : o.table[i];
    if (got[i] != want) return check_result::fail(w, target, {"p", "q"});
  }
  return check_result::ok();
}

inline check_result check_definition(const logical_matrix& m, const term& t, const std::string& target) {
  return check_definition(m.alg, t, target);
}

enum class definability { yes, no, inconclusive };

inline std::string to_string(definability d) {
  switch (d) {
    case definability::yes: return "yes";
    case definability::no: return "no";
    default: return "inconclusive at cap";
  }
}

struct definability_result {
  definability status = definability::inconclusive;
  std::optional<term> witness;
  std::size_t clone_size = 0;
  bool closed = false;
};

namespace detail {
inline term substitute_p_for_q(const term& t) {
  if (t.is_var()) return term::variable(0);
  std::vector<term> args;
  for (const auto& a : t.args) args.push_back(substitute_p_for_q(a));
  return term::apply(t.op, std::move(args));
}
} // namespace detail

/// Decides whether connective `target` of `a` lies in the clone of `basis`.
///
/// Each depth is first scanned for the target before it is stored. Once the cap
/// stops storage, the next depth is still scanned over the stored members (up to
/// 64 * cap candidates), so a shallow witness just beyond the cap is found. Any
/// witness returned has least depth. A witness for a unary or nullary target uses p only.
inline definability_result is_definable(const algebra& a, const std::string& target,
                                        const std::vector<std::string>& basis, std::size_t cap = 200000) {
  auto goal = as_binary_table(a, target);
  detail::clone_engine e(a, basis, cap);
  definability_result r;
  auto found = [&](term w) {
    if (a.op(target).arity < 2) w = detail::substitute_p_for_q(w);
    r.status = definability::yes;
    r.witness = std::move(w);
    r.clone_size = e.fragment().size();
  };
  if (auto i = e.fragment().find(goal)) {
    found(e.fragment().witness(*i));
    return r;
  }
  while (true) {
    std::optional<term> w;
    if (!e.saturated())
      e.visit_next([&](const binary_table& t, int op, long g, long h) {
        if (t != goal) return true;
        w = e.witness_of(op, g, h);
        return false;
      });
    if (w) {
      found(*w);
      return r;
    }
    auto s = e.grow();
    if (s == detail::clone_engine::step::grew) continue;
    r.clone_size = e.fragment().size();
    r.closed = s == detail::clone_engine::step::closed;
    if (!r.closed) {
      // one more depth over the stored members, with a bounded number of candidates
      std::size_t budget = 64 * std::max<std::size_t>(cap, 1);
      e.visit_next([&](const binary_table& t, int op, long g, long h) {
        if (t == goal) w = e.witness_of(op, g, h);
        return !w && --budget > 0;
      });
      if (w) {
        found(*w);
        r.closed = false;
        return r;
      }
    }
    r.status = r.closed ? definability::no : definability::inconclusive;
    return r;
  }
}

inline definability_result is_definable(const logical_matrix& m, const std::string& target,
                                        const std::vector<std::string>& basis, std::size_t cap = 200000) {
  return is_definable(m.alg, target, basis, cap);
}

} // namespace twistlab
