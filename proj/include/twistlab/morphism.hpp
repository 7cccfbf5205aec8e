#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twistlab/algebra.hpp"
#include "twistlab/check.hpp"

namespace twistlab {

/// A total map between carriers; `map[i]` is the image of source element i.
struct morphism {
  std::string source, target;
  std::vector<elem> map;

  elem operator()(elem e) const { return map.at(e); }
  friend bool operator==(const morphism&, const morphism&) = default;
};

inline void require_similar(const algebra& a, const algebra& b) {
  if (a.similarity_type() != b.similarity_type())
    throw signature_error("algebras '" + a.name() + "' and '" + b.name() + "' have different signatures");
}

/// Checks that `map` commutes with the named operations (all of a's by default).
/// On failure `law` names the operation and the counterexample holds its arguments.
inline check_result check_homomorphism(const algebra& a, const algebra& b, const std::vector<elem>& map,
                                       const std::vector<std::string>& ops = {}) {
  if (map.size() != a.size()) throw error("map is not total on '" + a.name() + "'");
  for (elem v : map)
    if (v >= b.size()) throw error("map leaves the carrier of '" + b.name() + "'");
  std::vector<std::string> names = ops.empty() ? a.signature() : ops;
  const std::size_t n = a.size();
  for (const auto& name : names) {
    const auto& oa = a.op(name);
    const auto& ob = b.op(name);
    if (oa.arity != ob.arity) throw signature_error("operation '" + name + "' differs in arity");
    switch (oa.arity) {
      case 0:
        if (map[oa.table[0]] != ob.table[0]) return check_result::fail({}, name);
        break;
      case 1:
        for (elem x = 0; x < n; ++x)
          if (map[oa.table[x]] != ob.table[map[x]]) return check_result::fail({x}, name);
        break;
      default:
        for (elem x = 0; x < n; ++x)
          for (elem y = 0; y < n; ++y)
            if (map[oa.table[x * n + y]] != ob.table[std::size_t(map[x]) * b.size() + map[y]])
              return check_result::fail({x, y}, name);
    }
  }
  return check_result::ok();
}

inline bool is_homomorphism(const algebra& a, const algebra& b, const std::vector<elem>& map) {
  require_similar(a, b);
  return check_homomorphism(a, b, map).holds;
}

inline bool is_injective(const std::vector<elem>& map) {
  std::set<elem> s(map.begin(), map.end());
  return s.size() == map.size();
}

inline morphism compose(const morphism& g, const morphism& f) {  // g after f
  morphism h{f.source, g.target, {}};
  for (elem v : f.map) h.map.push_back(g(v));
  return h;
}

inline morphism inverse(const morphism& f) {
  morphism g{f.target, f.source, std::vector<elem>(f.map.size())};
  for (std::size_t i = 0; i < f.map.size(); ++i) g.map.at(f.map[i]) = elem(i);
  return g;
}

namespace detail {

class iso_search {
public:
  iso_search(const algebra& a, const algebra& b) : a_(a), b_(b), n_(a.size()) {
    map_.assign(n_, unset);
    used_.assign(n_, false);
  }

  std::optional<std::vector<elem>> run() {
    // Constants are forced.
    for (const auto& o : a_.operations())
      if (o.arity == 0 && !assign(o.table[0], b_.op(o.name).table[0])) return std::nullopt;
    if (search()) return map_;
    return std::nullopt;
  }

private:
  static constexpr elem unset = static_cast<elem>(-1);

  bool search() {
    elem i = 0;
    while (i < n_ && map_[i] != unset) ++i;
    if (i == n_) return true;
    for (elem v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      std::size_t mark = trail_.size();
      if (assign(i, v) && search()) return true;
      undo(mark);
    }
    return false;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      elem x = trail_.back();
      trail_.pop_back();
      used_[map_[x]] = false;
      map_[x] = unset;
    }
  }

  // Assigns x -> v and propagates every forced image; false on conflict.
  bool assign(elem x, elem v) {
    std::vector<std::pair<elem, elem>> queue{{x, v}};
    while (!queue.empty()) {
      auto [s, t] = queue.back();
      queue.pop_back();
      if (map_[s] != unset) {
        if (map_[s] != t) return false;
        continue;
      }
      if (used_[t]) return false;
      map_[s] = t;
      used_[t] = true;
      trail_.push_back(s);
      for (const auto& o : a_.operations()) {
        const auto& ob = b_.op(o.name);
        if (o.arity == 1) {
          queue.emplace_back(o.table[s], ob.table[t]);
        } else if (o.arity == 2) {
          for (elem y = 0; y < n_; ++y) {
            if (map_[y] == unset) continue;
            queue.emplace_back(o.table[std::size_t(s) * n_ + y], ob.table[std::size_t(t) * n_ + map_[y]]);
            queue.emplace_back(o.table[std::size_t(y) * n_ + s], ob.table[std::size_t(map_[y]) * n_ + t]);
          }
        }
      }
    }
    return true;
  }

  const algebra& a_;
  const algebra& b_;
  std::size_t n_;
  std::vector<elem> map_;
  std::vector<bool> used_;
  std::vector<elem> trail_;
};

} // namespace detail

/// Lexicographically least isomorphism a -> b, if any. Throws signature_error on dissimilar algebras.
inline std::optional<morphism> find_isomorphism(const algebra& a, const algebra& b) {
  require_similar(a, b);
  if (a.size() != b.size()) return std::nullopt;
  auto m = detail::iso_search(a, b).run();
  if (!m) return std::nullopt;
  return morphism{a.name(), b.name(), std::move(*m)};
}

/// Element set as a sorted id list.
using subset = std::vector<elem>;

/// Least superset of `seed` closed under every operation (constants included).
inline subset closure(const algebra& a, const subset& seed) {
  const std::size_t n = a.size();
  std::vector<bool> in(n, false);
  std::vector<elem> members;
  auto add = [&](elem e) {
    if (!in[e]) {
      in[e] = true;
      members.push_back(e);
    }
  };
  for (elem e : seed) {
    if (e >= n) throw algebra_error("seed element out of range for '" + a.name() + "'");
    add(e);
  }
  for (const auto& o : a.operations())
    if (o.arity == 0) add(o.table[0]);
  // members[0, done) have been combined with each other already.
  for (std::size_t done = 0; done < members.size(); ++done) {
    elem x = members[done];
    for (const auto& o : a.operations()) {
      if (o.arity == 1) {
        add(o.table[x]);
      } else if (o.arity == 2) {
        for (std::size_t j = 0; j <= done; ++j) {
          elem y = members[j];
          add(o.table[std::size_t(x) * n + y]);
          add(o.table[std::size_t(y) * n + x]);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

struct subalgebra {
  algebra alg;
  morphism inclusion;
};

inline subalgebra make_subalgebra(const algebra& a, const subset& members, std::string name) {
  algebra s = restrict_to(a, members, std::move(name));
  return {s, morphism{s.name(), a.name(), members}};
}

inline subalgebra generated_subalgebra(const algebra& a, const subset& seed) {
  return make_subalgebra(a, closure(a, seed), a.name() + "[sub]");
}

/// Every subuniverse (nonempty closed subset), in order of increasing size then
/// lexicographic order; stops after `limit` results.
inline std::vector<subset> subuniverses(const algebra& a, std::size_t limit = SIZE_MAX) {
  const std::size_t n = a.size();
  std::set<subset> found;
  std::vector<subset> frontier;
  bool has_constants = false;
  for (const auto& o : a.operations()) has_constants |= o.arity == 0;
  if (has_constants) {
    frontier.push_back(closure(a, {}));
  } else {
    for (elem e = 0; e < n; ++e) frontier.push_back(closure(a, {e}));
  }
  for (auto& s : frontier) found.insert(s);
  while (!frontier.empty()) {
    std::vector<subset> next;
    for (const auto& s : frontier) {
      std::vector<bool> in(n, false);
      for (elem e : s) in[e] = true;
      for (elem e = 0; e < n; ++e) {
        if (in[e]) continue;
        subset seed = s;
        seed.push_back(e);
        subset c = closure(a, seed);
        if (found.insert(c).second) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  std::vector<subset> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const subset& x, const subset& y) { return x.size() < y.size(); });
  if (out.size() > limit) out.resize(limit);
  return out;
}

/// Componentwise product on pairs in lexicographic order, labelled "(x,y)".
inline algebra direct_product(const algebra& a, const algebra& b) {
  require_similar(a, b);
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) labels.push_back("(" + a.labels()[i] + "," + b.labels()[j] + ")");
  auto pair_id = [&](elem x, elem y) { return elem(std::size_t(x) * nb + y); };
  std::vector<operation> ops;
  for (const auto& oa : a.operations()) {
    const auto& ob = b.op(oa.name);
    operation o{oa.name, oa.arity, {}};
    if (oa.arity == 0) {
      o.table.push_back(pair_id(oa.table[0], ob.table[0]));
    } else if (oa.arity == 1) {
      for (elem p = 0; p < n; ++p) o.table.push_back(pair_id(oa.table[p / nb], ob.table[p % nb]));
    } else {
      o.table.reserve(n * n);
      for (elem p = 0; p < n; ++p)
        for (elem q = 0; q < n; ++q)
          o.table.push_back(pair_id(oa.table[std::size_t(p / nb) * na + q / nb],
                                    ob.table[std::size_t(p % nb) * nb + q % nb]));
    }
    ops.push_back(std::move(o));
  }
  return algebra(a.name() + " x " + b.name(), std::move(labels), std::move(ops));
}

} // namespace twistlab
