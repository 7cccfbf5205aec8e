#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twistlab/algebra.hpp"
#include "twistlab/check.hpp"
#include "twistlab/classes.hpp"
#include "twistlab/formula.hpp"
#include "twistlab/morphism.hpp"

namespace twistlab {

enum class twist_kind { OL, DF, CN, F, OLg, DFg, CNg, Fg, DFf, OLf, CNf, Ff };

inline const std::vector<twist_kind>& all_twist_kinds() {
  using enum twist_kind;
  static const std::vector<twist_kind> k = {OL, DF, CN, F, OLg, DFg, CNg, Fg, DFf, OLf, CNf, Ff};
  return k;
}

inline std::string to_string(twist_kind k) {
  static const char* names[] = {"OL", "DF", "CN", "F", "OLg", "DFg", "CNg", "Fg", "DFf", "OLf", "CNf", "Ff"};
  return names[int(k)];
}

inline twist_kind parse_twist_kind(std::string_view s) {
  for (auto k : all_twist_kinds())
    if (to_string(k) == s) return k;
  throw error("unknown twist kind '" + std::string(s) + "'");
}

inline bool is_three_valued(twist_kind k) {
  using enum twist_kind;
  return k == OL || k == DF || k == CN || k == F;
}
inline bool is_f_kind(twist_kind k) {
  using enum twist_kind;
  return k == DFf || k == OLf || k == CNf || k == Ff;
}
inline bool has_two_factors(twist_kind k) {
  using enum twist_kind;
  return k == DFf || k == CNf || k == Ff;
}
/// Kinds covered by a representation theorem; the others are explored by search.
inline bool is_theorem_kind(twist_kind k) {
  using enum twist_kind;
  return k != OL && k != OLg && k != OLf && k != CNf;
}

/// Class each factor must belong to.
inline std::pair<std::string, std::string> factor_classes(twist_kind k) {
  using enum twist_kind;
  switch (k) {
    case DF: return {"upper-bounded-distributive-lattice", ""};
    case OL:
    case CN:
    case F: return {"generalized-boolean", ""};
    case DFg: return {"bounded-distributive-lattice", ""};
    case OLg:
    case CNg:
    case Fg:
    case OLf: return {"boolean", ""};
    case DFf: return {"de-morgan-algebra", "de-morgan-algebra"};
    case CNf: return {"boolean", "boolean"};
    case Ff: return {"boolean", "de-morgan-algebra"};
  }
  return {};
}

/// Class every twist of this kind belongs to, where the theory names one.
inline std::string target_class(twist_kind k) {
  using enum twist_kind;
  switch (k) {
    case DF: return "centered-kleene";
    case CN: return "cn-algebra";
    case F: return "f-algebra";
    case DFg: return "dfg-algebra";
    case CNg: return "cng-algebra";
    case Fg: return "fg-algebra";
    case DFf: return "dff-algebra";
    case Ff: return "ff-algebra";
    default: return "";
  }
}

struct twist_spec {
  twist_kind kind = twist_kind::DF;
  algebra factor1;
  std::optional<algebra> factor2;
  std::optional<morphism> rho;  // CNf only
};

/// A twist algebra: an algebra on pairs plus the pair each element stands for.
struct twist_algebra {
  twist_kind kind = twist_kind::DF;
  algebra alg;
  algebra factor1, factor2;  // factor2 == factor1 for one-factor kinds
  std::vector<std::pair<elem, elem>> pairs;

  elem pi1(elem e) const { return pairs.at(e).first; }
  elem pi2(elem e) const { return pairs.at(e).second; }

  std::optional<elem> find(elem a1, elem a2) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), std::pair{a1, a2});
    if (it == pairs.end() || *it != std::pair{a1, a2}) return std::nullopt;
    return elem(it - pairs.begin());
  }
};

namespace detail {

inline std::string pair_label(const algebra& f1, const algebra& f2, elem a, elem b) {
  return "(" + f1.label(a) + "," + f2.label(b) + ")";
}

inline void require_class(const algebra& a, const std::string& cls, const std::string& role) {
  check_result r;
  try {
    r = classify(a, cls);
  } catch (const signature_error& e) {
    throw construction_error(role + " '" + a.name() + "' cannot be checked as " + cls + ": " + e.what());
  }
  if (!r.holds)
    throw construction_error(role + " '" + a.name() + "' is not a " + cls + " (fails " + r.law + " at " +
                             describe(a, r) + ")");
}

inline void require_embedding(const algebra& b1, const algebra& b2, const morphism& rho) {
  if (rho.map.size() != b1.size()) throw construction_error("rho is not total on the first factor");
  for (elem v : rho.map)
    if (v >= b2.size()) throw construction_error("rho leaves the second factor");
  if (!is_injective(rho.map)) throw construction_error("rho is not injective");
  auto r = check_homomorphism(b1, b2, rho.map, {"and", "or", "neg", "imp", "zero", "one"});
  if (!r.holds) throw construction_error("rho does not preserve '" + r.law + "'");
}

} // namespace detail

/// Builds the full twist algebra. With `check` set, factor classes and rho are verified first.
inline twist_algebra twist_build(const twist_spec& spec, bool check = true) {
  using enum twist_kind;
  const twist_kind k = spec.kind;
  const algebra& f1 = spec.factor1;
  if (has_two_factors(k) && !spec.factor2)
    throw construction_error(to_string(k) + "-twist needs two factors");
  const algebra& f2 = has_two_factors(k) ? *spec.factor2 : f1;

  if (check) {
    auto [c1, c2] = factor_classes(k);
    detail::require_class(f1, c1, "first factor");
    if (has_two_factors(k)) detail::require_class(f2, c2, "second factor");
  }

  std::vector<elem> rho(f1.size());
  if (k == CNf) {
    if (spec.rho) {
      if (check) detail::require_embedding(f1, f2, *spec.rho);
      rho = spec.rho->map;
    } else {
      if (!(f1.labels() == f2.labels() && f1.operations() == f2.operations()))
        throw construction_error("CNf-twist over distinct factors needs an explicit rho");
      for (elem i = 0; i < f1.size(); ++i) rho[i] = i;
    }
  }

  // factor operations
  auto m1 = [&](elem x, elem y) { return f1.apply("and", x, y); };
  auto j1 = [&](elem x, elem y) { return f1.apply("or", x, y); };
  auto i1 = [&](elem x, elem y) { return f1.apply("imp", x, y); };
  auto n1 = [&](elem x) { return f1.apply("neg", x); };
  auto m2 = [&](elem x, elem y) { return f2.apply("and", x, y); };
  auto j2 = [&](elem x, elem y) { return f2.apply("or", x, y); };
  auto i2 = [&](elem x, elem y) { return f2.apply("imp", x, y); };
  auto n2 = [&](elem x) { return f2.apply("neg", x); };
  const elem one1 = f1.constant("one");
  const bool four = !is_three_valued(k);
  const elem zero1 = four ? f1.constant("zero") : 0;
  const elem zero2 = four ? f2.constant("zero") : 0;
  const elem one2 = four ? f2.constant("one") : one1;

  twist_algebra t;
  t.kind = k;
  t.factor1 = f1;
  t.factor2 = f2;
  for (elem a = 0; a < f1.size(); ++a)
    for (elem b = 0; b < f2.size(); ++b) {
      bool in = true;
      if (k == OL) in = i1(a, b) == b;
      if (k == DF || k == CN || k == F) in = j1(a, b) == one1;
      if (in) t.pairs.emplace_back(a, b);
    }

  using pr = std::pair<elem, elem>;
  std::function<pr(pr, pr)> conj, disj, imp;
  std::function<pr(pr)> neg;
  const bool ol_style = k == OL || k == OLg || k == OLf;
  if (ol_style) {
    conj = [&](pr x, pr y) { return pr{m1(x.first, y.first), m1(i1(x.first, y.second), i1(y.first, x.second))}; };
    disj = [&](pr x, pr y) { return pr{m1(i1(x.second, y.first), i1(y.second, x.first)), m1(x.second, y.second)}; };
    imp = [&](pr x, pr y) { return pr{i1(x.first, y.first), i1(x.first, y.second)}; };
  } else {
    conj = [&](pr x, pr y) { return pr{m1(x.first, y.first), j2(x.second, y.second)}; };
    disj = [&](pr x, pr y) { return pr{j1(x.first, y.first), m2(x.second, y.second)}; };
    if (k == CN || k == CNg) imp = [&](pr x, pr y) { return pr{i1(x.first, y.first), i1(x.first, y.second)}; };
    if (k == F || k == Fg || k == Ff)
      imp = [&](pr x, pr y) { return pr{i1(x.first, y.first), j2(x.second, y.second)}; };
    if (k == CNf) imp = [&](pr x, pr y) { return pr{i1(x.first, y.first), i2(rho[x.first], y.second)}; };
  }
  if (is_f_kind(k))
    neg = [&](pr x) { return pr{n1(x.first), n2(x.second)}; };
  else
    neg = [](pr x) { return pr{x.second, x.first}; };

  const std::size_t n = t.pairs.size();
  auto index = [&](pr p) {
    auto e = t.find(p.first, p.second);
    if (!e)
      throw construction_error(to_string(k) + "-twist is not closed: reaches " +
                               detail::pair_label(f1, f2, p.first, p.second));
    return *e;
  };
  auto unary = [&](const std::string& name, const std::function<pr(pr)>& f) {
    operation o{name, 1, {}};
    for (elem x = 0; x < n; ++x) o.table.push_back(index(f(t.pairs[x])));
    return o;
  };
  auto binary = [&](const std::string& name, const std::function<pr(pr, pr)>& f) {
    operation o{name, 2, {}};
    o.table.reserve(n * n);
    for (elem x = 0; x < n; ++x)
      for (elem y = 0; y < n; ++y) o.table.push_back(index(f(t.pairs[x], t.pairs[y])));
    return o;
  };

  std::vector<operation> ops = {unary("neg", neg), binary("and", conj), binary("or", disj)};
  if (imp) ops.push_back(binary("imp", imp));
  if (!four) {
    ops.push_back(operation::constant("top", index({one1, one1})));
  } else {
    ops.push_back(operation::constant("zero", index({zero1, one2})));
    ops.push_back(operation::constant("bot", index({zero1, zero2})));
    ops.push_back(operation::constant("top", index({one1, one2})));
    ops.push_back(operation::constant("one", index({one1, zero2})));
  }
  // OL twists need not contain (1,1) when the factor is trivial; index() reports that case.

  std::vector<std::string> labels;
  for (auto [a, b] : t.pairs) labels.push_back(detail::pair_label(f1, f2, a, b));
  std::string name = to_string(k) + "-twist(" + f1.name() + (has_two_factors(k) ? "," + f2.name() : "") + ")";
  algebra a(name, labels, ops);

  if (k == DF || k == DFg) {
    // The DF implication is the term (T & ~x) | (x & y).
    auto e = parse_formula("(T & ~p) | (p & q)");
    operation o{"imp", 2, term_table(a, to_term(e, {"p", "q"}), 2)};
    auto ops2 = a.operations();
    ops2.insert(ops2.begin() + 3, o);
    a = algebra(name, labels, ops2);
  }
  t.alg = std::move(a);
  return t;
}

/// The sub-twist on `members` (sorted ids of t), with its inclusion.
inline std::pair<twist_algebra, morphism> sub_twist(const twist_algebra& t, const subset& members) {
  twist_algebra s;
  s.kind = t.kind;
  s.factor1 = t.factor1;
  s.factor2 = t.factor2;
  for (elem e : members) s.pairs.push_back(t.pairs[e]);
  std::string name = members.size() == t.alg.size() ? t.alg.name() : t.alg.name() + "[" + std::to_string(members.size()) + "]";
  s.alg = restrict_to(t.alg, members, name);
  return {s, morphism{s.alg.name(), t.alg.name(), members}};
}

/// Subalgebras of `t` whose first projection is onto the first factor, smallest first.
inline std::vector<std::pair<twist_algebra, morphism>> enumerate_pi1_full_subalgebras(const twist_algebra& t,
                                                                                      std::size_t limit = SIZE_MAX) {
  std::vector<std::pair<twist_algebra, morphism>> out;
  if (limit == 0) return out;
  for (const auto& s : subuniverses(t.alg)) {
    std::vector<bool> hit(t.factor1.size(), false);
    for (elem e : s) hit[t.pi1(e)] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) continue;
    out.push_back(sub_twist(t, s));
    if (out.size() >= limit) break;
  }
  return out;
}

/// (a1 -> a2 = a2) iff (a1 | a2 = 1) for all a1, a2 of a generalized Boolean algebra.
inline check_result check_universe_equivalence(const algebra& b, bool require_class = true) {
  if (require_class) detail::require_class(b, "generalized-boolean", "algebra");
  const elem one = b.constant("one");
  for (elem x = 0; x < b.size(); ++x)
    for (elem y = 0; y < b.size(); ++y) {
      bool lhs = b.apply("imp", x, y) == y;
      bool rhs = b.apply("or", x, y) == one;
      if (lhs != rhs) return check_result::fail({x, y}, "universe equivalence", {"a1", "a2"});
    }
  return check_result::ok();
}

/// Compares the implication of a DF/DFg twist with the pair formula (x2 | (x1 & y1), x2 | y2),
/// and that of an Ff twist with the term (T & ~x) | (x & y).
inline check_result check_closed_forms(const twist_algebra& t) {
  using enum twist_kind;
  const auto& a = t.alg;
  const std::size_t n = a.size();
  if (t.kind == DF || t.kind == DFg) {
    const auto& f = t.factor1;
    for (elem x = 0; x < n; ++x)
      for (elem y = 0; y < n; ++y) {
        auto [x1, x2] = t.pairs[x];
        auto [y1, y2] = t.pairs[y];
        std::pair<elem, elem> want{f.apply("or", x2, f.apply("and", x1, y1)), f.apply("or", x2, y2)};
        if (t.pairs[a.apply("imp", x, y)] != want)
          return check_result::fail({x, y}, "DF implication pair formula", {"x", "y"});
      }
    return check_result::ok();
  }
  if (t.kind == Ff) {
    auto tab = term_table(a, to_term(parse_formula("(T & ~p) | (p & q)"), {"p", "q"}), 2);
    for (elem x = 0; x < n; ++x)
      for (elem y = 0; y < n; ++y)
        if (tab[x * n + y] != a.apply("imp", x, y))
          return check_result::fail({x, y}, "Ff implication term", {"x", "y"});
    return check_result::ok();
  }
  throw error("closed forms are defined for DF, DFg and Ff twists, not " + to_string(t.kind));
}

} // namespace twistlab
