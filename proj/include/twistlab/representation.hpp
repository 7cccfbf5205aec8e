#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistlab/classes.hpp"
#include "twistlab/factors.hpp"
#include "twistlab/morphism.hpp"
#include "twistlab/twist.hpp"

namespace twistlab {

/// One named property with a witness when it fails.
struct property_verdict {
  std::string name;
  bool ok = true;
  std::string witness;
};

/// A factor extracted from an algebra by x -> x & c.
struct factor_image {
  algebra alg;
  std::vector<elem> members;             // ids in the source algebra
  std::vector<property_verdict> checks;  // closure and negation well-definedness
};

struct representation_report {
  twist_kind kind = twist_kind::DF;
  bool theorem_mode = true;
  std::string source;
  std::vector<std::string> source_labels;
  std::optional<algebra> factor1, factor2;
  std::vector<property_verdict> verdicts;
  std::optional<morphism> iota;  // into image->alg via image_inclusion, or exploratory witness
  std::optional<twist_algebra> image;
  std::string note;
  bool overall = false;

  const property_verdict* failure() const {
    for (const auto& v : verdicts)
      if (!v.ok) return &v;
    return nullptr;
  }
};

namespace detail {

// Operations of the source algebra the representation map must preserve.
inline std::vector<std::string> preserved_ops(twist_kind k) {
  using enum twist_kind;
  switch (k) {
    case DF: return {"and", "or", "neg", "top"};
    case CN:
    case F: return {"and", "or", "neg", "top", "imp"};
    case DFg: return {"and", "or", "neg", "zero", "bot", "top"};
    case CNg:
    case Fg: return {"and", "or", "neg", "zero", "bot", "top", "imp"};
    case DFf: return {"and", "or", "neg", "zero", "one", "bot", "top"};
    case Ff: return {"and", "or", "neg", "zero", "one", "bot", "top", "imp"};
    default: return {};
  }
}

inline std::string label_list(const algebra& a, std::initializer_list<elem> es) {
  std::string s;
  for (elem e : es) {
    if (!s.empty()) s += ", ";
    s += a.label(e);
  }
  return s;
}

struct image_spec {
  std::string center;       // constant c in x -> x & c
  bool imp = false;         // restrict imp
  bool zero = false;        // keep zero
  bool neg_via_imp = false; // neg(x) := x -> 0 inside the image
  bool neg_modal = false;   // neg(x & c) := (neg x) & c
};

inline factor_image extract(const algebra& a, const image_spec& s, const std::string& name) {
  factor_image out;
  const elem c = a.constant(s.center);
  const std::size_t n = a.size();
  std::vector<elem> box(n);
  std::vector<bool> in(n, false);
  for (elem x = 0; x < n; ++x) {
    box[x] = a.apply("and", x, c);
    in[box[x]] = true;
  }
  for (elem x = 0; x < n; ++x)
    if (in[x]) out.members.push_back(x);
  std::vector<elem> index(n, elem(-1));
  for (std::size_t i = 0; i < out.members.size(); ++i) index[out.members[i]] = elem(i);
  const std::size_t m = out.members.size();

  auto closed_binary = [&](const std::string& op) {
    operation o{op, 2, {}};
    property_verdict v{s.center + "-image closed under " + op, true, ""};
    for (elem x : out.members)
      for (elem y : out.members) {
        elem r = a.apply(op, x, y);
        if (!in[r]) {
          if (v.ok) v = {v.name, false, label_list(a, {x, y}) + " -> " + a.label(r)};
          r = box[r];  // keep the table total
        }
        o.table.push_back(index[r]);
      }
    out.checks.push_back(v);
    return o;
  };

  std::vector<operation> ops;
  ops.push_back(closed_binary("and"));
  ops.push_back(closed_binary("or"));
  if (s.imp) ops.push_back(closed_binary("imp"));
  if (s.zero) {
    elem z = a.constant("zero");
    property_verdict v{"zero in " + s.center + "-image", in[z], in[z] ? "" : a.label(z)};
    out.checks.push_back(v);
    ops.push_back(operation::constant("zero", index[box[z]]));
  }
  ops.push_back(operation::constant("one", index[c]));
  if (s.neg_via_imp) {
    elem z = a.constant("zero");
    operation o{"neg", 1, {}};
    property_verdict v{s.center + "-image closed under x -> 0", true, ""};
    for (elem x : out.members) {
      elem r = a.apply("imp", x, z);
      if (!in[r]) {
        if (v.ok) v = {v.name, false, a.label(x) + " -> " + a.label(r)};
        r = box[r];
      }
      o.table.push_back(index[r]);
    }
    out.checks.push_back(v);
    ops.push_back(o);
  }
  if (s.neg_modal) {
    // neg(x & c) := (neg x) & c, well defined iff x & c = y & c implies neg x & c = neg y & c.
    operation o{"neg", 1, std::vector<elem>(m, 0)};
    std::vector<bool> set(m, false);
    property_verdict v{"negation on " + s.center + "-image well defined", true, ""};
    for (elem x = 0; x < n; ++x) {
      elem i = index[box[x]];
      elem r = index[box[a.apply("neg", x)]];
      if (!set[i]) {
        o.table[i] = r;
        set[i] = true;
      } else if (o.table[i] != r && v.ok) {
        for (elem y = 0; y < x; ++y)
          if (box[y] == box[x] && box[a.apply("neg", y)] != box[a.apply("neg", x)]) {
            v = {v.name, false, label_list(a, {y, x})};
            break;
          }
      }
    }
    out.checks.push_back(v);
    ops.push_back(o);
  }
  std::vector<std::string> labels;
  for (elem x : out.members) labels.push_back(a.label(x));
  out.alg = algebra(name, labels, ops);
  return out;
}

inline image_spec diamond_spec(twist_kind k) {
  using enum twist_kind;
  switch (k) {
    case DF: return {"top"};
    case CN:
    case F: return {"top", true};
    case DFg: return {"top", false, true};
    case CNg:
    case Fg:
    case OLg: return {"top", true, true, true};
    case DFf: return {"top", false, true, false, true};
    case Ff:
    case CNf:
    case OLf: return {"top", true, true, false, true};
    case OL: return {"top", true};
  }
  return {"top"};
}

} // namespace detail

/// The factor x & center for the given kind, with the operations that kind restricts to it.
inline factor_image diamond_image(const algebra& a, twist_kind k) {
  if (!a.has("top")) throw signature_error("'" + a.name() + "' has no center constant 'top'");
  return detail::extract(a, detail::diamond_spec(k), "diamond(" + a.name() + ")");
}

/// The factor x & bot with and, or, zero, one := bot and neg(x & bot) := (neg x) & bot.
inline factor_image box_image(const algebra& a) {
  if (!a.has("bot")) throw signature_error("'" + a.name() + "' has no constant 'bot'");
  return detail::extract(a, {"bot", false, true, false, true}, "box(" + a.name() + ")");
}

namespace detail {

inline void add(representation_report& r, property_verdict v) { r.verdicts.push_back(std::move(v)); }

inline void add_class_verdict(representation_report& r, const algebra& f, const std::string& cls,
                              const std::string& role) {
  property_verdict v{role + " is a " + cls, true, ""};
  try {
    auto c = classify(f, cls);
    if (!c.holds) v = {v.name, false, c.law + " at " + describe(f, c)};
  } catch (const signature_error& e) {
    v = {v.name, false, e.what()};
  }
  add(r, v);
}

inline representation_report verify_theorem(const algebra& a, twist_kind k) {
  using enum twist_kind;
  representation_report r;
  r.kind = k;
  r.source = a.name();
  r.source_labels = a.labels();
  for (const auto& op : preserved_ops(k))
    if (!a.has(op))
      throw signature_error("'" + a.name() + "' lacks '" + op + "' needed for " + to_string(k) + " representation");

  const bool f_kind = is_f_kind(k);
  factor_image d = diamond_image(a, k);
  std::optional<factor_image> b;
  if (f_kind) b = box_image(a);
  r.factor1 = d.alg;
  if (b) r.factor2 = b->alg;

  auto [c1, c2] = factor_classes(k);
  add_class_verdict(r, d.alg, c1, "diamond factor");
  if (b) add_class_verdict(r, b->alg, c2, "box factor");
  for (const auto& v : d.checks) add(r, v);
  if (b)
    for (const auto& v : b->checks) add(r, v);

  twist_spec spec{k, d.alg, b ? std::optional<algebra>(b->alg) : std::nullopt, std::nullopt};
  twist_algebra full;
  try {
    full = twist_build(spec, false);
  } catch (const std::exception& e) {
    add(r, {"twist over extracted factors", false, e.what()});
    r.overall = false;
    return r;
  }

  // iota(a) = (a & c, neg a & c), or (a & top, neg a & bot) for f-kinds
  const std::size_t n = a.size();
  const elem c = a.constant("top");
  std::vector<elem> d_index(n, elem(-1)), b_index(n, elem(-1));
  for (std::size_t i = 0; i < d.members.size(); ++i) d_index[d.members[i]] = elem(i);
  if (b)
    for (std::size_t i = 0; i < b->members.size(); ++i) b_index[b->members[i]] = elem(i);
  const elem bot = f_kind ? a.constant("bot") : 0;
  std::vector<elem> iota(n, 0);
  property_verdict universe{"iota lands in the twist universe", true, ""};
  for (elem x = 0; x < n; ++x) {
    elem p1 = d_index[a.apply("and", x, c)];
    elem nx = a.apply("neg", x);
    elem p2 = f_kind ? b_index[a.apply("and", nx, bot)] : d_index[a.apply("and", nx, c)];
    auto e = full.find(p1, p2);
    if (!e) {
      if (universe.ok) universe = {universe.name, false, a.label(x)};
      continue;
    }
    iota[x] = *e;
  }
  add(r, universe);
  if (!universe.ok) {
    r.overall = false;
    return r;
  }

  property_verdict inj{"iota injective", true, ""};
  for (elem x = 0; x < n && inj.ok; ++x)
    for (elem y = x + 1; y < n; ++y)
      if (iota[x] == iota[y]) {
        inj = {inj.name, false, label_list(a, {x, y})};
        break;
      }
  add(r, inj);

  for (const auto& op : preserved_ops(k)) {
    property_verdict v{"iota preserves " + op, true, ""};
    if (!full.alg.has(op)) {
      v = {v.name, false, "twist has no '" + op + "'"};
    } else {
      auto h = check_homomorphism(a, full.alg, iota, {op});
      if (!h.holds) {
        std::string w = op;
        if (h.counterexample && !h.counterexample->empty()) {
          w += " at ";
          for (std::size_t i = 0; i < h.counterexample->size(); ++i)
            w += (i ? ", " : "") + a.label((*h.counterexample)[i]);
        }
        v = {v.name, false, w};
      }
    }
    add(r, v);
  }

  subset img(iota.begin(), iota.end());
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  property_verdict sub{"image is a pi1-full twist subalgebra", true, ""};
  if (closure(full.alg, img) != img) {
    sub = {sub.name, false, "image not closed"};
  } else {
    std::vector<bool> hit(full.factor1.size(), false);
    for (elem e : img) hit[full.pi1(e)] = true;
    for (elem i = 0; i < hit.size(); ++i)
      if (!hit[i]) {
        sub = {sub.name, false, "misses first coordinate " + full.factor1.label(i)};
        break;
      }
  }
  add(r, sub);
  if (sub.ok) {
    auto [s, inc] = sub_twist(full, img);
    // iota as a map into the image algebra
    std::vector<elem> pos(full.alg.size(), 0);
    for (std::size_t i = 0; i < img.size(); ++i) pos[img[i]] = elem(i);
    morphism m{a.name(), s.alg.name(), {}};
    for (elem x = 0; x < n; ++x) m.map.push_back(pos[iota[x]]);
    r.iota = m;
    r.image = s;
  }
  r.overall = std::all_of(r.verdicts.begin(), r.verdicts.end(), [](const auto& v) { return v.ok; });
  return r;
}

} // namespace detail

/// Factor candidates of size <= 4 for a class, in a fixed order.
inline std::vector<algebra> factor_family(const std::string& cls) {
  std::vector<std::string> names;
  if (cls == "upper-bounded-distributive-lattice" || cls == "bounded-distributive-lattice")
    names = {"chain1", "chain2", "chain3", "chain4", "square"};
  else if (cls == "generalized-boolean" || cls == "boolean")
    names = {"boolean1", "boolean2", "boolean4"};
  else if (cls == "de-morgan-algebra")
    names = {"trivial", "boolean2", "kleene3", "boolean4", "demorgan-chain4", "m4"};
  else
    throw error("no factor family for class '" + cls + "'");
  std::vector<algebra> out;
  for (const auto& n : names) {
    algebra f = builtin_algebra(n);
    if (classify(f, cls).holds) out.push_back(f);
  }
  return out;
}

/// Every injective homomorphism b1 -> b2 preserving the Boolean operations.
inline std::vector<morphism> boolean_embeddings(const algebra& b1, const algebra& b2) {
  std::vector<morphism> out;
  const std::size_t n = b1.size(), m = b2.size();
  if (n > m) return out;
  std::vector<elem> map(n, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      if (is_injective(map) && check_homomorphism(b1, b2, map, {"and", "or", "neg", "imp", "zero", "one"}).holds)
        out.push_back({b1.name(), b2.name(), map});
      return;
    }
    for (elem v = 0; v < m; ++v) {
      map[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

/// Full-twist specs over the kind's factor family (size <= 4). Two-factor kinds skip pairs
/// with exactly one trivial factor, which violate the distinctness of T from 0 and 1.
inline std::vector<twist_spec> sweep_specs(twist_kind k) {
  using enum twist_kind;
  std::vector<twist_spec> out;
  auto [c1, c2] = factor_classes(k);
  auto fam1 = factor_family(c1);
  if (!has_two_factors(k)) {
    for (auto& f : fam1) out.push_back({k, f, std::nullopt, std::nullopt});
    return out;
  }
  auto fam2 = factor_family(c2);
  for (auto& f1 : fam1)
    for (auto& f2 : fam2) {
      if ((f1.size() == 1) != (f2.size() == 1)) continue;
      if (k == CNf) {
        for (auto& rho : boolean_embeddings(f1, f2)) out.push_back({k, f1, f2, rho});
      } else {
        out.push_back({k, f1, f2, std::nullopt});
      }
    }
  return out;
}

namespace detail {

inline representation_report explore(const algebra& a, twist_kind k) {
  representation_report r;
  r.kind = k;
  r.theorem_mode = false;
  r.source = a.name();
  r.source_labels = a.labels();
  std::size_t tried = 0;
  for (const auto& spec : sweep_specs(k)) {
    twist_algebra t = twist_build(spec, false);
    if (t.alg.similarity_type() != a.similarity_type()) continue;
    for (auto& [s, inc] : enumerate_pi1_full_subalgebras(t)) {
      if (s.alg.size() != a.size()) continue;
      ++tried;
      if (auto iso = find_isomorphism(a, s.alg)) {
        r.factor1 = spec.factor1;
        if (spec.factor2) r.factor2 = *spec.factor2;
        r.iota = *iso;
        r.image = s;
        r.verdicts.push_back({"isomorphic to a pi1-full " + to_string(k) + "-twist subalgebra", true, s.alg.name()});
        r.note = "witness found after " + std::to_string(tried) + " candidate subalgebras";
        r.overall = true;
        return r;
      }
    }
  }
  r.verdicts.push_back({"isomorphic to a pi1-full " + to_string(k) + "-twist subalgebra", false,
                        "no candidate among factors of size <= 4"});
  r.note = "search exhausted: " + std::to_string(tried) + " same-size candidate subalgebras";
  r.overall = false;
  return r;
}

} // namespace detail

/// Checks that `a` is represented as a twist algebra of kind `k`. Theorem kinds extract factors
/// and check iota; OL, OLg, OLf and CNf run an exhaustive search over small factors instead.
inline representation_report verify_representation(const algebra& a, twist_kind k) {
  if (is_theorem_kind(k)) return detail::verify_theorem(a, k);
  return detail::explore(a, k);
}

/// Builds the twist, verifies its representation and recovers the input factor(s) up to isomorphism.
inline representation_report roundtrip_check(const twist_spec& spec) {
  if (!is_theorem_kind(spec.kind))
    throw error("roundtrip needs a kind with a representation theorem, not " + to_string(spec.kind));
  twist_algebra t = twist_build(spec);
  representation_report r = verify_representation(t.alg, spec.kind);
  auto recover = [&](const algebra& input, const std::optional<algebra>& extracted, const std::string& role) {
    property_verdict v{role + " recovered up to isomorphism", true, ""};
    if (!extracted) {
      v = {v.name, false, "no extracted factor"};
    } else {
      try {
        algebra in = reduct(input, extracted->signature());
        if (!find_isomorphism(in, *extracted)) v = {v.name, false, input.name() + " vs " + extracted->name()};
      } catch (const signature_error& e) {
        v = {v.name, false, e.what()};
      }
    }
    r.verdicts.push_back(v);
  };
  recover(spec.factor1, r.factor1, "first factor");
  if (has_two_factors(spec.kind)) recover(*spec.factor2, r.factor2, "second factor");
  r.overall = std::all_of(r.verdicts.begin(), r.verdicts.end(), [](const auto& v) { return v.ok; });
  return r;
}

} // namespace twistlab
