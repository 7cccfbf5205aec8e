#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twistlab/error.hpp"

namespace twistlab {

/// Dense element id, 0..n-1. Labels are presentation only.
using elem = std::uint32_t;

/// Assignment of elements to variables, indexed by variable number.
using assignment = std::vector<elem>;

/// One operation of a finite algebra, stored as a total table.
///
/// Arity 0 tables hold a single id, arity 1 tables hold n ids and arity 2
/// tables are row-major n*n matrices (`table[a * n + b]` is `a op b`).
struct operation {
  std::string name;
  int arity = 0;
  std::vector<elem> table;

  static operation constant(std::string name, elem value) {
    return {std::move(name), 0, {value}};
  }
  static operation unary(std::string name, std::vector<elem> table) {
    return {std::move(name), 1, std::move(table)};
  }
  static operation binary(std::string name, std::vector<elem> table) {
    return {std::move(name), 2, std::move(table)};
  }

  friend bool operator==(const operation&, const operation&) = default;
};

/// A finite algebra: an ordered carrier of labelled elements plus operation tables.
///
/// Instances are validated on construction and immutable afterwards.
/// Operations keep their declaration order, which is the signature order used
/// in reports.
class algebra {
public:
  algebra() = default;

  algebra(std::string name, std::vector<std::string> labels, std::vector<operation> ops)
    : name_(std::move(name)), labels_(std::move(labels)), ops_(std::move(ops)) {
    validate();
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(elem e) const { return labels_.at(e); }
  const std::vector<operation>& operations() const noexcept { return ops_; }

  std::optional<elem> find_label(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return static_cast<elem>(i);
    return std::nullopt;
  }

  std::optional<std::size_t> op_index(std::string_view name) const {
    for (std::size_t i = 0; i < ops_.size(); ++i)
      if (ops_[i].name == name) return i;
    return std::nullopt;
  }

  bool has(std::string_view name) const { return op_index(name).has_value(); }

  const operation& op(std::string_view name) const {
    if (auto i = op_index(name)) return ops_[*i];
    throw signature_error("algebra '" + name_ + "' has no operation '" + std::string(name) + "'");
  }

  /// Operation names in signature order.
  std::vector<std::string> signature() const {
    std::vector<std::string> out;
    out.reserve(ops_.size());
    for (const auto& o : ops_) out.push_back(o.name);
    return out;
  }

  /// Name/arity pairs, sorted by name; two algebras are similar iff these agree.
  std::set<std::pair<std::string, int>> similarity_type() const {
    std::set<std::pair<std::string, int>> out;
    for (const auto& o : ops_) out.emplace(o.name, o.arity);
    return out;
  }

  elem constant(std::string_view name) const { return checked(name, 0).table[0]; }
  elem apply(std::string_view name, elem a) const { return checked(name, 1).table.at(a); }
  elem apply(std::string_view name, elem a, elem b) const {
    return checked(name, 2).table.at(std::size_t(a) * size() + b);
  }

  /// Generic application by operation index; `args` must match the arity.
  elem apply(std::size_t op, std::span<const elem> args) const {
    const auto& o = ops_[op];
    switch (o.arity) {
      case 0: return o.table[0];
      case 1: return o.table[args[0]];
      default: return o.table[std::size_t(args[0]) * size() + args[1]];
    }
  }

  algebra renamed(std::string name) const {
    algebra copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }

  friend bool operator==(const algebra&, const algebra&) = default;

private:
  const operation& checked(std::string_view name, int arity) const {
    const auto& o = op(name);
    if (o.arity != arity)
      throw signature_error("operation '" + o.name + "' has arity " + std::to_string(o.arity) +
                            ", used with arity " + std::to_string(arity));
    return o;
  }

  void validate() const {
    const std::size_t n = labels_.size();
    if (n == 0) throw algebra_error("algebra '" + name_ + "' has an empty carrier");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (labels_[i] == labels_[j])
          throw algebra_error("algebra '" + name_ + "': duplicate element label '" + labels_[i] + "'");
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      const auto& o = ops_[i];
      if (o.name.empty()) throw algebra_error("algebra '" + name_ + "': unnamed operation");
      for (std::size_t j = 0; j < i; ++j)
        if (ops_[j].name == o.name)
          throw algebra_error("algebra '" + name_ + "': operation '" + o.name + "' declared twice");
      std::size_t expected = 0;
      switch (o.arity) {
        case 0: expected = 1; break;
        case 1: expected = n; break;
        case 2: expected = n * n; break;
        default:
          throw algebra_error("operation '" + o.name + "': unsupported arity " + std::to_string(o.arity));
      }
      if (o.table.size() != expected)
        throw algebra_error("operation '" + o.name + "': table has " + std::to_string(o.table.size()) +
                            " entries, expected " + std::to_string(expected));
      for (elem v : o.table)
        if (v >= n)
          throw algebra_error("operation '" + o.name + "': entry " + std::to_string(v) +
                              " out of range for a " + std::to_string(n) + "-element carrier");
    }
  }

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<operation> ops_;
};

/// Validating factory; throws algebra_error on malformed input.
inline algebra make_algebra(std::string name, std::vector<std::string> labels,
                            std::vector<operation> ops) {
  return algebra(std::move(name), std::move(labels), std::move(ops));
}

/// The reduct of `a` to the named operations, in the order given.
inline algebra reduct(const algebra& a, std::span<const std::string> names) {
  std::vector<operation> ops;
  ops.reserve(names.size());
  for (const auto& n : names) ops.push_back(a.op(n));
  return algebra(a.name(), a.labels(), std::move(ops));
}

inline algebra reduct(const algebra& a, std::initializer_list<std::string> names) {
  std::vector<std::string> v(names);
  return reduct(a, std::span<const std::string>(v));
}

/// `a` expanded by (or with a replaced) operation.
inline algebra with_operation(const algebra& a, operation o) {
  std::vector<operation> ops = a.operations();
  auto it = std::find_if(ops.begin(), ops.end(), [&](const operation& x) { return x.name == o.name; });
  if (it != ops.end())
    *it = std::move(o);
  else
    ops.push_back(std::move(o));
  return algebra(a.name(), a.labels(), std::move(ops));
}

/// Restriction of `a` to a subset closed under every operation.
///
/// `members` lists source ids in increasing order; element i of the result is
/// `members[i]`. Throws algebra_error if the subset is not closed.
inline algebra restrict_to(const algebra& a, std::span<const elem> members, std::string name) {
  std::vector<elem> index(a.size(), static_cast<elem>(-1));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < members.size(); ++i) {
    index[members[i]] = static_cast<elem>(i);
    labels.push_back(a.label(members[i]));
  }
  auto map = [&](elem v) {
    if (index[v] == static_cast<elem>(-1))
      throw algebra_error("subset of '" + a.name() + "' is not closed (reaches '" + a.label(v) + "')");
    return index[v];
  };
  const std::size_t m = members.size();
  std::vector<operation> ops;
  for (const auto& o : a.operations()) {
    operation r{o.name, o.arity, {}};
    if (o.arity == 0) {
      r.table.push_back(map(o.table[0]));
    } else if (o.arity == 1) {
      for (elem x : members) r.table.push_back(map(o.table[x]));
    } else {
      r.table.reserve(m * m);
      for (elem x : members)
        for (elem y : members) r.table.push_back(map(o.table[std::size_t(x) * a.size() + y]));
    }
    ops.push_back(std::move(r));
  }
  return algebra(std::move(name), std::move(labels), std::move(ops));
}

} // namespace twistlab
