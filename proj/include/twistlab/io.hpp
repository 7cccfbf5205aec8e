#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "twistlab/algebra.hpp"
#include "twistlab/definability.hpp"
#include "twistlab/factors.hpp"
#include "twistlab/matrix.hpp"
#include "twistlab/representation.hpp"
#include "twistlab/twist.hpp"

namespace twistlab {

using ojson = nlohmann::ordered_json;

/// Raised for unreadable files and malformed JSON documents.
class input_error : public error {
public:
  using error::error;
};

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw input_error("cannot read '" + p.string() + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

namespace detail {

inline elem element_ref(const ojson& v, const std::vector<std::string>& labels, const std::string& where) {
  if (v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0)) {
    auto id = v.get<unsigned long long>();
    if (id >= labels.size())
      throw algebra_error(where + ": element id " + std::to_string(id) + " out of range");
    return elem(id);
  }
  if (v.is_string()) {
    auto s = v.get<std::string>();
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == s) return elem(i);
    throw algebra_error(where + ": unknown element '" + s + "'");
  }
  throw algebra_error(where + ": expected an element id or label");
}

} // namespace detail

/// Reads {"name", "elements", "operations": {op: id | [ids] | [[ids]]}}; arity follows the shape.
inline algebra algebra_from_json(const ojson& j) {
  if (!j.is_object()) throw input_error("algebra description must be a JSON object");
  if (!j.contains("elements") || !j["elements"].is_array()) throw input_error("algebra needs an 'elements' array");
  std::string name = j.value("name", std::string("algebra"));
  std::vector<std::string> labels;
  for (const auto& e : j["elements"]) {
    if (e.is_string())
      labels.push_back(e.get<std::string>());
    else if (e.is_number())
      labels.push_back(e.dump());
    else
      throw input_error("element labels must be strings");
  }
  std::vector<operation> ops;
  if (j.contains("operations")) {
    if (!j["operations"].is_object()) throw input_error("'operations' must be an object");
    for (const auto& [op, v] : j["operations"].items()) {
      std::string where = "operation '" + op + "'";
      if (!v.is_array()) {
        ops.push_back(operation::constant(op, detail::element_ref(v, labels, where)));
      } else if (!v.empty() && v[0].is_array()) {
        std::vector<elem> t;
        if (v.size() != labels.size()) throw algebra_error(where + ": expected " + std::to_string(labels.size()) + " rows");
        for (const auto& row : v) {
          if (!row.is_array() || row.size() != labels.size())
            throw algebra_error(where + ": every row needs " + std::to_string(labels.size()) + " entries");
          for (const auto& x : row) t.push_back(detail::element_ref(x, labels, where));
        }
        ops.push_back(operation::binary(op, t));
      } else {
        std::vector<elem> t;
        for (const auto& x : v) t.push_back(detail::element_ref(x, labels, where));
        ops.push_back(operation::unary(op, t));
      }
    }
  }
  return algebra(name, labels, ops);
}

inline ojson to_json(const algebra& a) {
  ojson j;
  j["name"] = a.name();
  j["elements"] = a.labels();
  ojson ops = ojson::object();
  const std::size_t n = a.size();
  for (const auto& o : a.operations()) {
    if (o.arity == 0) {
      ops[o.name] = o.table[0];
    } else if (o.arity == 1) {
      ops[o.name] = o.table;
    } else {
      ojson rows = ojson::array();
      for (std::size_t i = 0; i < n; ++i)
        rows.push_back(std::vector<elem>(o.table.begin() + long(i * n), o.table.begin() + long((i + 1) * n)));
      ops[o.name] = rows;
    }
  }
  j["operations"] = ops;
  return j;
}

/// Resolves "builtin:NAME", a bare built-in or matrix name, or a JSON file path.
inline algebra load_algebra(const std::string& ref, const std::filesystem::path& base = {}) {
  if (ref.rfind("builtin:", 0) == 0) return builtin_algebra(ref.substr(8));
  std::filesystem::path p(ref);
  if (!std::filesystem::exists(p) && !base.empty() && p.is_relative()) p = base / p;
  if (!std::filesystem::exists(p)) {
    try {
      return builtin_algebra(ref);
    } catch (const error&) {
      throw input_error("no such file or built-in algebra: '" + ref + "'");
    }
  }
  ojson j;
  try {
    j = ojson::parse(read_file(p));
  } catch (const ojson::parse_error& e) {
    throw input_error("malformed JSON in '" + p.string() + "': " + e.what());
  }
  return algebra_from_json(j);
}

/// A matrix from a built-in name, or an algebra file with a "designated" list.
inline logical_matrix load_matrix(const std::string& ref) {
  for (const auto& n : matrix_names())
    if (n == ref) return named_matrix(n);
  std::filesystem::path p(ref);
  if (!std::filesystem::exists(p)) throw input_error("unknown matrix '" + ref + "'");
  ojson j;
  try {
    j = ojson::parse(read_file(p));
  } catch (const ojson::parse_error& e) {
    throw input_error("malformed JSON in '" + p.string() + "': " + e.what());
  }
  algebra a = algebra_from_json(j);
  if (!j.contains("designated") || !j["designated"].is_array())
    throw input_error("matrix file '" + ref + "' needs a 'designated' array");
  std::vector<elem> d;
  for (const auto& v : j["designated"]) d.push_back(detail::element_ref(v, a.labels(), "designated"));
  return {a, d};
}

inline algebra factor_from_json(const ojson& v, const std::filesystem::path& base) {
  if (v.is_string()) return load_algebra(v.get<std::string>(), base);
  return algebra_from_json(v);
}

/// Reads {"kind", "factor1", "factor2"?, "rho"?: {label: label}}.
inline twist_spec twist_spec_from_json(const ojson& j, const std::filesystem::path& base = {}) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("factor1"))
    throw input_error("twist spec needs 'kind' and 'factor1'");
  twist_spec s;
  s.kind = parse_twist_kind(j["kind"].get<std::string>());
  s.factor1 = factor_from_json(j["factor1"], base);
  if (j.contains("factor2")) s.factor2 = factor_from_json(j["factor2"], base);
  if (j.contains("rho")) {
    if (!s.factor2) throw input_error("'rho' needs 'factor2'");
    morphism r{s.factor1.name(), s.factor2->name(), std::vector<elem>(s.factor1.size(), elem(-1))};
    for (const auto& [k, v] : j["rho"].items()) {
      elem from = detail::element_ref(ojson(k), s.factor1.labels(), "rho");
      r.map[from] = detail::element_ref(v, s.factor2->labels(), "rho");
    }
    for (elem x : r.map)
      if (x == elem(-1)) throw input_error("'rho' must map every element of factor1");
    s.rho = r;
  }
  return s;
}

inline twist_spec load_twist_spec(const std::string& path) {
  std::filesystem::path p(path);
  ojson j;
  try {
    j = ojson::parse(read_file(p));
  } catch (const ojson::parse_error& e) {
    throw input_error("malformed JSON in '" + path + "': " + e.what());
  }
  return twist_spec_from_json(j, p.parent_path());
}

inline ojson to_json(const algebra& a, const check_result& r) {
  ojson j;
  j["holds"] = r.holds;
  if (!r.holds) {
    j["law"] = r.law;
    ojson w = ojson::object();
    if (r.counterexample)
      for (std::size_t i = 0; i < r.counterexample->size(); ++i)
        w[i < r.variables.size() ? r.variables[i] : "x" + std::to_string(i)] = a.label((*r.counterexample)[i]);
    j["counterexample"] = w;
  }
  return j;
}

inline ojson to_json(const logical_matrix& m, const verdict& v) {
  ojson j;
  j["valid"] = v.valid;
  if (!v.valid && v.counter_valuation) {
    ojson w = ojson::object();
    for (std::size_t i = 0; i < v.variables.size(); ++i) w[v.variables[i]] = m.alg.label((*v.counter_valuation)[i]);
    j["counter_valuation"] = w;
  }
  return j;
}

inline ojson to_json(const morphism& m, const algebra& src, const algebra& dst) {
  ojson j = ojson::object();
  for (std::size_t i = 0; i < m.map.size(); ++i) j[src.label(elem(i))] = dst.label(m.map[i]);
  return j;
}

inline ojson to_json(const representation_report& r) {
  ojson j;
  j["kind"] = to_string(r.kind);
  j["mode"] = r.theorem_mode ? "theorem" : "exploratory";
  j["algebra"] = r.source;
  j["overall"] = r.overall;
  ojson vs = ojson::array();
  for (const auto& v : r.verdicts) {
    ojson x;
    x["property"] = v.name;
    x["ok"] = v.ok;
    if (!v.ok || !v.witness.empty()) x["witness"] = v.witness;
    vs.push_back(x);
  }
  j["verdicts"] = vs;
  if (r.factor1) j["factor1"] = to_json(*r.factor1);
  if (r.factor2) j["factor2"] = to_json(*r.factor2);
  if (r.image) {
    j["image"] = r.image->alg.labels();
    if (r.iota) {
      ojson m = ojson::object();
      for (std::size_t i = 0; i < r.iota->map.size(); ++i)
        m[r.source_labels.at(i)] = r.image->alg.label(r.iota->map[i]);
      j["iota"] = m;
    }
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

} // namespace twistlab
