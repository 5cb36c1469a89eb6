// Canonical JSON / DOT / CSV emission for all computations, plus a small
// structural JSON-schema checker used to validate every shipped report
// shape.  Rationals are serialized as exact strings ("1/2", "-3"), never
// floats; object key order is insertion order so identical configs produce
// byte-identical reports.
#pragma once

#include "adlv.hpp"
#include "fforacle.hpp"
#include "kottwitz.hpp"
#include "localmodel.hpp"

#include <json.hpp>

#include <sstream>

namespace alcovelab {

using Json = nlohmann::ordered_json;

inline Json elem_to_json(const AffWeyl& aw, const AffElem& x) {
  const RootDatum& rd = aw.root_datum();
  Json j;
  j["t"] = x.t.a;
  std::vector<Int> w;
  if (rd.kind() == GroupKind::GL) {
    for (int i = 0; i < rd.dim(); ++i) w.push_back(x.w.img[i] + 1);
  } else {
    int n = rd.cn();
    for (int i = 0; i < n; ++i) {
      int im = x.w.img[i];
      w.push_back(im < n ? Int(im + 1) : -Int(rd.dim() - im));
    }
  }
  j["w"] = w;
  j["omega"] = aw.kappa(x);
  j["len"] = aw.length(x);
  return j;
}

inline Json set_to_json(const AffWeyl& aw, const std::vector<AffElem>& els) {
  Json arr = Json::array();
  for (const AffElem& x : els) arr.push_back(elem_to_json(aw, x));
  return arr;
}

inline std::string rat_vec_str(const RatVec& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += rat_str(v[i]);
  }
  return s;
}

inline Json newton_to_json(const SigmaClass& c) {
  Json j;
  Json slopes = Json::array();
  for (const Rat& s : c.newton) slopes.push_back(rat_str(s));
  j["newton"] = slopes;
  j["kappa"] = c.kappa;
  j["basic"] = c.basic;
  return j;
}

inline Json bgmu_to_json(const RootDatum& rd, const BGmuPoset& P) {
  Json j;
  j["size"] = P.elements.size();
  Json els = Json::array();
  for (std::size_t i = 0; i < P.elements.size(); ++i) {
    Json e = newton_to_json(P.elements[i]);
    e["rank"] = P.rank[i];
    els.push_back(std::move(e));
  }
  j["elements"] = std::move(els);
  Json edges = Json::array();
  for (auto [a, b] : P.hasse) edges.push_back(Json::array({a, b}));
  j["edges"] = std::move(edges);
  j["basic_index"] = P.basic_index;
  j["ordinary_index"] = P.ordinary_index;
  (void)rd;
  return j;
}

// ----- DOT -------------------------------------------------------------------

inline std::string elem_label(const AffWeyl& aw, const AffElem& x) {
  std::ostringstream os;
  os << "t=(";
  for (std::size_t i = 0; i < x.t.a.size(); ++i) os << (i ? "," : "") << x.t.a[i];
  os << ") w=(";
  for (std::size_t i = 0; i < x.w.img.size(); ++i)
    os << (i ? "," : "") << x.w.img[i] + 1;
  os << ") l=" << aw.length(x);
  return os.str();
}

// Hasse diagram (covering relations only) of a finite set under a given order
template <typename LeqFn, typename LabelFn>
inline std::string emit_hasse_dot(std::size_t count, LeqFn leq, LabelFn label) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < count; ++i)
    os << "  n" << i << " [label=\"" << label(i) << "\"];\n";
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool covering = true;
      for (std::size_t k = 0; k < count && covering; ++k)
        if (k != i && k != j && leq(i, k) && leq(k, j)) covering = false;
      if (covering) os << "  n" << i << " -> n" << j << ";\n";
    }
  os << "}\n";
  return os.str();
}

inline std::string bgmu_dot(const BGmuPoset& P) {
  return emit_hasse_dot(
      P.elements.size(), [&](std::size_t i, std::size_t j) { return (bool)P.leq[i][j]; },
      [&](std::size_t i) {
        return "(" + rat_vec_str(P.elements[i].newton) + ")";
      });
}

inline std::string bruhat_set_dot(const AffWeyl& aw, const std::vector<AffElem>& els) {
  // precompute the induced order once; lower sets are reused across pairs
  std::vector<AffSet> lowers;
  lowers.reserve(els.size());
  for (const AffElem& e : els) lowers.push_back(aw.bruhat_lower_set(e));
  auto leq = [&](std::size_t i, std::size_t j) {
    return aw.kappa(els[i]) == aw.kappa(els[j]) && lowers[j].count(els[i]) > 0;
  };
  return emit_hasse_dot(els.size(), leq,
                        [&](std::size_t i) { return elem_label(aw, els[i]); });
}

// ----- minimal JSON-schema validation ------------------------------------------

// Supports the subset used by the shipped schemas: type, properties,
// required, items, enum.
inline bool json_matches_schema(const Json& value, const Json& schema,
                                std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (schema.contains("enum")) {
    for (const auto& v : schema["enum"])
      if (value == v) return true;
    return fail("value not in enum");
  }
  if (schema.contains("type")) {
    const std::string t = schema["type"];
    if (t == "object" && !value.is_object()) return fail("expected object");
    if (t == "array" && !value.is_array()) return fail("expected array");
    if (t == "string" && !value.is_string()) return fail("expected string");
    if (t == "integer" && !value.is_number_integer()) return fail("expected integer");
    if (t == "boolean" && !value.is_boolean()) return fail("expected boolean");
    if (t == "number" && !value.is_number()) return fail("expected number");
  }
  if (schema.contains("required"))
    for (const auto& k : schema["required"])
      if (!value.contains(k.get<std::string>()))
        return fail("missing required key " + k.get<std::string>());
  if (schema.contains("properties") && value.is_object()) {
    for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it) {
      if (!value.contains(it.key())) continue;
      std::string sub;
      if (!json_matches_schema(value.at(it.key()), it.value(), &sub))
        return fail(it.key() + ": " + sub);
    }
  }
  if (schema.contains("items") && value.is_array()) {
    for (const auto& v : value) {
      std::string sub;
      if (!json_matches_schema(v, schema["items"], &sub)) return fail("items: " + sub);
    }
  }
  return true;
}

}  // namespace alcovelab
