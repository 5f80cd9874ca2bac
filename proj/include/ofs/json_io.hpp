#ifndef OFS_JSON_IO_HPP
#define OFS_JSON_IO_HPP

#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ofs/classify.hpp"

namespace ofs {

using json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// One self-contained problem instance: a category plus named weights,
/// coweights and sequences over it. Loading validates everything and
/// refuses files carrying any axiom violation.
struct Instance {
  DQCategory category;
  std::vector<std::pair<std::string, Weight>> weights;
  std::vector<std::pair<std::string, Coweight>> coweights;
  std::vector<std::pair<std::string, EPSequence>> sequences;

  const Weight* find_weight(const std::string& name) const {
    for (const auto& [n, w] : weights)
      if (n == name) return &w;
    return nullptr;
  }
  const EPSequence* find_sequence(const std::string& name) const {
    for (const auto& [n, s] : sequences)
      if (n == name) return &s;
    return nullptr;
  }
};

inline json tnorm_to_json(const TNorm& t) {
  json j;
  j["kind"] = t.name();
  if (t.kind() == TNormKind::OrdinalSum) {
    json pieces = json::array();
    for (const Piece& p : t.pieces()) {
      json pj;
      pj["lo"] = p.lo;
      pj["hi"] = p.hi;
      pj["kind"] = p.kind == PieceKind::Lukasiewicz ? "lukasiewicz" : "product";
      pieces.push_back(pj);
    }
    j["pieces"] = pieces;
  }
  return j;
}

inline TNorm tnorm_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParseError("tnorm: expected an object with a \"kind\" string");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "godel") return TNorm::godel();
  if (kind == "lukasiewicz") return TNorm::lukasiewicz();
  if (kind == "product") return TNorm::product();
  if (kind != "ordinal_sum") throw ParseError("tnorm: unknown kind \"" + kind + "\"");
  if (!j.contains("pieces") || !j["pieces"].is_array())
    throw ParseError("tnorm: ordinal_sum needs a \"pieces\" array");
  std::vector<Piece> pieces;
  for (const json& pj : j["pieces"]) {
    if (!pj.is_object() || !pj.contains("lo") || !pj.contains("hi") || !pj.contains("kind"))
      throw ParseError("tnorm: each piece needs lo, hi and kind");
    Piece p;
    p.lo = pj["lo"].get<truth>();
    p.hi = pj["hi"].get<truth>();
    const std::string pk = pj["kind"].get<std::string>();
    if (pk == "lukasiewicz") p.kind = PieceKind::Lukasiewicz;
    else if (pk == "product") p.kind = PieceKind::Product;
    else throw ParseError("tnorm: unknown piece kind \"" + pk + "\"");
    pieces.push_back(p);
  }
  try {
    return TNorm::ordinal_sum(std::move(pieces));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
}

inline json instance_to_json(const Instance& inst) {
  json j;
  j["tnorm"] = tnorm_to_json(inst.category.tnorm);
  j["objects"] = inst.category.objects;
  j["hom"] = inst.category.hom;
  if (!inst.weights.empty()) {
    json ws = json::array();
    for (const auto& [name, w] : inst.weights) {
      json wj;
      wj["name"] = name;
      wj["type"] = w.wtype;
      wj["values"] = w.values;
      ws.push_back(wj);
    }
    j["weights"] = ws;
  }
  if (!inst.coweights.empty()) {
    json ws = json::array();
    for (const auto& [name, w] : inst.coweights) {
      json wj;
      wj["name"] = name;
      wj["type"] = w.wtype;
      wj["values"] = w.values;
      ws.push_back(wj);
    }
    j["coweights"] = ws;
  }
  if (!inst.sequences.empty()) {
    json ss = json::array();
    for (const auto& [name, s] : inst.sequences) {
      json sj;
      sj["name"] = name;
      sj["prefix"] = s.prefix;
      sj["cycle"] = s.cycle;
      ss.push_back(sj);
    }
    j["sequences"] = ss;
  }
  return j;
}

/// Parses and fully validates an instance; collects every violation across
/// the category and all named components before refusing.
inline Instance instance_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("instance: expected a JSON object");
  if (!j.contains("tnorm") || !j.contains("objects") || !j.contains("hom"))
    throw ParseError("instance: tnorm, objects and hom are required");
  Instance inst;
  inst.category.tnorm = tnorm_from_json(j["tnorm"]);
  try {
    inst.category.objects = j["objects"].get<std::vector<std::string>>();
    inst.category.hom = j["hom"].get<std::vector<std::vector<truth>>>();
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("instance: ") + ex.what());
  }
  const std::size_t n = inst.category.objects.size();
  if (inst.category.hom.size() != n)
    throw ParseError("instance: hom must be a square matrix over the objects");
  for (const auto& row : inst.category.hom)
    if (row.size() != n) throw ParseError("instance: hom must be a square matrix over the objects");
  inst.category.types.resize(n);
  for (std::size_t i = 0; i < n; ++i) inst.category.types[i] = inst.category.hom[i][i];

  ValidationReport all = validate(inst.category);

  if (j.contains("weights")) {
    if (!j["weights"].is_array()) throw ParseError("instance: weights must be an array");
    for (const json& wj : j["weights"]) {
      if (!wj.is_object() || !wj.contains("name") || !wj.contains("type") || !wj.contains("values"))
        throw ParseError("instance: weight entries need name, type, values");
      Weight w;
      w.wtype = wj["type"].get<truth>();
      w.values = wj["values"].get<std::vector<truth>>();
      ValidationReport r = validate(inst.category, w);
      for (Violation& v : r.violations) {
        v.component = "weight " + wj["name"].get<std::string>();
        all.violations.push_back(v);
      }
      inst.weights.emplace_back(wj["name"].get<std::string>(), std::move(w));
    }
  }
  if (j.contains("coweights")) {
    if (!j["coweights"].is_array()) throw ParseError("instance: coweights must be an array");
    for (const json& wj : j["coweights"]) {
      if (!wj.is_object() || !wj.contains("name") || !wj.contains("type") || !wj.contains("values"))
        throw ParseError("instance: coweight entries need name, type, values");
      Coweight w;
      w.wtype = wj["type"].get<truth>();
      w.values = wj["values"].get<std::vector<truth>>();
      ValidationReport r = validate(inst.category, w);
      for (Violation& v : r.violations) {
        v.component = "coweight " + wj["name"].get<std::string>();
        all.violations.push_back(v);
      }
      inst.coweights.emplace_back(wj["name"].get<std::string>(), std::move(w));
    }
  }
  if (j.contains("sequences")) {
    if (!j["sequences"].is_array()) throw ParseError("instance: sequences must be an array");
    for (const json& sj : j["sequences"]) {
      if (!sj.is_object() || !sj.contains("name") || !sj.contains("cycle"))
        throw ParseError("instance: sequence entries need name and cycle");
      EPSequence s;
      if (sj.contains("prefix")) s.prefix = sj["prefix"].get<std::vector<std::size_t>>();
      s.cycle = sj["cycle"].get<std::vector<std::size_t>>();
      if (s.cycle.empty()) {
        all.violations.push_back({"sequence " + sj["name"].get<std::string>(), "empty cycle", {}, 0.0, 0.0});
      } else {
        for (std::size_t idx : s.prefix)
          if (idx >= n)
            all.violations.push_back({"sequence " + sj["name"].get<std::string>(),
                                      "prefix index out of range", {static_cast<int>(idx)}, truth(idx), truth(n)});
        for (std::size_t idx : s.cycle)
          if (idx >= n)
            all.violations.push_back({"sequence " + sj["name"].get<std::string>(),
                                      "cycle index out of range", {static_cast<int>(idx)}, truth(idx), truth(n)});
      }
      inst.sequences.emplace_back(sj["name"].get<std::string>(), std::move(s));
    }
  }
  if (!all.ok()) throw ValidationError(std::move(all));
  return inst;
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("json parse failure: ") + ex.what());
  }
  return instance_from_json(j);
}

inline void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << instance_to_json(inst).dump(2) << "\n";
}

inline json report_to_json(const ValidationReport& r) {
  json j;
  j["valid"] = r.ok();
  json vs = json::array();
  for (const Violation& v : r.violations) {
    json vj;
    vj["component"] = v.component;
    vj["condition"] = v.condition;
    vj["indices"] = v.indices;
    vj["lhs"] = v.lhs;
    vj["rhs"] = v.rhs;
    vs.push_back(vj);
  }
  j["violations"] = vs;
  return j;
}

inline json flat_verdict_to_json(const FlatVerdict& v) {
  json j;
  switch (v.status) {
    case FlatStatus::CertifiedFlat: j["status"] = "certified_flat"; break;
    case FlatStatus::RefutedFlat: j["status"] = "refuted_flat"; break;
    case FlatStatus::Unknown: j["status"] = "unknown"; break;
  }
  if (!v.route.empty()) j["route"] = v.route;
  j["detail"] = v.detail;
  if (v.refute_b) j["b"] = *v.refute_b;
  if (v.refute_type) j["pair_type"] = *v.refute_type;
  if (v.refute_psi1) j["psi1"] = *v.refute_psi1;
  if (v.refute_psi2) j["psi2"] = *v.refute_psi2;
  if (v.lhs) j["lhs"] = *v.lhs;
  if (v.rhs) j["rhs"] = *v.rhs;
  return j;
}

} // namespace ofs

#endif // OFS_JSON_IO_HPP
