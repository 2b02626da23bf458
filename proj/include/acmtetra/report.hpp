#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "acmtetra/graph.hpp"
#include "acmtetra/homology.hpp"
#include "acmtetra/ideal.hpp"
#include "acmtetra/verdict.hpp"

namespace acmtetra {

// Universe used to name certificate vertices of tetrahedral curves.
inline Universe tetrahedral_names() { return Universe::polarized({0, 0, 0, 0}); }

inline nlohmann::json to_json(const BettiTable& table) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [key, rank] : table.entries())
    out[std::to_string(key.first) + "," + std::to_string(key.second)] = rank;
  return out;
}

inline nlohmann::json to_json(const std::vector<VarId>& vars, const Universe& names) {
  nlohmann::json out = nlohmann::json::array();
  for (VarId v : vars) out.push_back(names.name(v));
  return out;
}

inline nlohmann::json to_json(const ChordalityCertificate& cert, const Universe& names) {
  nlohmann::json out;
  out["chordal"] = cert.chordal;
  if (cert.elimination_order) out["elimination_order"] = to_json(*cert.elimination_order, names);
  if (cert.chordless_cycle) out["chordless_cycle"] = to_json(*cert.chordless_cycle, names);
  return out;
}

inline nlohmann::json to_json(const AcmVerdict& v, const Universe& names = tetrahedral_names()) {
  nlohmann::json out;
  out["acm"] = v.acm;
  out["method"] = to_string(v.method);
  out["normalization"] = to_string(v.normalization);
  if (v.condition) {
    nlohmann::json c;
    c["id"] = to_string(v.condition->id);
    if (v.condition->inequality) c["inequality"] = *v.condition->inequality;
    if (v.condition->epsilon) c["epsilon"] = *v.condition->epsilon;
    out["condition"] = c;
  }
  if (v.witness) out["witness"] = {{"i", v.witness->i}, {"j", v.witness->j}, {"l", v.witness->l}, {"m", v.witness->m}};
  if (v.graph_certificate) out["certificate"] = to_json(*v.graph_certificate, names);
  if (v.betti) out["betti"] = to_json(*v.betti);
  if (v.reisner_obstruction) out["reisner_obstruction"] = to_json(*v.reisner_obstruction, names);
  return out;
}

inline std::string render(const FourCycleWitness& w) {
  return "(" + std::to_string(w.i) + "," + std::to_string(w.j) + "," + std::to_string(w.l) + "," +
         std::to_string(w.m) + ")";
}

// One-line summary; Betti tables are rendered separately.
inline std::string render(const AcmVerdict& v, const Universe& names = tetrahedral_names()) {
  std::string s = std::string(to_string(v.method)) + ": " + (v.acm ? "ACM" : "not ACM");
  if (v.condition) {
    s += std::string(" via condition (") + to_string(v.condition->id) + ")";
    if (v.condition->inequality) s += ", inequality " + std::to_string(*v.condition->inequality) + " is strict";
    if (v.condition->epsilon) s += ", epsilon = " + std::to_string(*v.condition->epsilon);
  }
  if (v.witness) s += ", witness (i,j,l,m) = " + render(*v.witness);
  if ((v.method == Method::witness) && !v.witness) s += ", no four-cycle witness";
  if (v.graph_certificate) {
    if (v.graph_certificate->elimination_order)
      s += ", perfect elimination order: " + render_vertices(names, *v.graph_certificate->elimination_order);
    if (v.graph_certificate->chordless_cycle)
      s += ", chordless cycle: " + render_vertices(names, *v.graph_certificate->chordless_cycle, " - ");
  }
  if (v.method == Method::linear_resolution) s += v.acm ? ", resolution is linear" : ", resolution is not linear";
  if (v.reisner_obstruction)
    s += ", link of {" + render_vertices(names, *v.reisner_obstruction, ",") + "} has homology below its dimension";
  if (v.normalization != Normalization::identity) s += std::string(" [normalized by ") + to_string(v.normalization) + "]";
  return s;
}

inline const char* kCsvHeader = "p1,p2,p3,p4,p5,p6,acm,method,condition,witness_i,witness_j,witness_l,witness_m";

inline std::string csv_row(const ExponentVector& p, const AcmVerdict& v) {
  std::string s;
  for (std::size_t k = 0; k < 6; ++k) s += std::to_string(p[k]) + ",";
  s += std::string(v.acm ? "ACM" : "not_ACM") + "," + to_string(v.method) + ",";
  if (v.condition) s += to_string(v.condition->id);
  if (v.witness)
    s += "," + std::to_string(v.witness->i) + "," + std::to_string(v.witness->j) + "," + std::to_string(v.witness->l) +
         "," + std::to_string(v.witness->m);
  else
    s += ",,,,";
  return s;
}

}  // namespace acmtetra
