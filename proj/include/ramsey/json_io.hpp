#pragma once

#include <cstdint>
#include <cstdio>
#include <string>

#include "json.hpp"
#include "ramsey/arrowing.hpp"
#include "ramsey/classifier.hpp"
#include "ramsey/density.hpp"
#include "ramsey/enumerator.hpp"
#include "ramsey/graph6.hpp"

// JSON documents emitted by the command-line tool. Keys keep insertion
// order, so output is stable.

namespace ramsey::json {

using Json = nlohmann::ordered_json;

inline constexpr const char* kArrowingDefinition =
    "arrowing: F -> (G, H) iff every red/blue edge colouring of F has a red G or a blue H";
inline constexpr const char* kMinimalityDefinition =
    "Ramsey-minimal: F -> (G, H) and F - e does not arrow (G, H) for every edge e";
inline constexpr const char* kDensityDefinition =
    "densities: rho(X) = max e(J)/v(J); m2(X) = max (e(J)-1)/(v(J)-2); "
    "m2(G,H) = max e(J)/(v(J)-2+1/m2(H)) over J in G, with m2(G) >= m2(H)";
inline constexpr const char* kRamseyDensityClaim =
    "every Ramsey-minimal F for a cyclic pair satisfies rho(F) > m2(G, H)";

inline Json edge_json(Edge e) { return Json::array({e.u, e.v}); }

inline Json stats_json(const SearchStats& s) {
  return Json{{"nodes", s.nodes}, {"seconds", s.seconds}};
}

inline Json answer_json(Answer a) {
  switch (a) {
    case Answer::kYes: return true;
    case Answer::kNo: return false;
    case Answer::kUnknown: return nullptr;
  }
  return nullptr;
}

inline Json coloring_json(const EdgeColoring& c) {
  Json edges = Json::array();
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    edges.push_back(Json::array({c.edges[i].u, c.edges[i].v,
                                 c.colors[i] == Color::kRed    ? "red"
                                 : c.colors[i] == Color::kBlue ? "blue"
                                                               : "unassigned"}));
  }
  return Json{{"code", c.code()}, {"edges", std::move(edges)}};
}

inline Json arrow_document(const Graph& f, const Graph& g, const Graph& h, const ArrowVerdict& v) {
  Json doc;
  doc["command"] = "arrow";
  doc["F"] = emit_graph6(f);
  doc["G"] = emit_graph6(g);
  doc["H"] = emit_graph6(h);
  doc["verdict"] = to_string(v.answer);
  doc["arrows"] = answer_json(v.answer);
  doc["witness"] = v.witness ? coloring_json(*v.witness) : Json(nullptr);
  doc["stats"] = stats_json(v.stats);
  doc["citations"] = Json::array({kArrowingDefinition});
  return doc;
}

inline Json minimal_document(const Graph& f, const Graph& g, const Graph& h,
                             const MinimalityReport& r) {
  Json per_edge = Json::array();
  for (const EdgeWitness& w : r.per_edge) {
    per_edge.push_back(Json{{"edge", edge_json(w.edge)},
                            {"arrows_without", answer_json(w.arrows_without)},
                            {"coloring", w.coloring ? Json(w.coloring->code()) : Json(nullptr)}});
  }
  Json doc;
  doc["command"] = "minimal";
  doc["F"] = emit_graph6(f);
  doc["G"] = emit_graph6(g);
  doc["H"] = emit_graph6(h);
  doc["verdict"] = to_string(r.is_minimal);
  doc["is_ramsey"] = answer_json(r.is_ramsey);
  doc["is_minimal"] = answer_json(r.is_minimal);
  doc["per_edge"] = std::move(per_edge);
  doc["stats"] = stats_json(r.stats);
  doc["citations"] = Json::array({kArrowingDefinition, kMinimalityDefinition});
  return doc;
}

inline Json witness_json(const DensityWitness& w) {
  return Json{{"value", w.value.to_string()}, {"vertices", w.vertices}};
}

inline Json density_document(const Graph& x, const Graph* partner, const DensityReport& r) {
  Json doc;
  doc["command"] = "density";
  doc["X"] = emit_graph6(x);
  doc["rho"] = witness_json(r.rho);
  doc["m2"] = r.m2 ? witness_json(*r.m2) : Json(nullptr);
  if (partner) {
    doc["Y"] = emit_graph6(*partner);
    const PairDensity& p = *r.m2_pair;
    doc["m2_pair"] = Json{{"value", p.value.to_string()},
                          {"vertices", p.vertices},
                          {"swapped", p.swapped},
                          {"m2_first", p.m2_first.to_string()},
                          {"m2_second", p.m2_second.to_string()}};
  }
  doc["citations"] = Json::array({kDensityDefinition});
  return doc;
}

inline Json classification_document(const Graph& g, const Graph& h, const Classification& c) {
  Json trail = Json::array();
  Json cites = Json::array();
  for (const TrailEntry& t : c.trail) {
    trail.push_back(Json{{"rule", t.rule}, {"citation", t.citation}, {"reason", t.reason}});
    cites.push_back(t.citation);
  }
  Json doc;
  doc["command"] = "classify";
  doc["G"] = emit_graph6(g);
  doc["H"] = emit_graph6(h);
  doc["verdict"] = to_string(c.verdict);
  doc["rule"] = c.deciding().rule;
  doc["citation"] = c.deciding().citation;
  doc["condition"] = c.condition.empty() ? Json(nullptr) : Json(c.condition);
  doc["trail"] = std::move(trail);
  doc["citations"] = std::move(cites);
  return doc;
}

/// FNV-1a over the per-edge witness codes of one member.
inline std::string witness_digest(const MinimalityReport& r) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (const EdgeWitness& w : r.per_edge) {
    const std::string code = std::to_string(w.edge.u) + "-" + std::to_string(w.edge.v) + ":" +
                             (w.coloring ? w.coloring->code() : std::string("?")) + ";";
    for (unsigned char ch : code) {
      hash ^= ch;
      hash *= 1099511628211ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

inline Json catalog_document(const MinimalCatalog& cat, const Json& audit = nullptr) {
  Json members = Json::array();
  for (const CatalogMember& m : cat.members) {
    Json witnesses = Json::array();
    for (const EdgeWitness& w : m.report.per_edge) {
      witnesses.push_back(Json{{"edge", edge_json(w.edge)},
                               {"coloring", w.coloring ? Json(w.coloring->code()) : Json(nullptr)}});
    }
    members.push_back(Json{{"graph6", m.graph6},
                           {"vertices", m.graph.order()},
                           {"edges", m.graph.edge_count()},
                           {"digest", witness_digest(m.report)},
                           {"witnesses", std::move(witnesses)}});
  }
  Json doc;
  doc["command"] = "enumerate";
  doc["pair"] = Json{{"G", emit_graph6(cat.g)}, {"H", emit_graph6(cat.h)}};
  doc["bounds"] = Json{{"max_vertices", cat.bounds.max_vertices},
                       {"max_edges", cat.bounds.max_edges},
                       {"node_budget", cat.bounds.node_budget}};
  doc["completeness"] = cat.complete ? "complete within bounds" : "budget-limited";
  doc["undecided"] = cat.undecided;
  doc["candidates"] = cat.candidates;
  doc["members"] = std::move(members);
  if (!audit.is_null()) doc["density_audit"] = audit;
  Json cites = Json::array({kArrowingDefinition, kMinimalityDefinition});
  if (!audit.is_null()) cites.push_back(kRamseyDensityClaim);
  doc["citations"] = std::move(cites);
  return doc;
}

inline Json audit_json(const DensityAudit& a) {
  Json entries = Json::array();
  for (const DensityAuditEntry& e : a.entries) {
    entries.push_back(Json{{"graph6", e.graph6},
                           {"contains_targets", e.contains_targets},
                           {"rho", e.contains_targets ? Json(e.rho.to_string()) : Json(nullptr)},
                           {"exceeds", e.exceeds}});
  }
  return Json{{"m2_pair", a.threshold.to_string()},
              {"passed", a.passed},
              {"entries", std::move(entries)},
              {"falsifications", a.falsifications}};
}

}  // namespace ramsey::json
