#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "icosa/assignment.hpp"
#include "icosa/extension.hpp"
#include "icosa/icosahedron.hpp"
#include "icosa/permutations.hpp"
#include "icosa/solver.hpp"
#include "icosa/tones.hpp"
#include "icosa/verify.hpp"

namespace icosa {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Files
// ---------------------------------------------------------------------------

inline json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

inline void save_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

// ---------------------------------------------------------------------------
// Assignments
// ---------------------------------------------------------------------------

inline json assignment_to_json(const MusicalIcosahedron& x) {
  json tones = json::object();
  for (int id = 0; id < 12; ++id) {
    const VertexId v = VertexId::from_id(id);
    tones[v.name()] = std::string(x.tone_at(v).name());
  }
  return {{"label", x.label()}, {"tones", tones}};
}

inline MusicalIcosahedron assignment_from_json(const json& j) {
  if (!j.is_object() || !j.contains("tones") || !j["tones"].is_object())
    throw std::runtime_error("assignment: expected an object with a \"tones\" map");
  const json& tones = j["tones"];
  if (tones.size() != 12) throw std::runtime_error("assignment: need 12 vertex entries");
  std::array<PitchClass, 12> by_vertex{};
  for (int id = 0; id < 12; ++id) {
    const VertexId v = VertexId::from_id(id);
    if (!tones.contains(v.name()) || !tones[v.name()].is_string())
      throw std::runtime_error("assignment: missing vertex " + v.name());
    by_vertex[static_cast<std::size_t>(id)] =
        pitch_class(tones[v.name()].get<std::string>());
  }
  std::string label;
  if (j.contains("label") && j["label"].is_string()) label = j["label"].get<std::string>();
  return MusicalIcosahedron(by_vertex, label);
}

inline void save_assignment(const MusicalIcosahedron& x, const std::string& path) {
  save_text(path, assignment_to_json(x).dump(2) + "\n");
}

inline MusicalIcosahedron load_assignment(const std::string& path) {
  return assignment_from_json(load_json(path));
}

// ---------------------------------------------------------------------------
// Graph and scales
// ---------------------------------------------------------------------------

inline json graph_to_json(const IcosahedronGraph& g) {
  json vertices = json::array();
  json coords = json::object();
  for (int id = 0; id < 12; ++id) {
    const VertexId v = VertexId::from_id(id);
    vertices.push_back(v.name());
    const auto p = IcosahedronGraph::projection(v);
    coords[v.name()] = {p[0], p[1]};
  }
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u.name(), v.name()});
  json pairs = json::array();
  for (int i = 0; i < 6; ++i) {
    auto [h, s] = IcosahedronGraph::pair_slot(i);
    pairs.push_back({h.name(), s.name()});
  }
  return {{"vertices", vertices}, {"edges", edges}, {"pairs", pairs}, {"coords", coords}};
}

inline json scale_to_json(const Scale& s) {
  json out = json::array();
  for (PitchClass t : s.tones()) out.push_back(std::string(t.name()));
  return out;
}

inline Scale scale_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::runtime_error("scale: expected a tone array");
  std::vector<PitchClass> tones;
  for (const auto& t : j) {
    if (!t.is_string()) throw std::runtime_error("scale: tones must be names");
    tones.push_back(pitch_class(t.get<std::string>()));
  }
  return Scale(std::move(tones));
}

inline json melakarta_to_json() {
  json out = json::array();
  for (const auto& e : melakarta_catalog())
    out.push_back({{"index", e.index}, {"name", e.name}, {"tones", scale_to_json(e.scale)}});
  return out;
}

// ---------------------------------------------------------------------------
// Solver inputs and outputs
// ---------------------------------------------------------------------------

inline std::vector<AssignmentConstraint> constraints_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::runtime_error("constraints: expected a list");
  std::vector<AssignmentConstraint> out;
  for (const auto& c : j) {
    if (!c.is_object() || !c.contains("scale") || !c.contains("required") ||
        !c["required"].is_number_integer())
      throw std::runtime_error("constraints: each entry needs scale and required");
    const json& s = c["scale"];
    Scale scale = s.is_string() ? catalog(s.get<std::string>()) : scale_from_json(s);
    out.push_back({std::move(scale), c["required"].get<int>()});
  }
  return out;
}

inline std::vector<AssignmentConstraint> load_constraints(const std::string& path) {
  return constraints_from_json(load_json(path));
}

inline std::vector<GaugePlacement> gauge_from_json(const json& j) {
  if (!j.is_object()) throw std::runtime_error("gauge: expected a vertex-to-tone object");
  std::vector<GaugePlacement> out;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw std::runtime_error("gauge: tones must be names");
    out.push_back({VertexId::parse(key), pitch_class(value.get<std::string>())});
  }
  return out;
}

inline std::vector<GaugePlacement> load_gauge(const std::string& path) {
  return gauge_from_json(load_json(path));
}

inline json solutions_to_json(const std::vector<MusicalIcosahedron>& solutions) {
  json out = json::array();
  for (const auto& x : solutions) out.push_back(assignment_to_json(x));
  return out;
}

// ---------------------------------------------------------------------------
// Families and tables
// ---------------------------------------------------------------------------

inline json inter_family_to_json(const std::vector<InterFamilyMember>& family) {
  json out = json::array();
  for (const auto& m : family)
    out.push_back({{"mask", m.mask.slots()},
                   {"intermediate", m.intermediate},
                   {"tones", assignment_to_json(m.assignment)["tones"]}});
  return out;
}

inline json intra_family_to_json(const std::vector<IntraFamilyMember>& family) {
  json out = json::array();
  for (const auto& m : family) {
    json rec = {{"intermediate", m.intermediate},
                {"tones", assignment_to_json(m.assignment)["tones"]}};
    rec["signature"] = m.signature ? json(*m.signature) : json(nullptr);
    out.push_back(std::move(rec));
  }
  return out;
}

inline json inter_table_to_json(const InterFamilyTable& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json classes = json::array();
    for (const auto& c : row.classes) {
      json members = json::array();
      for (const auto& m : c.members) members.push_back(m.slots());
      classes.push_back({{"class", c.canonical.slots()},
                         {"size", c.size()},
                         {"n_chain", c.counts[0]},
                         {"n_hex", c.counts[1]},
                         {"n_star", c.counts[2]},
                         {"members", members}});
    }
    rows.push_back({{"k", row.swap_count}, {"classes", classes}});
  }
  return {{"rows", rows},
          {"total_classes", table.total_classes()},
          {"intermediate_classes", table.intermediate_classes()},
          {"violations", table.violations},
          {"notices", table.notices}};
}

inline json intra_table_to_json(const IntraFamilyTable& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json classes = json::array();
    for (const auto& c : row.classes)
      classes.push_back({{"signature", c.signature}, {"size", c.member_count}});
    rows.push_back({{"n_chain", row.n_chain},
                    {"n_dual", row.n_dual},
                    {"kinds", row.kind_count()},
                    {"members", row.member_total},
                    {"classes", classes}});
  }
  return {{"rows", rows}, {"violations", table.violations}};
}

// ---------------------------------------------------------------------------
// Extension reports
// ---------------------------------------------------------------------------

inline json witness_to_json(const ExtensionWitness& w) {
  return {{"type", w.base_label}, {"mask", w.mask.slots()}};
}

inline json extension_to_json(const ExtensionResult& result) {
  json out = json::array();
  for (const auto& [key, entry] : result.entries()) {
    json tones = json::array();
    for (PitchClass t : entry.tones) tones.push_back(std::string(t.name()));
    json witnesses = json::array();
    for (const auto& w : entry.witnesses) witnesses.push_back(witness_to_json(w));
    json rec = {{"tones", tones}, {"witnesses", witnesses}};
    if (entry.tones.size() == 7) {
      if (const MelakartaEntry* e = melakarta_index(entry.tones)) {
        rec["raga_index"] = e->index;
        rec["name"] = e->name;
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

inline json theorem_report_to_json(const MelakartaTheoremReport& report) {
  json ragas = json::array();
  for (const auto& row : report.ragas) {
    json tones = json::array();
    for (PitchClass t : row.tones) tones.push_back(std::string(t.name()));
    json witnesses = json::array();
    for (const auto& w : row.witnesses) witnesses.push_back(witness_to_json(w));
    ragas.push_back({{"raga_index", row.index},
                     {"name", row.name},
                     {"tones", tones},
                     {"witnesses", witnesses}});
  }
  json unexpected = json::array();
  for (const auto& tones : report.unexpected) {
    json t = json::array();
    for (PitchClass pc : tones) t.push_back(std::string(pc.name()));
    unexpected.push_back(t);
  }
  return {{"per_base_count", report.per_base_count},
          {"missing", report.missing},
          {"unexpected", unexpected},
          {"witnesses_roundtrip", report.witnesses_roundtrip},
          {"structural_ok", report.structural_ok},
          {"passed", report.passed()},
          {"ragas", ragas}};
}

// ---------------------------------------------------------------------------
// Check reports
// ---------------------------------------------------------------------------

inline json check_report_to_json(const CheckReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"title", report.title},
          {"passed", report.all_passed()},
          {"checks", checks},
          {"notes", report.notes}};
}

inline json check_reports_to_json(const std::vector<CheckReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) out.push_back(check_report_to_json(r));
  return out;
}

}  // namespace icosa
