#include "sdd/report.hpp"

#include <sstream>

namespace sdd {

using nlohmann::json;

json vertex_list(std::span<const Vertex> vertices, const std::optional<FamilyHeader>& header) {
  json out = json::array();
  if (header && header->has_labels()) {
    for (const auto& name : vertex_names(vertices, header)) out.push_back(name);
  } else {
    for (Vertex v : vertices) out.push_back(v);
  }
  return out;
}

json to_json(const DdsVerdict& v, const std::optional<FamilyHeader>& header) {
  json j;
  j["ok"] = v.ok;
  j["failure_kind"] = std::string(to_string(v.failure));
  if (v.failure == FailureKind::Coverage) {
    j["failure_vertex"] = vertex_list(std::span(&v.vertex, 1), header)[0];
    j["failure_multiplicity"] = v.multiplicity;
  } else {
    j["failure_vertex"] = nullptr;
    j["failure_multiplicity"] = nullptr;
  }
  j["witness_cycle"] = vertex_list(v.witness_cycle, header);
  return j;
}

json to_json(const SolveResult& r, const std::optional<FamilyHeader>& header) {
  json j;
  j["value"] = r.value;
  j["witness"] = vertex_list(r.witness.members(), header);
  j["nodes_explored"] = r.nodes_explored;
  j["limits_hit"] = r.limits_hit;
  return j;
}

json to_json(const ConstructionResult& r, const std::optional<FamilyHeader>& header) {
  json j;
  j["case_tag"] = std::string(to_string(r.case_tag));
  j["claimed_size"] = r.claimed_size;
  j["size"] = r.set.size();
  j["set"] = vertex_list(r.set.members(), header);
  j["cut_forest_expected"] = r.cut_forest_expected;
  return j;
}

json to_json(const BalanceCertificate& c, const std::optional<FamilyHeader>& header) {
  json j;
  j["balanced"] = c.balanced;
  json marking = json::array();
  for (Sign s : c.marking) marking.push_back(s == Sign::Positive ? "+" : "-");
  j["marking"] = marking;
  j["witness_cycle"] = vertex_list(c.witness_cycle, header);
  return j;
}

json to_json(const CycleDecomposition& d, const std::optional<FamilyHeader>& header) {
  json cycles = json::array();
  for (const Cycle& c : d.cycles) cycles.push_back(vertex_list(c, header));
  return json{{"cycles", cycles}};
}

namespace {

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

std::string flat(const json& v) {
  if (!v.is_array()) return v.is_object() ? v.dump() : scalar(v);
  std::string out;
  bool nested = !v.empty() && v.front().is_array();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += nested ? " | " : " ";
    out += flat(v[i]);
  }
  return out;
}

}  // namespace

std::string render_lines(const json& object) {
  std::ostringstream out;
  for (const auto& [key, value] : object.items()) out << key << ": " << flat(value) << '\n';
  return out.str();
}

}  // namespace sdd
