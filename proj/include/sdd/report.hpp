#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "sdd/constructions.hpp"
#include "sdd/domination.hpp"
#include "sdd/io.hpp"

namespace sdd {

// Structured payloads. Field names are part of the file format:
//
//   verdict:       ok, failure_kind ("none" | "coverage" | "unbalanced_cut"),
//                  failure_vertex, failure_multiplicity, witness_cycle
//   solve result:  value, witness, nodes_explored, limits_hit
//   construction:  case_tag, claimed_size, size, set, cut_forest_expected
//   balance:       balanced, marking, witness_cycle
//   decomposition: cycles
//
// Vertex lists are emitted as u/v labels when a labelled family header is
// known and as integer indices otherwise. failure_vertex is null unless the
// failure is a coverage failure.

nlohmann::json to_json(const DdsVerdict& v, const std::optional<FamilyHeader>& header = {});
nlohmann::json to_json(const SolveResult& r, const std::optional<FamilyHeader>& header = {});
nlohmann::json to_json(const ConstructionResult& r, const std::optional<FamilyHeader>& header = {});
nlohmann::json to_json(const BalanceCertificate& c, const std::optional<FamilyHeader>& header = {});
nlohmann::json to_json(const CycleDecomposition& d, const std::optional<FamilyHeader>& header = {});

/// Vertex list as labels or indices, see above.
nlohmann::json vertex_list(std::span<const Vertex> vertices, const std::optional<FamilyHeader>& header);

/// Line-oriented rendering: one "key: value" line per top-level field, in
/// key order. Arrays print space-separated; nested arrays use " | " between
/// the inner lists.
std::string render_lines(const nlohmann::json& object);

}  // namespace sdd
