#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdd/families.hpp"
#include "sdd/graph.hpp"
#include "sdd/signed_graph.hpp"

namespace sdd {

/// "# family P 5 2", "# family I 7 2 3" or "# family K4U 3".
struct FamilyHeader {
  std::string family;
  std::vector<std::size_t> params;

  /// True for P and I headers, whose vertices carry u/v labels.
  bool has_labels() const { return family == "P" || family == "I"; }
  /// Half the vertex count for labelled families.
  std::size_t rim_size() const { return params.empty() ? 0 : params.front(); }

  std::string line() const;
  friend bool operator==(const FamilyHeader&, const FamilyHeader&) = default;
};

FamilyHeader header_for(const FamilyGraph& f);

/// Rebuilds the family graph named by a P or I header.
FamilyGraph family_from_header(const FamilyHeader& h);

/// Contents of an edge-list file. Unsigned files have rows "a b", signed
/// files rows "a b s" with s in {+,-}; a file must use one row shape
/// throughout. Lines starting with '#' are comments, except the family
/// header, which is recognised anywhere before the first data line.
struct EdgeListFile {
  Graph graph;
  std::optional<Signature> signature;
  std::optional<FamilyHeader> family;

  bool is_signed() const { return signature.has_value(); }
  /// The signed graph, all-positive if the file was unsigned.
  SignedGraph as_signed() const;
};

/// Throws Error(Parse) with a "line N:" prefix on malformed input,
/// including a count line "n m" that disagrees with the number of rows.
EdgeListFile parse_edge_list(std::istream& in);
EdgeListFile parse_edge_list(std::string_view text);

/// Reads a whole file; throws Error(Parse) if it cannot be opened.
std::string read_text_file(const std::string& path);

/// Edges are written in canonical sorted order.
void write_edge_list(std::ostream& out, const Graph& g, const std::optional<FamilyHeader>& header = {});
void write_signed_edge_list(std::ostream& out, const SignedGraph& s,
                            const std::optional<FamilyHeader>& header = {});

/// Comma-separated vertex spec. Entries are raw indices ("3") or, with a
/// labelled family header, u/v labels ("u0", "v3").
VertexSet parse_vertex_set(std::string_view spec, std::size_t vertex_count,
                           const std::optional<FamilyHeader>& header);

/// Sorted labels when a labelled header is given, raw indices otherwise.
std::vector<std::string> vertex_names(std::span<const Vertex> vertices,
                                      const std::optional<FamilyHeader>& header);

}  // namespace sdd
