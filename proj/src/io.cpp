#include "sdd/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace sdd {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

std::optional<std::size_t> to_count(std::string_view tok) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

std::size_t count_or_fail(std::size_t line, std::string_view tok, std::string_view what) {
  auto v = to_count(tok);
  if (!v) parse_error(line, "expected a non-negative integer for " + std::string(what) + ", got '" +
                                std::string(tok) + "'");
  return *v;
}

std::optional<FamilyHeader> parse_header(const std::vector<std::string>& toks, std::size_t line) {
  // toks[0] == "#"
  if (toks.size() < 2 || toks[1] != "family") return std::nullopt;
  if (toks.size() < 3) parse_error(line, "family header without a family name");
  FamilyHeader h;
  h.family = toks[2];
  std::size_t expected = h.family == "P" ? 2 : h.family == "I" ? 3 : h.family == "K4U" ? 1 : 0;
  if (expected == 0) parse_error(line, "unknown family '" + h.family + "'");
  if (toks.size() != 3 + expected)
    parse_error(line, "family " + h.family + " takes " + std::to_string(expected) + " parameters");
  for (std::size_t i = 3; i < toks.size(); ++i) h.params.push_back(count_or_fail(line, toks[i], "family parameter"));
  return h;
}

std::size_t family_vertex_count(const FamilyHeader& h) {
  return h.family == "K4U" ? 4 * h.params[0] : 2 * h.params[0];
}

}  // namespace

std::string FamilyHeader::line() const {
  std::string s = "# family " + family;
  for (auto p : params) s += " " + std::to_string(p);
  return s;
}

FamilyHeader header_for(const FamilyGraph& f) {
  if (f.kind == FamilyKind::Petersen) return {"P", {f.n, f.k}};
  return {"I", {f.n, f.j, f.k}};
}

FamilyGraph family_from_header(const FamilyHeader& h) {
  if (h.family == "P" && h.params.size() == 2) return petersen(h.params[0], h.params[1]);
  if (h.family == "I" && h.params.size() == 3) return igraph(h.params[0], h.params[1], h.params[2]);
  throw Error(ErrorKind::InvalidParameters, "header '" + h.line() + "' does not name a P or I family");
}

SignedGraph EdgeListFile::as_signed() const {
  if (signature) return SignedGraph(graph, *signature);
  return all_positive(graph);
}

EdgeListFile parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

EdgeListFile parse_edge_list(std::istream& in) {
  EdgeListFile file;
  std::optional<std::pair<std::size_t, std::size_t>> counts;
  std::size_t header_line = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::map<Edge, Sign> signs;
  std::optional<bool> signed_rows;

  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto toks = split_ws(raw);
    if (toks.empty()) continue;
    if (toks[0].front() == '#') {
      if (toks[0] == "#" && !counts) {
        if (auto h = parse_header(toks, line)) file.family = std::move(h);
      }
      continue;
    }
    if (!counts) {
      if (toks.size() != 2) parse_error(line, "expected count line 'n m'");
      counts = {count_or_fail(line, toks[0], "n"), count_or_fail(line, toks[1], "m")};
      header_line = line;
      continue;
    }
    if (toks.size() != 2 && toks.size() != 3) parse_error(line, "expected 'a b' or 'a b s'");
    const bool has_sign = toks.size() == 3;
    if (signed_rows && *signed_rows != has_sign) parse_error(line, "mixes signed and unsigned edge rows");
    signed_rows = has_sign;

    const std::size_t n = counts->first;
    std::size_t a = count_or_fail(line, toks[0], "endpoint");
    std::size_t b = count_or_fail(line, toks[1], "endpoint");
    if (a >= n || b >= n) parse_error(line, "endpoint out of range 0.." + std::to_string(n == 0 ? 0 : n - 1));
    if (a == b) parse_error(line, "self-loop at vertex " + std::to_string(a));
    pairs.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    if (has_sign) {
      Sign s;
      if (toks[2] == "+") s = Sign::Positive;
      else if (toks[2] == "-") s = Sign::Negative;
      else parse_error(line, "sign must be '+' or '-', got '" + toks[2] + "'");
      Edge e = make_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
      auto [it, inserted] = signs.emplace(e, s);
      if (!inserted && it->second != s)
        parse_error(line, "edge " + std::to_string(e.a) + " " + std::to_string(e.b) + " repeated with a different sign");
    }
  }
  if (!counts) parse_error(line + 1, "missing count line 'n m'");
  if (pairs.size() != counts->second)
    parse_error(header_line, "count line announces " + std::to_string(counts->second) + " edges, file has " +
                                 std::to_string(pairs.size()));
  if (file.family && family_vertex_count(*file.family) != counts->first)
    parse_error(header_line, "family header '" + file.family->line() + "' does not match n=" +
                                 std::to_string(counts->first));

  file.graph = Graph(counts->first, pairs);
  if (signed_rows.value_or(false)) {
    Signature sig;
    sig.reserve(file.graph.edge_count());
    for (const Edge& e : file.graph.edges()) sig.push_back(signs.at(e));
    file.signature = std::move(sig);
  }
  return file;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_edge_list(std::ostream& out, const Graph& g, const std::optional<FamilyHeader>& header) {
  if (header) out << header->line() << '\n';
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.a << ' ' << e.b << '\n';
}

void write_signed_edge_list(std::ostream& out, const SignedGraph& s, const std::optional<FamilyHeader>& header) {
  const Graph& g = s.graph();
  if (header) out << header->line() << '\n';
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    out << g.edge(e).a << ' ' << g.edge(e).b << ' ' << (s.sign(e) == Sign::Positive ? '+' : '-') << '\n';
}

VertexSet parse_vertex_set(std::string_view spec, std::size_t vertex_count,
                           const std::optional<FamilyHeader>& header) {
  VertexSet out(vertex_count);
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    auto comma = spec.find(',', pos);
    auto item = spec.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      if (item.front() == 'u' || item.front() == 'v') {
        if (!header || !header->has_labels())
          throw Error(ErrorKind::Parse, "label '" + std::string(item) +
                                            "' needs a P or I family header in the graph file");
        out.insert(parse_vertex_label(header->rim_size(), item));
      } else {
        auto v = to_count(item);
        if (!v) throw Error(ErrorKind::Parse, "bad vertex '" + std::string(item) + "'");
        if (*v >= vertex_count)
          throw Error(ErrorKind::OutOfRange, "vertex " + std::to_string(*v) + " outside graph on " +
                                                 std::to_string(vertex_count) + " vertices");
        out.insert(static_cast<Vertex>(*v));
      }
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<std::string> vertex_names(std::span<const Vertex> vertices, const std::optional<FamilyHeader>& header) {
  std::vector<std::string> out;
  out.reserve(vertices.size());
  for (Vertex v : vertices)
    out.push_back(header && header->has_labels() ? vertex_label(header->rim_size(), v) : std::to_string(v));
  return out;
}

}  // namespace sdd
