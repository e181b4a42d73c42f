#include "barricade/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <charconv>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "barricade/errors.hpp"

namespace barricade {

namespace {

// Ids beyond this are almost certainly sparse external ids; those go through ingest.
constexpr std::uint64_t kMaxDenseId = 1u << 28;

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

bool is_comment_or_blank(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::uint64_t parse_id(std::string_view field, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line_no, "expected a non-negative integer node id, got '" + std::string(field) + "'");
  }
  if (value >= kMaxDenseId) {
    throw ValidationError("line " + std::to_string(line_no) + ": node id " + std::to_string(value) +
                          " too large for a dense edge list; use ingest to remap");
  }
  return value;
}

double parse_real(std::string_view field, std::size_t line_no) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line_no, "expected a real number, got '" + std::string(field) + "'");
  }
  return value;
}

// Recognizes "# Nodes: N ..." headers (case-insensitive key).
std::optional<std::uint64_t> header_node_count(std::string_view line) {
  auto fields = split_fields(line);
  for (std::size_t i = 0; i + 1 < fields.size(); ++i) {
    std::string key(fields[i]);
    std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
    if (key == "nodes:" || key == "nodes") {
      std::uint64_t n = 0;
      auto f = fields[i + 1];
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), n);
      if (ec == std::errc() && ptr == f.data() + f.size() && n < kMaxDenseId) return n;
    }
  }
  return std::nullopt;
}

}  // namespace

Graph load_edge_list(std::istream& in, double default_barricade) {
  std::vector<Edge> edges;
  std::uint64_t node_count = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) {
      if (auto n = header_node_count(line)) node_count = std::max(node_count, *n);
      continue;
    }
    auto fields = split_fields(line);
    if (fields.size() != 2 && fields.size() != 3) {
      throw ParseError(line_no, "expected 'u v [w]', got " + std::to_string(fields.size()) + " fields");
    }
    std::uint64_t u = parse_id(fields[0], line_no);
    std::uint64_t v = parse_id(fields[1], line_no);
    double w = fields.size() == 3 ? parse_real(fields[2], line_no) : 1.0;
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw ValidationError("line " + std::to_string(line_no) + ": weight must be positive, got " +
                            std::string(fields[2]));
    }
    if (u == v) throw ValidationError("line " + std::to_string(line_no) + ": self loop on node " + std::to_string(u));
    node_count = std::max(node_count, std::max(u, v) + 1);
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), w});
  }
  return Graph(node_count, edges, default_barricade);
}

Graph load_barricades(const Graph& graph, std::istream& in) {
  std::vector<double> barricades(graph.barricades().begin(), graph.barricades().end());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    auto fields = split_fields(line);
    if (fields.size() != 2) throw ParseError(line_no, "expected 'u b'");
    std::uint64_t u = parse_id(fields[0], line_no);
    double b = parse_real(fields[1], line_no);
    if (u >= graph.id_bound() || !graph.alive(static_cast<NodeId>(u))) {
      throw ValidationError("line " + std::to_string(line_no) + ": unknown node " + std::to_string(u));
    }
    if (!(b >= 0.0) || !std::isfinite(b)) {
      throw ValidationError("line " + std::to_string(line_no) + ": barricade must be >= 0, got " +
                            std::string(fields[1]));
    }
    barricades[u] = b;
  }
  return graph.with_barricades(std::move(barricades));
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

void write_edge_list(const Graph& graph, std::ostream& out) {
  out << "# Nodes: " << graph.id_bound() << " Edges: " << graph.edge_count() << '\n';
  for (const Edge& e : graph.edges()) {
    out << e.from << ' ' << e.to << ' ' << format_double(e.weight) << '\n';
  }
}

void write_barricades(const Graph& graph, std::ostream& out) {
  for (NodeId u : graph.nodes()) out << u << ' ' << format_double(graph.barricade(u)) << '\n';
}

}  // namespace barricade
