#include "gextra/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

namespace gextra {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

[[noreturn]] void g6_error(const std::string& what, std::size_t offset) {
  throw ParseError("graph6: " + what + " at offset " + std::to_string(offset), offset);
}

std::uint8_t g6_byte(std::string_view text, std::size_t at) {
  const auto c = static_cast<unsigned char>(text[at]);
  if (c < 63 || c > 126) g6_error("byte " + std::to_string(c) + " outside [63,126]", at);
  return static_cast<std::uint8_t>(c - 63);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  // A single trailing newline (with optional CR) is tolerated.
  std::size_t end = text.size();
  if (end > pos && text[end - 1] == '\n') --end;
  if (end > pos && text[end - 1] == '\r') --end;
  if (pos >= end) g6_error("empty input", pos);

  std::size_t n = 0;
  if (static_cast<unsigned char>(text[pos]) == 126) {
    if (pos + 1 < end && static_cast<unsigned char>(text[pos + 1]) == 126) {
      g6_error("8-byte order field not supported", pos);
    }
    if (pos + 4 > end) g6_error("truncated order field", end);
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | g6_byte(text, pos + i);
    if (n < 63) g6_error("order " + std::to_string(n) + " must use the 1-byte form", pos);
    pos += 4;
  } else {
    n = g6_byte(text, pos);
    pos += 1;
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (end - pos < body) g6_error("expected " + std::to_string(body) + " body bytes", end);
  if (end - pos > body) g6_error("trailing data", pos + body);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const std::uint8_t chunk = g6_byte(text, pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1U) {
        edges.emplace_back(static_cast<VertexIndex>(i), static_cast<VertexIndex>(j));
      }
    }
  }
  // Padding bits must be zero.
  if (bits % 6 != 0) {
    const std::uint8_t last = g6_byte(text, pos + body - 1);
    const unsigned pad = 6 - bits % 6;
    if (last & ((1U << pad) - 1U)) g6_error("nonzero padding bits", pos + body - 1);
  }
  return Graph::from_edges(n, std::move(edges));
}

std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) {
    throw InputError("graph6: order " + std::to_string(n) + " exceeds " +
                     std::to_string(kGraph6MaxOrder));
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<std::uint8_t> body((bits + 5) / 6, 0);
  for (const auto& [u, v] : g.edges()) {
    // Edge (u,v), u<v, sits at bit v(v-1)/2 + u.
    const std::size_t k = static_cast<std::size_t>(v) * (v - 1) / 2 + u;
    body[k / 6] |= static_cast<std::uint8_t>(1U << (5 - k % 6));
  }
  for (auto b : body) out.push_back(static_cast<char>(b + 63));
  return out;
}

EdgeListResult parse_edge_list(std::string_view text) {
  std::optional<std::size_t> declared;
  std::set<Edge> edges;
  std::vector<std::string> warnings;
  std::size_t max_index = 0;
  bool any_vertex = false;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string line(text.substr(start, stop - start));
    start = stop + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);

    std::istringstream in(line);
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;

    auto number = [&](const std::string& t) {
      std::size_t v = 0;
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (ec != std::errc() || ptr != t.data() + t.size()) {
        throw ParseError("edge list: line " + std::to_string(line_no) + ": '" + t +
                             "' is not a nonnegative integer",
                         line_no);
      }
      return v;
    };

    if (tokens[0] == "n") {
      if (tokens.size() != 2) {
        throw ParseError("edge list: line " + std::to_string(line_no) + ": header must be 'n <count>'",
                         line_no);
      }
      if (declared || !edges.empty()) {
        throw ParseError("edge list: line " + std::to_string(line_no) + ": header must come first",
                         line_no);
      }
      declared = number(tokens[1]);
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError("edge list: line " + std::to_string(line_no) + ": expected 'u v'", line_no);
    }
    const std::size_t u = number(tokens[0]);
    const std::size_t v = number(tokens[1]);
    if (u == v) {
      throw ParseError("edge list: line " + std::to_string(line_no) + ": self-loop at vertex " +
                           std::to_string(u),
                       line_no);
    }
    if (declared && std::max(u, v) >= *declared) {
      throw ParseError("edge list: line " + std::to_string(line_no) + ": vertex index out of range",
                       line_no);
    }
    if (std::max(u, v) > std::numeric_limits<VertexIndex>::max() - 1) {
      throw ParseError("edge list: line " + std::to_string(line_no) + ": vertex index too large",
                       line_no);
    }
    max_index = std::max({max_index, u, v});
    any_vertex = true;
    const Edge e{static_cast<VertexIndex>(std::min(u, v)), static_cast<VertexIndex>(std::max(u, v))};
    if (!edges.insert(e).second) {
      warnings.push_back("line " + std::to_string(line_no) + ": duplicate edge " + std::to_string(e.first) +
                         " " + std::to_string(e.second) + " ignored");
    }
  }
  const std::size_t n = declared ? *declared : (any_vertex ? max_index + 1 : 0);
  return {Graph::from_edges(n, std::vector<Edge>(edges.begin(), edges.end())), std::move(warnings)};
}

std::string emit_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

GraphFormat parse_graph_format(const std::string& name) {
  if (name == "g6" || name == "graph6") return GraphFormat::Graph6;
  if (name == "edges") return GraphFormat::EdgeList;
  throw InputError("format must be 'g6' or 'edges', got '" + name + "'");
}

std::vector<Graph> read_graphs(const std::filesystem::path& path, GraphFormat format) {
  const std::string text = read_text_file(path);
  if (format == GraphFormat::EdgeList) return {parse_edge_list(text).graph};
  std::vector<Graph> out;
  std::istringstream in(text);
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError(path.string() + ": line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
  }
  return out;
}

namespace {

const char* provenance_of(const VertexLabel& l) {
  switch (l.kind) {
    case VertexLabel::Kind::Base:
      return "base";
    case VertexLabel::Kind::Sub:
      return "sub";
    case VertexLabel::Kind::Copy:
      return "copy";
  }
  return "base";
}

const char* colour_of(const VertexLabel& l) {
  switch (l.kind) {
    case VertexLabel::Kind::Base:
      return "lightblue";
    case VertexLabel::Kind::Sub:
      return "khaki";
    case VertexLabel::Kind::Copy:
      return "palegreen";
  }
  return "white";
}

}  // namespace

std::string to_dot(const Graph& g, const std::string& name) {
  std::string out = "graph \"" + name + "\" {\n  node [style=filled];\n";
  for (VertexIndex v = 0; v < g.order(); ++v) {
    const auto& l = g.label(v);
    out += "  " + std::to_string(v) + " [label=\"" + l.to_string() + "\", provenance=\"" +
           provenance_of(l) + "\", fillcolor=\"" + colour_of(l) + "\"];\n";
  }
  for (const auto& [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

void export_dot(const Graph& g, const std::filesystem::path& path) { write_text_file(path, to_dot(g)); }

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::runtime_error("read from '" + path.string() + "' failed");
  return buf.str();
}

}  // namespace gextra
