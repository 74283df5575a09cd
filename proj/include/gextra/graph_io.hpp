#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gextra/graph.hpp"

namespace gextra {

/// Malformed text input. `position` is a byte offset (graph6) or a 1-based
/// line number (edge lists); the message says which.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Largest order emit_graph6 accepts (the 4-byte N(n) form).
inline constexpr std::size_t kGraph6MaxOrder = 258047;

Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

struct EdgeListResult {
  Graph graph;
  std::vector<std::string> warnings;
};

/// "n <count>" header (optional), then "u v" lines; '#' starts a comment.
EdgeListResult parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

enum class GraphFormat { Graph6, EdgeList };
GraphFormat parse_graph_format(const std::string& name);

/// One graph per non-empty line for graph6; a whole file for edge lists.
std::vector<Graph> read_graphs(const std::filesystem::path& path, GraphFormat format);

std::string to_dot(const Graph& g, const std::string& name = "G");
void export_dot(const Graph& g, const std::filesystem::path& path);

/// Writes `text` to `path`; failures raise std::runtime_error naming the path.
void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace gextra
