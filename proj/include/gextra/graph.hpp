#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gextra {

/// Raised for precondition violations on caller-supplied data.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using VertexIndex = std::uint32_t;

/// Provenance of a vertex inside a (possibly product) graph.
///
/// Base(i) is vertex i of the base graph, Sub(i,j) the subdivision vertex on
/// base edge {i,j} (always i<j), and Copy a vertex of an attached copy of H,
/// owned either by a base vertex or by a base edge.
struct VertexLabel {
  enum class Kind : std::uint8_t { Base = 0, Sub = 1, Copy = 2 };

  Kind kind = Kind::Base;
  bool edge_owner = false;  // Copy only: owner is a base edge (a,b)
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t inner = 0;  // Copy only: vertex index inside the copy

  static VertexLabel base(std::uint32_t i) { return {Kind::Base, false, i, 0, 0}; }
  static VertexLabel sub(std::uint32_t i, std::uint32_t j);
  static VertexLabel copy_of_vertex(std::uint32_t owner, std::uint32_t inner) {
    return {Kind::Copy, false, owner, 0, inner};
  }
  static VertexLabel copy_of_edge(std::uint32_t i, std::uint32_t j, std::uint32_t inner);

  bool is_base() const { return kind == Kind::Base; }
  bool is_sub() const { return kind == Kind::Sub; }
  bool is_copy() const { return kind == Kind::Copy; }

  /// "v3", "w1_2", "h0.1" (copy owned by vertex 0), "h0_1.1" (owned by edge 0-1).
  std::string to_string() const;
  static VertexLabel parse(const std::string& text);

  auto operator<=>(const VertexLabel&) const = default;
};

/// 128-bit vertex set used by the dense representation.
struct VertexMask {
  std::uint64_t w[2] = {0, 0};

  static constexpr std::size_t kCapacity = 128;

  static VertexMask prefix(std::size_t n) {
    VertexMask m;
    if (n >= 64) {
      m.w[0] = ~std::uint64_t{0};
      m.w[1] = n >= 128 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n - 64)) - 1);
    } else {
      m.w[0] = (std::uint64_t{1} << n) - 1;
    }
    return m;
  }
  void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1U; }
  bool empty() const { return (w[0] | w[1]) == 0; }
  int count() const { return std::popcount(w[0]) + std::popcount(w[1]); }
  /// Index of the lowest set bit; undefined on an empty mask.
  int lowest() const {
    return w[0] ? std::countr_zero(w[0]) : 64 + std::countr_zero(w[1]);
  }

  VertexMask operator&(const VertexMask& o) const { return {{w[0] & o.w[0], w[1] & o.w[1]}}; }
  VertexMask operator|(const VertexMask& o) const { return {{w[0] | o.w[0], w[1] | o.w[1]}}; }
  VertexMask operator~() const { return {{~w[0], ~w[1]}}; }
  VertexMask& operator&=(const VertexMask& o) { w[0] &= o.w[0]; w[1] &= o.w[1]; return *this; }
  VertexMask& operator|=(const VertexMask& o) { w[0] |= o.w[0]; w[1] |= o.w[1]; return *this; }
  bool operator==(const VertexMask&) const = default;

  template <typename F>
  void for_each(F&& f) const {
    for (int k = 0; k < 2; ++k) {
      for (std::uint64_t x = w[k]; x; x &= x - 1) f(64 * k + std::countr_zero(x));
    }
  }
};

/// Nonnegative integer or infinity. Every Finite value orders below Infinite.
class ExtendedCount {
 public:
  constexpr ExtendedCount() = default;
  static constexpr ExtendedCount finite(std::uint64_t v) { return ExtendedCount(v, false); }
  static constexpr ExtendedCount infinite() { return ExtendedCount(0, true); }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  /// Throws InputError on Infinite.
  std::uint64_t value() const;

  std::string to_string() const;

  constexpr std::strong_ordering operator<=>(const ExtendedCount& o) const {
    if (infinite_ || o.infinite_) return infinite_ <=> o.infinite_;
    return value_ <=> o.value_;
  }
  constexpr bool operator==(const ExtendedCount& o) const {
    return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
  }

 private:
  constexpr ExtendedCount(std::uint64_t v, bool inf) : value_(v), infinite_(inf) {}
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

using Edge = std::pair<VertexIndex, VertexIndex>;

/// Connected piece of a graph, stored as sorted vertex indices.
struct Component {
  std::vector<VertexIndex> members;
  std::size_t size() const { return members.size(); }
  bool operator==(const Component&) const = default;
};

/// Immutable simple undirected graph with labelled vertices.
///
/// Edges are stored as sorted (u<v) pairs in lexicographic order. Graphs with
/// at most 128 vertices additionally carry dense bitset rows.
class Graph {
 public:
  Graph() = default;
  /// Validates: endpoints in range, no self-loops, no duplicates, unique labels.
  Graph(std::vector<VertexLabel> labels, std::vector<Edge> edges);
  /// Unlabelled convenience constructor: Base(0..n-1).
  static Graph from_edges(std::size_t n, std::vector<Edge> edges);

  std::size_t order() const { return labels_.size(); }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return labels_.empty(); }

  std::span<const VertexLabel> labels() const { return labels_; }
  const VertexLabel& label(VertexIndex v) const;
  std::span<const Edge> edges() const { return edges_; }
  std::span<const VertexIndex> neighbours(VertexIndex v) const;
  bool adjacent(VertexIndex u, VertexIndex v) const;
  std::optional<VertexIndex> find(const VertexLabel& label) const;
  VertexIndex index_of(const VertexLabel& label) const;  // throws InputError

  bool has_dense() const { return !dense_.empty() || labels_.empty(); }
  const VertexMask& dense_row(VertexIndex v) const { return dense_[v]; }

  /// Induced subgraph on the complement of `removed`; labels are preserved.
  Graph remove_vertices(std::span<const VertexIndex> removed) const;
  /// Spanning subgraph without the given edges (endpoint order irrelevant).
  Graph remove_edges(std::span<const Edge> removed) const;

  bool is_complete() const;

  bool operator==(const Graph& o) const { return labels_ == o.labels_ && edges_ == o.edges_; }

 private:
  void check_vertex(VertexIndex v) const;

  std::vector<VertexLabel> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexIndex>> adjacency_;
  std::vector<VertexMask> dense_;
};

std::size_t degree(const Graph& g, VertexIndex v);
std::size_t min_degree(const Graph& g);

/// Components ordered by their smallest member.
std::vector<Component> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Classical vertex connectivity via unit-capacity max-flow; Infinite on
/// complete graphs (including K1). Throws on disconnected input.
ExtendedCount vertex_connectivity(const Graph& g);
/// Classical edge connectivity via max-flow. Needs a connected graph, n >= 2.
std::size_t edge_connectivity(const Graph& g);

/// S(G): each edge {u,v} replaced by u - Sub(u,v) - v. Base vertices keep
/// their indices; Sub vertices follow in edge order.
Graph subdivision(const Graph& g);

/// Small named graphs: K<n>, P<n>, C<n>, S<n> (star K_{1,n}), E<n> (edgeless).
Graph named_graph(const std::string& name);

}  // namespace gextra
