#include "gextra/products.hpp"

namespace gextra {

RootedGraph::RootedGraph(Graph g, VertexIndex r) : graph(std::move(g)), root(r) {
  if (graph.empty()) throw InputError("rooted graph must be nonempty");
  if (root >= graph.order()) throw InputError("root index out of range");
}

GeneralizedCoronaSpec::GeneralizedCoronaSpec(Graph g, std::vector<Graph> hs)
    : base(std::move(g)), attachments(std::move(hs)) {
  if (attachments.size() != base.order()) {
    throw InputError("generalized corona needs one attachment per base vertex (got " +
                     std::to_string(attachments.size()) + " for " + std::to_string(base.order()) +
                     " vertices)");
  }
  for (const auto& h : attachments) {
    if (h.empty()) throw InputError("generalized corona attachment must be nonempty");
  }
}

GeneralizedCoronaSpec GeneralizedCoronaSpec::uniform(Graph g, const Graph& h) {
  std::vector<Graph> hs(g.order(), h);
  return GeneralizedCoronaSpec(std::move(g), std::move(hs));
}

namespace {

auto u32(std::size_t v) { return static_cast<std::uint32_t>(v); }

// Accumulates labels and edges; copies of H are appended as blocks.
struct Builder {
  std::vector<VertexLabel> labels;
  std::vector<Edge> edges;

  explicit Builder(const Graph& start)
      : labels(start.labels().begin(), start.labels().end()),
        edges(start.edges().begin(), start.edges().end()) {}

  VertexIndex next() const { return static_cast<VertexIndex>(labels.size()); }

  // Appends a labelled copy of h and returns the index of its first vertex.
  template <typename MakeLabel>
  VertexIndex add_copy(const Graph& h, MakeLabel make_label) {
    const VertexIndex first = next();
    for (std::size_t x = 0; x < h.order(); ++x) labels.push_back(make_label(u32(x)));
    for (const auto& [x, y] : h.edges()) edges.emplace_back(first + x, first + y);
    return first;
  }

  void join(VertexIndex first, std::size_t count, VertexIndex target) {
    for (std::size_t x = 0; x < count; ++x) edges.emplace_back(first + static_cast<VertexIndex>(x), target);
  }

  Graph finish() && { return Graph(std::move(labels), std::move(edges)); }
};

}  // namespace

Graph edge_corona(const Graph& g, const Graph& h) {
  Builder b(g);
  for (const auto& [u, v] : g.edges()) {
    auto first = b.add_copy(h, [&](std::uint32_t x) { return VertexLabel::copy_of_edge(u, v, x); });
    b.join(first, h.order(), u);
    b.join(first, h.order(), v);
  }
  return std::move(b).finish();
}

Graph neighbourhood_corona(const Graph& g, const Graph& h) {
  Builder b(g);
  for (VertexIndex u = 0; u < g.order(); ++u) {
    auto first = b.add_copy(h, [&](std::uint32_t x) { return VertexLabel::copy_of_vertex(u, x); });
    for (auto w : g.neighbours(u)) b.join(first, h.order(), w);
  }
  return std::move(b).finish();
}

Graph subdivision_vertex_nc(const Graph& g, const Graph& h) {
  const Graph s = subdivision(g);
  Builder b(s);
  const auto n = g.order();
  // Sub vertex of edge number e sits at index n + e.
  std::vector<std::vector<VertexIndex>> incident(n);
  for (std::size_t e = 0; e < g.size(); ++e) {
    const auto& [u, v] = g.edges()[e];
    incident[u].push_back(static_cast<VertexIndex>(n + e));
    incident[v].push_back(static_cast<VertexIndex>(n + e));
  }
  for (VertexIndex u = 0; u < n; ++u) {
    auto first = b.add_copy(h, [&](std::uint32_t x) { return VertexLabel::copy_of_vertex(u, x); });
    for (auto w : incident[u]) b.join(first, h.order(), w);
  }
  return std::move(b).finish();
}

Graph subdivision_edge_nc(const Graph& g, const Graph& h) {
  Builder b(subdivision(g));
  for (const auto& [u, v] : g.edges()) {
    auto first = b.add_copy(h, [&](std::uint32_t x) { return VertexLabel::copy_of_edge(u, v, x); });
    b.join(first, h.order(), u);
    b.join(first, h.order(), v);
  }
  return std::move(b).finish();
}

Graph generalized_corona(const GeneralizedCoronaSpec& spec) {
  Builder b(spec.base);
  for (VertexIndex u = 0; u < spec.base.order(); ++u) {
    const Graph& h = spec.attachments[u];
    auto first = b.add_copy(h, [&](std::uint32_t x) { return VertexLabel::copy_of_vertex(u, x); });
    b.join(first, h.order(), u);
  }
  return std::move(b).finish();
}

Graph rooted_product(const Graph& g, const RootedGraph& rh) {
  const Graph& h = rh.graph;
  const auto n = g.order();
  const auto m = h.order();
  // Root copies occupy 0..n-1; non-root vertices of copy u follow in h order.
  std::vector<VertexLabel> labels(g.labels().begin(), g.labels().end());
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (VertexIndex u = 0; u < n; ++u) {
    const VertexIndex first = static_cast<VertexIndex>(labels.size());
    auto place = [&](VertexIndex x) -> VertexIndex {
      if (x == rh.root) return u;
      return first + (x < rh.root ? x : x - 1);
    };
    for (VertexIndex x = 0; x < m; ++x) {
      if (x != rh.root) labels.push_back(VertexLabel::copy_of_vertex(u, x));
    }
    for (const auto& [x, y] : h.edges()) edges.emplace_back(place(x), place(y));
  }
  return Graph(std::move(labels), std::move(edges));
}

}  // namespace gextra
