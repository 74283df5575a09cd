#include "gextra/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <queue>
#include <set>

namespace gextra {

VertexLabel VertexLabel::sub(std::uint32_t i, std::uint32_t j) {
  if (i == j) throw InputError("subdivision label needs two distinct endpoints");
  if (i > j) std::swap(i, j);
  return {Kind::Sub, false, i, j, 0};
}

VertexLabel VertexLabel::copy_of_edge(std::uint32_t i, std::uint32_t j, std::uint32_t inner) {
  if (i == j) throw InputError("edge owner needs two distinct endpoints");
  if (i > j) std::swap(i, j);
  return {Kind::Copy, true, i, j, inner};
}

std::string VertexLabel::to_string() const {
  switch (kind) {
    case Kind::Base:
      return "v" + std::to_string(a);
    case Kind::Sub:
      return "w" + std::to_string(a) + "_" + std::to_string(b);
    case Kind::Copy:
      if (edge_owner) {
        return "h" + std::to_string(a) + "_" + std::to_string(b) + "." + std::to_string(inner);
      }
      return "h" + std::to_string(a) + "." + std::to_string(inner);
  }
  return {};
}

namespace {

std::uint32_t parse_u32(std::string_view text, const std::string& whole) {
  std::uint32_t out = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw InputError("malformed vertex label: '" + whole + "'");
  }
  return out;
}

}  // namespace

VertexLabel VertexLabel::parse(const std::string& text) {
  if (text.size() < 2) throw InputError("malformed vertex label: '" + text + "'");
  std::string_view body(text);
  body.remove_prefix(1);
  switch (text[0]) {
    case 'v':
      return base(parse_u32(body, text));
    case 'w': {
      auto us = body.find('_');
      if (us == std::string_view::npos) throw InputError("malformed vertex label: '" + text + "'");
      return sub(parse_u32(body.substr(0, us), text), parse_u32(body.substr(us + 1), text));
    }
    case 'h': {
      auto dot = body.find('.');
      if (dot == std::string_view::npos) throw InputError("malformed vertex label: '" + text + "'");
      auto owner = body.substr(0, dot);
      auto inner = parse_u32(body.substr(dot + 1), text);
      auto us = owner.find('_');
      if (us == std::string_view::npos) return copy_of_vertex(parse_u32(owner, text), inner);
      return copy_of_edge(parse_u32(owner.substr(0, us), text), parse_u32(owner.substr(us + 1), text),
                          inner);
    }
    default:
      throw InputError("malformed vertex label: '" + text + "'");
  }
}

std::uint64_t ExtendedCount::value() const {
  if (infinite_) throw InputError("value() called on an infinite count");
  return value_;
}

std::string ExtendedCount::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

Graph::Graph(std::vector<VertexLabel> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  const auto n = labels_.size();
  {
    std::vector<VertexLabel> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InputError("duplicate vertex label");
    }
  }
  for (auto& [u, v] : edges_) {
    if (u >= n || v >= n) throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InputError("parallel edge");
  }
  adjacency_.assign(n, {});
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
  if (n <= VertexMask::kCapacity) {
    dense_.assign(n, VertexMask{});
    for (const auto& [u, v] : edges_) {
      dense_[u].set(v);
      dense_[v].set(u);
    }
  }
}

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges) {
  std::vector<VertexLabel> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(VertexLabel::base(static_cast<std::uint32_t>(i)));
  return Graph(std::move(labels), std::move(edges));
}

void Graph::check_vertex(VertexIndex v) const {
  if (v >= labels_.size()) {
    throw InputError("vertex index " + std::to_string(v) + " out of range (order " +
                     std::to_string(labels_.size()) + ")");
  }
}

const VertexLabel& Graph::label(VertexIndex v) const {
  check_vertex(v);
  return labels_[v];
}

std::span<const VertexIndex> Graph::neighbours(VertexIndex v) const {
  check_vertex(v);
  return adjacency_[v];
}

bool Graph::adjacent(VertexIndex u, VertexIndex v) const {
  check_vertex(u);
  check_vertex(v);
  if (!dense_.empty()) return dense_[u].test(v);
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::optional<VertexIndex> Graph::find(const VertexLabel& label) const {
  for (VertexIndex i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

VertexIndex Graph::index_of(const VertexLabel& label) const {
  auto idx = find(label);
  if (!idx) throw InputError("unknown vertex label " + label.to_string());
  return *idx;
}

Graph Graph::remove_vertices(std::span<const VertexIndex> removed) const {
  std::vector<bool> gone(order(), false);
  for (auto v : removed) {
    check_vertex(v);
    gone[v] = true;
  }
  std::vector<VertexIndex> remap(order(), 0);
  std::vector<VertexLabel> labels;
  for (VertexIndex i = 0; i < order(); ++i) {
    if (gone[i]) continue;
    remap[i] = static_cast<VertexIndex>(labels.size());
    labels.push_back(labels_[i]);
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : edges_) {
    if (!gone[u] && !gone[v]) edges.emplace_back(remap[u], remap[v]);
  }
  return Graph(std::move(labels), std::move(edges));
}

Graph Graph::remove_edges(std::span<const Edge> removed) const {
  std::set<Edge> drop;
  for (auto [u, v] : removed) {
    check_vertex(u);
    check_vertex(v);
    drop.insert(u < v ? Edge{u, v} : Edge{v, u});
  }
  std::vector<Edge> edges;
  for (const auto& e : edges_) {
    if (!drop.contains(e)) edges.push_back(e);
  }
  return Graph(labels_, std::move(edges));
}

bool Graph::is_complete() const {
  const auto n = order();
  return edges_.size() == n * (n > 0 ? n - 1 : 0) / 2;
}

std::size_t degree(const Graph& g, VertexIndex v) { return g.neighbours(v).size(); }

std::size_t min_degree(const Graph& g) {
  if (g.empty()) throw InputError("min_degree of an empty graph");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (VertexIndex v = 0; v < g.order(); ++v) best = std::min(best, degree(g, v));
  return best;
}

std::vector<Component> connected_components(const Graph& g) {
  std::vector<Component> out;
  std::vector<bool> seen(g.order(), false);
  std::vector<VertexIndex> stack;
  for (VertexIndex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    Component c;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      c.members.push_back(v);
      for (auto w : g.neighbours(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());
    out.push_back(std::move(c));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || connected_components(g).size() == 1; }

namespace {

// Edmonds-Karp over a small directed network with integer capacities.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t n) : head_(n, -1) {}

  void add_arc(int from, int to, int cap) {
    arcs_.push_back({to, cap, head_[from]});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, 0, head_[to]});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  int max_flow(int s, int t, int limit) {
    int flow = 0;
    std::vector<int> via(head_.size());
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> q;
      q.push(s);
      via[s] = -2;
      while (!q.empty() && via[t] == -1) {
        int x = q.front();
        q.pop();
        for (int a = head_[x]; a != -1; a = arcs_[a].next) {
          if (arcs_[a].cap > 0 && via[arcs_[a].to] == -1) {
            via[arcs_[a].to] = a;
            q.push(arcs_[a].to);
          }
        }
      }
      if (via[t] == -1) break;
      for (int x = t; x != s;) {
        int a = via[x];
        arcs_[a].cap -= 1;
        arcs_[a ^ 1].cap += 1;
        x = arcs_[a ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int next;
  };
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

constexpr int kBig = 1 << 20;

// Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent).
int local_vertex_connectivity(const Graph& g, VertexIndex s, VertexIndex t, int limit) {
  const int n = static_cast<int>(g.order());
  FlowNetwork net(2 * static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    int cap = (v == static_cast<int>(s) || v == static_cast<int>(t)) ? kBig : 1;
    net.add_arc(2 * v, 2 * v + 1, cap);
  }
  for (const auto& [u, v] : g.edges()) {
    net.add_arc(2 * static_cast<int>(u) + 1, 2 * static_cast<int>(v), kBig);
    net.add_arc(2 * static_cast<int>(v) + 1, 2 * static_cast<int>(u), kBig);
  }
  return net.max_flow(2 * static_cast<int>(s) + 1, 2 * static_cast<int>(t), limit);
}

int local_edge_connectivity(const Graph& g, VertexIndex s, VertexIndex t, int limit) {
  FlowNetwork net(g.order());
  for (const auto& [u, v] : g.edges()) {
    net.add_arc(static_cast<int>(u), static_cast<int>(v), 1);
    net.add_arc(static_cast<int>(v), static_cast<int>(u), 1);
  }
  return net.max_flow(static_cast<int>(s), static_cast<int>(t), limit);
}

}  // namespace

ExtendedCount vertex_connectivity(const Graph& g) {
  if (!is_connected(g)) throw InputError("vertex_connectivity requires a connected graph");
  if (g.is_complete()) return ExtendedCount::infinite();
  int best = static_cast<int>(min_degree(g));
  for (VertexIndex s = 0; s < g.order(); ++s) {
    for (VertexIndex t = s + 1; t < g.order(); ++t) {
      if (g.adjacent(s, t)) continue;
      best = std::min(best, local_vertex_connectivity(g, s, t, best));
    }
  }
  return ExtendedCount::finite(static_cast<std::uint64_t>(best));
}

std::size_t edge_connectivity(const Graph& g) {
  if (g.order() < 2) throw InputError("edge_connectivity needs at least 2 vertices");
  if (!is_connected(g)) throw InputError("edge_connectivity requires a connected graph");
  int best = static_cast<int>(min_degree(g));
  for (VertexIndex t = 1; t < g.order(); ++t) {
    best = std::min(best, local_edge_connectivity(g, 0, t, best));
  }
  return static_cast<std::size_t>(best);
}

Graph subdivision(const Graph& g) {
  std::vector<VertexLabel> labels(g.labels().begin(), g.labels().end());
  std::vector<Edge> edges;
  edges.reserve(2 * g.size());
  for (const auto& [u, v] : g.edges()) {
    auto w = static_cast<VertexIndex>(labels.size());
    labels.push_back(VertexLabel::sub(u, v));
    edges.emplace_back(u, w);
    edges.emplace_back(w, v);
  }
  return Graph(std::move(labels), std::move(edges));
}

Graph named_graph(const std::string& name) {
  if (name.size() < 2) throw InputError("unknown graph name '" + name + "'");
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
  if (ec != std::errc() || ptr != name.data() + name.size()) {
    throw InputError("unknown graph name '" + name + "'");
  }
  std::vector<Edge> edges;
  auto idx = [](std::size_t i) { return static_cast<VertexIndex>(i); };
  switch (name[0]) {
    case 'K':
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(idx(i), idx(j));
      return Graph::from_edges(n, std::move(edges));
    case 'P':
      for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(idx(i), idx(i + 1));
      return Graph::from_edges(n, std::move(edges));
    case 'C':
      if (n < 3) throw InputError("cycle needs at least 3 vertices");
      for (std::size_t i = 0; i < n; ++i) edges.emplace_back(idx(i), idx((i + 1) % n));
      return Graph::from_edges(n, std::move(edges));
    case 'S':
      for (std::size_t i = 1; i <= n; ++i) edges.emplace_back(0, idx(i));
      return Graph::from_edges(n + 1, std::move(edges));
    case 'E':
      return Graph::from_edges(n, {});
    default:
      throw InputError("unknown graph name '" + name + "'");
  }
}

}  // namespace gextra
