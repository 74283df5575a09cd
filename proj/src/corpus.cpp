#include "gextra/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gextra/graph_io.hpp"

namespace gextra {

namespace {

// Stable colour refinement: start from degrees, split by the multiset of
// neighbour colours until the partition stops growing.
std::vector<std::size_t> refine_colours(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> colour(n);
  for (VertexIndex v = 0; v < n; ++v) colour[v] = g.neighbours(v).size();
  std::size_t classes = 0;
  for (;;) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
    for (VertexIndex v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (auto w : g.neighbours(v)) sig[v].second.push_back(colour[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (VertexIndex v = 0; v < n; ++v) {
      colour[v] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
    if (sorted.size() == classes) return colour;
    classes = sorted.size();
  }
}

constexpr std::size_t kExactMaxOrder = 11;  // 55 adjacency bits fit one word
constexpr double kMaxPermutations = 1e6;

// graph6 bit order packed MSB-first, so integer order equals string order.
std::uint64_t adjacency_code(const Graph& g, const std::vector<VertexIndex>& pos) {
  const std::size_t n = g.order();
  const std::size_t bits = n * (n - 1) / 2;
  std::uint64_t code = 0;
  for (const auto& [u, v] : g.edges()) {
    std::size_t i = pos[u];
    std::size_t j = pos[v];
    if (i > j) std::swap(i, j);
    code |= std::uint64_t{1} << (bits - 1 - (j * (j - 1) / 2 + i));
  }
  return code;
}

Graph relabel(const Graph& g, const std::vector<VertexIndex>& pos) {
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const auto& [u, v] : g.edges()) edges.emplace_back(pos[u], pos[v]);
  return Graph::from_edges(g.order(), std::move(edges));
}

}  // namespace

Graph canonical_form(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) return Graph::from_edges(n, {});
  const auto colour = refine_colours(g);
  std::size_t classes = *std::max_element(colour.begin(), colour.end()) + 1;
  std::vector<std::vector<VertexIndex>> cells(classes);
  for (VertexIndex v = 0; v < n; ++v) cells[colour[v]].push_back(v);

  double perms = 1;
  for (const auto& c : cells) {
    for (std::size_t i = 2; i <= c.size(); ++i) perms *= static_cast<double>(i);
  }
  std::vector<VertexIndex> pos(n);
  auto place = [&]() {
    VertexIndex p = 0;
    for (const auto& c : cells)
      for (auto v : c) pos[v] = p++;
  };
  place();
  if (n > kExactMaxOrder || perms > kMaxPermutations) return relabel(g, pos);

  std::vector<VertexIndex> best = pos;
  std::uint64_t best_code = adjacency_code(g, pos);
  // Odometer over per-cell permutations; the last cell turns fastest.
  for (;;) {
    std::size_t c = cells.size();
    bool advanced = false;
    while (c-- > 0) {
      if (std::next_permutation(cells[c].begin(), cells[c].end())) {
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
    place();
    const auto code = adjacency_code(g, pos);
    if (code < best_code) {
      best_code = code;
      best = pos;
    }
  }
  return relabel(g, best);
}

std::string canonical_graph6(const Graph& g) { return emit_graph6(canonical_form(g)); }

std::vector<Graph> enumerate_connected_base_graphs(std::size_t max_n) {
  if (max_n > kCorpusMaxOrder) {
    throw InputError("corpus order " + std::to_string(max_n) + " exceeds the limit of " +
                     std::to_string(kCorpusMaxOrder));
  }
  std::vector<Graph> out;
  if (max_n < 2) return out;
  std::vector<Graph> level{named_graph("K2")};
  out = level;
  // Every connected graph has a vertex whose removal keeps it connected, so
  // extending each (n-1)-level graph by one vertex reaches every class.
  for (std::size_t n = 3; n <= max_n; ++n) {
    std::map<std::string, Graph> found;
    for (const auto& base : level) {
      const std::size_t prev = n - 1;
      for (std::uint32_t mask = 1; mask < (1U << prev); ++mask) {
        std::vector<Edge> edges(base.edges().begin(), base.edges().end());
        for (VertexIndex v = 0; v < prev; ++v) {
          if ((mask >> v) & 1U) edges.emplace_back(v, static_cast<VertexIndex>(prev));
        }
        Graph c = canonical_form(Graph::from_edges(n, std::move(edges)));
        auto key = emit_graph6(c);
        found.try_emplace(std::move(key), std::move(c));
      }
    }
    level.clear();
    for (auto& [key, graph] : found) level.push_back(std::move(graph));
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Graph> default_base_corpus(std::size_t max_n) {
  std::vector<Graph> out;
  for (auto& g : enumerate_connected_base_graphs(max_n)) {
    if (g.order() >= 3 && !g.is_complete()) out.push_back(std::move(g));
  }
  return out;
}

std::vector<RootedGraph> default_attachments() {
  return {RootedGraph(named_graph("K1"), 0), RootedGraph(named_graph("K2"), 0),
          RootedGraph(named_graph("P3"), 0), RootedGraph(named_graph("C3"), 0)};
}

}  // namespace gextra
