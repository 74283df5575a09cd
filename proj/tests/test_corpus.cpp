#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "gextra/corpus.hpp"
#include "gextra/graph_io.hpp"

namespace gextra {
namespace {

Graph permuted(const Graph& g, const std::vector<VertexIndex>& perm) {
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    const VertexIndex a = perm[u];
    const VertexIndex b = perm[v];
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(g.order(), edges);
}

TEST(Corpus, SmallExamples) {
  const auto two = enumerate_connected_base_graphs(2);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(canonical_graph6(two[0]), canonical_graph6(named_graph("K2")));

  const auto three = enumerate_connected_base_graphs(3);
  ASSERT_EQ(three.size(), 3u);
  std::set<std::string> ids;
  for (const auto& g : three) ids.insert(emit_graph6(g));
  EXPECT_TRUE(ids.count(canonical_graph6(named_graph("P3"))));
  EXPECT_TRUE(ids.count(canonical_graph6(named_graph("C3"))));
  EXPECT_TRUE(enumerate_connected_base_graphs(1).empty());
}

TEST(Corpus, CountsPerOrder) {
  const auto all = enumerate_connected_base_graphs(7);
  std::map<std::size_t, std::size_t> by_order;
  for (const auto& g : all) {
    EXPECT_TRUE(is_connected(g));
    ++by_order[g.order()];
  }
  const std::map<std::size_t, std::size_t> expected{{2, 1}, {3, 2}, {4, 6}, {5, 21}, {6, 112}, {7, 853}};
  EXPECT_EQ(by_order, expected);
  EXPECT_EQ(all.size(), 995u);
}

TEST(Corpus, OrderedAndDistinct) {
  const auto all = enumerate_connected_base_graphs(6);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const std::string id = emit_graph6(all[i]);
    EXPECT_TRUE(seen.insert(id).second) << id;
    EXPECT_EQ(canonical_graph6(all[i]), id);
    if (i > 0) {
      const auto prev = std::make_pair(all[i - 1].order(), emit_graph6(all[i - 1]));
      EXPECT_LT(prev, std::make_pair(all[i].order(), id));
    }
  }
}

TEST(Corpus, CanonicalFormIgnoresLabelling) {
  std::mt19937 rng(7);
  for (const auto& g : enumerate_connected_base_graphs(7)) {
    std::vector<VertexIndex> perm(g.order());
    std::iota(perm.begin(), perm.end(), VertexIndex{0});
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      EXPECT_EQ(canonical_graph6(permuted(g, perm)), canonical_graph6(g));
    }
  }
}

TEST(Corpus, RejectsLargeOrders) {
  EXPECT_THROW(enumerate_connected_base_graphs(kCorpusMaxOrder + 1), InputError);
}

TEST(Corpus, Defaults) {
  const auto bases = default_base_corpus();
  EXPECT_EQ(bases.size(), 26u);
  for (const auto& g : bases) {
    EXPECT_GE(g.order(), 3u);
    EXPECT_FALSE(g.is_complete());
  }
  const auto att = default_attachments();
  ASSERT_EQ(att.size(), 4u);
  for (const auto& h : att) EXPECT_EQ(h.root, 0u);
}

}  // namespace
}  // namespace gextra
