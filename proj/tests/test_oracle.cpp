#include <gtest/gtest.h>

#include "gextra/corpus.hpp"
#include "gextra/extra_connectivity.hpp"
#include "gextra/graph_io.hpp"
#include "gextra/products.hpp"
#include "reference_oracle.hpp"

namespace gextra {
namespace {

ExtendedCount as_count(const std::optional<std::size_t>& v) {
  return v ? ExtendedCount::finite(*v) : ExtendedCount::infinite();
}

std::vector<VertexLabel> labels(const Graph& g, const std::vector<std::size_t>& idx) {
  std::vector<VertexLabel> out;
  for (auto i : idx) out.push_back(g.label(static_cast<VertexIndex>(i)));
  return out;
}

TEST(VertexOracle, Examples) {
  const auto c6 = g_extra_vertex_connectivity(named_graph("C6"), 1);
  ASSERT_TRUE(c6.found());
  EXPECT_EQ(c6.cut_size, 2u);
  EXPECT_EQ(ref::kappa_g(named_graph("C6"), 1), 2u);

  const auto p4 = g_extra_vertex_connectivity(named_graph("P4"), 1);
  EXPECT_EQ(p4.status, SearchStatus::Infinite);
  EXPECT_FALSE(p4.certificate);
  EXPECT_EQ(ref::kappa_g(named_graph("P4"), 1), std::nullopt);

  EXPECT_EQ(g_extra_vertex_connectivity(named_graph("P4"), 0).value(), ExtendedCount::finite(1));
  EXPECT_THROW(g_extra_vertex_connectivity(named_graph("E3"), 0), InputError);
}

TEST(EdgeOracle, Examples) {
  EXPECT_EQ(g_extra_edge_connectivity(named_graph("P4"), 1).value(), ExtendedCount::finite(1));
  EXPECT_EQ(g_extra_edge_connectivity(named_graph("C6"), 1).value(), ExtendedCount::finite(2));
  EXPECT_EQ(g_extra_edge_connectivity(named_graph("K2"), 0).value(), ExtendedCount::finite(1));
  EXPECT_EQ(ref::lambda_g(named_graph("P4"), 1), 1u);
  EXPECT_EQ(ref::lambda_g(named_graph("C6"), 1), 2u);
  EXPECT_EQ(g_extra_edge_connectivity(named_graph("P3"), 1).status, SearchStatus::Infinite);
  EXPECT_THROW(g_extra_edge_connectivity(named_graph("K1"), 0), InputError);
}

TEST(LambdaK, Examples) {
  EXPECT_EQ(lambda_k(named_graph("P4"), 1).value(), ExtendedCount::finite(1));
  EXPECT_EQ(lambda_k(named_graph("C6"), 1).value(), ExtendedCount::finite(2));
  EXPECT_EQ(lambda_k(named_graph("C6"), 0).value(), ExtendedCount::finite(edge_connectivity(named_graph("C6"))));
}

TEST(ConstrainedCut, Examples) {
  auto c6 = min_constrained_vertex_cut(named_graph("C6"), 1);
  ASSERT_TRUE(c6);
  EXPECT_EQ(c6->size, 2u);
  EXPECT_EQ(c6->adjacent_pairs, 0u);
  EXPECT_EQ(c6->component_floor, 2u);

  auto p5 = min_constrained_vertex_cut(named_graph("P5"), 1);
  ASSERT_TRUE(p5);
  EXPECT_EQ(p5->size, 1u);
  EXPECT_EQ(p5->adjacent_pairs, 0u);
  EXPECT_EQ(p5->cut_set, std::vector<VertexLabel>{VertexLabel::base(2)});

  EXPECT_FALSE(min_constrained_vertex_cut(named_graph("C4"), 1));
}

TEST(ConstrainedCut, PrefersFewestAdjacentPairs) {
  // C4 has minimum 2-cuts {0,2} (independent) and none adjacent that
  // disconnect; K4 minus an edge has a single minimum cut {1,2}, adjacent.
  auto c4 = min_constrained_vertex_cut(named_graph("C4"), 0);
  ASSERT_TRUE(c4);
  EXPECT_EQ(c4->adjacent_pairs, 0u);
  const Graph diamond = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  auto d = min_constrained_vertex_cut(diamond, 0);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->size, 2u);
  EXPECT_EQ(d->adjacent_pairs, 1u);
}

TEST(ConstrainedCut, AgreesWithReference) {
  for (const auto& g : enumerate_connected_base_graphs(6)) {
    for (std::size_t k = 0; k <= 2; ++k) {
      const auto got = min_constrained_vertex_cut(g, k);
      const auto all = ref::all_min_vertex_cuts(g, k + 1);
      if (all.empty()) {
        EXPECT_FALSE(got) << emit_graph6(g);
        continue;
      }
      ASSERT_TRUE(got) << emit_graph6(g);
      // Reference tie-break: fewest internal edges, then lexicographic.
      std::vector<VertexLabel> best;
      std::size_t best_pairs = SIZE_MAX;
      for (const auto& cut : all) {
        const auto ls = labels(g, cut);
        const auto pairs = adjacent_pairs_in(g, ls);
        if (pairs < best_pairs) {
          best_pairs = pairs;
          best = ls;
        }
      }
      EXPECT_EQ(got->size, all.front().size());
      EXPECT_EQ(got->adjacent_pairs, best_pairs);
      EXPECT_EQ(got->cut_set, best) << emit_graph6(g) << " k=" << k;
    }
  }
}

TEST(KMax, Examples) {
  auto c6 = k_max_of_min_cuts(named_graph("C6"));
  ASSERT_TRUE(c6);
  EXPECT_EQ(c6->k, 1u);
  EXPECT_TRUE(replay(named_graph("C6"), c6->witness));
  EXPECT_EQ(k_max_of_min_cuts(named_graph("C4"))->k, 0u);
  EXPECT_EQ(k_max_of_min_cuts(named_graph("P4"))->k, 0u);
  EXPECT_FALSE(k_max_of_min_cuts(named_graph("K4")));
}

TEST(KMax, AgreesWithReference) {
  for (const auto& g : enumerate_connected_base_graphs(6)) {
    if (g.is_complete()) continue;
    const auto all = ref::all_min_vertex_cuts(g, 1);
    const auto a = ref::matrix_of(g);
    std::size_t best = 0;
    for (const auto& cut : all) {
      std::vector<bool> alive(g.order(), true);
      for (auto v : cut) alive[v] = false;
      const auto sizes = ref::component_sizes(a, alive);
      best = std::max(best, *std::min_element(sizes.begin(), sizes.end()));
    }
    const auto got = k_max_of_min_cuts(g);
    ASSERT_TRUE(got);
    EXPECT_EQ(got->k, best - 1) << emit_graph6(g);
    EXPECT_EQ(got->witness.cut.size(), all.front().size());
    EXPECT_EQ(got->witness.min_component_size, best);
  }
}

TEST(AdjacentPairs, Examples) {
  const Graph c4 = named_graph("C4");
  const VertexLabel adjacent[] = {VertexLabel::base(0), VertexLabel::base(1)};
  const VertexLabel antipodal[] = {VertexLabel::base(0), VertexLabel::base(2)};
  const VertexLabel run[] = {VertexLabel::base(0), VertexLabel::base(1), VertexLabel::base(2)};
  const VertexLabel foreign[] = {VertexLabel::sub(0, 1)};
  EXPECT_EQ(adjacent_pairs_in(c4, adjacent), 1u);
  EXPECT_EQ(adjacent_pairs_in(c4, antipodal), 0u);
  EXPECT_EQ(adjacent_pairs_in(c4, run), 2u);
  EXPECT_THROW(adjacent_pairs_in(c4, foreign), InputError);
}

TEST(OracleProperties, ZeroExtraIsClassicalConnectivity) {
  for (const auto& g : enumerate_connected_base_graphs(6)) {
    if (g.is_complete()) continue;
    EXPECT_EQ(g_extra_vertex_connectivity(g, 0).value(), vertex_connectivity(g));
    EXPECT_EQ(g_extra_edge_connectivity(g, 0).value(), ExtendedCount::finite(edge_connectivity(g)));
  }
}

TEST(OracleProperties, EquivalentToReferenceUpToSeven) {
  for (const auto& g : enumerate_connected_base_graphs(7)) {
    for (std::size_t extra = 0; extra <= 2; ++extra) {
      const auto vertex = g_extra_vertex_connectivity(g, extra);
      ASSERT_FALSE(vertex.exceeded());
      EXPECT_EQ(vertex.value(), as_count(ref::kappa_g(g, extra))) << emit_graph6(g) << " g=" << extra;
      const auto edge = g_extra_edge_connectivity(g, extra);
      ASSERT_FALSE(edge.exceeded());
      EXPECT_EQ(edge.value(), as_count(ref::lambda_g(g, extra))) << emit_graph6(g) << " g=" << extra;
    }
  }
}

TEST(OracleProperties, Monotone) {
  for (const auto& g : enumerate_connected_base_graphs(6)) {
    for (std::size_t extra = 0; extra < 2; ++extra) {
      EXPECT_LE(g_extra_vertex_connectivity(g, extra).value(), g_extra_vertex_connectivity(g, extra + 1).value());
      EXPECT_LE(g_extra_edge_connectivity(g, extra).value(), g_extra_edge_connectivity(g, extra + 1).value());
    }
  }
}

TEST(OracleProperties, CertificatesReplay) {
  for (const auto& g : enumerate_connected_base_graphs(6)) {
    for (std::size_t extra = 0; extra <= 2; ++extra) {
      const auto v = g_extra_vertex_connectivity(g, extra);
      if (v.found()) {
        ASSERT_TRUE(v.certificate);
        EXPECT_EQ(v.certificate->cut.size(), v.cut_size);
        EXPECT_GE(v.certificate->min_component_size, extra + 1);
        EXPECT_TRUE(replay(g, *v.certificate));
      }
      const auto e = g_extra_edge_connectivity(g, extra);
      if (e.found()) {
        ASSERT_TRUE(e.certificate);
        EXPECT_EQ(e.certificate->cut.size(), e.cut_size);
        EXPECT_TRUE(replay(g, *e.certificate));
      }
    }
  }
}

TEST(OracleProperties, ReplayRejectsTamperedCertificates) {
  const Graph c6 = named_graph("C6");
  auto cert = *g_extra_vertex_connectivity(c6, 1).certificate;
  auto dropped = cert;
  dropped.cut.pop_back();
  EXPECT_FALSE(replay(c6, dropped));
  auto moved = cert;
  std::swap(moved.components[0].back(), moved.components[1].back());
  EXPECT_FALSE(replay(c6, moved));
  auto inflated = cert;
  inflated.min_component_size = 3;
  EXPECT_FALSE(replay(c6, inflated));
}

// The certificate is the lexicographically first minimum cut, whatever twin
// classes the enumerator collapses.
TEST(OracleProperties, TieBreakIsLexicographicFirst) {
  for (const auto& g : enumerate_connected_base_graphs(6)) {
    for (std::size_t extra = 0; extra <= 1; ++extra) {
      const auto expected = ref::min_vertex_cut(g, extra + 1);
      const auto got = g_extra_vertex_connectivity(g, extra);
      if (!expected) continue;
      ASSERT_TRUE(got.certificate);
      EXPECT_EQ(got.certificate->cut, labels(g, *expected)) << emit_graph6(g) << " g=" << extra;
    }
  }
}

// Lower half of the κ ≤ κ_g ≤ n−2g−2 sandwich; the acceptance suite checks both halves.
TEST(OracleProperties, LowerSandwich) {
  for (const auto& g : enumerate_connected_base_graphs(6)) {
    if (g.is_complete()) continue;
    const auto kappa = vertex_connectivity(g);
    for (std::size_t extra = 0; extra <= 2; ++extra) {
      EXPECT_LE(kappa, g_extra_vertex_connectivity(g, extra).value());
    }
  }
}

TEST(Budget, ExceededIsReportedNotGuessed) {
  const Graph big = edge_corona(named_graph("C5"), named_graph("P3"));
  SearchBudget tight;
  tight.max_cut_size = 1;
  const auto v = g_extra_vertex_connectivity(big, 1, tight);
  EXPECT_TRUE(v.exceeded());
  EXPECT_EQ(v.lower_bound, 2u);
  EXPECT_THROW(v.value(), BudgetExceededError);

  const auto e = g_extra_edge_connectivity(big, 1);  // 45 edges, over the default cap
  EXPECT_TRUE(e.exceeded());
  EXPECT_EQ(e.lower_bound, edge_connectivity(big));

  SearchBudget roomy;
  roomy.max_edge_host_edges = 64;
  EXPECT_TRUE(g_extra_edge_connectivity(big, 1, roomy).found());

  SearchBudget few;
  few.max_candidates = 1;  // C8 tries {v0,v1} first and it does not split
  EXPECT_TRUE(g_extra_vertex_connectivity(named_graph("C8"), 2, few).exceeded());
  EXPECT_THROW(min_constrained_vertex_cut(named_graph("C8"), 2, few), BudgetExceededError);
  EXPECT_TRUE(g_extra_edge_connectivity(named_graph("C8"), 2, few).exceeded());
}

TEST(Budget, InfiniteOnlyAfterExhaustion) {
  // K_{1,4} at g=1: removing the centre strands singletons, so no R_1 cut
  // exists. The whole space (cuts of size <= 1) fits a budget of 1.
  SearchBudget tight;
  tight.max_cut_size = 1;
  EXPECT_EQ(g_extra_vertex_connectivity(named_graph("S4"), 1, tight).status, SearchStatus::Infinite);
  // C6 at g=1 needs a 2-cut, beyond a budget of 1.
  EXPECT_TRUE(g_extra_vertex_connectivity(named_graph("C6"), 1, tight).exceeded());
  EXPECT_EQ(g_extra_vertex_connectivity(named_graph("S4"), 1).status, SearchStatus::Infinite);
}

}  // namespace
}  // namespace gextra
