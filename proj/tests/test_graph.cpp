#include <gtest/gtest.h>

#include <algorithm>

#include "gextra/corpus.hpp"
#include "gextra/graph_io.hpp"
#include "gextra/graph.hpp"
#include "reference_oracle.hpp"

namespace gextra {
namespace {

TEST(DegreeTest, Examples) {
  EXPECT_EQ(degree(named_graph("P3"), 0), 1u);
  for (VertexIndex v = 0; v < 4; ++v) EXPECT_EQ(degree(named_graph("C4"), v), 2u);
  EXPECT_EQ(degree(named_graph("K1"), 0), 0u);
  EXPECT_THROW(degree(named_graph("P3"), 3), InputError);
}

TEST(DegreeTest, MinDegree) {
  EXPECT_EQ(min_degree(named_graph("P4")), 1u);
  EXPECT_EQ(min_degree(named_graph("C6")), 2u);
  EXPECT_EQ(min_degree(named_graph("S3")), 1u);
  EXPECT_THROW(min_degree(Graph{}), InputError);
}

TEST(ComponentsTest, Examples) {
  auto p4 = named_graph("P4");
  auto cs = connected_components(p4);
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].size(), 4u);

  const VertexIndex middle[] = {1, 2};
  cs = connected_components(p4.remove_vertices(middle));
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(cs[0].size(), 1u);
  EXPECT_EQ(cs[1].size(), 1u);

  cs = connected_components(named_graph("E3"));
  ASSERT_EQ(cs.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(cs[i].members, std::vector<VertexIndex>{static_cast<VertexIndex>(i)});
}

TEST(ComponentsTest, PartitionOnCorpus) {
  for (const auto& g : enumerate_connected_base_graphs(5)) {
    // Drop vertex 0 so some inputs fall apart.
    const VertexIndex zero[] = {0};
    const Graph rest = g.remove_vertices(zero);
    std::vector<VertexIndex> all;
    VertexIndex prev_min = 0;
    bool first = true;
    for (const auto& c : connected_components(rest)) {
      ASSERT_FALSE(c.members.empty());
      if (!first) {
        EXPECT_LT(prev_min, c.members.front());
      }
      prev_min = c.members.front();
      first = false;
      all.insert(all.end(), c.members.begin(), c.members.end());
    }
    std::sort(all.begin(), all.end());
    ASSERT_EQ(all.size(), rest.order());
    for (VertexIndex i = 0; i < all.size(); ++i) EXPECT_EQ(all[i], i);
  }
}

TEST(ConnectivityTest, VertexExamples) {
  EXPECT_EQ(vertex_connectivity(named_graph("P4")), ExtendedCount::finite(1));
  EXPECT_EQ(vertex_connectivity(named_graph("C5")), ExtendedCount::finite(2));
  EXPECT_EQ(vertex_connectivity(named_graph("K4")), ExtendedCount::infinite());
  EXPECT_EQ(vertex_connectivity(named_graph("K1")), ExtendedCount::infinite());
  EXPECT_THROW(vertex_connectivity(named_graph("E2")), InputError);
}

TEST(ConnectivityTest, EdgeExamples) {
  EXPECT_EQ(edge_connectivity(named_graph("P4")), 1u);
  EXPECT_EQ(edge_connectivity(named_graph("C6")), 2u);
  EXPECT_EQ(edge_connectivity(named_graph("K4")), 3u);
  EXPECT_THROW(edge_connectivity(named_graph("K1")), InputError);
  EXPECT_THROW(edge_connectivity(named_graph("E3")), InputError);
}

TEST(ConnectivityTest, DerivedExamplesMatchReference) {
  EXPECT_EQ(ref::kappa(named_graph("C5")), 2u);
  EXPECT_EQ(ref::lambda(named_graph("C6")), 2u);
  EXPECT_EQ(ref::lambda(named_graph("K4")), 3u);
}

TEST(ConnectivityTest, AgreesWithReferenceOnCorpus) {
  for (const auto& g : enumerate_connected_base_graphs(6)) {
    const auto expected = ref::kappa(g);
    const auto got = vertex_connectivity(g);
    if (expected) {
      EXPECT_EQ(got, ExtendedCount::finite(*expected)) << emit_graph6(g);
    } else {
      EXPECT_TRUE(got.is_infinite());
      EXPECT_TRUE(g.is_complete());
    }
    EXPECT_EQ(edge_connectivity(g), ref::lambda(g));
  }
}

// κ ≤ λ ≤ δ; complete graphs are excluded because κ(K_n) is Infinite here.
TEST(ConnectivityTest, WhitneyChainOnNonCompleteCorpus) {
  for (const auto& g : enumerate_connected_base_graphs(6)) {
    if (g.is_complete()) continue;
    const auto k = vertex_connectivity(g).value();
    const auto l = edge_connectivity(g);
    EXPECT_LE(k, l);
    EXPECT_LE(l, min_degree(g));
  }
}

TEST(SubdivisionTest, Examples) {
  const Graph s3 = subdivision(named_graph("P3"));
  EXPECT_EQ(s3.order(), 5u);
  EXPECT_EQ(s3.size(), 4u);
  EXPECT_EQ(min_degree(s3), 1u);
  EXPECT_EQ(ref::kappa(s3), 1u);

  const Graph c6 = subdivision(named_graph("C3"));
  EXPECT_EQ(c6.order(), 6u);
  EXPECT_EQ(c6.size(), 6u);
  for (VertexIndex v = 0; v < 6; ++v) EXPECT_EQ(degree(c6, v), 2u);
  EXPECT_TRUE(is_connected(c6));

  const Graph k1 = subdivision(named_graph("K1"));
  EXPECT_EQ(k1, named_graph("K1"));
}

TEST(SubdivisionTest, LabelsAndStructure) {
  const Graph g = named_graph("C4");
  const Graph s = subdivision(g);
  for (VertexIndex v = 0; v < 4; ++v) EXPECT_EQ(s.label(v), VertexLabel::base(v));
  for (std::size_t e = 0; e < g.size(); ++e) {
    const auto [u, v] = g.edges()[e];
    const VertexIndex w = static_cast<VertexIndex>(4 + e);
    EXPECT_EQ(s.label(w), VertexLabel::sub(u, v));
    EXPECT_TRUE(s.adjacent(u, w));
    EXPECT_TRUE(s.adjacent(w, v));
    EXPECT_FALSE(s.adjacent(u, v));
  }
}

TEST(SubdivisionTest, PreservesConnectivity) {
  for (const auto& g : enumerate_connected_base_graphs(5)) {
    EXPECT_TRUE(is_connected(subdivision(g)));
    const VertexIndex zero[] = {0};
    const Graph rest = g.remove_vertices(zero);
    EXPECT_EQ(is_connected(rest), is_connected(subdivision(rest)));
  }
}

TEST(LabelTest, RoundTripAndOrder) {
  const VertexLabel labels[] = {VertexLabel::base(3), VertexLabel::sub(2, 1), VertexLabel::copy_of_vertex(0, 1),
                                VertexLabel::copy_of_edge(1, 0, 2)};
  EXPECT_EQ(labels[0].to_string(), "v3");
  EXPECT_EQ(labels[1].to_string(), "w1_2");
  EXPECT_EQ(labels[2].to_string(), "h0.1");
  EXPECT_EQ(labels[3].to_string(), "h0_1.2");
  for (const auto& l : labels) EXPECT_EQ(VertexLabel::parse(l.to_string()), l);
  EXPECT_LT(VertexLabel::base(9), VertexLabel::sub(0, 1));
  EXPECT_LT(VertexLabel::sub(0, 1), VertexLabel::copy_of_vertex(0, 0));
  EXPECT_THROW(VertexLabel::sub(1, 1), InputError);
  EXPECT_THROW(VertexLabel::parse("x1"), InputError);
}

TEST(GraphTest, RejectsInvalidInput) {
  EXPECT_THROW(Graph::from_edges(2, {{0, 0}}), InputError);
  EXPECT_THROW(Graph::from_edges(2, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(Graph::from_edges(2, {{0, 2}}), InputError);
  EXPECT_THROW(Graph({VertexLabel::base(0), VertexLabel::base(0)}, {}), InputError);
}

TEST(GraphTest, RemovalKeepsLabels) {
  const Graph c5 = named_graph("C5");
  const VertexIndex gone[] = {0, 2};
  const Graph rest = c5.remove_vertices(gone);
  ASSERT_EQ(rest.order(), 3u);
  EXPECT_EQ(rest.label(0), VertexLabel::base(1));
  EXPECT_EQ(rest.label(2), VertexLabel::base(4));
  EXPECT_EQ(rest.size(), 1u);
  const Edge cut[] = {{0, 1}, {2, 3}};
  const Graph split = c5.remove_edges(cut);
  EXPECT_EQ(connected_components(split).size(), 2u);
}

TEST(ExtendedCountTest, Order) {
  EXPECT_LT(ExtendedCount::finite(1000000), ExtendedCount::infinite());
  EXPECT_LT(ExtendedCount::finite(1), ExtendedCount::finite(2));
  EXPECT_EQ(ExtendedCount::infinite(), ExtendedCount::infinite());
  EXPECT_EQ(ExtendedCount::infinite().to_string(), "inf");
  EXPECT_THROW(ExtendedCount::infinite().value(), std::logic_error);
}

}  // namespace
}  // namespace gextra
