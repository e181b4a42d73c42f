#include <gtest/gtest.h>

#include "barricade/errors.hpp"
#include "barricade/graph.hpp"
#include "fixtures.hpp"

using namespace barricade;

TEST(Graph, AdjacencyIsSortedAndMirrored) {
  const std::vector<Edge> edges{{2, 0, 1.5}, {0, 2, 2.0}, {1, 0, 0.5}, {0, 1, 1.0}};
  const Graph g(3, edges, 1.0);
  ASSERT_EQ(g.out_edges(0).size(), 2u);
  EXPECT_EQ(g.out_edges(0)[0].node, 1u);
  EXPECT_EQ(g.out_edges(0)[1].node, 2u);
  EXPECT_EQ(g.in_edges(0)[0], (Arc{1, 0.5}));
  EXPECT_EQ(g.in_edges(0)[1], (Arc{2, 1.5}));
  EXPECT_DOUBLE_EQ(g.in_weight_sum(0), 2.0);
  EXPECT_DOUBLE_EQ(g.out_weight_sum(0), 3.0);
  EXPECT_EQ(g.edge_count(), 4u);
}

TEST(Graph, RejectsBadInput) {
  const std::vector<Edge> self{{0, 0, 1.0}};
  EXPECT_THROW(Graph(2, self, 1.0), ValidationError);
  const std::vector<Edge> dup{{0, 1, 1.0}, {0, 1, 2.0}};
  EXPECT_THROW(Graph(2, dup, 1.0), ValidationError);
  const std::vector<Edge> zero{{0, 1, 0.0}};
  EXPECT_THROW(Graph(2, zero, 1.0), ValidationError);
  const std::vector<Edge> far{{0, 5, 1.0}};
  EXPECT_THROW(Graph(2, far, 1.0), ValidationError);
  EXPECT_THROW(Graph(2, std::vector<Edge>{}, -1.0), ValidationError);
}

TEST(Graph, EdgesComeBackInPairOrder) {
  const std::vector<Edge> edges{{1, 0, 1.0}, {0, 2, 1.0}, {0, 1, 1.0}};
  const Graph g(3, edges, 0.0);
  const std::vector<Edge> expect{{0, 1, 1.0}, {0, 2, 1.0}, {1, 0, 1.0}};
  EXPECT_EQ(g.edges(), expect);
}

TEST(Graph, WithoutNodeTombstones) {
  const Graph g = fixtures::p3().without_node(1);
  EXPECT_EQ(g.node_count(), 2u);
  EXPECT_EQ(g.id_bound(), 3u);
  EXPECT_FALSE(g.alive(1));
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_EQ(g.nodes(), (std::vector<NodeId>{0, 2}));
}

TEST(Graph, WithNodeAppends) {
  NodeAddition add;
  add.barricade = 2.0;
  add.in = {{0, 1.0}, {2, 1.0}};
  add.out = {{0, 0.5}};
  const Graph g = fixtures::p3().with_node(add);
  EXPECT_EQ(g.node_count(), 4u);
  EXPECT_DOUBLE_EQ(g.barricade(3), 2.0);
  EXPECT_DOUBLE_EQ(g.edge_weight(2, 3), 1.0);
  EXPECT_DOUBLE_EQ(g.edge_weight(3, 0), 0.5);
  EXPECT_FALSE(g.has_edge(3, 2));
}

TEST(Graph, EdgeEditsRoundTrip) {
  const Graph g = fixtures::p3();
  const std::vector<Edge> cut{{1, 0, 1.0}};
  const Graph h = g.without_edges(cut);
  EXPECT_FALSE(h.has_edge(1, 0));
  EXPECT_EQ(h.with_edges(cut), g);
  EXPECT_THROW(h.without_edges(cut), ValidationError);
  EXPECT_THROW(g.with_edges(cut), ValidationError);
}

TEST(Graph, WithWeightsFollowsEdgeOrder) {
  const Graph g = fixtures::p3();
  const std::vector<double> w{1.0, 2.0, 3.0, 4.0};
  const Graph h = g.with_weights(w);
  EXPECT_DOUBLE_EQ(h.edge_weight(0, 1), 1.0);
  EXPECT_DOUBLE_EQ(h.edge_weight(1, 0), 2.0);
  EXPECT_DOUBLE_EQ(h.edge_weight(1, 2), 3.0);
  EXPECT_DOUBLE_EQ(h.edge_weight(2, 1), 4.0);
}

TEST(SeedSet, SortsAndRejectsDuplicates) {
  const SeedSet s({3, 1, 2});
  EXPECT_EQ(std::vector<NodeId>(s.begin(), s.end()), (std::vector<NodeId>{1, 2, 3}));
  EXPECT_TRUE(s.contains(2));
  EXPECT_THROW(SeedSet({1, 1}), ValidationError);
  EXPECT_THROW(SeedSet({5}).validate_for(fixtures::p3()), ValidationError);
}
