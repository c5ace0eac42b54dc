#include <gtest/gtest.h>

#include "leafdeck/distance.hpp"
#include "leafdeck/iso.hpp"
#include "leafdeck/network.hpp"
#include "leafdeck/structure.hpp"
#include "support/fixtures.hpp"

using namespace leafdeck;
using testsupport::named_graph;

TEST(Multigraph, CountsLoopsAndParallelEdges) {
  const auto g = LabeledMultigraph::build({{0, "a", {}}, {1, std::nullopt, {}}, {5, std::nullopt, {}}},
                                          {Edge::of(0, 1), Edge::of(1, 0), Edge::of(5, 5), Edge::of(1, 5)});
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_EQ(g.degree(1), 3u);
  EXPECT_EQ(g.degree(5), 3u);
  EXPECT_EQ(g.multiplicity(0, 1), 2u);
  EXPECT_EQ(g.multiplicity(5, 5), 1u);
  EXPECT_EQ(g.excess(), 1);
  EXPECT_FALSE(g.is_simple());
  EXPECT_EQ(g.find_label("a"), VertexId{0});
  EXPECT_FALSE(g.contains(2));
}

TEST(Multigraph, RejectsMalformedInput) {
  EXPECT_THROW(LabeledMultigraph::build({{0, std::nullopt, {}}, {0, std::nullopt, {}}}, {}), GraphError);
  EXPECT_THROW(LabeledMultigraph::build({{0, "a", {}}, {1, "a", {}}}, {}), GraphError);
  EXPECT_THROW(LabeledMultigraph::build({{0, "", {}}}, {}), GraphError);
  EXPECT_THROW(LabeledMultigraph::build({{0, std::nullopt, {}}}, {Edge::of(0, 3)}), GraphError);
}

TEST(Multigraph, NaturalLabelOrder) {
  EXPECT_TRUE(natural_less("x2", "x10"));
  EXPECT_FALSE(natural_less("x10", "x2"));
  const LabelSet s = {"x10", "x1", "x2"};
  EXPECT_EQ(*s.begin(), "x1");
  EXPECT_EQ(*s.rbegin(), "x10");
}

TEST(Builder, TagsAreUnique) {
  GraphBuilder b;
  const auto a = b.add_vertex(VertexTag::X(1), "x1");
  EXPECT_EQ(b.vertex_for(VertexTag::X(1)), a);
  EXPECT_THROW(b.add_vertex(VertexTag::X(1)), GraphError);
}

TEST(Suppression, QuartetCherryLeafGivesStar) {
  const auto g = testsupport::quartet("x1", "x2", "x3", "x4");
  const auto entry = remove_label(g, "x1");
  EXPECT_EQ(entry.vertex_count(), 4u);
  EXPECT_EQ(entry.edge_count(), 3u);
  EXPECT_TRUE(are_equivalent(entry, testsupport::star3("x2", "x3", "x4")));
}

TEST(Suppression, KeepsIdsAndLogsSplices) {
  const auto g = named_graph({{"x1", "a"}, {"a", "b"}, {"b", "x2"}});
  const auto res = suppress_degree_two_with_log(g);
  EXPECT_EQ(res.graph.vertex_count(), 2u);
  EXPECT_EQ(res.graph.edge_count(), 1u);
  EXPECT_EQ(res.log.size(), 2u);
  EXPECT_TRUE(res.graph.contains(*g.find_label("x1")));
}

TEST(Suppression, CycleCollapsesToLoop) {
  const auto g = named_graph({{"a", "b"}, {"b", "c"}, {"c", "a"}});
  const auto s = suppress_degree_two(g);
  EXPECT_EQ(s.vertex_count(), 1u);
  EXPECT_EQ(s.edge_count(), 1u);
  EXPECT_EQ(s.excess(), g.excess());
}

TEST(Suppression, LabelledDegreeTwoIsAnError) {
  const auto g = named_graph({{"x1", "a"}, {"a", "x2"}, {"x2", "b"}, {"b", "x1"}});
  EXPECT_THROW(suppress_degree_two(g), GraphError);
}

TEST(Structure, BridgesAndBlobs) {
  const auto g = testsupport::small_network();
  EXPECT_EQ(cut_edges(g).size(), 5u);
  const auto parts = blobs(g);
  EXPECT_EQ(parts.size(), 6u);
  std::size_t blob_count = 0;
  for (const auto& c : parts) {
    if (!c.is_blob) continue;
    ++blob_count;
    EXPECT_EQ(c.vertices.size(), 5u);
    EXPECT_EQ(c.internal_edges, 6u);
  }
  EXPECT_EQ(blob_count, 1u);
  const auto contracted = contract_blobs(g);
  EXPECT_EQ(contracted.excess(), -1);
}

TEST(Structure, TreeHasNoBlobs) {
  const auto parts = blobs(testsupport::quartet("x1", "x2", "x3", "x4"));
  EXPECT_EQ(parts.size(), 6u);
  for (const auto& c : parts) EXPECT_FALSE(c.is_blob);
}

TEST(Structure, TriangleWithPendant) {
  const auto g = named_graph({{"a", "b"}, {"b", "c"}, {"c", "a"}, {"a", "x1"}});
  const auto parts = blobs(g);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].is_blob + parts[1].is_blob, 1);
  const auto q = contract_blobs(g);
  EXPECT_EQ(q.vertex_count(), 2u);
  EXPECT_EQ(q.edge_count(), 1u);
}

TEST(Structure, ParallelEdgesAreNotBridges) {
  const auto g = named_graph({{"a", "b"}, {"a", "b"}, {"b", "c"}});
  EXPECT_EQ(cut_edges(g).size(), 1u);
  EXPECT_THROW(cut_edges(named_graph({{"a", "b"}, {"c", "d"}})), GraphError);
}

TEST(Network, SmallNetworkIsValidAndBinary) {
  const auto g = testsupport::small_network();
  EXPECT_TRUE(is_network(g));
  EXPECT_TRUE(is_binary(g));
  EXPECT_NO_THROW(Network::from(g));
  EXPECT_TRUE(is_network(testsupport::quartet("x1", "x2", "x3", "x4")));
}

TEST(Network, RejectsInvalidGraphs) {
  // unlabelled leaf
  EXPECT_FALSE(is_network(named_graph({{"x1", "a"}, {"x2", "a"}, {"a", "b"}})));
  // degree-2 vertex
  EXPECT_FALSE(is_network(named_graph({{"x1", "a"}, {"a", "x2"}})));
  // parallel edges
  EXPECT_FALSE(is_network(named_graph({{"x1", "a"}, {"a", "b"}, {"a", "b"}, {"b", "x2"}, {"a", "x3"}, {"b", "x4"}})));
  // fewer than two labels
  EXPECT_FALSE(is_network(named_graph({{"x1", "a"}})));
  // missing label
  EXPECT_FALSE(is_network(testsupport::quartet("x1", "x2", "x3", "x4"), LabelSet{"x1", "x2", "x3", "x4", "x5"}));
  // leafless blob hanging off a bridge
  const auto g = named_graph({{"x1", "a"}, {"x2", "b"}, {"a", "b"}, {"a", "c"}, {"b", "c"}, {"c", "d"},
                              {"d", "e"}, {"d", "f"}, {"d", "g"}, {"e", "f"}, {"e", "g"}, {"f", "g"}});
  ASSERT_TRUE(g.is_simple());
  EXPECT_FALSE(is_network(g));
  EXPECT_THROW(Network::from(named_graph({{"x1", "a"}, {"a", "x2"}})), GraphError);
}

TEST(Distance, SignaturesOnSmallNetwork) {
  const auto g = testsupport::small_network();
  const auto b = *g.find_label("x1");
  EXPECT_EQ(distance(g, b, *g.find_label("x4")), 5u);
  const auto sig = distance_signature(g, b);
  EXPECT_EQ(sig.str(), "(x1:0, x2:2, x3:5, x4:5)");
  EXPECT_EQ(vertices_with_signature(g, sig), std::vector<VertexId>{b});
  const auto all = all_signatures(g);
  for (std::size_t k = 0; k < g.vertex_count(); ++k) EXPECT_EQ(all[k], distance_signature(g, g.at_index(k).id));
}

TEST(Distance, UnreachableIsInfinite) {
  const auto g = named_graph({{"x1", "a"}, {"x2", "b"}});
  const auto sig = distance_signature(g, *g.find_label("x1"));
  EXPECT_EQ(sig.str(), "(x1:0, x2:inf)");
  EXPECT_FALSE(sig.at("x2").has_value());
  EXPECT_THROW(sig.at("x9"), GraphError);
}
