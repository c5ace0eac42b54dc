#include <gtest/gtest.h>

#include "leafdeck/construct.hpp"
#include "leafdeck/distance.hpp"
#include "leafdeck/iso.hpp"
#include "leafdeck/structure.hpp"

using namespace leafdeck;

namespace {

std::size_t pow2(std::size_t k) { return std::size_t{1} << k; }

// Component sums: caterpillars (2r-2 vertices, 2r-3 edges, Z shared with the
// trees), 2r trees with 2^(r-2)-1 internal vertices and 2^(r-1)-2 edges, r
// pendant edges.
std::size_t expanded_vertices(std::size_t r) {
  return pow2(r - 1) * (2 * r - 2) + 2 * r * (pow2(r - 2) - 1) + r;
}
std::size_t expanded_edges(std::size_t r) { return pow2(r - 1) * (2 * r - 3) + 2 * r * (pow2(r - 1) - 2) + r; }

}  // namespace

TEST(Construct, RejectsSmallOrHugeR) {
  EXPECT_THROW(build_nonbinary(3, Parity::even), std::invalid_argument);
  EXPECT_THROW(build_expanded(3, Parity::odd), std::invalid_argument);
  EXPECT_THROW(build_binary_network(21, Parity::even), std::invalid_argument);
}

TEST(Construct, VariantNames) {
  EXPECT_EQ(parse_variant("M"), Variant::nonbinary);
  EXPECT_EQ(parse_variant("G"), Variant::expanded);
  EXPECT_EQ(parse_variant("N"), Variant::binary);
  EXPECT_EQ(to_string(Variant::binary), "N");
  EXPECT_ANY_THROW(parse_variant("Q"));
}

TEST(Nonbinary, Shape) {
  for (std::size_t r = 4; r <= 7; ++r) {
    const auto g = build_nonbinary(r, Parity::even);
    EXPECT_EQ(g.vertex_count(), pow2(r - 1) + 3 * r);
    EXPECT_EQ(g.edge_count(), pow2(r - 1) * r + r);
    EXPECT_EQ(g.labels(), leaf_labels(r));
    for (const auto& w : enumerate_parity(r, Parity::even)) {
      const auto u = *g.find_tag(VertexTag::U(w));
      EXPECT_EQ(g.degree(u), r);
      for (std::size_t i = 1; i <= r; ++i) EXPECT_EQ(g.multiplicity(u, *g.find_tag(VertexTag::V(i, w(i)))), 1u);
    }
  }
}

TEST(Nonbinary, HubSeesEveryLeafAtTwo) {
  const auto g = build_nonbinary(4, Parity::even);
  EXPECT_EQ(distance_signature(g, *g.find_tag(VertexTag::U(BinarySeq(4)))).str(), "(x1:2, x2:2, x3:2, x4:2)");
}

TEST(Caterpillar, FiveLeafShape) {
  const auto w = BinarySeq::from_string("01101");
  const auto g = build_caterpillar(w);
  EXPECT_EQ(g.vertex_count(), 8u);
  EXPECT_EQ(g.edge_count(), 7u);
  auto id = [&](const VertexTag& t) { return *g.find_tag(t); };
  EXPECT_EQ(g.multiplicity(id(VertexTag::U(w)), id(VertexTag::Z(w, 1))), 1u);
  EXPECT_EQ(g.multiplicity(id(VertexTag::U(w)), id(VertexTag::Z(w, 2))), 1u);
  EXPECT_EQ(g.multiplicity(id(VertexTag::U(w)), id(VertexTag::Y(w, 1))), 1u);
  EXPECT_EQ(g.multiplicity(id(VertexTag::Y(w, 1)), id(VertexTag::Z(w, 3))), 1u);
  EXPECT_EQ(g.multiplicity(id(VertexTag::Y(w, 1)), id(VertexTag::Y(w, 2))), 1u);
  EXPECT_EQ(g.multiplicity(id(VertexTag::Y(w, 2)), id(VertexTag::Z(w, 4))), 1u);
  EXPECT_EQ(g.multiplicity(id(VertexTag::Y(w, 2)), id(VertexTag::Z(w, 5))), 1u);
}

TEST(Caterpillar, AnyTwoAreIsomorphicByPosition) {
  const auto a = BinarySeq::from_string("0000");
  const auto b = BinarySeq::from_string("1011");
  EXPECT_TRUE(verify_witness(build_caterpillar(a), build_caterpillar(b), caterpillar_witness(a, b)).ok);
}

TEST(LexTree, LeavesInLexOrder) {
  const auto words = subset_ih(4, Parity::even, 2, 1);
  const auto g = build_lex_tree(words, 2);
  EXPECT_EQ(g.vertex_count(), 7u);
  EXPECT_EQ(g.edge_count(), 6u);
  const auto sorted = sorted_lex(words);
  const std::vector<std::string> paths = {"L", "L", "R", "R"};
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    const auto z = *g.find_tag(VertexTag::Z(sorted[k], 2));
    EXPECT_EQ(g.multiplicity(z, *g.find_tag(VertexTag::Lex(2, 1, paths[k]))), 1u);
  }
}

TEST(LexTree, RejectsBadSets) {
  EXPECT_THROW(build_lex_tree({BinarySeq(4)}, 1), std::invalid_argument);
  const auto w = BinarySeq::from_string("0011");
  EXPECT_THROW(build_lex_tree({w, w}, 1), std::invalid_argument);
  EXPECT_THROW(build_lex_tree({w, BinarySeq(4), BinarySeq::from_string("1111")}, 1), std::invalid_argument);
}

TEST(LexTree, FlipWitnessAllPositions) {
  for (std::size_t r = 4; r <= 6; ++r) {
    for (std::size_t i = 1; i <= r; ++i) {
      for (std::size_t j = 1; j <= r; ++j) {
        for (int h = 0; h <= 1; ++h) {
          const int th = j == i ? 1 - h : h;
          const auto f = lex_tree_witness(r, j, h, i);
          EXPECT_TRUE(verify_witness(build_parity_lex_tree(r, Parity::even, j, h),
                                     build_parity_lex_tree(r, Parity::odd, j, th), f)
                          .ok);
        }
      }
    }
  }
}

TEST(Expanded, CountsMatchComponentSums) {
  for (std::size_t r = 4; r <= 7; ++r) {
    for (auto p : {Parity::even, Parity::odd}) {
      const auto g = build_expanded(r, p);
      EXPECT_EQ(g.vertex_count(), expanded_vertices(r));
      EXPECT_EQ(g.edge_count(), expanded_edges(r));
      std::size_t z = 0;
      for (const auto& v : g.vertices()) {
        if (v.tag.role != Role::z) continue;
        ++z;
        EXPECT_EQ(g.degree(v.id), 2u);
      }
      EXPECT_EQ(z, r * pow2(r - 1));
    }
  }
  EXPECT_EQ(expanded_vertices(4), 76u);
  EXPECT_EQ(expanded_edges(4), 92u);
}

TEST(Binary, FourLeafCounts) {
  for (auto p : {Parity::even, Parity::odd}) {
    const auto built = build_binary_network_with_log(4, p);
    EXPECT_EQ(built.network.graph().vertex_count(), 40u);
    EXPECT_EQ(built.network.graph().edge_count(), 56u);
    EXPECT_EQ(built.suppressed.size(), 36u);
    EXPECT_TRUE(is_binary(built.network.graph()));
  }
}

TEST(Binary, HubsSurviveSuppression) {
  const auto n = build_binary_network(5, Parity::odd);
  for (const auto& w : enumerate_parity(5, Parity::odd)) EXPECT_TRUE(n.graph().find_tag(VertexTag::U(w)));
  for (const auto& v : n.graph().vertices()) EXPECT_NE(v.tag.role, Role::z);
}

TEST(Binary, FourLeafHubSignature) {
  const auto even = build_binary_network(4, Parity::even).graph();
  const auto odd = build_binary_network(4, Parity::odd).graph();
  const auto sig = distance_signature(even, *even.find_tag(VertexTag::U(BinarySeq(4))));
  EXPECT_EQ(sig.str(), "(x1:3, x2:3, x3:4, x4:4)");
  EXPECT_TRUE(vertices_with_signature(odd, sig).empty());
}

TEST(Witnesses, DeckMapsVerify) {
  for (std::size_t r = 4; r <= 5; ++r) {
    for (std::size_t i = 1; i <= r; ++i) {
      EXPECT_TRUE(verify_witness(nonbinary_deck_entry(r, Parity::even, i), nonbinary_deck_entry(r, Parity::odd, i),
                                 nonbinary_deck_witness(r, i))
                      .ok);
      EXPECT_TRUE(verify_witness(expanded_minus_leaf(r, Parity::even, i), expanded_minus_leaf(r, Parity::odd, i),
                                 expanded_deck_witness(r, i))
                      .ok);
    }
  }
}

TEST(Witnesses, WrongMapIsRejected) {
  // Mapping with the flip at the wrong position fails.
  const auto a = nonbinary_deck_entry(4, Parity::even, 1);
  const auto b = nonbinary_deck_entry(4, Parity::odd, 1);
  EXPECT_FALSE(verify_witness(a, b, witness_from_tags(a, b, nonbinary_deck_tag_map(4, 2))).ok);
}

TEST(Witnesses, MergeRejectsConflicts) {
  TagMap m{{VertexTag::X(1), VertexTag::X(1)}};
  EXPECT_THROW(merge_tag_map(m, {{VertexTag::X(1), VertexTag::X(2)}}), std::exception);
}

TEST(Binary, ContractsToStar) {
  const auto q = contract_blobs(build_binary_network(4, Parity::even).graph());
  EXPECT_EQ(q.vertex_count(), 5u);
  EXPECT_EQ(q.edge_count(), 4u);
  EXPECT_EQ(q.labels(), leaf_labels(4));
}
