#include <gtest/gtest.h>

#include <set>

#include "leafdeck/seq.hpp"
#include "leafdeck/tag.hpp"

using namespace leafdeck;

TEST(BinarySeq, ParsesAndPrints) {
  const auto w = BinarySeq::from_string("0110");
  EXPECT_EQ(w.length(), 4u);
  EXPECT_EQ(w.str(), "0110");
  EXPECT_EQ(w(1), 0);
  EXPECT_EQ(w(2), 1);
  EXPECT_EQ(w.as_integer(), 6u);
  EXPECT_THROW(BinarySeq::from_string("01a"), SeqError);
  EXPECT_THROW(w.at(0), SeqError);
  EXPECT_THROW(w.at(5), SeqError);
}

TEST(BinarySeq, WeightAndParity) {
  EXPECT_EQ(weight(BinarySeq::from_string("0110")), 2u);
  EXPECT_EQ(BinarySeq::from_string("0110").parity(), Parity::even);
  EXPECT_EQ(BinarySeq::from_string("0111").parity(), Parity::odd);
  EXPECT_EQ(BinarySeq(5).parity(), Parity::even);
}

TEST(BinarySeq, FlipChangesOnePosition) {
  const auto w = BinarySeq::from_string("0110");
  EXPECT_EQ(flip(w, 1).str(), "1110");
  EXPECT_EQ(flip(w, 3).str(), "0100");
  EXPECT_THROW(flip(w, 5), SeqError);
}

TEST(BinarySeq, LexOrder) {
  const auto a = BinarySeq::from_string("0011");
  const auto b = BinarySeq::from_string("0101");
  EXPECT_EQ(lex_compare(a, b), std::strong_ordering::less);
  EXPECT_EQ(lex_compare(b, b), std::strong_ordering::equal);
  EXPECT_THROW(lex_compare(a, BinarySeq::from_string("01")), SeqError);
  EXPECT_EQ(sorted_lex({b, a}).front(), a);
}

TEST(MaskedSeq, StarHidesPosition) {
  const auto w = BinarySeq::from_string("0110");
  EXPECT_EQ(mask(w, 2).str(), "0*10");
  EXPECT_EQ(mask(w, 2), mask(flip(w, 2), 2));
  EXPECT_NE(mask(w, 2), mask(w, 3));
}

TEST(Enumerate, EvenWordsOfLengthFour) {
  std::vector<std::string> got;
  for (const auto& w : enumerate_parity(4, Parity::even)) got.push_back(w.str());
  const std::vector<std::string> want = {"0000", "0011", "0101", "0110", "1001", "1010", "1100", "1111"};
  EXPECT_EQ(got, want);
}

TEST(Enumerate, RejectsBadLength) {
  EXPECT_THROW(enumerate_parity(0, Parity::even), SeqError);
  EXPECT_THROW(enumerate_parity(31, Parity::odd), SeqError);
}

TEST(Enumerate, SubsetByPosition) {
  const auto s = subset_ih(4, Parity::odd, 2, 1);
  ASSERT_EQ(s.size(), 4u);
  for (const auto& w : s) {
    EXPECT_EQ(w(2), 1);
    EXPECT_EQ(w.parity(), Parity::odd);
  }
  EXPECT_EQ(s.front().str(), "0100");
}

TEST(Enumerate, MaskedSetRejectsMixedLengths) {
  EXPECT_THROW(masked_set({BinarySeq(3), BinarySeq(4)}, 1), SeqError);
}

// Exhaustive up to length 10, against a direct bit-count enumeration.
TEST(SeqProperties, ExhaustiveUpToTen) {
  for (std::size_t r = 1; r <= 10; ++r) {
    for (auto p : {Parity::even, Parity::odd}) {
      const auto words = enumerate_parity(r, p);
      std::vector<std::uint64_t> want;
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << r); ++v) {
        if ((__builtin_popcountll(v) % 2 == 0) == (p == Parity::even)) want.push_back(v);
      }
      ASSERT_EQ(words.size(), want.size());
      for (std::size_t k = 0; k < words.size(); ++k) ASSERT_EQ(words[k].as_integer(), want[k]);
      for (const auto& w : words) {
        for (std::size_t i = 1; i <= r; ++i) {
          ASSERT_EQ(flip(flip(w, i), i), w);
          ASSERT_EQ(flip(w, i).parity(), opposite(p));
        }
      }
    }
    for (std::size_t i = 1; i <= r; ++i) {
      ASSERT_EQ(masked_set(enumerate_parity(r, Parity::even), i), masked_set(enumerate_parity(r, Parity::odd), i));
    }
  }
}

TEST(Tag, RoundTrips) {
  const auto w = BinarySeq::from_string("0101");
  for (const auto& tag : {VertexTag::U(w), VertexTag::V(2, 1), VertexTag::Y(w, 1), VertexTag::Z(w, 4),
                          VertexTag::X(3), VertexTag::Lex(1, 0, "LR"), VertexTag::Lex(1, 0, "")}) {
    EXPECT_EQ(parse_tag(tag.str()), tag) << tag.str();
  }
  EXPECT_EQ(VertexTag::U(w).str(), "U(0101)");
  EXPECT_EQ(VertexTag::none().str(), "");
  EXPECT_ANY_THROW(parse_tag("Q(1)"));
  EXPECT_ANY_THROW(parse_tag("V(1,2)"));
}
