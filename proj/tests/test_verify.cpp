#include <gtest/gtest.h>

#include <random>

#include "leafdeck/verify.hpp"

using namespace leafdeck;

namespace {

const std::vector<std::string> battery_names = {
    "nonbinary.not_equivalent", "nonbinary.hub_distance_two", "nonbinary.deck_equivalence",
    "expanded.degrees",         "expanded.hub_distance",      "expanded.not_equivalent",
    "expanded.deck_witness",    "expanded.single_blob.even",  "expanded.single_blob.odd",
    "binary.is_network",        "binary.hub_signature",       "binary.not_equivalent",
    "binary.deck_equivalence",  "binary.certificate",         "binary.excess"};

}  // namespace

TEST(Matrix, RejectsSmallR) {
  EXPECT_THROW(run_matrix(3, 5), std::invalid_argument);
  EXPECT_THROW(run_matrix(5, 4), std::invalid_argument);
}

TEST(Matrix, FourToFivePassesEveryCheckOnce) {
  const auto report = run_matrix(4, 5);
  EXPECT_TRUE(report.passed());
  ASSERT_EQ(report.checks.size(), 2 * battery_names.size());
  for (std::size_t r = 4; r <= 5; ++r) {
    for (const auto& name : battery_names) {
      const auto* c = report.find(r, name);
      ASSERT_NE(c, nullptr) << name;
      EXPECT_TRUE(c->passed) << name << ": " << c->detail;
    }
  }
  ASSERT_EQ(report.excess.size(), 2u);
  EXPECT_EQ(report.excess[0].binary_even, 16);
  EXPECT_EQ(report.excess[0].closing_formula, 48);
  EXPECT_FALSE(report.excess[0].matches_closing_formula);
}

TEST(Matrix, ParallelMatchesSequential) {
  const auto a = run_matrix(4, 5, {0, 1, false});
  const auto b = run_matrix(4, 5, {0, 1, true});
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t k = 0; k < a.checks.size(); ++k) {
    EXPECT_EQ(a.checks[k].name, b.checks[k].name);
    EXPECT_EQ(a.checks[k].detail, b.checks[k].detail);
  }
}

TEST(Cycle, FourLeafEvenHubs) {
  const auto g = build_expanded(4, Parity::even);
  const auto cycle = four_caterpillar_cycle(g, 4, Parity::even);
  EXPECT_TRUE(is_simple_cycle(g, cycle));
  std::vector<std::string> hubs;
  for (auto id : cycle) {
    if (g.vertex(id).tag.role == Role::u) hubs.push_back(g.vertex(id).tag.word.str());
  }
  EXPECT_EQ(hubs, (std::vector<std::string>{"0000", "0101", "1100", "1001", "0000"}));
}

TEST(Cycle, RejectsNonCycles) {
  const auto g = build_expanded(4, Parity::even);
  auto cycle = four_caterpillar_cycle(g, 4, Parity::even);
  EXPECT_FALSE(is_simple_cycle(g, {cycle.begin(), cycle.end() - 1}));
  std::swap(cycle[1], cycle[2]);
  EXPECT_FALSE(is_simple_cycle(g, cycle));
}

TEST(Mutation, NamedCheckFails) {
  auto family = Family::build(4);
  std::mt19937_64 rng(7);
  rewire_random_edge(family.binary_even, rng);
  const auto results = check_binary_pair(family);
  const bool any_failed = std::any_of(results.begin(), results.end(), [](const auto& c) { return !c.passed; });
  EXPECT_TRUE(any_failed);
  for (const auto& c : results) {
    if (!c.passed) EXPECT_FALSE(c.detail.empty()) << c.name;
  }
}

class MutationEveryMember : public ::testing::TestWithParam<std::pair<Variant, Parity>> {};

TEST_P(MutationEveryMember, TwentyRewiringsCaught) {
  const auto family = Family::build(4);
  const auto [variant, parity] = GetParam();
  const auto outcome = run_negative_controls(family, variant, parity, 20, 11);
  EXPECT_EQ(outcome.caught, outcome.trials) << (outcome.missed.empty() ? "" : outcome.missed.front());
}

INSTANTIATE_TEST_SUITE_P(AllSix, MutationEveryMember,
                         ::testing::Values(std::pair{Variant::nonbinary, Parity::even},
                                           std::pair{Variant::nonbinary, Parity::odd},
                                           std::pair{Variant::expanded, Parity::even},
                                           std::pair{Variant::expanded, Parity::odd},
                                           std::pair{Variant::binary, Parity::even},
                                           std::pair{Variant::binary, Parity::odd}),
                         [](const auto& info) {
                           return std::string(to_string(info.param.first)) + "_" +
                                  std::string(to_string(info.param.second));
                         });

TEST(Mutation, Deterministic) {
  const auto family = Family::build(4);
  auto a = family.binary_even;
  auto b = family.binary_even;
  std::mt19937_64 ra(3), rb(3);
  EXPECT_EQ(rewire_random_edge(a, ra).second, rewire_random_edge(b, rb).second);
  EXPECT_EQ(a, b);
}
