#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "osm/brute_force.hpp"
#include "osm/matching.hpp"
#include "support.hpp"

using namespace osm;
using test::example_2x2;

TEST_CASE("exhaustive report on the worked example") {
  const ExhaustiveReport report = best_sequence_exhaustive(example_2x2());
  CHECK(report.best_welfare == 17);
  CHECK(report.max_matching_weight == 17);
  REQUIRE(report.optimal_sequences.size() == 1);
  CHECK(report.optimal_sequences[0] == ActionSequence({1, 2}));
  REQUIRE(report.sequence_welfare_histogram.size() == 2);
  CHECK(report.sequence_welfare_histogram.at(17) == 1);
  CHECK(report.sequence_welfare_histogram.at(11) == 1);
}

TEST_CASE("all-equal weights make every sequence optimal") {
  const Instance inst = Instance::with_derived_ranks(WeightMatrix(4, std::vector<Weight>(4, 6)));
  const ExhaustiveReport report = best_sequence_exhaustive(inst);
  CHECK(report.best_welfare == 24);
  CHECK(report.optimal_sequences.size() == 24);  // 4!
  CHECK(report.sequence_welfare_histogram.size() == 1);
  CHECK(report.sequence_welfare_histogram.at(24) == 24);
}

TEST_CASE("best sequence welfare equals the max matching weight") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const Instance inst = test::random_instance_random_ties(rng, 4, 9);
    const ExhaustiveReport report = best_sequence_exhaustive(inst);
    CHECK(report.best_welfare == report.max_matching_weight);
    for (const auto& [welfare, count] : report.sequence_welfare_histogram) {
      CHECK(welfare <= report.max_matching_weight);
      CHECK(count > 0);
    }
  }
}

TEST_CASE("optimal sequences come out in lexicographic order and achieve the best welfare") {
  std::mt19937_64 rng(73);
  const Instance inst = test::random_instance(rng, 4, 2);
  const ExhaustiveReport report = best_sequence_exhaustive(inst);
  REQUIRE(!report.optimal_sequences.empty());
  for (size_t k = 1; k < report.optimal_sequences.size(); ++k)
    CHECK(report.optimal_sequences[k - 1].agents() < report.optimal_sequences[k].agents());
  for (const ActionSequence& seq : report.optimal_sequences)
    CHECK(social_welfare(inst, execute_sequence(inst, seq)) == report.best_welfare);
}

TEST_CASE("exhaustive max matching on the worked example") {
  CHECK(max_matching_exhaustive({{9, 1}, {10, 8}}) == 17);
}

TEST_CASE("diagonal-dominant matrix traces the diagonal") {
  CHECK(max_matching_exhaustive({{9, 0, 0}, {0, 9, 0}, {0, 0, 9}}) == 27);
}

TEST_CASE("exhaustive max matching agrees with the solver") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 40; ++trial) {
    WeightMatrix w(5, std::vector<Weight>(5));
    for (auto& row : w)
      for (auto& x : row) x = test::uniform_int(rng, 0, 30);
    const Matching m = max_weight_perfect_matching(w);
    Weight total = 0;
    for (int i = 1; i <= 5; ++i) total += w[i - 1][m.item_of(i) - 1];
    CHECK(max_matching_exhaustive(w) == total);
  }
}

TEST_CASE("size guards") {
  const Instance big = Instance::with_derived_ranks(WeightMatrix(9, std::vector<Weight>(9, 1)));
  CHECK_THROWS_AS(best_sequence_exhaustive(big), std::invalid_argument);
  CHECK_THROWS_AS(max_matching_exhaustive(WeightMatrix(9, std::vector<Weight>(9, 1))),
                  std::invalid_argument);
  const Instance mid = Instance::with_derived_ranks(WeightMatrix(8, std::vector<Weight>(8, 1)));
  CHECK_THROWS_AS(pareto_front_exhaustive(mid), std::invalid_argument);
}

TEST_CASE("pareto front of a single agent") {
  const Instance inst = Instance::with_derived_ranks({{3}});
  const auto front = pareto_front_exhaustive(inst);
  REQUIRE(front.size() == 1);
  CHECK(front[0].item_of(1) == 1);
}

TEST_CASE("pareto front of the worked example holds both matchings") {
  // Both agents rank item 1 first, so each matching favors one agent:
  // neither dominates the other.
  const auto front = pareto_front_exhaustive(example_2x2());
  CHECK(front.size() == 2);
}

TEST_CASE("pareto front excludes dominated matchings") {
  // Distinct favorites: only the top-choice matching is undominated.
  const Instance inst = Instance::with_derived_ranks({{5, 3}, {2, 6}});
  const auto front = pareto_front_exhaustive(inst);
  REQUIRE(front.size() == 1);
  CHECK(front[0].item_of(1) == 1);
  CHECK(front[0].item_of(2) == 2);
}

TEST_CASE("front members are mutually undominated and cover all undominated matchings") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = test::uniform_int(rng, 2, 5);
    const Instance inst = test::random_instance_random_ties(rng, n, 3);
    const auto front = pareto_front_exhaustive(inst);
    REQUIRE(!front.empty());
    for (const Matching& a : front)
      for (const Matching& b : front) CHECK_FALSE(pareto_dominates(inst, a, b));
  }
}

TEST_CASE("mwpo result always lies on the pareto front") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = test::uniform_int(rng, 2, 5);
    const ProxyGraph proxy = test::random_proxy(rng, n, 3);
    const MwpoResult r = mwpo(proxy);
    bool found = false;
    for (const Matching& po : pareto_front_exhaustive(proxy.as_instance()))
      if (po == r.matching) found = true;
    CHECK(found);
  }
}
