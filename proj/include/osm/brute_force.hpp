#pragma once
// Exhaustive oracles for small n: every test that matters checks the solver
// against these, never the other way around.

#include <map>
#include <vector>

#include "osm/instance.hpp"

namespace osm {

inline constexpr int kMaxExhaustiveN = 8;
inline constexpr int kMaxParetoN = 7;

struct ExhaustiveReport {
  Weight best_welfare = 0;
  std::vector<ActionSequence> optimal_sequences;  // lexicographic order
  Weight max_matching_weight = 0;
  std::map<Weight, long long> sequence_welfare_histogram;
};

/// Evaluates every one of the n! action sequences. Throws above n = 8.
ExhaustiveReport best_sequence_exhaustive(const Instance& instance);

/// Maximum total weight over all n! perfect matchings. Throws above n = 8.
Weight max_matching_exhaustive(const WeightMatrix& weights);

/// All perfect matchings not Pareto-dominated under the instance's ranks,
/// in lexicographic assignment order. Throws above n = 7.
std::vector<Matching> pareto_front_exhaustive(const Instance& instance);

}  // namespace osm
