#include "osm/brute_force.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace osm {

namespace {

void check_guard(int n, int limit, const char* what) {
  if (n > limit)
    throw std::invalid_argument(std::string(what) + ": n = " + std::to_string(n) +
                                " exceeds the exhaustive guard of " + std::to_string(limit));
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be positive");
}

std::vector<int> identity_permutation(int n) {
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  return p;
}

}  // namespace

ExhaustiveReport best_sequence_exhaustive(const Instance& instance) {
  const int n = instance.n();
  check_guard(n, kMaxExhaustiveN, "best_sequence_exhaustive");
  ExhaustiveReport report;
  report.max_matching_weight = max_matching_exhaustive(instance.weights());

  std::vector<int> order = identity_permutation(n);
  std::vector<ActionSequence> optimal;
  bool first = true;
  do {
    const ActionSequence seq{order};
    const Weight welfare = social_welfare(instance, execute_sequence(instance, seq));
    ++report.sequence_welfare_histogram[welfare];
    if (first || welfare > report.best_welfare) {
      report.best_welfare = welfare;
      optimal.clear();
    }
    if (welfare == report.best_welfare) optimal.push_back(seq);
    first = false;
  } while (std::next_permutation(order.begin(), order.end()));
  report.optimal_sequences = std::move(optimal);
  return report;
}

Weight max_matching_exhaustive(const WeightMatrix& weights) {
  const int n = static_cast<int>(weights.size());
  check_guard(n, kMaxExhaustiveN, "max_matching_exhaustive");
  for (const auto& row : weights)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("max_matching_exhaustive: matrix must be square");
  std::vector<int> item_of_agent = identity_permutation(n);
  bool first = true;
  Weight best = 0;
  do {
    Weight total = 0;
    for (int i = 0; i < n; ++i) total += weights[i][item_of_agent[i] - 1];
    if (first || total > best) best = total;
    first = false;
  } while (std::next_permutation(item_of_agent.begin(), item_of_agent.end()));
  return best;
}

std::vector<Matching> pareto_front_exhaustive(const Instance& instance) {
  const int n = instance.n();
  check_guard(n, kMaxParetoN, "pareto_front_exhaustive");

  std::vector<std::vector<int>> assignments;
  std::vector<int> item_of_agent = identity_permutation(n);
  do {
    assignments.push_back(item_of_agent);
  } while (std::next_permutation(item_of_agent.begin(), item_of_agent.end()));

  auto dominates = [&](const std::vector<int>& a, const std::vector<int>& b) {
    bool strict = false;
    for (int i = 1; i <= n; ++i) {
      const int ra = instance.rank(i, a[i - 1]);
      const int rb = instance.rank(i, b[i - 1]);
      if (ra > rb) return false;
      if (ra < rb) strict = true;
    }
    return strict;
  };

  std::vector<Matching> front;
  for (const auto& candidate : assignments) {
    bool dominated = false;
    for (const auto& other : assignments) {
      if (dominates(other, candidate)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      Matching m(n);
      for (int i = 1; i <= n; ++i) m.assign(i, candidate[i - 1]);
      front.push_back(std::move(m));
    }
  }
  return front;
}

}  // namespace osm
