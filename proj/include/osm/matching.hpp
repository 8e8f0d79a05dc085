#pragma once
// Exact maximum-weight matching, restricted-edge matching and the MWPO
// subroutine: a maximum-weight Pareto-optimal matching of a proxy graph plus
// the action sequence that greedily induces it.

#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "osm/instance.hpp"

namespace osm {

/// The learner's model of the hidden instance: over-estimating proxy weights
/// w', one rank permutation r' per agent kept consistent with w' (strictly
/// heavier implies strictly better ranked), and the set of edges whose true
/// weight has been learned.
class ProxyGraph {
 public:
  /// Proxy weight of edges that no query has touched yet.
  static constexpr Weight kUnknown = std::numeric_limits<Weight>::max();

  explicit ProxyGraph(int n);

  int n() const { return n_; }

  Weight weight(int agent, int item) const { return weights_[index(agent, item)]; }
  void set_weight(int agent, int item, Weight w) { weights_[index(agent, item)] = w; }
  void set_row_weight(int agent, Weight w);
  bool all_weights_finite() const;
  WeightMatrix weight_matrix() const;
  /// Sum of proxy weights over a perfect matching.
  Weight matching_weight(const Matching& m) const;

  int rank(int agent, int item) const { return ranks_[index(agent, item)]; }
  int item_at_rank(int agent, int rank_pos) const { return items_by_rank_[index(agent, rank_pos)]; }
  void swap_ranks(int agent, int item1, int item2);
  /// Reassigns the agent's ranks 1..n following the given item order.
  void set_rank_order(int agent, const std::vector<int>& items_best_first);
  /// Monotonicity check: heavier strictly implies better ranked, everywhere.
  bool ranks_consistent() const;

  void mark_known(int agent, int item) { known_[index(agent, item)] = true; }
  bool known(int agent, int item) const { return known_[index(agent, item)]; }
  int known_count() const;
  std::vector<std::pair<int, int>> known_edges() const;

  /// Snapshot of (w', r') as an Instance; requires all weights finite.
  Instance as_instance() const;

 private:
  size_t index(int agent, int item_or_rank) const {
    return static_cast<size_t>(agent - 1) * static_cast<size_t>(n_) +
           static_cast<size_t>(item_or_rank - 1);
  }

  int n_ = 0;
  std::vector<Weight> weights_;
  std::vector<int> ranks_;          // ranks_[i][j] = rank of item j for agent i
  std::vector<int> items_by_rank_;  // inverse permutation per agent
  std::vector<char> known_;
};

/// Minimum nonzero |w'(i,j1) - w'(i,j2)| over all agents; rows without any
/// nonzero difference contribute nothing, and the result falls back to 1 when
/// every row is constant. Requires all proxy weights finite.
Weight compute_epsilon(const ProxyGraph& proxy);

/// Rank-perturbed weights w''(i,j) = w'(i,j) + (n - r'_i(j)) / n^2 * epsilon,
/// held exactly as integer numerators over the common denominator n^2. Within
/// every row the w'' order is strict and equals the (w' descending, r'
/// ascending) order; any epsilon in [1, compute_epsilon(proxy)] keeps that
/// property for integer weights.
struct PerturbedWeights {
  int n = 0;
  Weight epsilon = 0;
  Weight denominator = 0;
  WeightMatrix numerators;
};

PerturbedWeights perturb(const ProxyGraph& proxy, Weight epsilon);

/// A perfect matching of maximum total weight. Deterministic: among optima it
/// returns the one whose assignment vector (item of agent 1, 2, ...) is
/// lexicographically smallest. Throws on non-square input.
Matching max_weight_perfect_matching(const WeightMatrix& weights);

/// Maximum-weight perfect matching using only the allowed edges, or nullopt
/// when they admit no perfect matching. Same tie-break as above.
std::optional<Matching> max_weight_matching_restricted(
    const WeightMatrix& weights, const std::vector<std::pair<int, int>>& allowed);

struct MwpoResult {
  Matching matching;
  ActionSequence sequence;
};

/// Maximum-weight Pareto-optimal matching of (w', r') and an action sequence
/// that reproduces it under greedy proxy picks. Requires consistent ranks.
MwpoResult mwpo(const ProxyGraph& proxy);

/// The sequence inducing `m` in the proxy graph: at each step the lowest
/// indexed remaining agent whose matched item is their best-ranked remaining
/// item acts next. Throws when no such agent exists, which signals that `m`
/// is not a maximum-weight Pareto-optimal matching.
ActionSequence extract_sequence(const ProxyGraph& proxy, const Matching& m);

}  // namespace osm
