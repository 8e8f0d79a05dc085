#pragma once
// Ground-truth model for complete bipartite one-sided matching instances and
// the pure serial-dictatorship execution semantics.

#include <string>
#include <vector>

namespace osm {

// Weights are exact integers; every comparison in the solver is an exact
// equality or order test, so floating point is never used.
using Weight = long long;
using WeightMatrix = std::vector<std::vector<Weight>>;
using RankMatrix = std::vector<std::vector<int>>;

/// An ordering of distinct agents (1-based ids). A full sequence orders all n
/// agents; shorter sequences act as prefixes/subsequences.
class ActionSequence {
 public:
  ActionSequence() = default;
  explicit ActionSequence(std::vector<int> agents);

  /// The ordered set (1, 2, ..., k).
  static ActionSequence first_k(int k);

  int size() const { return static_cast<int>(agents_.size()); }
  bool empty() const { return agents_.empty(); }
  /// Agent at 0-based position.
  int operator[](int pos) const { return agents_[pos]; }
  const std::vector<int>& agents() const { return agents_; }
  bool contains(int agent) const;
  ActionSequence prefix(int length) const;
  /// Appends an agent; throws std::invalid_argument on duplicates or ids < 1.
  void push(int agent);

  bool operator==(const ActionSequence&) const = default;

 private:
  std::vector<int> agents_;
};

/// An injective (possibly partial) assignment of items to agents, 1-based.
class Matching {
 public:
  Matching() = default;
  explicit Matching(int n);

  int n() const { return n_; }
  /// Assigns an item to an agent; throws if either side is already used.
  void assign(int agent, int item);
  bool assigned(int agent) const;
  /// Item matched to the agent, or 0 when unassigned.
  int item_of(int agent) const;
  /// Agent holding the item, or 0 when free.
  int agent_of(int item) const;
  bool is_perfect() const;
  int assigned_count() const { return assigned_count_; }

  bool operator==(const Matching&) const = default;

 private:
  int n_ = 0;
  int assigned_count_ = 0;
  std::vector<int> item_of_agent_;  // index agent-1
  std::vector<int> agent_of_item_;  // index item-1
};

/// Hidden ground truth: n x n nonnegative weights plus one strict rank
/// permutation per agent. rank(i, j) == 1 means item j is agent i's favorite.
/// Ranks refine the weight order: a strictly heavier item always ranks
/// strictly better, and ties are broken by the stored permutation.
class Instance {
 public:
  Instance(WeightMatrix weights, RankMatrix ranks);

  /// Builds ranks from weights: descending weight, lower item index first
  /// among equal weights.
  static Instance with_derived_ranks(WeightMatrix weights);

  int n() const { return n_; }
  Weight weight(int agent, int item) const { return weights_[agent - 1][item - 1]; }
  int rank(int agent, int item) const { return ranks_[agent - 1][item - 1]; }
  /// Item occupying the given rank position for the agent.
  int item_at_rank(int agent, int rank_pos) const { return items_by_rank_[agent - 1][rank_pos - 1]; }

  const WeightMatrix& weights() const { return weights_; }
  const RankMatrix& ranks() const { return ranks_; }

 private:
  int n_ = 0;
  WeightMatrix weights_;
  RankMatrix ranks_;
  RankMatrix items_by_rank_;  // inverse of each rank row; junk for non-bijective rows
};

/// Rank rows derived from weights with the index tie-break.
RankMatrix ranks_from_weights(const WeightMatrix& weights);

/// Returns every violated invariant (empty result means the instance is
/// well formed): non-bijective rank rows, rank/weight inconsistencies and
/// negative weights.
std::vector<std::string> validate(const Instance& instance);

struct PickResult {
  int item = 0;
  Weight value = 0;
  bool operator==(const PickResult&) const = default;
};

/// The greedy pick: the available item with the best (smallest) rank for the
/// agent, together with its true weight. `available` is indexed by item id
/// (size n + 1, slot 0 ignored). Throws when no item is available.
PickResult pick(const Instance& instance, int agent, const std::vector<bool>& available);

/// Runs the full sequence through repeated picks and returns the induced
/// perfect matching. Throws unless `seq` orders all n agents.
Matching execute_sequence(const Instance& instance, const ActionSequence& seq);

/// Total weight of a perfect matching. Throws on partial matchings.
Weight social_welfare(const Instance& instance, const Matching& m);

/// True iff m1 makes every agent weakly better off by rank than m2 and at
/// least one agent strictly better. Only the ranks of `instance` are read.
bool pareto_dominates(const Instance& instance, const Matching& m1, const Matching& m2);

}  // namespace osm
