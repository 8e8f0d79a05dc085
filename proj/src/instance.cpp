#include "osm/instance.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace osm {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

ActionSequence::ActionSequence(std::vector<int> agents) {
  agents_.reserve(agents.size());
  for (int a : agents) push(a);
}

ActionSequence ActionSequence::first_k(int k) {
  std::vector<int> ids(static_cast<size_t>(std::max(k, 0)));
  std::iota(ids.begin(), ids.end(), 1);
  return ActionSequence(std::move(ids));
}

bool ActionSequence::contains(int agent) const {
  return std::find(agents_.begin(), agents_.end(), agent) != agents_.end();
}

ActionSequence ActionSequence::prefix(int length) const {
  require(length >= 0 && length <= size(), "prefix length out of range");
  ActionSequence out;
  out.agents_.assign(agents_.begin(), agents_.begin() + length);
  return out;
}

void ActionSequence::push(int agent) {
  require(agent >= 1, "agent ids are 1-based");
  require(!contains(agent), "duplicate agent in action sequence");
  agents_.push_back(agent);
}

Matching::Matching(int n) : n_(n), item_of_agent_(n, 0), agent_of_item_(n, 0) {
  require(n >= 1, "matching size must be positive");
}

void Matching::assign(int agent, int item) {
  require(agent >= 1 && agent <= n_, "agent out of range");
  require(item >= 1 && item <= n_, "item out of range");
  require(item_of_agent_[agent - 1] == 0, "agent already assigned");
  require(agent_of_item_[item - 1] == 0, "item already assigned");
  item_of_agent_[agent - 1] = item;
  agent_of_item_[item - 1] = agent;
  ++assigned_count_;
}

bool Matching::assigned(int agent) const { return item_of_agent_[agent - 1] != 0; }

int Matching::item_of(int agent) const { return item_of_agent_[agent - 1]; }

int Matching::agent_of(int item) const { return agent_of_item_[item - 1]; }

bool Matching::is_perfect() const { return n_ >= 1 && assigned_count_ == n_; }

Instance::Instance(WeightMatrix weights, RankMatrix ranks)
    : n_(static_cast<int>(weights.size())),
      weights_(std::move(weights)),
      ranks_(std::move(ranks)) {
  require(n_ >= 1, "instance needs at least one agent");
  require(static_cast<int>(ranks_.size()) == n_, "rank table size must match weights");
  for (const auto& row : weights_)
    require(static_cast<int>(row.size()) == n_, "weight matrix must be square");
  for (const auto& row : ranks_)
    require(static_cast<int>(row.size()) == n_, "rank matrix must be square");

  // Inverse rank rows; rows that are not permutations leave gaps that
  // validate() reports.
  items_by_rank_.assign(n_, std::vector<int>(n_, 0));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const int r = ranks_[i][j];
      if (r >= 1 && r <= n_ && items_by_rank_[i][r - 1] == 0) items_by_rank_[i][r - 1] = j + 1;
    }
  }
}

Instance Instance::with_derived_ranks(WeightMatrix weights) {
  RankMatrix ranks = ranks_from_weights(weights);
  return Instance(std::move(weights), std::move(ranks));
}

RankMatrix ranks_from_weights(const WeightMatrix& weights) {
  const int n = static_cast<int>(weights.size());
  RankMatrix ranks(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    std::vector<int> items(static_cast<size_t>(n));
    std::iota(items.begin(), items.end(), 1);
    std::stable_sort(items.begin(), items.end(), [&](int a, int b) {
      return weights[i][a - 1] > weights[i][b - 1];
    });
    for (int pos = 0; pos < n; ++pos) ranks[i][items[pos] - 1] = pos + 1;
  }
  return ranks;
}

std::vector<std::string> validate(const Instance& instance) {
  std::vector<std::string> violations;
  const int n = instance.n();
  for (int i = 1; i <= n; ++i) {
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    bool bijective = true;
    for (int j = 1; j <= n; ++j) {
      const int r = instance.rank(i, j);
      if (r < 1 || r > n || seen[r]) {
        bijective = false;
        break;
      }
      seen[r] = true;
    }
    if (!bijective) {
      violations.push_back("rank not bijective: agent " + std::to_string(i));
      continue;  // rank comparisons for this agent would be meaningless
    }
    for (int j1 = 1; j1 <= n; ++j1) {
      bool reported = false;
      for (int j2 = 1; j2 <= n && !reported; ++j2) {
        if (instance.weight(i, j1) > instance.weight(i, j2) &&
            instance.rank(i, j1) >= instance.rank(i, j2)) {
          violations.push_back("rank inconsistent with weights: agent " + std::to_string(i) +
                               ", items " + std::to_string(j1) + " and " + std::to_string(j2));
          reported = true;
        }
      }
      if (reported) break;
    }
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (instance.weight(i, j) < 0) {
        violations.push_back("negative weight: agent " + std::to_string(i) + ", item " +
                             std::to_string(j));
      }
  return violations;
}

PickResult pick(const Instance& instance, int agent, const std::vector<bool>& available) {
  const int n = instance.n();
  require(agent >= 1 && agent <= n, "agent out of range");
  require(static_cast<int>(available.size()) == n + 1, "available mask must have size n + 1");
  for (int pos = 1; pos <= n; ++pos) {
    const int item = instance.item_at_rank(agent, pos);
    if (item >= 1 && available[item]) return {item, instance.weight(agent, item)};
  }
  throw std::invalid_argument("pick: no item available");
}

Matching execute_sequence(const Instance& instance, const ActionSequence& seq) {
  const int n = instance.n();
  require(seq.size() == n, "execute_sequence needs a full action sequence");
  for (int a : seq.agents()) require(a >= 1 && a <= n, "agent out of range in sequence");
  Matching m(n);
  std::vector<bool> available(static_cast<size_t>(n) + 1, true);
  for (int a : seq.agents()) {
    const PickResult p = pick(instance, a, available);
    available[p.item] = false;
    m.assign(a, p.item);
  }
  return m;
}

Weight social_welfare(const Instance& instance, const Matching& m) {
  require(m.n() == instance.n(), "matching size mismatch");
  require(m.is_perfect(), "social welfare requires a perfect matching");
  Weight total = 0;
  for (int i = 1; i <= instance.n(); ++i) total += instance.weight(i, m.item_of(i));
  return total;
}

bool pareto_dominates(const Instance& instance, const Matching& m1, const Matching& m2) {
  require(m1.n() == instance.n() && m2.n() == instance.n(), "matching size mismatch");
  require(m1.is_perfect() && m2.is_perfect(), "pareto comparison requires perfect matchings");
  bool strict = false;
  for (int i = 1; i <= instance.n(); ++i) {
    const int r1 = instance.rank(i, m1.item_of(i));
    const int r2 = instance.rank(i, m2.item_of(i));
    if (r1 > r2) return false;
    if (r1 < r2) strict = true;
  }
  return strict;
}

}  // namespace osm
