#include "osm/matching.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace osm {

namespace {

constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

// Assignment solver, O(n^3) shortest augmenting paths with potentials.
// Maximizes the total weight; deterministic for a fixed input matrix.
// Rows/columns are 1-based internally, matching the rest of the code.
struct AssignmentValue {
  Weight total = 0;
  std::vector<int> item_of_agent;  // index agent, 1-based; [0] unused
};

AssignmentValue solve_assignment_max(const WeightMatrix& w) {
  const int n = static_cast<int>(w.size());
  // Minimization on negated weights.
  std::vector<Weight> u(static_cast<size_t>(n) + 1, 0), v(static_cast<size_t>(n) + 1, 0);
  std::vector<int> p(static_cast<size_t>(n) + 1, 0), way(static_cast<size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<Weight> minv(static_cast<size_t>(n) + 1, kInf);
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    do {
      used[j0] = true;
      const int i0 = p[j0];
      int j1 = 0;
      Weight delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const Weight cur = -w[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  AssignmentValue out;
  out.item_of_agent.assign(static_cast<size_t>(n) + 1, 0);
  for (int j = 1; j <= n; ++j) {
    out.item_of_agent[p[j]] = j;
    out.total += w[p[j] - 1][j - 1];
  }
  return out;
}

// Best achievable total for the agents not yet fixed, over the items still
// free. Solves the dense subproblem on the remaining rows and columns.
Weight best_remaining(const WeightMatrix& w, const std::vector<bool>& agent_fixed,
                      const std::vector<bool>& item_used) {
  const int n = static_cast<int>(w.size());
  std::vector<int> agents, items;
  for (int i = 1; i <= n; ++i)
    if (!agent_fixed[i]) agents.push_back(i);
  for (int j = 1; j <= n; ++j)
    if (!item_used[j]) items.push_back(j);
  if (agents.empty()) return 0;
  WeightMatrix sub(agents.size(), std::vector<Weight>(items.size()));
  for (size_t a = 0; a < agents.size(); ++a)
    for (size_t b = 0; b < items.size(); ++b) sub[a][b] = w[agents[a] - 1][items[b] - 1];
  return solve_assignment_max(sub).total;
}

// Among maximum-weight matchings, fixes agents 1..n in turn to the smallest
// item index that preserves the optimal total.
Matching lexicographic_optimum(const WeightMatrix& w) {
  const int n = static_cast<int>(w.size());
  const Weight optimum = solve_assignment_max(w).total;
  std::vector<bool> agent_fixed(static_cast<size_t>(n) + 1, false);
  std::vector<bool> item_used(static_cast<size_t>(n) + 1, false);
  Matching m(n);
  Weight fixed_total = 0;
  for (int i = 1; i <= n; ++i) {
    agent_fixed[i] = true;
    bool placed = false;
    for (int j = 1; j <= n && !placed; ++j) {
      if (item_used[j]) continue;
      item_used[j] = true;
      const Weight total = fixed_total + w[i - 1][j - 1] + best_remaining(w, agent_fixed, item_used);
      if (total == optimum) {
        m.assign(i, j);
        fixed_total += w[i - 1][j - 1];
        placed = true;
      } else {
        item_used[j] = false;
      }
    }
    if (!placed) throw std::logic_error("assignment: no item preserves the optimum");
  }
  return m;
}

void check_square(const WeightMatrix& weights) {
  require(!weights.empty(), "weight matrix must be non-empty");
  for (const auto& row : weights)
    require(row.size() == weights.size(), "weight matrix must be square");
}

}  // namespace

ProxyGraph::ProxyGraph(int n)
    : n_(n),
      weights_(static_cast<size_t>(n) * static_cast<size_t>(n), kUnknown),
      ranks_(static_cast<size_t>(n) * static_cast<size_t>(n), 0),
      items_by_rank_(static_cast<size_t>(n) * static_cast<size_t>(n), 0),
      known_(static_cast<size_t>(n) * static_cast<size_t>(n), 0) {
  require(n >= 1, "proxy graph needs at least one agent");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      ranks_[index(i, j)] = j;
      items_by_rank_[index(i, j)] = j;
    }
}

void ProxyGraph::set_row_weight(int agent, Weight w) {
  for (int j = 1; j <= n_; ++j) weights_[index(agent, j)] = w;
}

bool ProxyGraph::all_weights_finite() const {
  return std::find(weights_.begin(), weights_.end(), kUnknown) == weights_.end();
}

WeightMatrix ProxyGraph::weight_matrix() const {
  WeightMatrix out(static_cast<size_t>(n_), std::vector<Weight>(static_cast<size_t>(n_)));
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) out[i - 1][j - 1] = weight(i, j);
  return out;
}

Weight ProxyGraph::matching_weight(const Matching& m) const {
  require(m.n() == n_ && m.is_perfect(), "matching_weight requires a perfect matching");
  Weight total = 0;
  for (int i = 1; i <= n_; ++i) total += weight(i, m.item_of(i));
  return total;
}

void ProxyGraph::swap_ranks(int agent, int item1, int item2) {
  if (item1 == item2) return;
  const int r1 = rank(agent, item1);
  const int r2 = rank(agent, item2);
  ranks_[index(agent, item1)] = r2;
  ranks_[index(agent, item2)] = r1;
  items_by_rank_[index(agent, r1)] = item2;
  items_by_rank_[index(agent, r2)] = item1;
}

void ProxyGraph::set_rank_order(int agent, const std::vector<int>& items_best_first) {
  require(static_cast<int>(items_best_first.size()) == n_, "rank order must list every item");
  for (int pos = 1; pos <= n_; ++pos) {
    const int item = items_best_first[pos - 1];
    ranks_[index(agent, item)] = pos;
    items_by_rank_[index(agent, pos)] = item;
  }
}

bool ProxyGraph::ranks_consistent() const {
  for (int i = 1; i <= n_; ++i)
    for (int pos = 1; pos < n_; ++pos) {
      // Walking items best-first, weights must be non-increasing.
      if (weight(i, item_at_rank(i, pos)) < weight(i, item_at_rank(i, pos + 1))) return false;
    }
  return true;
}

int ProxyGraph::known_count() const {
  return static_cast<int>(std::count(known_.begin(), known_.end(), 1));
}

std::vector<std::pair<int, int>> ProxyGraph::known_edges() const {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (known(i, j)) edges.emplace_back(i, j);
  return edges;
}

Instance ProxyGraph::as_instance() const {
  require(all_weights_finite(), "proxy still has unknown weights");
  RankMatrix ranks(static_cast<size_t>(n_), std::vector<int>(static_cast<size_t>(n_)));
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) ranks[i - 1][j - 1] = rank(i, j);
  return Instance(weight_matrix(), std::move(ranks));
}

Weight compute_epsilon(const ProxyGraph& proxy) {
  require(proxy.all_weights_finite(), "compute_epsilon requires all weights finite");
  const int n = proxy.n();
  Weight epsilon = 0;
  for (int i = 1; i <= n; ++i) {
    std::vector<Weight> row(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) row[j - 1] = proxy.weight(i, j);
    std::sort(row.begin(), row.end());
    for (int k = 1; k < n; ++k) {
      const Weight diff = row[k] - row[k - 1];
      if (diff > 0 && (epsilon == 0 || diff < epsilon)) epsilon = diff;
    }
  }
  return epsilon == 0 ? 1 : epsilon;
}

PerturbedWeights perturb(const ProxyGraph& proxy, Weight epsilon) {
  require(proxy.all_weights_finite(), "perturb requires all weights finite");
  require(epsilon >= 1, "epsilon must be positive");
  const int n = proxy.n();
  const Weight denom = static_cast<Weight>(n) * static_cast<Weight>(n);
  PerturbedWeights out;
  out.n = n;
  out.epsilon = epsilon;
  out.denominator = denom;
  out.numerators.assign(static_cast<size_t>(n), std::vector<Weight>(static_cast<size_t>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      out.numerators[i - 1][j - 1] =
          denom * proxy.weight(i, j) + static_cast<Weight>(n - proxy.rank(i, j)) * epsilon;
    }
  return out;
}

Matching max_weight_perfect_matching(const WeightMatrix& weights) {
  check_square(weights);
  return lexicographic_optimum(weights);
}

std::optional<Matching> max_weight_matching_restricted(
    const WeightMatrix& weights, const std::vector<std::pair<int, int>>& allowed) {
  check_square(weights);
  const int n = static_cast<int>(weights.size());
  std::vector<std::vector<bool>> mask(static_cast<size_t>(n),
                                      std::vector<bool>(static_cast<size_t>(n), false));
  for (const auto& [agent, item] : allowed) {
    require(agent >= 1 && agent <= n && item >= 1 && item <= n, "allowed edge out of range");
    mask[agent - 1][item - 1] = true;
  }
  Weight max_abs = 1;
  for (const auto& row : weights)
    for (Weight x : row) max_abs = std::max(max_abs, std::abs(x));
  // Any matching through a forbidden edge scores below every allowed one.
  const Weight penalty = -(static_cast<Weight>(n) * max_abs * 2 + 1);
  WeightMatrix penalized = weights;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!mask[i][j]) penalized[i][j] = penalty;
  Matching m = lexicographic_optimum(penalized);
  for (int i = 1; i <= n; ++i)
    if (!mask[i - 1][m.item_of(i) - 1]) return std::nullopt;
  return m;
}

MwpoResult mwpo(const ProxyGraph& proxy) {
  if (!proxy.ranks_consistent())
    throw std::logic_error("mwpo: proxy ranks are inconsistent with proxy weights");
  // Unit rank adjustment: scaling weights by n^2 keeps any weight difference
  // (at least 1 for integer weights) above the largest possible total rank
  // adjustment (at most n(n-1)), so the score optimum is exactly the
  // lexicographic (total weight, then rank quality) optimum.
  const PerturbedWeights scores = perturb(proxy, 1);
  Matching m = max_weight_perfect_matching(scores.numerators);
  ActionSequence sequence = extract_sequence(proxy, m);
  return {std::move(m), std::move(sequence)};
}

ActionSequence extract_sequence(const ProxyGraph& proxy, const Matching& m) {
  const int n = proxy.n();
  require(m.n() == n && m.is_perfect(), "extract_sequence requires a perfect matching");
  std::vector<bool> item_available(static_cast<size_t>(n) + 1, true);
  std::vector<bool> agent_done(static_cast<size_t>(n) + 1, false);
  ActionSequence sequence;
  for (int step = 0; step < n; ++step) {
    int chosen = 0;
    for (int i = 1; i <= n && chosen == 0; ++i) {
      if (agent_done[i]) continue;
      for (int pos = 1; pos <= n; ++pos) {
        const int item = proxy.item_at_rank(i, pos);
        if (!item_available[item]) continue;
        if (item == m.item_of(i)) chosen = i;
        break;
      }
    }
    if (chosen == 0)
      throw std::logic_error(
          "extract_sequence: no agent is matched to its best remaining item; "
          "the matching is not a maximum-weight Pareto-optimal matching");
    sequence.push(chosen);
    agent_done[chosen] = true;
    item_available[m.item_of(chosen)] = false;
  }
  return sequence;
}

}  // namespace osm
