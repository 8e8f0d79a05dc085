#pragma once
// Shared test utilities: random instances and proxies, the potential triple
// and an instrumented observer that audits every learner run against the
// hidden instance. Lives in the test tree only; the library never sees
// hidden truth outside the oracle.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "osm/instance.hpp"
#include "osm/learner.hpp"
#include "osm/matching.hpp"

namespace osm::test {

/// The two-agent instance used throughout: agent 1 values items (9, 1),
/// agent 2 values them (10, 8). Acting order (1, 2) reaches welfare 17,
/// the reverse order only 11.
inline Instance example_2x2() { return Instance::with_derived_ranks({{9, 1}, {10, 8}}); }

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Random instance with a tunable amount of ties (smaller pool = more ties).
inline Instance random_instance(std::mt19937_64& rng, int n, Weight pool_max) {
  WeightMatrix w(static_cast<size_t>(n), std::vector<Weight>(static_cast<size_t>(n)));
  for (auto& row : w)
    for (auto& x : row) x = uniform_int(rng, 0, static_cast<int>(pool_max));
  return Instance::with_derived_ranks(std::move(w));
}

/// Random instance whose rank rows break ties in random (agent-specific)
/// order instead of the index default.
inline Instance random_instance_random_ties(std::mt19937_64& rng, int n, Weight pool_max) {
  WeightMatrix w(static_cast<size_t>(n), std::vector<Weight>(static_cast<size_t>(n)));
  for (auto& row : w)
    for (auto& x : row) x = uniform_int(rng, 0, static_cast<int>(pool_max));
  RankMatrix ranks(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) {
    std::vector<int> items(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) items[static_cast<size_t>(j)] = j + 1;
    std::shuffle(items.begin(), items.end(), rng);
    std::stable_sort(items.begin(), items.end(),
                     [&](int a, int b) { return w[i][a - 1] > w[i][b - 1]; });
    for (int pos = 0; pos < n; ++pos) ranks[i][items[static_cast<size_t>(pos)] - 1] = pos + 1;
  }
  return Instance(std::move(w), std::move(ranks));
}

/// Fully known proxy with random weights, random consistent rank orders and
/// every edge marked known. Good enough for MWPO-level tests.
inline ProxyGraph random_proxy(std::mt19937_64& rng, int n, Weight pool_max) {
  const Instance inst = random_instance_random_ties(rng, n, pool_max);
  ProxyGraph proxy(n);
  for (int i = 1; i <= n; ++i) {
    std::vector<int> order(static_cast<size_t>(n));
    for (int r = 1; r <= n; ++r) order[static_cast<size_t>(r - 1)] = inst.item_at_rank(i, r);
    proxy.set_rank_order(i, order);
    for (int j = 1; j <= n; ++j) {
      proxy.set_weight(i, j, inst.weight(i, j));
      proxy.mark_known(i, j);
    }
  }
  return proxy;
}

struct PotentialTriple {
  long long known = 0;
  Weight weight_gap = 0;   // sum of w' - w over all edges
  long long rank_gap = 0;  // sum of |r' - r| over all agents and items
};

inline PotentialTriple potential(const ProxyGraph& proxy, const Instance& hidden) {
  PotentialTriple t;
  t.known = proxy.known_count();
  for (int i = 1; i <= hidden.n(); ++i)
    for (int j = 1; j <= hidden.n(); ++j) {
      t.weight_gap += proxy.weight(i, j) - hidden.weight(i, j);
      t.rank_gap += std::abs(proxy.rank(i, j) - hidden.rank(i, j));
    }
  return t;
}

inline long long agent_rank_gap(const ProxyGraph& proxy, const Instance& hidden, int agent) {
  long long gap = 0;
  for (int j = 1; j <= hidden.n(); ++j)
    gap += std::abs(proxy.rank(agent, j) - hidden.rank(agent, j));
  return gap;
}

/// Number of item pairs ordered one way by the proxy ranks and the other way
/// by the true ranks. A discordant-pair swap always lowers this strictly,
/// which is what actually drives the C4 case to terminate.
inline long long agent_inversions(const ProxyGraph& proxy, const Instance& hidden, int agent) {
  long long inversions = 0;
  for (int a = 1; a <= hidden.n(); ++a)
    for (int b = a + 1; b <= hidden.n(); ++b) {
      const bool proxy_before = proxy.rank(agent, a) < proxy.rank(agent, b);
      const bool true_before = hidden.rank(agent, a) < hidden.rank(agent, b);
      if (proxy_before != true_before) ++inversions;
    }
  return inversions;
}

/// Audits a learner run against the hidden instance: the over-estimation
/// invariant after every mutation, the exactly-one-case classification with
/// availability of the matched item, per-iteration potential progress and the
/// derived update caps. Violations are collected, not thrown, so a test can
/// report all of them.
class InstrumentedObserver : public LearnerObserver {
 public:
  explicit InstrumentedObserver(const Instance& hidden) : hidden_(hidden) {}

  // Violation buckets, one per audited property family. The L1 bucket checks
  // the literal per-iteration progress disjunction over |E*|, the weight gap
  // and the L1 rank distance; C4 swaps can leave the L1 distance unchanged
  // (both true ranks on one side of the swapped positions), so that bucket is
  // reported separately from the implementation-level ones.
  std::vector<std::string> overestimation_violations;
  std::vector<std::string> classification_violations;
  std::vector<std::string> l1_progress_violations;
  std::vector<std::string> inversion_progress_violations;
  std::vector<std::string> cap_violations;
  long long iterations = 0;
  long long l1_stalled_c4_iterations = 0;

  /// Everything except the L1 strictness bucket.
  std::vector<std::string> implementation_violations() const {
    std::vector<std::string> all = overestimation_violations;
    all.insert(all.end(), classification_violations.begin(), classification_violations.end());
    all.insert(all.end(), inversion_progress_violations.begin(),
               inversion_progress_violations.end());
    all.insert(all.end(), cap_violations.begin(), cap_violations.end());
    return all;
  }

  std::vector<std::string> all_violations() const {
    std::vector<std::string> all = implementation_violations();
    all.insert(all.end(), l1_progress_violations.begin(), l1_progress_violations.end());
    return all;
  }

  void after_mutation(const ProxyGraph& proxy) override {
    check_overestimation(proxy);
    track_weight_updates(proxy);
  }

  void phase1_complete(const ProxyGraph& proxy) override {
    // Weight-update counting starts here; the phase-1 row fills are the
    // initial values, not updates.
    baseline_ = snapshot(proxy);
    update_count_.assign(baseline_.size(), 0);
    counting_ = true;
  }

  void phases_complete(const ProxyGraph& proxy, const Matching& m_star, const Matching& m_prime,
                       const ActionSequence& pi) override {
    has_prev_ = true;
    prev_proxy_ = proxy;
    prev_m_star_ = m_star;
    prev_m_prime_ = m_prime;
    prev_pi_ = pi;
  }

  void iteration_complete(const TraceEvent& ev, const ProxyGraph& proxy, const Matching& m_star,
                          const Matching& m_prime, const ActionSequence& pi) override {
    ++iterations;
    if (!has_prev_) {
      classification_violations.push_back("iteration before phases completed");
      return;
    }
    check_classification(ev);
    check_progress(ev, proxy);
    check_caps(proxy);
    prev_proxy_ = proxy;
    prev_m_star_ = m_star;
    prev_m_prime_ = m_prime;
    prev_pi_ = pi;
  }

  long long max_edge_updates() const {
    long long best = 0;
    for (long long c : update_count_) best = std::max(best, c);
    return best;
  }

 private:
  std::vector<Weight> snapshot(const ProxyGraph& proxy) const {
    std::vector<Weight> w;
    w.reserve(static_cast<size_t>(hidden_.n()) * static_cast<size_t>(hidden_.n()));
    for (int i = 1; i <= hidden_.n(); ++i)
      for (int j = 1; j <= hidden_.n(); ++j) w.push_back(proxy.weight(i, j));
    return w;
  }

  void check_overestimation(const ProxyGraph& proxy) {
    for (int i = 1; i <= hidden_.n(); ++i)
      for (int j = 1; j <= hidden_.n(); ++j) {
        const Weight pw = proxy.weight(i, j);
        if (pw < hidden_.weight(i, j))
          overestimation_violations.push_back("proxy weight below truth at (" + std::to_string(i) +
                                              "," + std::to_string(j) + ")");
        if (proxy.known(i, j) && pw != hidden_.weight(i, j))
          overestimation_violations.push_back("known edge with wrong weight at (" +
                                              std::to_string(i) + "," + std::to_string(j) + ")");
      }
  }

  void track_weight_updates(const ProxyGraph& proxy) {
    if (!counting_) return;
    const std::vector<Weight> now = snapshot(proxy);
    for (size_t k = 0; k < now.size(); ++k) {
      if (now[k] != baseline_[k]) {
        ++update_count_[k];
        if (update_count_[k] > hidden_.n())
          cap_violations.push_back("edge weight updated more than n times");
      }
    }
    baseline_ = now;
  }

  void check_classification(const TraceEvent& ev) {
    switch (ev.kind) {
      case CaseKind::kC1Return:
        return;
      case CaseKind::kC2NewEdge:
        if (prev_proxy_.known(ev.agent, ev.item))
          classification_violations.push_back("C2 event on an already known edge");
        return;
      case CaseKind::kC3WeightDrop:
      case CaseKind::kC4RankSwap: {
        if (!prev_proxy_.known(ev.agent, ev.item)) {
          classification_violations.push_back("C3/C4 event on an unknown edge");
          return;
        }
        if (prev_m_prime_.item_of(ev.agent) == ev.item) {
          classification_violations.push_back("C3/C4 event on an edge inside M'");
          return;
        }
        const Weight matched = prev_proxy_.weight(ev.agent, ev.matched_item);
        if (ev.kind == CaseKind::kC3WeightDrop && !(ev.value < matched))
          classification_violations.push_back("C3 event without a strictly smaller value");
        if (ev.kind == CaseKind::kC4RankSwap && ev.value != matched)
          classification_violations.push_back("C4 event without an equal value");
        // Availability of the matched item at the acting agent's turn:
        // replay the prefix of the previous sequence in the hidden instance.
        std::vector<bool> available(static_cast<size_t>(hidden_.n()) + 1, true);
        for (int pos = 1; pos < ev.position; ++pos) {
          const PickResult p = pick(hidden_, prev_pi_[pos - 1], available);
          available[p.item] = false;
        }
        if (!available[ev.matched_item])
          classification_violations.push_back("matched item already taken at the acting agent's turn");
        return;
      }
    }
  }

  void check_progress(const TraceEvent& ev, const ProxyGraph& proxy) {
    if (ev.kind == CaseKind::kC1Return) return;
    const bool known_grew = proxy.known_count() > prev_proxy_.known_count();
    bool weight_gap_shrank = false;
    if (ev.matched_item != 0) {
      const Weight before =
          prev_proxy_.weight(ev.agent, ev.matched_item) - hidden_.weight(ev.agent, ev.matched_item);
      const Weight after =
          proxy.weight(ev.agent, ev.matched_item) - hidden_.weight(ev.agent, ev.matched_item);
      weight_gap_shrank = after < before;
    }
    const bool rank_gap_shrank =
        agent_rank_gap(proxy, hidden_, ev.agent) < agent_rank_gap(prev_proxy_, hidden_, ev.agent);
    if (!known_grew && !weight_gap_shrank && !rank_gap_shrank) {
      l1_progress_violations.push_back("iteration " + std::to_string(ev.iteration) + " (" +
                                       case_label(ev.kind) + ") made no L1 potential progress");
      if (ev.kind == CaseKind::kC4RankSwap) ++l1_stalled_c4_iterations;
    }
    const bool inversions_shrank = agent_inversions(proxy, hidden_, ev.agent) <
                                   agent_inversions(prev_proxy_, hidden_, ev.agent);
    if (!known_grew && !weight_gap_shrank && !inversions_shrank)
      inversion_progress_violations.push_back("iteration " + std::to_string(ev.iteration) + " (" +
                                              case_label(ev.kind) +
                                              ") made no progress in any component");
  }

  void check_caps(const ProxyGraph& proxy) {
    const int n = hidden_.n();
    if (proxy.known_count() > n * n)
      cap_violations.push_back("known edge count above n^2");
    for (int i = 1; i <= n; ++i)
      if (agent_rank_gap(proxy, hidden_, i) > static_cast<long long>(n) * n)
        cap_violations.push_back("agent rank distance above n^2");
  }

  const Instance& hidden_;
  bool counting_ = false;
  bool has_prev_ = false;
  std::vector<Weight> baseline_;
  std::vector<long long> update_count_;
  ProxyGraph prev_proxy_{1};
  Matching prev_m_star_{1};
  Matching prev_m_prime_{1};
  ActionSequence prev_pi_;
};

}  // namespace osm::test
