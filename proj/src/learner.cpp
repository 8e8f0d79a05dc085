#include "osm/learner.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace osm {

namespace {

void notify_mutation(LearnerObserver* observer, const ProxyGraph& proxy) {
  if (observer) observer->after_mutation(proxy);
}

void check_budget(const QueryOracle& oracle, long long budget) {
  if (oracle.query_count() > budget)
    throw std::logic_error("query budget exceeded: " + std::to_string(oracle.query_count()) +
                           " > " + std::to_string(budget));
}

Matching recompute_m_star(const ProxyGraph& proxy) {
  auto m = max_weight_matching_restricted(proxy.weight_matrix(), proxy.known_edges());
  if (!m) throw std::logic_error("known edges lost their perfect matching");
  return std::move(*m);
}

}  // namespace

const char* case_label(CaseKind kind) {
  switch (kind) {
    case CaseKind::kC1Return: return "C1-return";
    case CaseKind::kC2NewEdge: return "C2-new-edge";
    case CaseKind::kC3WeightDrop: return "C3-weight-drop";
    case CaseKind::kC4RankSwap: return "C4-rank-swap";
  }
  return "unknown";
}

long long query_budget(int n) {
  long long b = 1;
  for (int k = 0; k < 5; ++k) b *= n;
  return b;
}

ProxyGraph phase1(QueryOracle& oracle, LearnerObserver* observer) {
  const int n = oracle.n();
  if (n < 1) throw std::invalid_argument("oracle reports a non-positive n");
  ProxyGraph proxy(n);
  for (int i = 1; i <= n; ++i) {
    const QueryResponse r = oracle.query(i, ActionSequence());
    proxy.set_row_weight(i, r.value);
    proxy.mark_known(i, r.item);
    proxy.swap_ranks(i, r.item, proxy.item_at_rank(i, 1));
    notify_mutation(observer, proxy);
  }
  return proxy;
}

void phase2(QueryOracle& oracle, ProxyGraph& proxy, LearnerObserver* observer) {
  const int n = oracle.n();
  for (int i = 2; i <= n; ++i) {
    // The whole row still sits at the phase-1 value; capture it before the
    // write so the tie test below compares against the known top value.
    const Weight top_value = proxy.weight(i, 1);
    const QueryResponse r = oracle.query(i, ActionSequence::first_k(i - 1));
    proxy.set_weight(i, r.item, r.value);
    proxy.mark_known(i, r.item);
    if (r.value == top_value && r.item != proxy.item_at_rank(i, 1)) {
      proxy.swap_ranks(i, r.item, proxy.item_at_rank(i, 2));
    } else if (r.value != top_value) {
      proxy.swap_ranks(i, r.item, proxy.item_at_rank(i, n));
    }
    notify_mutation(observer, proxy);
  }
}

void rank_repair(ProxyGraph& proxy, int agent) {
  const int n = proxy.n();
  std::vector<int> items(static_cast<size_t>(n));
  for (int pos = 1; pos <= n; ++pos) items[pos - 1] = proxy.item_at_rank(agent, pos);
  std::stable_sort(items.begin(), items.end(), [&](int a, int b) {
    return proxy.weight(agent, a) > proxy.weight(agent, b);
  });
  proxy.set_rank_order(agent, items);
}

LearnerResult solve(QueryOracle& oracle, LearnerObserver* observer) {
  const int n = oracle.n();
  const long long budget = query_budget(n);

  LearnerResult result;
  ProxyGraph proxy = phase1(oracle, observer);
  result.phase1_queries = oracle.query_count();
  check_budget(oracle, budget);
  if (observer) observer->phase1_complete(proxy);

  if (n == 1) {
    // The single sequence is optimal and the budget (n^5 = 1) only covers the
    // phase-1 query, so return without the welfare probe.
    result.sequence = ActionSequence({1});
    result.welfare = proxy.weight(1, 1);
    result.queries_used = oracle.query_count();
    if (observer) {
      Matching m(1);
      m.assign(1, 1);
      observer->phases_complete(proxy, m, m, result.sequence);
    }
    return result;
  }

  phase2(oracle, proxy, observer);
  result.phase2_queries = oracle.query_count() - result.phase1_queries;
  check_budget(oracle, budget);

  Matching m_star = recompute_m_star(proxy);
  MwpoResult current = mwpo(proxy);
  if (observer) observer->phases_complete(proxy, m_star, current.matching, current.sequence);

  long long max_iterations = 1;
  for (int k = 0; k < 4; ++k) max_iterations *= n;

  for (int iteration = 1;; ++iteration) {
    if (iteration > max_iterations)
      throw std::logic_error("while-loop exceeded the n^4 iteration bound");
    const Weight w_prime = proxy.matching_weight(current.matching);
    const Weight w_star = proxy.matching_weight(m_star);
    if (w_prime < w_star)
      throw std::logic_error("invariant w'(M') >= w'(M*) broken");

    const Weight welfare = oracle.query_social_welfare(current.sequence);
    check_budget(oracle, budget);
    if (welfare == w_prime && w_prime == w_star) {
      TraceEvent event;
      event.kind = CaseKind::kC1Return;
      event.iteration = iteration;
      event.value = welfare;
      event.queries_after = oracle.query_count();
      result.trace.push_back(event);
      if (observer)
        observer->iteration_complete(event, proxy, m_star, current.matching, current.sequence);
      result.sequence = current.sequence;
      result.welfare = welfare;
      result.queries_used = oracle.query_count();
      return result;
    }

    // Replay the sequence query by query until an edge outside E* and M'
    // (as a pair) comes back. Such an edge must exist when C1 failed.
    TraceEvent event;
    event.iteration = iteration;
    std::vector<bool> taken(static_cast<size_t>(n) + 1, false);
    bool broke = false;
    for (int pos = 1; pos <= n && !broke; ++pos) {
      const int agent = current.sequence[pos - 1];
      const QueryResponse r = oracle.query(agent, current.sequence.prefix(pos - 1));
      check_budget(oracle, budget);
      if (proxy.known(agent, r.item) && current.matching.item_of(agent) == r.item) {
        taken[r.item] = true;
        continue;
      }
      broke = true;
      event.agent = agent;
      event.item = r.item;
      event.value = r.value;
      event.position = pos;
    }
    if (!broke)
      throw std::logic_error("replay finished with every edge in E* and M' although the welfare "
                             "check failed");

    if (!proxy.known(event.agent, event.item)) {
      event.kind = CaseKind::kC2NewEdge;
      proxy.mark_known(event.agent, event.item);
      proxy.set_weight(event.agent, event.item, event.value);
    } else {
      event.matched_item = current.matching.item_of(event.agent);
      if (taken[event.matched_item])
        throw std::logic_error("matched item was no longer available at the acting agent's turn");
      const Weight matched_weight = proxy.weight(event.agent, event.matched_item);
      if (event.value < matched_weight) {
        event.kind = CaseKind::kC3WeightDrop;
        proxy.set_weight(event.agent, event.matched_item, event.value);
      } else if (event.value == matched_weight) {
        event.kind = CaseKind::kC4RankSwap;
        proxy.swap_ranks(event.agent, event.item, event.matched_item);
      } else {
        throw std::logic_error("query value above the proxy weight of the matched item");
      }
    }
    notify_mutation(observer, proxy);
    rank_repair(proxy, event.agent);
    notify_mutation(observer, proxy);

    m_star = recompute_m_star(proxy);
    current = mwpo(proxy);
    event.queries_after = oracle.query_count();
    result.trace.push_back(event);
    if (observer)
      observer->iteration_complete(event, proxy, m_star, current.matching, current.sequence);
  }
}

}  // namespace osm
