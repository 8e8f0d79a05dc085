#pragma once
// The query-efficient learner: maintains the proxy graph through three phases
// and returns a welfare-optimal action sequence within an n^5 query budget.

#include <vector>

#include "osm/matching.hpp"
#include "osm/oracle.hpp"

namespace osm {

/// How a while-iteration resolved. Exactly one case fires per iteration:
/// either the welfare probe certifies optimality (C1) or the replay of the
/// candidate sequence breaks at an edge that teaches something new (C2-C4).
enum class CaseKind {
  kC1Return,     // welfare probe matched w'(M') and w'(M*); sequence returned
  kC2NewEdge,    // replay returned an edge outside E*; weight learned
  kC3WeightDrop, // known edge outside M' returned with a smaller value
  kC4RankSwap,   // known edge outside M' returned with an equal value
};

const char* case_label(CaseKind kind);

struct TraceEvent {
  CaseKind kind = CaseKind::kC1Return;
  int iteration = 0;     // 1-based while-iteration index
  int agent = 0;         // acting agent a_i (0 for C1)
  int item = 0;          // item returned by the breaking query (0 for C1)
  int matched_item = 0;  // M'(a_i) at the time of the event (0 for C1/C2)
  Weight value = 0;      // query value; for C1 the certified welfare
  int position = 0;      // 1-based position of a_i in the replayed sequence
  long long queries_after = 0;

  bool operator==(const TraceEvent&) const = default;
};

/// Hooks for instrumented runs. The learner itself never touches hidden
/// truth; tests attach an observer that holds the instance and audits the
/// proxy against it.
class LearnerObserver {
 public:
  virtual ~LearnerObserver() = default;
  /// After every proxy mutation (weight writes, rank swaps, rank repairs).
  virtual void after_mutation(const ProxyGraph&) {}
  virtual void phase1_complete(const ProxyGraph&) {}
  /// After phase 2 and the initial computation of M*, M' and the sequence.
  virtual void phases_complete(const ProxyGraph&, const Matching& /*m_star*/,
                               const Matching& /*m_prime*/, const ActionSequence& /*pi*/) {}
  /// After each while-iteration, with the post-update state.
  virtual void iteration_complete(const TraceEvent&, const ProxyGraph&,
                                  const Matching& /*m_star*/, const Matching& /*m_prime*/,
                                  const ActionSequence& /*pi*/) {}
};

struct LearnerResult {
  ActionSequence sequence;
  Weight welfare = 0;
  long long queries_used = 0;
  long long phase1_queries = 0;
  long long phase2_queries = 0;
  std::vector<TraceEvent> trace;  // one event per while-iteration, C1 last
};

/// Phase 1: learns every agent's favorite item. One query per agent; each row
/// of w' becomes that agent's top value and the favorite moves to rank 1.
ProxyGraph phase1(QueryOracle& oracle, LearnerObserver* observer = nullptr);

/// Phase 2: runs the sequence (1, ..., n) so that the known edges contain a
/// perfect matching. One query per agent from the second on, with the two
/// rank-repair branches for tied and strictly smaller values.
void phase2(QueryOracle& oracle, ProxyGraph& proxy, LearnerObserver* observer = nullptr);

/// Stable monotonicity repair of one agent's ranks: items reordered by
/// descending proxy weight, equal-weight items keeping their current order.
void rank_repair(ProxyGraph& proxy, int agent);

/// Runs all phases and returns a welfare-optimal action sequence for the
/// hidden instance behind the oracle. Throws std::logic_error if the n^5
/// query budget would be exceeded or an internal invariant breaks; both
/// indicate an implementation bug, not an input condition.
LearnerResult solve(QueryOracle& oracle, LearnerObserver* observer = nullptr);

/// The binding query budget, n^5.
long long query_budget(int n);

}  // namespace osm
