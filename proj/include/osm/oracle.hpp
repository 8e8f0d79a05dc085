#pragma once
// Sealed query interface over a hidden instance, with exact query accounting.
// The learner sees nothing of the hidden weights or ranks except what comes
// back through this interface.

#include <vector>

#include "osm/instance.hpp"

namespace osm {

struct QueryResponse {
  Weight value = 0;
  int item = 0;
  bool operator==(const QueryResponse&) const = default;
};

/// One pick query as recorded in the transcript. Welfare queries appear as n
/// consecutive pick records so a transcript replays the run exactly.
struct QueryRecord {
  int agent = 0;
  std::vector<int> prefix;
  Weight value = 0;
  int item = 0;
  bool operator==(const QueryRecord&) const = default;
};

/// Query counter plus full transcript. The count charges 1 per pick query and
/// n per welfare query, matching the transcript length at all times.
class QueryLedger {
 public:
  long long count() const { return count_; }
  const std::vector<QueryRecord>& transcript() const { return transcript_; }
  void record(QueryRecord record) {
    transcript_.push_back(std::move(record));
    ++count_;
  }

 private:
  long long count_ = 0;
  std::vector<QueryRecord> transcript_;
};

class QueryOracle {
 public:
  virtual ~QueryOracle() = default;
  virtual int n() const = 0;
  /// Simulates the prefix, then returns the queried agent's greedy pick among
  /// the remaining items. Costs one query.
  virtual QueryResponse query(int agent, const ActionSequence& prefix) = 0;
  /// Social welfare of a full sequence. Costs n queries.
  virtual Weight query_social_welfare(const ActionSequence& seq) = 0;
  virtual long long query_count() const = 0;
};

/// The production oracle: owns a copy of the hidden instance and a ledger.
class InstanceOracle final : public QueryOracle {
 public:
  /// Throws std::invalid_argument when the instance violates its invariants.
  explicit InstanceOracle(Instance hidden);

  int n() const override { return hidden_.n(); }
  QueryResponse query(int agent, const ActionSequence& prefix) override;
  Weight query_social_welfare(const ActionSequence& seq) override;
  long long query_count() const override { return ledger_.count(); }
  const QueryLedger& ledger() const { return ledger_; }

 private:
  QueryResponse simulate(int agent, const ActionSequence& prefix) const;

  Instance hidden_;
  QueryLedger ledger_;
};

/// Serves a recorded transcript back in order, verifying that each request
/// matches the recorded one. Lets tests rerun the learner with no instance
/// behind the oracle at all.
class ReplayOracle final : public QueryOracle {
 public:
  ReplayOracle(int n, std::vector<QueryRecord> records);

  int n() const override { return n_; }
  QueryResponse query(int agent, const ActionSequence& prefix) override;
  Weight query_social_welfare(const ActionSequence& seq) override;
  long long query_count() const override { return count_; }
  bool exhausted() const { return next_ == records_.size(); }

 private:
  QueryResponse next(int agent, const ActionSequence& prefix);

  int n_ = 0;
  std::vector<QueryRecord> records_;
  size_t next_ = 0;
  long long count_ = 0;
};

}  // namespace osm
