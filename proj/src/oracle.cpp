#include "osm/oracle.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace osm {

namespace {

void check_prefix(int n, int agent, const ActionSequence& prefix) {
  if (agent < 1 || agent > n) throw std::invalid_argument("query: agent out of range");
  if (prefix.size() >= n) throw std::invalid_argument("query: prefix too long");
  for (int a : prefix.agents())
    if (a < 1 || a > n) throw std::invalid_argument("query: prefix agent out of range");
  if (prefix.contains(agent)) throw std::invalid_argument("query: agent appears in prefix");
}

}  // namespace

InstanceOracle::InstanceOracle(Instance hidden) : hidden_(std::move(hidden)) {
  const auto violations = validate(hidden_);
  if (!violations.empty())
    throw std::invalid_argument("oracle: invalid hidden instance: " + violations.front());
}

QueryResponse InstanceOracle::simulate(int agent, const ActionSequence& prefix) const {
  std::vector<bool> available(static_cast<size_t>(hidden_.n()) + 1, true);
  for (int a : prefix.agents()) {
    const PickResult p = pick(hidden_, a, available);
    available[p.item] = false;
  }
  const PickResult p = pick(hidden_, agent, available);
  return {p.value, p.item};
}

QueryResponse InstanceOracle::query(int agent, const ActionSequence& prefix) {
  check_prefix(hidden_.n(), agent, prefix);
  const QueryResponse response = simulate(agent, prefix);
  ledger_.record({agent, prefix.agents(), response.value, response.item});
  return response;
}

Weight InstanceOracle::query_social_welfare(const ActionSequence& seq) {
  if (seq.size() != hidden_.n())
    throw std::invalid_argument("query_social_welfare: sequence is not full");
  Weight total = 0;
  for (int t = 0; t < seq.size(); ++t) {
    const ActionSequence prefix = seq.prefix(t);
    const QueryResponse response = simulate(seq[t], prefix);
    ledger_.record({seq[t], prefix.agents(), response.value, response.item});
    total += response.value;
  }
  return total;
}

ReplayOracle::ReplayOracle(int n, std::vector<QueryRecord> records)
    : n_(n), records_(std::move(records)) {
  if (n_ < 1) throw std::invalid_argument("replay oracle: n must be positive");
}

QueryResponse ReplayOracle::next(int agent, const ActionSequence& prefix) {
  if (next_ >= records_.size())
    throw std::logic_error("replay oracle: transcript exhausted");
  const QueryRecord& record = records_[next_];
  if (record.agent != agent || record.prefix != prefix.agents())
    throw std::logic_error("replay oracle: request differs from transcript at record " +
                           std::to_string(next_));
  ++next_;
  ++count_;
  return {record.value, record.item};
}

QueryResponse ReplayOracle::query(int agent, const ActionSequence& prefix) {
  check_prefix(n_, agent, prefix);
  return next(agent, prefix);
}

Weight ReplayOracle::query_social_welfare(const ActionSequence& seq) {
  if (seq.size() != n_)
    throw std::invalid_argument("query_social_welfare: sequence is not full");
  Weight total = 0;
  for (int t = 0; t < seq.size(); ++t) total += next(seq[t], seq.prefix(t)).value;
  return total;
}

}  // namespace osm
