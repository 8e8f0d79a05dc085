#include "osm/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace osm {

namespace {

using nlohmann::json;

// Keeps assignment-solver arithmetic (scores scaled by n^2, sums over n
// edges) comfortably inside 64 bits.
constexpr Weight kMaxFileWeight = 1'000'000'000'000LL;

[[noreturn]] void malformed(const std::string& why) {
  throw std::runtime_error("malformed instance file: " + why);
}

std::vector<std::vector<long long>> parse_matrix(const json& j, const char* name, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    malformed(std::string(name) + " must be an array of " + std::to_string(n) + " rows");
  std::vector<std::vector<long long>> out;
  out.reserve(static_cast<size_t>(n));
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      malformed(std::string(name) + " rows must have " + std::to_string(n) + " entries");
    std::vector<long long> r;
    r.reserve(static_cast<size_t>(n));
    for (const auto& x : row) {
      if (!x.is_number_integer()) malformed(std::string(name) + " entries must be integers");
      r.push_back(x.get<long long>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

json sequence_to_json(const ActionSequence& seq) { return json(seq.agents()); }

}  // namespace

Instance parse_instance_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(e.what());
  }
  if (!j.is_object()) malformed("top level must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer()) malformed("missing integer field \"n\"");
  const long long n_raw = j["n"].get<long long>();
  if (n_raw < 1 || n_raw > 512) malformed("n out of supported range [1, 512]");
  const int n = static_cast<int>(n_raw);
  if (!j.contains("weights")) malformed("missing field \"weights\"");
  WeightMatrix weights = parse_matrix(j["weights"], "weights", n);
  Weight max_abs = 0;
  for (const auto& row : weights)
    for (Weight w : row) {
      if (w > kMaxFileWeight || w < -kMaxFileWeight)
        malformed("weight magnitude above " + std::to_string(kMaxFileWeight));
      max_abs = std::max(max_abs, w < 0 ? -w : w);
    }
  // n^2-scaled scores summed over n edges must stay inside 64 bits.
  if (max_abs > 0 && static_cast<Weight>(n) * n * n > 4'000'000'000'000'000'000LL / max_abs)
    malformed("n^3 * max weight too large for exact arithmetic");
  if (j.contains("ranks")) {
    auto ranks_ll = parse_matrix(j["ranks"], "ranks", n);
    RankMatrix ranks(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (ranks_ll[i][k] < 1 || ranks_ll[i][k] > n) malformed("rank entries must lie in [1, n]");
        ranks[i][k] = static_cast<int>(ranks_ll[i][k]);
      }
    return Instance(std::move(weights), std::move(ranks));
  }
  return Instance::with_derived_ranks(std::move(weights));
}

std::string instance_to_json(const Instance& instance) {
  json j;
  j["n"] = instance.n();
  j["weights"] = instance.weights();
  j["ranks"] = instance.ranks();
  return j.dump(2) + "\n";
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance_json(buffer.str());
}

void save_instance(const Instance& instance, const std::string& path) {
  write_text_file(path, instance_to_json(instance));
}

std::string solve_report_json(int n, const LearnerResult& result, const std::string& trace_path) {
  json j;
  j["n"] = n;
  j["sequence"] = sequence_to_json(result.sequence);
  j["welfare"] = result.welfare;
  j["queries_used"] = result.queries_used;
  j["bound_n5"] = query_budget(n);
  j["iterations"] = result.trace.size();
  j["trace_path"] = trace_path.empty() ? json() : json(trace_path);
  return j.dump(2) + "\n";
}

std::string verify_report_json(int n, const ActionSequence& sequence,
                               const VerifyOutcome& outcome) {
  json j;
  j["n"] = n;
  j["sequence"] = sequence_to_json(sequence);
  j["solver_welfare"] = outcome.solver_welfare;
  j["best_welfare"] = outcome.best_welfare;
  j["welfare_match"] = outcome.welfare_match;
  j["sequence_is_optimal"] = outcome.sequence_is_optimal;
  j["optimal_sequence_count"] = outcome.optimal_sequence_count;
  j["queries_used"] = outcome.queries_used;
  j["bound_n5"] = query_budget(n);
  j["pass"] = outcome.pass();
  return j.dump(2) + "\n";
}

std::string trace_to_jsonl(const LearnerResult& result) {
  std::ostringstream out;
  {
    json j;
    j["event"] = "phase";
    j["name"] = "phase1";
    j["queries"] = result.phase1_queries;
    out << j.dump() << "\n";
  }
  if (result.phase2_queries > 0) {
    json j;
    j["event"] = "phase";
    j["name"] = "phase2";
    j["queries"] = result.phase2_queries;
    out << j.dump() << "\n";
  }
  for (const TraceEvent& ev : result.trace) {
    json j;
    j["event"] = "iteration";
    j["iteration"] = ev.iteration;
    j["case"] = case_label(ev.kind);
    j["agent"] = ev.agent;
    j["item"] = ev.item;
    j["matched_item"] = ev.matched_item;
    j["value"] = ev.value;
    j["position"] = ev.position;
    j["queries"] = ev.queries_after;
    out << j.dump() << "\n";
  }
  return out.str();
}

std::string transcript_to_jsonl(const std::vector<QueryRecord>& transcript) {
  std::ostringstream out;
  for (const QueryRecord& record : transcript) {
    json j;
    j["agent"] = record.agent;
    j["prefix"] = record.prefix;
    j["value"] = record.value;
    j["item"] = record.item;
    out << j.dump() << "\n";
  }
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace osm
