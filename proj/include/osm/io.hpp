#pragma once
// File formats: instance JSON, solve/verify report JSON, trace and transcript
// JSON lines. All output is deterministic for identical inputs.

#include <string>
#include <vector>

#include "osm/instance.hpp"
#include "osm/learner.hpp"
#include "osm/oracle.hpp"

namespace osm {

/// Instance file schema: {"n": int, "weights": [[int]], "ranks": [[int]]},
/// with "ranks" optional (derived from weights with the index tie-break when
/// absent). Throws std::runtime_error with a description on malformed input.
Instance parse_instance_json(const std::string& text);
std::string instance_to_json(const Instance& instance);

Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

/// Solve report: n, sequence, welfare, query count and bound.
std::string solve_report_json(int n, const LearnerResult& result, const std::string& trace_path);

struct VerifyOutcome {
  bool welfare_match = false;
  bool sequence_is_optimal = false;
  Weight solver_welfare = 0;
  Weight best_welfare = 0;
  long long optimal_sequence_count = 0;
  long long queries_used = 0;
  bool pass() const { return welfare_match && sequence_is_optimal; }
};

std::string verify_report_json(int n, const ActionSequence& sequence, const VerifyOutcome& outcome);

/// One line per while-iteration plus phase boundary lines.
std::string trace_to_jsonl(const LearnerResult& result);

/// One line per recorded pick query: {"agent", "prefix", "value", "item"}.
std::string transcript_to_jsonl(const std::vector<QueryRecord>& transcript);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace osm
