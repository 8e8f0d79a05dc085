// Command-line driver: instance generation, solving with a full trace,
// brute-force verification and query-count benchmarking.

#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "osm/brute_force.hpp"
#include "osm/generator.hpp"
#include "osm/io.hpp"
#include "osm/learner.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;

// Relative output paths land in $OSM_OUT_DIR when it is set.
std::string resolve_out(const std::string& path) {
  if (path.empty() || path.front() == '/') return path;
  const char* dir = std::getenv("OSM_OUT_DIR");
  if (dir == nullptr || *dir == '\0') return path;
  std::string base(dir);
  if (base.back() != '/') base += '/';
  return base + path;
}

osm::Instance load_checked(const std::string& path) {
  osm::Instance instance = osm::load_instance(path);
  const auto violations = osm::validate(instance);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << "invalid instance " << path << ":";
    for (const auto& v : violations) msg << "\n  " << v;
    throw std::runtime_error(msg.str());
  }
  return instance;
}

long long pow_ll(int base, int exponent) {
  long long out = 1;
  for (int k = 0; k < exponent; ++k) out *= base;
  return out;
}

int run_gen(const osm::GeneratorConfig& config, const std::string& out_path) {
  const osm::Instance instance = osm::generate_instance(config);
  osm::save_instance(instance, resolve_out(out_path));
  return kExitPass;
}

int run_solve(const std::string& in_path, const std::string& trace_path,
              const std::string& report_path) {
  const osm::Instance instance = load_checked(in_path);
  osm::InstanceOracle oracle(instance);
  const osm::LearnerResult result = osm::solve(oracle);

  std::string resolved_trace = resolve_out(trace_path);
  if (!resolved_trace.empty()) osm::write_text_file(resolved_trace, osm::trace_to_jsonl(result));
  const std::string report = osm::solve_report_json(instance.n(), result, resolved_trace);
  if (report_path.empty()) {
    std::cout << report;
  } else {
    osm::write_text_file(resolve_out(report_path), report);
  }
  return kExitPass;
}

int run_verify(const std::string& in_path, int max_n) {
  const osm::Instance instance = load_checked(in_path);
  if (instance.n() > max_n)
    throw std::runtime_error("verify: n = " + std::to_string(instance.n()) +
                             " exceeds --max-n = " + std::to_string(max_n));
  osm::InstanceOracle oracle(instance);
  const osm::LearnerResult result = osm::solve(oracle);
  const osm::ExhaustiveReport exhaustive = osm::best_sequence_exhaustive(instance);

  osm::VerifyOutcome outcome;
  outcome.solver_welfare = result.welfare;
  outcome.best_welfare = exhaustive.best_welfare;
  outcome.welfare_match = result.welfare == exhaustive.best_welfare;
  outcome.queries_used = result.queries_used;
  outcome.optimal_sequence_count = static_cast<long long>(exhaustive.optimal_sequences.size());
  for (const osm::ActionSequence& seq : exhaustive.optimal_sequences)
    if (seq == result.sequence) outcome.sequence_is_optimal = true;

  std::cout << osm::verify_report_json(instance.n(), result.sequence, outcome);
  return outcome.pass() ? kExitPass : kExitVerifyFail;
}

struct BenchOptions {
  int n_from = 2;
  int n_to = 6;
  std::vector<std::string> families{"uniform", "distinct", "all-ties", "adversarial-ties"};
  int seeds = 20;
  osm::Weight weight_max = 100;
  double tie_mass = 0.25;
  int verify_up_to = 6;
  std::string out_path;
};

int run_bench(const BenchOptions& options) {
  std::ostringstream csv;
  csv << "n,family,seed,queries_used,bound_n5,bound_n4,welfare,optimal\n";
  struct Ratio {
    double n4 = 0.0;
    double n5 = 0.0;
  };
  std::map<std::string, Ratio> worst;

  for (int n = options.n_from; n <= options.n_to; ++n) {
    for (const std::string& family_name : options.families) {
      const osm::Family family = osm::family_from_label(family_name);
      for (int seed = 0; seed < options.seeds; ++seed) {
        osm::GeneratorConfig config;
        config.n = n;
        config.family = family;
        config.seed = static_cast<std::uint64_t>(seed);
        config.weight_max = options.weight_max;
        config.tie_mass = options.tie_mass;
        const osm::Instance instance = osm::generate_instance(config);
        osm::InstanceOracle oracle(instance);
        const osm::LearnerResult result = osm::solve(oracle);

        const long long bound5 = pow_ll(n, 5);
        const long long bound4 = pow_ll(n, 4);
        if (result.queries_used > bound5)
          throw std::runtime_error("query budget exceeded in bench run");

        std::string optimal;
        if (n <= options.verify_up_to && n <= osm::kMaxExhaustiveN) {
          const osm::ExhaustiveReport exhaustive = osm::best_sequence_exhaustive(instance);
          optimal = result.welfare == exhaustive.best_welfare ? "true" : "false";
        }
        csv << n << ',' << family_name << ',' << seed << ',' << result.queries_used << ','
            << bound5 << ',' << bound4 << ',' << result.welfare << ',' << optimal << '\n';

        Ratio& r = worst[family_name];
        r.n4 = std::max(r.n4, static_cast<double>(result.queries_used) / static_cast<double>(bound4));
        r.n5 = std::max(r.n5, static_cast<double>(result.queries_used) / static_cast<double>(bound5));
      }
    }
  }

  if (options.out_path.empty()) {
    std::cout << csv.str();
  } else {
    osm::write_text_file(resolve_out(options.out_path), csv.str());
  }
  for (const auto& [family_name, ratio] : worst) {
    std::cerr << "family " << family_name << ": max queries/n^4 = " << ratio.n4
              << ", max queries/n^5 = " << ratio.n5 << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Query-efficient welfare-optimal action sequences for one-sided matching"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a seeded instance file");
  osm::GeneratorConfig gen_config;
  std::string gen_family = "uniform";
  std::string gen_out;
  gen->add_option("--n", gen_config.n, "Number of agents and items")->required();
  gen->add_option("--family", gen_family,
                  "Instance family: uniform, distinct, all-ties, adversarial-ties");
  gen->add_option("--seed", gen_config.seed, "Generator seed");
  gen->add_option("--weight-max", gen_config.weight_max, "Largest weight value");
  gen->add_option("--tie-mass", gen_config.tie_mass, "Tie mass in [0, 1] (uniform family)");
  gen->add_option("--out", gen_out, "Output instance path")->required();

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance through the query oracle");
  std::string solve_in, solve_trace, solve_report;
  solve_cmd->add_option("--in", solve_in, "Instance path")->required();
  solve_cmd->add_option("--trace-out", solve_trace, "Trace JSONL output path");
  solve_cmd->add_option("--report-out", solve_report, "Report JSON output path (stdout if absent)");

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "Solve and cross-check against exhaustive enumeration");
  std::string verify_in;
  int verify_max_n = 8;
  verify_cmd->add_option("--in", verify_in, "Instance path")->required();
  verify_cmd->add_option("--max-n", verify_max_n, "Largest n accepted for enumeration");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Sweep sizes and families, write a CSV");
  BenchOptions bench;
  bench_cmd->add_option("--n-from", bench.n_from, "Smallest n");
  bench_cmd->add_option("--n-to", bench.n_to, "Largest n");
  bench_cmd->add_option("--families", bench.families, "Families to sweep")->delimiter(',');
  bench_cmd->add_option("--seeds", bench.seeds, "Seeds per (n, family)");
  bench_cmd->add_option("--weight-max", bench.weight_max, "Largest weight value");
  bench_cmd->add_option("--tie-mass", bench.tie_mass, "Tie mass (uniform family)");
  bench_cmd->add_option("--verify-up-to", bench.verify_up_to,
                        "Verify optimality exhaustively up to this n");
  bench_cmd->add_option("--out", bench.out_path, "CSV output path (stdout if absent)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      gen_config.family = osm::family_from_label(gen_family);
      return run_gen(gen_config, gen_out);
    }
    if (solve_cmd->parsed()) return run_solve(solve_in, solve_trace, solve_report);
    if (verify_cmd->parsed()) return run_verify(verify_in, verify_max_n);
    if (bench_cmd->parsed()) return run_bench(bench);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
