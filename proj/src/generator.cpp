#include "osm/generator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace osm {

namespace {

// Rejection sampling keeps draws unbiased and identical on every platform;
// std::uniform_int_distribution is implementation-defined.
Weight uniform_weight(std::mt19937_64& rng, Weight lo, Weight hi) {
  const auto span = static_cast<unsigned long long>(hi - lo + 1);
  const unsigned long long limit =
      std::numeric_limits<unsigned long long>::max() / span * span;
  unsigned long long x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<Weight>(x % span);
}

std::vector<Weight> distinct_values(std::mt19937_64& rng, int count, Weight hi) {
  std::vector<Weight> values;
  std::vector<bool> seen;  // dense membership for small hi, else linear scan
  const bool dense = hi < 1 << 20;
  if (dense) seen.assign(static_cast<size_t>(hi) + 1, false);
  while (static_cast<int>(values.size()) < count) {
    const Weight v = uniform_weight(rng, 0, hi);
    bool fresh;
    if (dense) {
      fresh = !seen[static_cast<size_t>(v)];
      if (fresh) seen[static_cast<size_t>(v)] = true;
    } else {
      fresh = std::find(values.begin(), values.end(), v) == values.end();
    }
    if (fresh) values.push_back(v);
  }
  return values;
}

WeightMatrix uniform_matrix(std::mt19937_64& rng, const GeneratorConfig& config) {
  // tie_mass shrinks the value pool: 0 keeps the full [0, weight_max] range,
  // 1 collapses it to a single value.
  const double pool = (1.0 - config.tie_mass) * static_cast<double>(config.weight_max + 1);
  const Weight hi = std::max<Weight>(1, static_cast<Weight>(std::llround(pool))) - 1;
  WeightMatrix w(static_cast<size_t>(config.n), std::vector<Weight>(static_cast<size_t>(config.n)));
  for (auto& row : w)
    for (auto& x : row) x = uniform_weight(rng, 0, hi);
  return w;
}

WeightMatrix distinct_matrix(std::mt19937_64& rng, const GeneratorConfig& config) {
  WeightMatrix w(static_cast<size_t>(config.n));
  for (auto& row : w) row = distinct_values(rng, config.n, config.weight_max);
  return w;
}

WeightMatrix all_ties_matrix(std::mt19937_64& rng, const GeneratorConfig& config) {
  const Weight c = uniform_weight(rng, 0, config.weight_max);
  return WeightMatrix(static_cast<size_t>(config.n),
                      std::vector<Weight>(static_cast<size_t>(config.n), c));
}

WeightMatrix adversarial_matrix(std::mt19937_64& rng, const GeneratorConfig& config) {
  const int n = config.n;
  // A small palette of shared values: most columns carry one palette value for
  // every agent, so many agents tie on the same items; sprinkled re-draws and
  // a planted equal-weight square force the tie-handling cases.
  int palette_size = std::max(2, (n + 1) / 2);
  if (config.weight_max + 1 < palette_size)
    palette_size = static_cast<int>(config.weight_max + 1);
  const std::vector<Weight> palette =
      distinct_values(rng, std::max(1, palette_size), config.weight_max);
  const auto pick_palette = [&] {
    return palette[static_cast<size_t>(uniform_weight(rng, 0, static_cast<Weight>(palette.size()) - 1))];
  };

  std::vector<Weight> column_value(static_cast<size_t>(n));
  for (auto& v : column_value) v = pick_palette();
  WeightMatrix w(static_cast<size_t>(n), std::vector<Weight>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      w[i][j] = uniform_weight(rng, 0, 3) == 0 ? pick_palette() : column_value[static_cast<size_t>(j)];

  if (n >= 2) {
    const int i1 = static_cast<int>(uniform_weight(rng, 1, n - 1));
    const int i2 = static_cast<int>(uniform_weight(rng, 0, i1 - 1));
    const int j1 = static_cast<int>(uniform_weight(rng, 1, n - 1));
    const int j2 = static_cast<int>(uniform_weight(rng, 0, j1 - 1));
    const Weight v = pick_palette();
    w[i1][j1] = w[i1][j2] = w[i2][j1] = w[i2][j2] = v;
  }
  return w;
}

}  // namespace

const char* family_label(Family family) {
  switch (family) {
    case Family::kUniform: return "uniform";
    case Family::kDistinct: return "distinct";
    case Family::kAllTies: return "all-ties";
    case Family::kAdversarialTies: return "adversarial-ties";
  }
  return "unknown";
}

Family family_from_label(const std::string& label) {
  if (label == "uniform") return Family::kUniform;
  if (label == "distinct") return Family::kDistinct;
  if (label == "all-ties") return Family::kAllTies;
  if (label == "adversarial-ties") return Family::kAdversarialTies;
  throw std::invalid_argument("unknown family: " + label);
}

Instance generate_instance(const GeneratorConfig& config) {
  if (config.n < 1) throw std::invalid_argument("generator: n must be positive");
  if (config.weight_max < 0) throw std::invalid_argument("generator: weight_max must be >= 0");
  if (config.weight_max > 1'000'000'000'000LL)
    throw std::invalid_argument("generator: weight_max above 10^12");
  if (config.tie_mass < 0.0 || config.tie_mass > 1.0)
    throw std::invalid_argument("generator: tie_mass must be in [0, 1]");
  if (config.family == Family::kDistinct && config.weight_max + 1 < config.n)
    throw std::invalid_argument("generator: distinct family needs weight_max + 1 >= n");

  std::mt19937_64 rng(config.seed);
  WeightMatrix weights;
  switch (config.family) {
    case Family::kUniform: weights = uniform_matrix(rng, config); break;
    case Family::kDistinct: weights = distinct_matrix(rng, config); break;
    case Family::kAllTies: weights = all_ties_matrix(rng, config); break;
    case Family::kAdversarialTies: weights = adversarial_matrix(rng, config); break;
  }
  return Instance::with_derived_ranks(std::move(weights));
}

}  // namespace osm
