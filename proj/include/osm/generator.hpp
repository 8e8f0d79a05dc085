#pragma once
// Deterministic seeded instance generators for the four benchmark families.

#include <cstdint>
#include <string>

#include "osm/instance.hpp"

namespace osm {

enum class Family {
  kUniform,          // iid weights; tie_mass shrinks the value pool
  kDistinct,         // pairwise-distinct weights within every row
  kAllTies,          // one constant for the whole matrix
  kAdversarialTies,  // equal weights planted across agents on the same items
};

const char* family_label(Family family);
Family family_from_label(const std::string& label);

struct GeneratorConfig {
  int n = 0;
  Weight weight_max = 100;
  double tie_mass = 0.0;  // probability mass of repeats in the uniform family
  std::uint64_t seed = 0;
  Family family = Family::kUniform;
};

/// Same config twice gives the identical instance, bit for bit. Ranks follow
/// the default tie-break: among equal weights the lower item index ranks
/// better. Throws std::invalid_argument on inconsistent configs.
Instance generate_instance(const GeneratorConfig& config);

}  // namespace osm
