#pragma once

// Randomized and exhaustive property suites, run by `superblocks verify`.

#include "superblocks/linkage.hpp"
#include "superblocks/roots.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace superblocks {

/// Generators shared by the property suites and the test binaries.
class WeightSampler {
 public:
  explicit WeightSampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  long uniform(long lo, long hi);
  Weight weight(const Shape& shape, long bound);
  /// Sorted within each block.
  Weight dominant(const Shape& shape, long bound);
  Permutation permutation(std::size_t size);
  Permutation block_permutation(const Shape& shape);
  /// Random element of p^{d+(1|1)} Z Phi with small coefficients.
  Weight lattice_vector(const Shape& shape, const Defect& d, long coefficient_bound);
  Root odd_positive_root(const Shape& shape);
  /// Throws std::invalid_argument when the shape has no even roots.
  Root even_positive_root(const Shape& shape);

 private:
  std::mt19937_64 rng_;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  // first failure, if any
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// Multiplies the number of random cases per suite.
  std::size_t scale = 1;
};

std::vector<SuiteResult> run_property_suites(const SuiteOptions& options);

}  // namespace superblocks
