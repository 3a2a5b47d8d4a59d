#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "smlab/rng.hpp"
#include "smlab/words.hpp"

namespace smlab::genericity {

/// One randomized trial at input size n: whether the tester reached a
/// conclusive verdict, and how many input letters it inspected.
struct SampleOutcome {
  bool conclusive = false;
  std::size_t letters_read = 0;
};

/// A tester samples its own input(s) of size n from the provided stream
/// and reports the outcome.
using Tester = std::function<SampleOutcome(std::size_t n, Rng& rng)>;

struct WilsonInterval {
  double low = 0.0;
  double high = 1.0;
};

/// 95% Wilson score interval for a binomial proportion.
WilsonInterval wilson95(std::size_t successes, std::size_t samples);

struct DensityEstimate {
  std::size_t n = 0;
  std::size_t samples = 0;
  std::size_t successes = 0;
  double rate = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  std::size_t letters_read_min = 0;
  double letters_read_mean = 0.0;
  std::size_t letters_read_max = 0;
};

/// Runs `samples` independent trials at size n.  Each trial's stream is
/// derived from (seed, n, sample index), so estimates do not depend on
/// evaluation order and rows of a sweep are independent.
DensityEstimate estimate_success_density(const Tester& tester, std::size_t n,
                                         std::size_t samples, std::uint64_t seed);

struct SweepReport {
  std::string tester;
  std::uint64_t seed = 0;
  /// Echo of the tester configuration (rank, delta, strands, ...).
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<DensityEstimate> rows;
};

/// One density estimate per entry of `lengths` (strictly increasing).
SweepReport density_sweep(const Tester& tester, const std::string& tester_name,
                          const std::vector<std::size_t>& lengths,
                          std::size_t samples, std::uint64_t seed,
                          std::vector<std::pair<std::string, std::string>> config = {});

/// CSV rows with the fixed column schema
/// tester,n,samples,successes,rate,ci_low,ci_high,letters_read_mean,letters_read_max,seed.
std::string to_csv(const SweepReport& report);

/// Samples a freely reduced word of length n and runs the sublinear
/// non-primitivity test; conclusive means NotPrimitive.
Tester whitehead_tester(const Alphabet& alphabet, double delta);

/// Samples two positive braid words of length n and runs the sublinear
/// inequality test; conclusive means NotEqual.
Tester braid_pair_tester(int strands);

}  // namespace smlab::genericity
