#include "smlab/genericity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "smlab/braid.hpp"
#include "smlab/whitehead.hpp"

namespace smlab::genericity {

namespace {

constexpr double kZ95 = 1.959963984540054;

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

WilsonInterval wilson95(std::size_t successes, std::size_t samples) {
  if (samples == 0) throw std::invalid_argument("wilson95: samples must be >= 1");
  if (successes > samples) throw std::invalid_argument("wilson95: successes > samples");
  const double n = static_cast<double>(samples);
  const double p = static_cast<double>(successes) / n;
  const double z2 = kZ95 * kZ95;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half =
      kZ95 * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  // At the boundaries the endpoint equals the sample rate exactly; computing
  // it through center/half leaves float dust that breaks low <= rate <= high.
  const double low = successes == 0 ? 0.0 : std::max(0.0, center - half);
  const double high = successes == samples ? 1.0 : std::min(1.0, center + half);
  return WilsonInterval{low, high};
}

DensityEstimate estimate_success_density(const Tester& tester, std::size_t n,
                                         std::size_t samples, std::uint64_t seed) {
  if (!tester) throw std::invalid_argument("estimate_success_density: empty tester");
  if (samples == 0) {
    throw std::invalid_argument("estimate_success_density: samples must be >= 1");
  }
  DensityEstimate est;
  est.n = n;
  est.samples = samples;
  est.letters_read_min = std::numeric_limits<std::size_t>::max();
  std::size_t letters_total = 0;
  for (std::size_t idx = 0; idx < samples; ++idx) {
    Rng rng = derive_rng(seed, n, idx);
    const SampleOutcome outcome = tester(n, rng);
    if (outcome.conclusive) ++est.successes;
    letters_total += outcome.letters_read;
    est.letters_read_min = std::min(est.letters_read_min, outcome.letters_read);
    est.letters_read_max = std::max(est.letters_read_max, outcome.letters_read);
  }
  est.rate = static_cast<double>(est.successes) / static_cast<double>(samples);
  const WilsonInterval ci = wilson95(est.successes, samples);
  est.ci_low = ci.low;
  est.ci_high = ci.high;
  est.letters_read_mean =
      static_cast<double>(letters_total) / static_cast<double>(samples);
  return est;
}

SweepReport density_sweep(const Tester& tester, const std::string& tester_name,
                          const std::vector<std::size_t>& lengths,
                          std::size_t samples, std::uint64_t seed,
                          std::vector<std::pair<std::string, std::string>> config) {
  if (lengths.empty()) {
    throw std::invalid_argument("density_sweep: lengths must be nonempty");
  }
  for (std::size_t i = 0; i + 1 < lengths.size(); ++i) {
    if (lengths[i] >= lengths[i + 1]) {
      throw std::invalid_argument("density_sweep: lengths must be strictly increasing");
    }
  }
  SweepReport report;
  report.tester = tester_name;
  report.seed = seed;
  report.config = std::move(config);
  report.rows.reserve(lengths.size());
  for (std::size_t n : lengths) {
    report.rows.push_back(estimate_success_density(tester, n, samples, seed));
  }
  return report;
}

std::string to_csv(const SweepReport& report) {
  std::string out =
      "tester,n,samples,successes,rate,ci_low,ci_high,"
      "letters_read_mean,letters_read_max,seed\n";
  for (const DensityEstimate& row : report.rows) {
    out += report.tester;
    out += ',';
    out += std::to_string(row.n);
    out += ',';
    out += std::to_string(row.samples);
    out += ',';
    out += std::to_string(row.successes);
    out += ',';
    out += fixed6(row.rate);
    out += ',';
    out += fixed6(row.ci_low);
    out += ',';
    out += fixed6(row.ci_high);
    out += ',';
    out += fixed6(row.letters_read_mean);
    out += ',';
    out += std::to_string(row.letters_read_max);
    out += ',';
    out += std::to_string(report.seed);
    out += '\n';
  }
  return out;
}

Tester whitehead_tester(const Alphabet& alphabet, double delta) {
  if (alphabet.rank < 2) {
    throw std::invalid_argument("whitehead_tester: rank must be >= 2");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("whitehead_tester: delta must be in (0, 1)");
  }
  return [alphabet, delta](std::size_t n, Rng& rng) {
    const Word u = random_reduced_word(alphabet, n, rng);
    const auto verdict = whitehead::sublinear_nonprimitivity_test(u, alphabet, delta, rng);
    return SampleOutcome{verdict.kind == whitehead::VerdictKind::NotPrimitive,
                         verdict.letters_read};
  };
}

Tester braid_pair_tester(int strands) {
  if (strands < 2) throw std::invalid_argument("braid_pair_tester: strands must be >= 2");
  return [strands](std::size_t n, Rng& rng) {
    const PositiveWord a = random_positive_word(strands - 1, n, rng);
    const PositiveWord b = random_positive_word(strands - 1, n, rng);
    const auto verdict = braid::sublinear_braid_inequality_test(
        braid::Word(strands, a.letters()), braid::Word(strands, b.letters()));
    return SampleOutcome{verdict.kind == braid::BraidVerdictKind::NotEqual,
                         verdict.letters_read};
  };
}

}  // namespace smlab::genericity
