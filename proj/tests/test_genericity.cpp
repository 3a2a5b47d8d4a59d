#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "smlab/genericity.hpp"

using namespace smlab;
using namespace smlab::genericity;

namespace {

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t nl = s.find('\n', pos);
    if (nl == std::string::npos) nl = s.size();
    lines.push_back(s.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

}  // namespace

TEST_CASE("wilson95 endpoints and shape") {
  SUBCASE("degenerate proportions") {
    WilsonInterval all = wilson95(100, 100);
    CHECK(all.high == doctest::Approx(1.0));
    CHECK(all.low == doctest::Approx(0.963006).epsilon(1e-4));
    WilsonInterval none = wilson95(0, 100);
    CHECK(none.low == doctest::Approx(0.0));
    CHECK(none.high == doctest::Approx(0.036994).epsilon(1e-4));
  }
  SUBCASE("interval brackets the sample rate") {
    Rng rng = make_rng(71);
    for (int trial = 0; trial < 500; ++trial) {
      std::size_t n = 1 + uniform_index(rng, 1000);
      std::size_t s = uniform_index(rng, n + 1);
      WilsonInterval ci = wilson95(s, n);
      double rate = static_cast<double>(s) / static_cast<double>(n);
      CHECK(ci.low >= 0.0);
      CHECK(ci.high <= 1.0);
      CHECK(ci.low <= rate + 1e-12);
      CHECK(ci.high >= rate - 1e-12);
    }
  }
  SUBCASE("symmetry under complementing successes") {
    for (std::size_t s : {0u, 7u, 33u, 50u, 91u}) {
      WilsonInterval a = wilson95(s, 100);
      WilsonInterval b = wilson95(100 - s, 100);
      CHECK(a.low == doctest::Approx(1.0 - b.high).epsilon(1e-12));
      CHECK(a.high == doctest::Approx(1.0 - b.low).epsilon(1e-12));
    }
  }
  SUBCASE("input validation") {
    CHECK_THROWS_AS(wilson95(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(wilson95(5, 4), std::invalid_argument);
  }
  SUBCASE("simulated coverage is near the nominal level") {
    const double p = 0.3;
    const std::size_t batch = 200;
    const int batches = 2000;
    Rng rng = make_rng(72);
    int covered = 0;
    for (int b = 0; b < batches; ++b) {
      std::size_t hits = 0;
      for (std::size_t i = 0; i < batch; ++i) {
        if (uniform_index(rng, 10) < 3) ++hits;
      }
      WilsonInterval ci = wilson95(hits, batch);
      if (ci.low <= p && p <= ci.high) ++covered;
    }
    double coverage = static_cast<double>(covered) / batches;
    CHECK(coverage > 0.93);
    CHECK(coverage < 0.97);
  }
}

TEST_CASE("estimate_success_density aggregates sample outcomes") {
  SUBCASE("constant testers") {
    Tester always = [](std::size_t n, Rng&) { return SampleOutcome{true, n}; };
    DensityEstimate est = estimate_success_density(always, 17, 50, 1);
    CHECK(est.n == 17);
    CHECK(est.samples == 50);
    CHECK(est.successes == 50);
    CHECK(est.rate == doctest::Approx(1.0));
    CHECK(est.ci_high == doctest::Approx(1.0));
    CHECK(est.letters_read_min == 17);
    CHECK(est.letters_read_max == 17);
    CHECK(est.letters_read_mean == doctest::Approx(17.0));

    Tester never = [](std::size_t, Rng&) { return SampleOutcome{false, 0}; };
    est = estimate_success_density(never, 17, 50, 1);
    CHECK(est.successes == 0);
    CHECK(est.rate == doctest::Approx(0.0));
    CHECK(est.ci_low == doctest::Approx(0.0));
  }
  SUBCASE("coin-flip tester sees its per-sample stream") {
    Tester coin = [](std::size_t, Rng& rng) {
      return SampleOutcome{uniform_bool(rng), 1};
    };
    DensityEstimate est = estimate_success_density(coin, 5, 20000, 3);
    CHECK(std::abs(est.rate - 0.5) < 0.02);
    CHECK(est.ci_low < est.rate);
    CHECK(est.rate < est.ci_high);
  }
  SUBCASE("identical seeds give identical estimates") {
    Tester coin = [](std::size_t n, Rng& rng) {
      return SampleOutcome{uniform_bool(rng), uniform_index(rng, n + 1)};
    };
    DensityEstimate a = estimate_success_density(coin, 40, 500, 9);
    DensityEstimate b = estimate_success_density(coin, 40, 500, 9);
    CHECK(a.successes == b.successes);
    CHECK(a.letters_read_min == b.letters_read_min);
    CHECK(a.letters_read_mean == doctest::Approx(b.letters_read_mean));
    CHECK(a.letters_read_max == b.letters_read_max);
    DensityEstimate c = estimate_success_density(coin, 40, 500, 10);
    CHECK((a.successes != c.successes || a.letters_read_mean != c.letters_read_mean));
  }
  SUBCASE("validation") {
    Tester always = [](std::size_t n, Rng&) { return SampleOutcome{true, n}; };
    CHECK_THROWS_AS(estimate_success_density(always, 5, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(estimate_success_density(Tester{}, 5, 5, 1), std::invalid_argument);
  }
}

TEST_CASE("density_sweep shapes and validation") {
  Tester fake = [](std::size_t n, Rng&) {
    return SampleOutcome{n >= 15, n / 3};
  };
  SUBCASE("one row per length") {
    SweepReport r = density_sweep(fake, "fake", {10, 20, 30}, 4, 9, {{"k", "v"}});
    CHECK(r.tester == "fake");
    CHECK(r.seed == 9);
    REQUIRE(r.config.size() == 1);
    CHECK(r.config[0].first == "k");
    REQUIRE(r.rows.size() == 3);
    CHECK(r.rows[0].n == 10);
    CHECK(r.rows[0].successes == 0);
    CHECK(r.rows[1].n == 20);
    CHECK(r.rows[1].successes == 4);
    CHECK(r.rows[2].n == 30);
  }
  SUBCASE("lengths must be strictly increasing and nonempty") {
    CHECK_THROWS_AS(density_sweep(fake, "fake", {}, 4, 9), std::invalid_argument);
    CHECK_THROWS_AS(density_sweep(fake, "fake", {10, 10}, 4, 9), std::invalid_argument);
    CHECK_THROWS_AS(density_sweep(fake, "fake", {20, 10}, 4, 9), std::invalid_argument);
  }
}

TEST_CASE("to_csv emits the fixed schema") {
  Tester fake = [](std::size_t n, Rng&) {
    return SampleOutcome{n >= 15, n / 3};
  };
  SweepReport r = density_sweep(fake, "fake", {10, 20}, 4, 9);
  std::string csv = to_csv(r);
  std::vector<std::string> lines = lines_of(csv);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] ==
        "tester,n,samples,successes,rate,ci_low,ci_high,"
        "letters_read_mean,letters_read_max,seed");
  CHECK(starts_with(lines[1], "fake,10,4,0,0.000000,0.000000,"));
  CHECK(lines[1].substr(lines[1].size() - 13) == ",3.000000,3,9");
  CHECK(starts_with(lines[2], "fake,20,4,4,1.000000,"));
  CHECK(lines[2].substr(lines[2].size() - 22) == ",1.000000,6.000000,6,9");
  // Byte-identical across runs.
  CHECK(to_csv(density_sweep(fake, "fake", {10, 20}, 4, 9)) == csv);
}

TEST_CASE("whitehead_tester density rises with the length") {
  Tester tester = whitehead_tester(Alphabet{2}, 0.6);
  DensityEstimate short_words = estimate_success_density(tester, 200, 80, 5);
  DensityEstimate long_words = estimate_success_density(tester, 2000, 80, 5);
  // At 200 letters the sampled window rarely covers all two-letter words;
  // at 2000 it almost always does.
  CHECK(long_words.rate > short_words.rate);
  CHECK(long_words.rate > 0.9);
  CHECK(long_words.ci_low > short_words.rate);
  CHECK(short_words.letters_read_min <= short_words.letters_read_max);
  CHECK(short_words.letters_read_mean <=
        static_cast<double>(short_words.letters_read_max));
  // Reads stay within the sublinear budget arithmetic: at most 2*budget
  // boundary letters plus one window.
  CHECK(long_words.letters_read_max <= 3 * 96 + 2);
  CHECK_THROWS_AS(whitehead_tester(Alphabet{1}, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(whitehead_tester(Alphabet{2}, 1.0), std::invalid_argument);
}

TEST_CASE("braid_pair_tester at tiny lengths") {
  Tester tester = braid_pair_tester(3);
  // Length-2 pairs over two generators: the staircase fires exactly when
  // the first letters are {1, 2} in some order, so the rate is ~1/2.
  DensityEstimate est = estimate_success_density(tester, 2, 4000, 11);
  CHECK(std::abs(est.rate - 0.5) < 0.03);
  CHECK(est.letters_read_min == 2);
  CHECK(est.letters_read_max == 2);
  CHECK_THROWS_AS(braid_pair_tester(1), std::invalid_argument);
}
