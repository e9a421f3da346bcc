#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "grover/analytic.hpp"
#include "grover/unknown_m.hpp"
#include "support/reference.hpp"

using namespace grover;

namespace {

SearchProblem problem_with(int n, Index matches, std::uint64_t seed = 5) {
  std::mt19937_64 rng(seed);
  return SearchProblem(MarkedSetOracle(n, reference::random_marked(rng, n, matches)));
}

struct Stats {
  double mean = 0.0;
  double stderr_mean = 0.0;
  double success_rate = 0.0;
};

Stats summarize(const std::vector<SearchOutcome>& outcomes) {
  Stats s;
  double sum = 0.0, sq = 0.0, hits = 0.0;
  for (const auto& o : outcomes) {
    sum += double(o.oracle_calls);
    sq += double(o.oracle_calls) * double(o.oracle_calls);
    hits += o.found ? 1.0 : 0.0;
  }
  const double n = double(outcomes.size());
  s.mean = sum / n;
  s.stderr_mean = std::sqrt((sq / n - s.mean * s.mean) / (n - 1.0));
  s.success_rate = hits / n;
  return s;
}

Stats bbht_stats(int n, Index matches, std::uint64_t trials, std::uint64_t seed = 1) {
  BbhtConfig config;
  config.seed = seed;
  return summarize(run_bbht_trials(problem_with(n, matches), config, trials));
}

}  // namespace

TEST_CASE("BbhtConfig validation") {
  BbhtConfig c;
  CHECK_NOTHROW(c.validate());
  c.lambda = 1.0;
  CHECK_THROWS_AS(c.validate(), ConstructionError);
  c.lambda = 4.0 / 3.0;
  CHECK_NOTHROW(c.validate());
  c.lambda = 1.34;
  CHECK_THROWS_AS(c.validate(), ConstructionError);
  c.lambda = 1.2;
  c.max_oracle_calls = 0;
  CHECK_THROWS_AS(c.validate(), ConstructionError);
}

TEST_CASE("bbht single match, N = 2^10") {
  const Stats s = bbht_stats(10, 1, 1000);
  CHECK(s.success_rate == 1.0);
  CHECK(s.mean <= 4.0 * std::sqrt(1024.0) * 1.5);
}

TEST_CASE("bbht with every item marked succeeds on the first call") {
  const auto p = problem_with(6, 64);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    BbhtConfig c;
    c.seed = seed;
    const auto o = bbht_search(p, c);
    REQUIRE(o.found);
    CHECK(o.oracle_calls == 1);
    CHECK(o.rounds == 1);
    CHECK(o.grover_iterations == 0);
  }
}

TEST_CASE("bbht without matches exhausts the budget exactly") {
  const auto p = problem_with(8, 0);
  BbhtConfig c;
  const auto o = bbht_search(p, c);
  CHECK_FALSE(o.found);
  CHECK(o.oracle_calls == c.max_oracle_calls);
  CHECK(o.oracle_calls >= o.rounds);

  c.max_oracle_calls = 37;
  const auto small = bbht_search(p, c);
  CHECK_FALSE(small.found);
  CHECK(small.oracle_calls == 37);
  CHECK(small.grover_iterations + small.rounds == 37);
}

TEST_CASE("bbht outcomes are correct and deterministic") {
  const auto p = problem_with(9, 7);
  BbhtConfig c;
  c.seed = 42;
  const auto outcomes = run_bbht_trials(p, c, 500);
  for (const auto& o : outcomes) {
    REQUIRE(o.found);
    CHECK(p.is_marked(*o.found));
    CHECK(o.oracle_calls == o.grover_iterations + o.rounds);
  }
  CHECK(run_bbht_trials(p, c, 500, 1) == outcomes);
  CHECK(run_bbht_trials(p, c, 500, 3) == outcomes);
  CHECK(bbht_search(p, c) == bbht_search(p, c));
}

TEST_CASE("statevector backend matches the two-amplitude backend statistically") {
  for (auto [n, m] : {std::pair{8, 1}, std::pair{10, 5}, std::pair{6, 20}}) {
    const auto p = problem_with(n, Index(m));
    BbhtConfig exact;
    exact.backend = BbhtBackend::statevector;
    exact.seed = 3;
    BbhtConfig fast;
    fast.seed = 4;
    const Stats a = summarize(run_bbht_trials(p, exact, 3000));
    const Stats b = summarize(run_bbht_trials(p, fast, 3000));
    CHECK(a.success_rate == 1.0);
    const double z = (a.mean - b.mean) / std::hypot(a.stderr_mean, b.stderr_mean);
    CHECK(std::abs(z) < 4.0);
  }
}

TEST_CASE("termination within 100 sqrt(N) calls") {
  const auto p = problem_with(10, 1);
  BbhtConfig c;
  c.max_oracle_calls = 100 * 32;
  c.seed = 8;
  for (const auto& o : run_bbht_trials(p, c, 10000)) CHECK(o.found.has_value());
}

TEST_CASE("cost model: mean calls under 8 m_G for M/N <= 1/8") {
  for (int n = 8; n <= 14; n += 2) {
    const Index size = Index{1} << n;
    for (Index m : {Index{1}, size / 64, size / 8}) {
      const Stats s = bbht_stats(n, m, 10000, 100 + n);
      const double model = expected_calls_estimate(m, size);
      CHECK(s.success_rate == 1.0);
      CHECK(s.mean <= model + 2.0 * s.stderr_mean);
    }
  }
}

TEST_CASE("regime: easy ratios cost less and the model degrades past 3N/4") {
  const int n = 12;
  const Index size = Index{1} << n;
  const Stats quarter = bbht_stats(n, size / 4, 10000);
  const Stats twentieth = bbht_stats(n, Index(0.05 * size), 10000);
  CHECK(quarter.mean < twentieth.mean);

  double previous_error = -1.0;
  for (double r : {0.80, 0.85, 0.90, 0.95}) {
    const Index m = Index(std::llround(r * double(size)));
    const Stats s = bbht_stats(n, m, 10000);
    CHECK(s.success_rate == 1.0);
    const double error = 8.0 * m_lower_bound(m, size) - s.mean;
    CHECK(error > previous_error);
    previous_error = error;
  }

  // M/N = 0.9: still succeeds, but costs more than plain classical sampling.
  const Index m = Index(std::llround(0.9 * 256));
  const Stats s = bbht_stats(8, m, 10000, 77);
  CHECK(s.success_rate == 1.0);
  CHECK(s.mean > 256.0 / double(m) + 3.0 * s.stderr_mean);
  CHECK(s.mean < m_lower_bound(m, 256));
}

TEST_CASE("m_lower_bound") {
  CHECK(m_lower_bound(512, 1024) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(m_lower_bound(256, 1024) == doctest::Approx(1.1547005383792515).epsilon(1e-14));
  const double a = m_lower_bound(819, 1024);
  const double b = m_lower_bound(922, 1024);
  const double c = m_lower_bound(973, 1024);
  CHECK(a < b);
  CHECK(b < c);
  CHECK_THROWS_AS(m_lower_bound(1024, 1024), DivergenceError);
  CHECK_THROWS_AS(m_lower_bound(0, 1024), UndefinedAngleError);
}

TEST_CASE("expected_calls_estimate") {
  const Index size = Index{1} << 16;
  const double e = expected_calls_estimate(1, size);
  CHECK(std::abs(e / 1024.0 - 1.0) < 0.05);
  CHECK(std::isfinite(expected_calls_estimate(3 * 1024 / 4, 1024)));
  CHECK_THROWS_AS(expected_calls_estimate(3 * 1024 / 4 + 1, 1024), ValidityError);
}

TEST_CASE("classical_sampling_search") {
  const auto all = problem_with(5, 32);
  CHECK(classical_sampling_search(all, 1, 10).oracle_calls == 1);

  const auto none = problem_with(5, 0);
  const auto miss = classical_sampling_search(none, 1, 50);
  CHECK_FALSE(miss.found);
  CHECK(miss.oracle_calls == 50);

  const Index m = Index(std::llround(0.9 * 1024));
  const Stats s = summarize(run_classical_trials(problem_with(10, m), 9, 1000, 10000));
  CHECK(std::abs(s.mean - 1024.0 / double(m)) < 0.05);
}

TEST_CASE("figure5_curves") {
  const auto points = figure5_curves(Index{1} << 20, 100);
  REQUIRE(points.size() == 100);
  const auto& half = points[49];
  CHECK(half.ratio == 0.5);
  CHECK(half.q_real == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(half.m_real == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(points.back().m_capped);
  CHECK(points.back().q_real == doctest::Approx(0.5).epsilon(1e-12));
  // m_G drops below q_real only near M/N -> 0; past 1/2 it exceeds q_real.
  for (const auto& p : points) {
    if (p.ratio > 0.5 && p.ratio < 1.0) CHECK(p.m_real > p.q_real);
    if (p.ratio <= 0.05) {
      CHECK(std::abs(p.q_real / ((std::numbers::pi / 4) / std::sqrt(p.ratio)) - 1.0) < 0.02);
    }
  }
  CHECK_THROWS_AS(figure5_curves(1000, 10), DomainError);
  CHECK_THROWS_AS(figure5_curves(1024, 1), DomainError);
}
