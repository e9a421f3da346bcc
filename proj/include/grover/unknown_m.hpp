#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "grover/problem.hpp"
#include "grover/random.hpp"

namespace grover {

// How a round's j-iteration measurement is produced.
enum class BbhtBackend {
  // Marked class with probability sin^2((2j+1) theta), then uniform within the
  // class. Exact from a uniform start and independent of n.
  two_amplitude,
  // Full state-vector run of j iterations followed by a sampled measurement.
  statevector,
};

struct BbhtConfig {
  double lambda = 8.0 / 7.0;
  std::uint64_t max_oracle_calls = 1'000'000;
  std::uint64_t seed = 0;
  BbhtBackend backend = BbhtBackend::two_amplitude;

  // 1 < lambda <= 4/3 and max_oracle_calls >= 1, else ConstructionError.
  void validate() const;
};

struct SearchOutcome {
  std::optional<Index> found;
  std::uint64_t oracle_calls = 0;       // Grover iterations + one verification per round
  std::uint64_t grover_iterations = 0;
  std::uint64_t rounds = 0;

  friend bool operator==(const SearchOutcome&, const SearchOutcome&) = default;
};

// Measurement after `iterations` Grover iterations from the uniform state,
// drawn from the two-class distribution: marked with probability
// sin^2((2q+1) theta), then uniform within the chosen class.
Index sample_two_amplitude(const SearchProblem& problem, std::uint64_t iterations, Rng& rng);

// Randomized search for an unknown number of matches:
//   m = 1; repeat { j ~ U{0..ceil(m)-1}; run j iterations from the uniform
//   state; measure i; if f(i) = 1 stop; m = min(lambda m, sqrt N) }.
// A round that does not fit the remaining oracle budget is truncated so an
// unsuccessful run reports exactly max_oracle_calls.
SearchOutcome bbht_search(const SearchProblem& problem, const BbhtConfig& config);

// Independent uniform guesses, each verified with one oracle call.
SearchOutcome classical_sampling_search(const SearchProblem& problem, std::uint64_t seed,
                                        std::uint64_t max_calls);

// 1/sin(2 theta). Throws DivergenceError at M = N.
double m_lower_bound(Index matches, Index size);
double m_lower_bound_at_ratio(double ratio);

// 8 m_G; valid for 1 <= M <= 3N/4, ValidityError beyond.
double expected_calls_estimate(Index matches, Index size);

struct Figure5Point {
  double ratio = 0.0;
  double q_real = 0.0;  // pi / (4 theta)
  double m_real = 0.0;  // 1 / sin(2 theta), capped at sqrt(N)
  bool m_capped = false;
};

// Ratios k / grid_size for k = 1..grid_size. m_real is capped at sqrt(N),
// the ceiling on m inside the search loop; the cap always applies at ratio 1.
std::vector<Figure5Point> figure5_curves(Index size, std::size_t grid_size);

// Ensemble helpers. Trial t uses the stream Rng(seed, t); results are in
// trial order regardless of thread count.
std::vector<SearchOutcome> run_bbht_trials(const SearchProblem& problem, const BbhtConfig& config,
                                           std::uint64_t trials, unsigned threads = 0);

std::vector<SearchOutcome> run_classical_trials(const SearchProblem& problem, std::uint64_t seed,
                                                std::uint64_t max_calls, std::uint64_t trials,
                                                unsigned threads = 0);

}  // namespace grover
