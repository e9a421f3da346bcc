#include "grover/unknown_m.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <thread>

#include "grover/analytic.hpp"
#include "grover/random.hpp"
#include "grover/statevector.hpp"

namespace grover {

namespace {

// Produces the measured index after j iterations from the uniform state.
class RoundMeasurer {
 public:
  RoundMeasurer(const SearchProblem& problem, BbhtBackend backend)
      : problem_(problem), backend_(backend) {
    if (backend == BbhtBackend::statevector && problem.qubits() > kMaxQubits) {
      throw SizeError("statevector backend limited to " + std::to_string(kMaxQubits) + " qubits");
    }
  }

  Index measure(std::uint64_t iterations, Rng& rng) {
    if (backend_ == BbhtBackend::statevector) {
      auto it = samplers_.find(iterations);
      if (it == samplers_.end()) {
        it = samplers_.emplace(iterations, MeasurementSampler(grover_run(problem_, iterations)))
                 .first;
      }
      return it->second(rng);
    }
    return sample_two_amplitude(problem_, iterations, rng);
  }

 private:
  const SearchProblem& problem_;
  BbhtBackend backend_;
  std::map<std::uint64_t, MeasurementSampler> samplers_;
};

SearchOutcome bbht_with(const SearchProblem& problem, const BbhtConfig& config, Rng& rng) {
  config.validate();
  RoundMeasurer measurer(problem, config.backend);
  const double m_cap = std::sqrt(static_cast<double>(problem.size()));
  double m = 1.0;
  SearchOutcome out;
  while (out.oracle_calls < config.max_oracle_calls) {
    std::uint64_t j = rng.below(static_cast<std::uint64_t>(std::ceil(m)));
    const std::uint64_t remaining = config.max_oracle_calls - out.oracle_calls;
    if (j + 1 > remaining) j = remaining - 1;

    const Index i = measurer.measure(j, rng);
    out.grover_iterations += j;
    out.oracle_calls += j + 1;
    ++out.rounds;
    if (problem.is_marked(i)) {
      out.found = i;
      return out;
    }
    m = std::min(config.lambda * m, m_cap);
  }
  return out;
}

SearchOutcome classical_with(const SearchProblem& problem, std::uint64_t max_calls, Rng& rng) {
  if (max_calls < 1) throw ConstructionError("max_calls must be at least 1");
  SearchOutcome out;
  while (out.oracle_calls < max_calls) {
    const Index i = rng.below(problem.size());
    ++out.oracle_calls;
    ++out.rounds;
    if (problem.is_marked(i)) {
      out.found = i;
      break;
    }
  }
  return out;
}

template <class Trial>
std::vector<SearchOutcome> run_parallel(std::uint64_t trials, unsigned threads, Trial&& trial) {
  std::vector<SearchOutcome> results(trials);
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(trials, 1)));
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t t = next++; t < trials; t = next++) results[t] = trial(t);
  };
  if (threads <= 1) {
    worker();
    return results;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  pool.clear();
  return results;
}

}  // namespace

Index sample_two_amplitude(const SearchProblem& problem, std::uint64_t iterations, Rng& rng) {
  const Index matches = problem.match_count();
  const Index size = problem.size();
  double p_marked = matches == 0 ? 0.0 : 1.0;
  if (matches > 0 && matches < size) {
    p_marked = success_prob_at_ratio(iterations,
                                     static_cast<double>(matches) / static_cast<double>(size));
  }
  const auto& oracle = problem.oracle();
  if (rng.uniform() < p_marked) return oracle.nth_marked(rng.below(matches));
  return oracle.nth_unmarked(rng.below(size - matches));
}

void BbhtConfig::validate() const {
  if (!(lambda > 1.0 && lambda <= 4.0 / 3.0)) {
    throw ConstructionError("lambda must lie in (1, 4/3], got " + std::to_string(lambda));
  }
  if (max_oracle_calls < 1) throw ConstructionError("max_oracle_calls must be at least 1");
}

SearchOutcome bbht_search(const SearchProblem& problem, const BbhtConfig& config) {
  Rng rng(config.seed);
  return bbht_with(problem, config, rng);
}

SearchOutcome classical_sampling_search(const SearchProblem& problem, std::uint64_t seed,
                                        std::uint64_t max_calls) {
  Rng rng(seed);
  return classical_with(problem, max_calls, rng);
}

std::vector<SearchOutcome> run_bbht_trials(const SearchProblem& problem, const BbhtConfig& config,
                                           std::uint64_t trials, unsigned threads) {
  config.validate();
  return run_parallel(trials, threads, [&](std::uint64_t t) {
    Rng rng(config.seed, t);
    return bbht_with(problem, config, rng);
  });
}

std::vector<SearchOutcome> run_classical_trials(const SearchProblem& problem, std::uint64_t seed,
                                                std::uint64_t max_calls, std::uint64_t trials,
                                                unsigned threads) {
  return run_parallel(trials, threads, [&](std::uint64_t t) {
    Rng rng(seed, t);
    return classical_with(problem, max_calls, rng);
  });
}

double m_lower_bound_at_ratio(double ratio) {
  if (ratio >= 1.0) throw DivergenceError("1/sin(2 theta) diverges at M = N");
  return 1.0 / std::sin(2.0 * theta_at_ratio(ratio));
}

double m_lower_bound(Index matches, Index size) {
  theta(matches, size);  // domain checks
  if (matches == size) throw DivergenceError("1/sin(2 theta) diverges at M = N");
  return m_lower_bound_at_ratio(static_cast<double>(matches) / static_cast<double>(size));
}

double expected_calls_estimate(Index matches, Index size) {
  theta(matches, size);
  if (static_cast<double>(matches) / static_cast<double>(size) > 0.75) {
    throw ValidityError("the unknown-M cost model only holds for M <= 3N/4");
  }
  return 8.0 * m_lower_bound(matches, size);
}

std::vector<Figure5Point> figure5_curves(Index size, std::size_t grid_size) {
  if (!std::has_single_bit(size)) throw DomainError("list size must be a power of two");
  if (grid_size < 2) throw DomainError("grid size must be at least 2");
  const double cap = std::sqrt(static_cast<double>(size));
  std::vector<Figure5Point> points;
  points.reserve(grid_size);
  for (std::size_t k = 1; k <= grid_size; ++k) {
    Figure5Point p;
    p.ratio = static_cast<double>(k) / static_cast<double>(grid_size);
    p.q_real = optimal_iterations_real_at_ratio(p.ratio);
    const double m = p.ratio < 1.0 ? m_lower_bound_at_ratio(p.ratio)
                                   : std::numeric_limits<double>::infinity();
    p.m_capped = !(m <= cap);
    p.m_real = p.m_capped ? cap : m;
    points.push_back(p);
  }
  return points;
}

}  // namespace grover
