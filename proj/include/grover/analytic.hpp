#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "grover/oracles.hpp"

namespace grover {

// Marked/unmarked class amplitudes after `iteration` Grover iterations from
// the uniform state. Invariant: M a^2 + (N - M) b^2 = 1.
struct TwoAmpState {
  double marked = 0.0;
  double unmarked = 0.0;
  Index matches = 0;
  Index size = 0;
  std::uint64_t iteration = 0;

  double normalization() const {
    return static_cast<double>(matches) * marked * marked +
           static_cast<double>(size - matches) * unmarked * unmarked;
  }
  double success() const { return static_cast<double>(matches) * marked * marked; }
};

struct IterationPlan {
  double theta = 0.0;
  std::uint64_t iterations = 0;
  double predicted_success = 0.0;
};

// pi/(4 theta) values within this distance of an integer are snapped to it
// before flooring.
inline constexpr double kFloorGuard = 1e-9;

// --- angle and iteration counts -------------------------------------------

// arcsin(sqrt(M/N)) in (0, pi/2]. M = 0 throws UndefinedAngleError.
double theta(Index matches, Index size);
double theta_at_ratio(double ratio);

// floor(pi / (4 theta)) with the integer snap described above.
std::uint64_t optimal_iterations(Index matches, Index size);
std::uint64_t optimal_iterations_at_ratio(double ratio);
std::uint64_t guarded_floor(double value);

// Unfloored pi / (4 theta).
double optimal_iterations_real(Index matches, Index size);
double optimal_iterations_real_at_ratio(double ratio);

IterationPlan plan(Index matches, Index size);

// Plan over the list padded with N unmarked items: theta and q_G use 2N.
IterationPlan padded_plan(Index matches, Index size);

// --- first iteration --------------------------------------------------------

// (1/sqrt N)(1 - 2M/N): mean amplitude right after the first oracle call.
double mean_amplitude(Index matches, Index size);

// a1 = (3 - 4M/N)/sqrt N, b1 = (1 - 4M/N)/sqrt N.
TwoAmpState first_iteration_amplitudes(Index matches, Index size);

// 9r - 24r^2 + 16r^3 with r = M/N.
double success_prob_one(Index matches, Index size);
double success_prob_one_at_ratio(double ratio);
double failure_prob_one(Index matches, Index size);

// M/N; M = 0 allowed.
double classical_guess_prob(Index matches, Index size);

// --- q iterations -----------------------------------------------------------

TwoAmpState initial_amplitudes(Index matches, Index size);
TwoAmpState recurrence_step(const TwoAmpState& state);

// a_q = sin((2q+1)theta)/sqrt M, b_q = cos((2q+1)theta)/sqrt(N-M); b_q = 0 when M = N.
TwoAmpState closed_form(std::uint64_t iterations, Index matches, Index size);

// sin^2((2q+1)theta). q = 0 returns M/N exactly.
double success_prob(std::uint64_t iterations, Index matches, Index size);
double success_prob_at_ratio(std::uint64_t iterations, double ratio);
double failure_prob(std::uint64_t iterations, Index matches, Index size);

// --- exact averages over all oracles ----------------------------------------

// Largest n for which the binomial averages are computed.
inline constexpr int kMaxAverageQubits = 20;

// M (3N - 4M)^2 / N^3 as an exact rational.
mpq_class success_prob_one_exact(Index matches, Index size);

// 2^-N sum_{M=1..N} C(N,M) P1(M,N) with N = 2^n, by direct summation.
mpq_class average_success_one(int qubits);

// 2^-N sum_{M=1..N} C(N,M) M/N.
mpq_class average_classical(int qubits);

struct Table1Row {
  int qubits = 0;
  double max_prob = 0.0;
  double min_prob = 0.0;
  Index argmax = 0;  // smallest M attaining the maximum
  Index argmin = 0;
  mpq_class average;
};

// Extremes of P1 over integer M in 1..N, plus the exact average.
Table1Row table1_row(int qubits);

}  // namespace grover
