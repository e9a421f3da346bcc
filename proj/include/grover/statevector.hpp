#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "grover/problem.hpp"
#include "grover/random.hpp"

namespace grover {

using Amplitude = std::complex<double>;

// 2^24 amplitudes = 256 MiB.
inline constexpr int kMaxQubits = 24;

class QuantumState {
 public:
  QuantumState(int qubits, std::vector<Amplitude> amplitudes);

  static QuantumState basis(int qubits, Index index);

  int qubits() const noexcept { return qubits_; }
  Index dimension() const noexcept { return amplitudes_.size(); }

  std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
  std::span<Amplitude> amplitudes() noexcept { return amplitudes_; }
  const Amplitude& operator[](Index i) const { return amplitudes_[i]; }
  Amplitude& operator[](Index i) { return amplitudes_[i]; }

  double norm_squared() const;

 private:
  int qubits_;
  std::vector<Amplitude> amplitudes_;
};

enum class Diffusion { mean_inversion, hadamard_conjugated };

QuantumState uniform_superposition(int qubits);

// Phase oracle: alpha_i -> (-1)^f(i) alpha_i.
void apply_oracle(QuantumState& state, const SearchProblem& problem);

// alpha_j -> 2<alpha> - alpha_j. The mean is summed sequentially in index
// order so the result is reproducible bit for bit.
void apply_diffusion_mean(QuantumState& state);

// H^n (2|0><0| - I) H^n via two fast Walsh-Hadamard transforms.
void apply_diffusion_conjugated(QuantumState& state);

// In-place normalized Walsh-Hadamard transform (H on every qubit).
void walsh_hadamard(std::span<Amplitude> amplitudes);

QuantumState grover_run(const SearchProblem& problem, std::uint64_t iterations,
                        Diffusion diffusion = Diffusion::mean_inversion);

// Sum of |alpha_i|^2 over marked i.
double success_probability(const QuantumState& state, const SearchProblem& problem);

// Inverse-CDF sampler over |alpha_i|^2. Build once, draw many.
class MeasurementSampler {
 public:
  explicit MeasurementSampler(const QuantumState& state);
  Index operator()(Rng& rng) const;

 private:
  std::vector<double> cumulative_;
};

Index sample_measurement(const QuantumState& state, std::uint64_t seed);

// Full (n+1)-qubit circuit with the workspace qubit prepared in |1>. The
// workspace qubit is the most significant bit: index i + s*N holds |i>|s>.
QuantumState grover_run_with_ancilla(const SearchProblem& problem, std::uint64_t iterations);

struct AncillaReduction {
  QuantumState reduced;     // register state after projecting the workspace onto |->
  double minus_residual;    // max_i |alpha_{i,0} + alpha_{i,1}|; 0 iff workspace is exactly |->
  double workspace_purity;  // Tr(rho^2) of the workspace qubit; 1 iff unentangled
};

AncillaReduction discard_ancilla(const QuantumState& full);

}  // namespace grover
