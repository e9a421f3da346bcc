#include "grover/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace grover {

namespace {

void check_register(int qubits, int cap) {
  if (qubits < 1 || qubits > cap) {
    throw SizeError("register of " + std::to_string(qubits) + " qubits outside 1.." +
                    std::to_string(cap));
  }
}

void check_match(const QuantumState& state, const SearchProblem& problem) {
  if (state.qubits() != problem.qubits()) {
    throw SizeError("state has " + std::to_string(state.qubits()) + " qubits, problem has " +
                    std::to_string(problem.qubits()));
  }
}

void invert_about_mean(std::span<Amplitude> amplitudes) {
  Amplitude sum{0.0, 0.0};
  for (const auto& a : amplitudes) sum += a;
  const Amplitude twice_mean = 2.0 * sum / static_cast<double>(amplitudes.size());
  for (auto& a : amplitudes) a = twice_mean - a;
}

}  // namespace

QuantumState::QuantumState(int qubits, std::vector<Amplitude> amplitudes)
    : qubits_(qubits), amplitudes_(std::move(amplitudes)) {
  check_register(qubits, kMaxQubits);
  if (amplitudes_.size() != (Index{1} << qubits)) {
    throw SizeError("expected " + std::to_string(Index{1} << qubits) + " amplitudes, got " +
                    std::to_string(amplitudes_.size()));
  }
}

QuantumState QuantumState::basis(int qubits, Index index) {
  check_register(qubits, kMaxQubits);
  std::vector<Amplitude> amps(Index{1} << qubits);
  if (index >= amps.size()) throw SizeError("basis index out of range");
  amps[index] = 1.0;
  return QuantumState(qubits, std::move(amps));
}

double QuantumState::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amplitudes_) total += std::norm(a);
  return total;
}

QuantumState uniform_superposition(int qubits) {
  check_register(qubits, kMaxQubits);
  const Index size = Index{1} << qubits;
  return QuantumState(qubits,
                      std::vector<Amplitude>(size, 1.0 / std::sqrt(static_cast<double>(size))));
}

void apply_oracle(QuantumState& state, const SearchProblem& problem) {
  check_match(state, problem);
  for (Index i : problem.oracle().marked()) state[i] = -state[i];
}

void apply_diffusion_mean(QuantumState& state) { invert_about_mean(state.amplitudes()); }

void walsh_hadamard(std::span<Amplitude> amplitudes) {
  const std::size_t size = amplitudes.size();
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * half) {
      for (std::size_t j = block; j < block + half; ++j) {
        const Amplitude a = amplitudes[j];
        const Amplitude b = amplitudes[j + half];
        amplitudes[j] = a + b;
        amplitudes[j + half] = a - b;
      }
    }
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(size));
  for (auto& a : amplitudes) a *= scale;
}

void apply_diffusion_conjugated(QuantumState& state) {
  auto amps = state.amplitudes();
  walsh_hadamard(amps);
  for (std::size_t j = 1; j < amps.size(); ++j) amps[j] = -amps[j];
  walsh_hadamard(amps);
}

QuantumState grover_run(const SearchProblem& problem, std::uint64_t iterations,
                        Diffusion diffusion) {
  QuantumState state = uniform_superposition(problem.qubits());
  for (std::uint64_t q = 0; q < iterations; ++q) {
    apply_oracle(state, problem);
    if (diffusion == Diffusion::mean_inversion) {
      apply_diffusion_mean(state);
    } else {
      apply_diffusion_conjugated(state);
    }
  }
  return state;
}

double success_probability(const QuantumState& state, const SearchProblem& problem) {
  check_match(state, problem);
  double total = 0.0;
  for (Index i : problem.oracle().marked()) total += std::norm(state[i]);
  return std::clamp(total, 0.0, 1.0);
}

MeasurementSampler::MeasurementSampler(const QuantumState& state)
    : cumulative_(state.dimension()) {
  double running = 0.0;
  for (Index i = 0; i < state.dimension(); ++i) {
    running += std::norm(state[i]);
    cumulative_[i] = running;
  }
}

Index MeasurementSampler::operator()(Rng& rng) const {
  const double u = rng.uniform() * cumulative_.back();
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) {
    // u rounded up onto the total; take the last index with nonzero weight.
    std::size_t i = cumulative_.size() - 1;
    while (i > 0 && cumulative_[i - 1] == cumulative_[i]) --i;
    return i;
  }
  return static_cast<Index>(it - cumulative_.begin());
}

Index sample_measurement(const QuantumState& state, std::uint64_t seed) {
  Rng rng(seed);
  return MeasurementSampler(state)(rng);
}

QuantumState grover_run_with_ancilla(const SearchProblem& problem, std::uint64_t iterations) {
  const int n = problem.qubits();
  check_register(n, kMaxQubits - 1);
  const Index size = problem.size();

  // |0...0>|1>, then H on all n+1 qubits.
  QuantumState full = QuantumState::basis(n + 1, size);
  walsh_hadamard(full.amplitudes());

  auto amps = full.amplitudes();
  for (std::uint64_t q = 0; q < iterations; ++q) {
    // U_f |i>|y> = |i>|y xor f(i)>
    for (Index i : problem.oracle().marked()) std::swap(amps[i], amps[i + size]);
    // G acts on the register only.
    invert_about_mean(amps.first(size));
    invert_about_mean(amps.subspan(size));
  }
  return full;
}

AncillaReduction discard_ancilla(const QuantumState& full) {
  if (full.qubits() < 2) throw SizeError("ancilla state needs at least 2 qubits");
  const int n = full.qubits() - 1;
  const Index size = Index{1} << n;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  std::vector<Amplitude> reduced(size);
  double residual = 0.0;
  double p0 = 0.0;
  double p1 = 0.0;
  Amplitude coherence{0.0, 0.0};
  for (Index i = 0; i < size; ++i) {
    const Amplitude x = full[i];
    const Amplitude y = full[i + size];
    reduced[i] = (x - y) * inv_sqrt2;
    residual = std::max(residual, std::abs(x + y));
    p0 += std::norm(x);
    p1 += std::norm(y);
    coherence += x * std::conj(y);
  }
  const double purity = p0 * p0 + p1 * p1 + 2.0 * std::norm(coherence);
  return {QuantumState(n, std::move(reduced)), residual, purity};
}

}  // namespace grover
