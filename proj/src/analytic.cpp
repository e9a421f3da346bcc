#include "grover/analytic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

namespace grover {

namespace {

void check_size(Index size) {
  if (!std::has_single_bit(size)) {
    throw DomainError("list size " + std::to_string(size) + " is not a power of two");
  }
}

double checked_ratio(Index matches, Index size) {
  check_size(size);
  if (matches > size) {
    throw DomainError("match count " + std::to_string(matches) + " exceeds list size " +
                      std::to_string(size));
  }
  if (matches == 0) throw UndefinedAngleError("no marked items (M = 0): theta is undefined");
  return static_cast<double>(matches) / static_cast<double>(size);
}

void check_ratio(double ratio) {
  if (!(ratio > 0.0)) throw UndefinedAngleError("ratio M/N must be positive");
  if (!(ratio <= 1.0)) throw DomainError("ratio M/N must not exceed 1");
}

}  // namespace

double theta_at_ratio(double ratio) {
  check_ratio(ratio);
  return std::asin(std::sqrt(ratio));
}

double theta(Index matches, Index size) { return theta_at_ratio(checked_ratio(matches, size)); }

std::uint64_t guarded_floor(double value) {
  const double nearest = std::round(value);
  if (std::abs(value - nearest) < kFloorGuard) value = nearest;
  return static_cast<std::uint64_t>(std::floor(value));
}

double optimal_iterations_real_at_ratio(double ratio) {
  return std::numbers::pi / (4.0 * theta_at_ratio(ratio));
}

double optimal_iterations_real(Index matches, Index size) {
  return optimal_iterations_real_at_ratio(checked_ratio(matches, size));
}

std::uint64_t optimal_iterations_at_ratio(double ratio) {
  return guarded_floor(optimal_iterations_real_at_ratio(ratio));
}

std::uint64_t optimal_iterations(Index matches, Index size) {
  return optimal_iterations_at_ratio(checked_ratio(matches, size));
}

IterationPlan plan(Index matches, Index size) {
  const double ratio = checked_ratio(matches, size);
  const std::uint64_t q = optimal_iterations_at_ratio(ratio);
  return {theta_at_ratio(ratio), q, success_prob_at_ratio(q, ratio)};
}

IterationPlan padded_plan(Index matches, Index size) {
  checked_ratio(matches, size);
  if (size > (Index{1} << (kMaxOracleQubits - 1))) throw DomainError("padded list too large");
  return plan(matches, 2 * size);
}

double mean_amplitude(Index matches, Index size) {
  const double ratio = checked_ratio(matches, size);
  return (1.0 - 2.0 * ratio) / std::sqrt(static_cast<double>(size));
}

TwoAmpState first_iteration_amplitudes(Index matches, Index size) {
  const double ratio = checked_ratio(matches, size);
  const double scale = 1.0 / std::sqrt(static_cast<double>(size));
  return {(3.0 - 4.0 * ratio) * scale, (1.0 - 4.0 * ratio) * scale, matches, size, 1};
}

double success_prob_one_at_ratio(double ratio) {
  check_ratio(ratio);
  return std::clamp(ratio * (9.0 + ratio * (-24.0 + 16.0 * ratio)), 0.0, 1.0);
}

double success_prob_one(Index matches, Index size) {
  return success_prob_one_at_ratio(checked_ratio(matches, size));
}

double failure_prob_one(Index matches, Index size) {
  const double ratio = checked_ratio(matches, size);
  const double b = 1.0 - 4.0 * ratio;
  return std::clamp((1.0 - ratio) * b * b, 0.0, 1.0);
}

double classical_guess_prob(Index matches, Index size) {
  check_size(size);
  if (matches > size) throw DomainError("match count exceeds list size");
  return static_cast<double>(matches) / static_cast<double>(size);
}

TwoAmpState initial_amplitudes(Index matches, Index size) {
  checked_ratio(matches, size);
  const double a0 = 1.0 / std::sqrt(static_cast<double>(size));
  return {a0, a0, matches, size, 0};
}

TwoAmpState recurrence_step(const TwoAmpState& s) {
  const double n = static_cast<double>(s.size);
  const double m = static_cast<double>(s.matches);
  const double keep = (n - 2.0 * m) / n;
  const double to_marked = 2.0 * (n - m) / n;
  const double to_unmarked = 2.0 * m / n;
  return {keep * s.marked + to_marked * s.unmarked, keep * s.unmarked - to_unmarked * s.marked,
          s.matches, s.size, s.iteration + 1};
}

TwoAmpState closed_form(std::uint64_t iterations, Index matches, Index size) {
  const double angle = theta(matches, size) * static_cast<double>(2 * iterations + 1);
  const double a = std::sin(angle) / std::sqrt(static_cast<double>(matches));
  const double b =
      matches == size ? 0.0 : std::cos(angle) / std::sqrt(static_cast<double>(size - matches));
  return {a, b, matches, size, iterations};
}

double success_prob_at_ratio(std::uint64_t iterations, double ratio) {
  check_ratio(ratio);
  if (iterations == 0) return ratio;
  const double s = std::sin(static_cast<double>(2 * iterations + 1) * theta_at_ratio(ratio));
  return std::min(s * s, 1.0);
}

double success_prob(std::uint64_t iterations, Index matches, Index size) {
  return success_prob_at_ratio(iterations, checked_ratio(matches, size));
}

double failure_prob(std::uint64_t iterations, Index matches, Index size) {
  const double ratio = checked_ratio(matches, size);
  if (iterations == 0) return 1.0 - ratio;
  const double c = std::cos(static_cast<double>(2 * iterations + 1) * theta_at_ratio(ratio));
  return std::min(c * c, 1.0);
}

}  // namespace grover
