#include <string>

#include "grover/analytic.hpp"

namespace grover {

namespace {

Index checked_list_size(int qubits) {
  if (qubits < 1 || qubits > kMaxAverageQubits) {
    throw DomainError("qubit count " + std::to_string(qubits) + " outside 1.." +
                      std::to_string(kMaxAverageQubits));
  }
  return Index{1} << qubits;
}

// S_k = sum_{M=0..N} C(N,M) M^k for k = 0..3, walking the binomial row.
struct PowerSums {
  mpz_class s0, s1, s2, s3;
};

PowerSums binomial_power_sums(Index size) {
  PowerSums sums;
  mpz_class binom = 1;  // C(N, 0)
  sums.s0 = 1;
  for (Index m = 1; m <= size; ++m) {
    // C(N, m) = C(N, m-1) (N - m + 1) / m, exact at every step.
    mpz_mul_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(size - m + 1));
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(m));
    const unsigned long m1 = m;
    mpz_add(sums.s0.get_mpz_t(), sums.s0.get_mpz_t(), binom.get_mpz_t());
    mpz_addmul_ui(sums.s1.get_mpz_t(), binom.get_mpz_t(), m1);
    mpz_addmul_ui(sums.s2.get_mpz_t(), binom.get_mpz_t(), m1 * m1);
    mpz_addmul_ui(sums.s3.get_mpz_t(), binom.get_mpz_t(), m1 * m1 * m1);
  }
  return sums;
}

}  // namespace

mpq_class success_prob_one_exact(Index matches, Index size) {
  if (matches > size || size == 0) throw DomainError("need 0 <= M <= N, N > 0");
  mpz_class m = static_cast<unsigned long>(matches);
  mpz_class n = static_cast<unsigned long>(size);
  mpz_class d = 3 * n - 4 * m;
  mpq_class value(m * d * d, n * n * n);
  value.canonicalize();
  return value;
}

mpq_class average_success_one(int qubits) {
  const Index size = checked_list_size(qubits);
  const PowerSums sums = binomial_power_sums(size);
  const mpz_class n = static_cast<unsigned long>(size);
  // sum C(N,M) M (3N - 4M)^2 / N^3 = sum C(N,M) (9N^2 M - 24 N M^2 + 16 M^3) / N^3
  mpz_class numerator = 9 * n * n * sums.s1 - 24 * n * sums.s2 + 16 * sums.s3;
  mpz_class denominator = n * n * n * sums.s0;  // s0 = 2^N
  mpq_class average(numerator, denominator);
  average.canonicalize();
  return average;
}

mpq_class average_classical(int qubits) {
  const Index size = checked_list_size(qubits);
  const PowerSums sums = binomial_power_sums(size);
  const mpz_class n = static_cast<unsigned long>(size);
  mpq_class average(sums.s1, n * sums.s0);
  average.canonicalize();
  return average;
}

Table1Row table1_row(int qubits) {
  if (qubits < 2) throw DomainError("table rows start at n = 2");
  const Index size = checked_list_size(qubits);
  // P1 = M (3N - 4M)^2 / N^3; compare integer numerators. With N <= 2^20 the
  // numerator is at most 9 * 2^60 and fits 64 bits.
  const auto numerator = [size](Index m) {
    const Index d = 4 * m > 3 * size ? 4 * m - 3 * size : 3 * size - 4 * m;
    return m * d * d;
  };
  Table1Row row;
  row.qubits = qubits;
  Index best = numerator(1);
  Index worst = best;
  row.argmax = row.argmin = 1;
  for (Index m = 2; m <= size; ++m) {
    const Index value = numerator(m);
    if (value > best) {
      best = value;
      row.argmax = m;
    }
    if (value < worst) {
      worst = value;
      row.argmin = m;
    }
  }
  const double cube = static_cast<double>(size) * static_cast<double>(size) *
                      static_cast<double>(size);
  row.max_prob = static_cast<double>(best) / cube;
  row.min_prob = static_cast<double>(worst) / cube;
  row.average = average_success_one(qubits);
  return row;
}

}  // namespace grover
