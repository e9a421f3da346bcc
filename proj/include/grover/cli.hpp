#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "grover/problem.hpp"

namespace grover::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNoSolution = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One point of the continuous M/N sweep behind the figure CSVs.
struct SweepRecord {
  double ratio = 0.0;
  double p_one = 0.0;        // first-iteration success
  double p_classical = 0.0;  // single random guess
  std::uint64_t q_opt = 0;
  double p_at_q_opt = 0.0;
  double q_real = 0.0;
  double m_real = 0.0;  // capped at sqrt(N)
  bool m_capped = false;
};

// Ratios k / grid for k = 1..grid.
std::vector<SweepRecord> sweep(std::size_t grid, Index size);

// 17 significant digits; integral values keep a decimal point ("1.0").
std::string format_double(double value);

// "<path>" of an existing DIMACS file, or "<n>:<i>,<j>,..." for an explicit
// marked set ("3:6", "2:" for no matches).
SearchProblem load_oracle(const std::string& source);

void cmd_table1(std::ostream& out, int n_min, int n_max);
void cmd_fig3(std::ostream& out, std::size_t grid);
void cmd_fig4(std::ostream& out, std::size_t grid);
void cmd_fig5(std::ostream& out, std::size_t grid, int list_qubits);

enum class RunMode { simulate, analytic };

struct RunOptions {
  std::string oracle;
  RunMode mode = RunMode::simulate;
  std::optional<std::uint64_t> iterations;
  std::uint64_t seed = 0;
};

int cmd_run(std::ostream& out, std::ostream& err, const RunOptions& options);

struct BbhtOptions {
  std::string oracle;
  std::uint64_t trials = 1000;
  double lambda = 8.0 / 7.0;
  std::uint64_t seed = 0;
  std::uint64_t max_calls = 1'000'000;
};

int cmd_bbht(std::ostream& out, std::ostream& err, const BbhtOptions& options);

// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace grover::cli
