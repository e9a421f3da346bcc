#include "grover/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "grover/analytic.hpp"
#include "grover/statevector.hpp"
#include "grover/unknown_m.hpp"

namespace grover::cli {

namespace {

constexpr int kMaxTableQubits = 20;

void check_grid(std::size_t grid) {
  if (grid < 2) throw UsageError("--grid must be at least 2");
}

std::uint64_t parse_index(std::string_view token, const std::string& source) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
    throw UsageError("malformed oracle spec '" + source + "'");
  }
  return value;
}

std::string bits_of(Index value, int width) {
  std::string bits(width, '0');
  for (int k = 0; k < width; ++k) {
    if ((value >> k) & 1U) bits[width - 1 - k] = '1';
  }
  return bits;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  std::string text(buf, ptr);
  if (text.find_first_of(".eni") == std::string::npos) text += ".0";
  return text;
}

std::vector<SweepRecord> sweep(std::size_t grid, Index size) {
  check_grid(grid);
  const auto curves = figure5_curves(size, grid);
  std::vector<SweepRecord> records;
  records.reserve(grid);
  for (const auto& point : curves) {
    SweepRecord r;
    r.ratio = point.ratio;
    r.p_one = success_prob_one_at_ratio(r.ratio);
    r.p_classical = r.ratio;
    r.q_opt = optimal_iterations_at_ratio(r.ratio);
    r.p_at_q_opt = success_prob_at_ratio(r.q_opt, r.ratio);
    r.q_real = point.q_real;
    r.m_real = point.m_real;
    r.m_capped = point.m_capped;
    records.push_back(r);
  }
  return records;
}

SearchProblem load_oracle(const std::string& source) {
  if (source.empty()) throw UsageError("--oracle is required");
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) return cnf_oracle(parse_dimacs_file(source));

  const auto colon = source.find(':');
  if (colon == std::string::npos) {
    throw UsageError("oracle '" + source + "' is neither a file nor '<n>:<indices>'");
  }
  const auto qubits = parse_index(std::string_view(source).substr(0, colon), source);
  if (qubits < 1 || qubits > static_cast<std::uint64_t>(kMaxOracleQubits)) {
    throw UsageError("oracle qubit count out of range");
  }
  std::vector<Index> marked;
  std::string_view rest = std::string_view(source).substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    marked.push_back(parse_index(rest.substr(0, comma), source));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  try {
    return SearchProblem(explicit_oracle(static_cast<int>(qubits), std::move(marked)));
  } catch (const ConstructionError& e) {
    throw UsageError(e.what());
  }
}

void cmd_table1(std::ostream& out, int n_min, int n_max) {
  if (n_min < 2 || n_min > n_max || n_max > kMaxTableQubits) {
    throw UsageError("need 2 <= --n-min <= --n-max <= " + std::to_string(kMaxTableQubits));
  }
  out << "n,max_prob,min_prob,avg_prob,avg_prob_exact\n";
  for (int n = n_min; n <= n_max; ++n) {
    const Table1Row row = table1_row(n);
    out << n << ',' << format_double(row.max_prob) << ',' << format_double(row.min_prob) << ','
        << format_double(row.average.get_d()) << ',' << row.average.get_str() << '\n';
  }
}

void cmd_fig3(std::ostream& out, std::size_t grid) {
  out << "ratio,p_one,p_classical\n";
  for (const auto& r : sweep(grid, Index{1} << 20)) {
    out << format_double(r.ratio) << ',' << format_double(r.p_one) << ','
        << format_double(r.p_classical) << '\n';
  }
}

void cmd_fig4(std::ostream& out, std::size_t grid) {
  out << "ratio,q_opt,p_at_q_opt\n";
  for (const auto& r : sweep(grid, Index{1} << 20)) {
    out << format_double(r.ratio) << ',' << r.q_opt << ',' << format_double(r.p_at_q_opt) << '\n';
  }
}

void cmd_fig5(std::ostream& out, std::size_t grid, int list_qubits) {
  if (list_qubits < 1 || list_qubits >= kMaxOracleQubits) {
    throw UsageError("--qubits out of range");
  }
  out << "ratio,q_real,m_real,q_floor,m_floor,m_capped\n";
  for (const auto& r : sweep(grid, Index{1} << list_qubits)) {
    out << format_double(r.ratio) << ',' << format_double(r.q_real) << ','
        << format_double(r.m_real) << ',' << r.q_opt << ','
        << static_cast<std::uint64_t>(std::floor(r.m_real)) << ',' << (r.m_capped ? 1 : 0)
        << '\n';
  }
}

int cmd_run(std::ostream& out, std::ostream& err, const RunOptions& options) {
  const SearchProblem problem = load_oracle(options.oracle);
  const Index matches = problem.match_count();
  const Index size = problem.size();
  if (matches == 0) {
    err << "error: the oracle marks no items (M = 0); there is nothing to search for\n";
    return kExitNoSolution;
  }
  if (options.mode == RunMode::simulate && problem.qubits() > kMaxQubits) {
    err << "error: " << problem.qubits() << " qubits exceeds the simulator cap of " << kMaxQubits
        << "; use --mode analytic\n";
    return kExitUsage;
  }

  const std::uint64_t q_opt = optimal_iterations(matches, size);
  const std::uint64_t iterations = options.iterations.value_or(q_opt);
  const double predicted = success_prob(iterations, matches, size);

  Rng rng(options.seed);
  std::optional<double> simulated;
  Index sample = 0;
  if (options.mode == RunMode::simulate) {
    const QuantumState state = grover_run(problem, iterations);
    simulated = success_probability(state, problem);
    sample = MeasurementSampler(state)(rng);
  } else {
    sample = sample_two_amplitude(problem, iterations, rng);
  }

  out << "field,value\n";
  out << "mode," << (options.mode == RunMode::simulate ? "simulate" : "analytic") << '\n';
  out << "qubits," << problem.qubits() << '\n';
  out << "N," << size << '\n';
  out << "M," << matches << '\n';
  out << "theta," << format_double(theta(matches, size)) << '\n';
  out << "q_opt," << q_opt << '\n';
  out << "iterations," << iterations << '\n';
  out << "predicted_p," << format_double(predicted) << '\n';
  if (simulated) out << "simulated_p," << format_double(*simulated) << '\n';
  out << "sample_index," << sample << '\n';
  out << "sample_bits," << bits_of(sample, problem.qubits()) << '\n';
  out << "sample_f," << (problem.is_marked(sample) ? 1 : 0) << '\n';
  return kExitOk;
}

int cmd_bbht(std::ostream& out, std::ostream& err, const BbhtOptions& options) {
  if (options.trials < 1) throw UsageError("--trials must be at least 1");
  const SearchProblem problem = load_oracle(options.oracle);
  BbhtConfig config;
  config.lambda = options.lambda;
  config.max_oracle_calls = options.max_calls;
  config.seed = options.seed;
  try {
    config.validate();
  } catch (const ConstructionError& e) {
    throw UsageError(e.what());
  }

  const Index matches = problem.match_count();
  const Index size = problem.size();
  if (matches == 0) {
    err << "warning: the oracle marks no items (M = 0); every trial runs to the "
        << options.max_calls << "-call cutoff\n";
  }

  const auto outcomes = run_bbht_trials(problem, config, options.trials);
  out << "trial,found_index,oracle_calls,rounds\n";
  double sum = 0.0;
  std::uint64_t successes = 0;
  for (std::size_t t = 0; t < outcomes.size(); ++t) {
    const auto& o = outcomes[t];
    out << t << ',';
    if (o.found) out << *o.found;
    out << ',' << o.oracle_calls << ',' << o.rounds << '\n';
    sum += static_cast<double>(o.oracle_calls);
    successes += o.found ? 1 : 0;
  }
  const double count = static_cast<double>(outcomes.size());
  const double mean = sum / count;
  double squares = 0.0;
  for (const auto& o : outcomes) {
    const double d = static_cast<double>(o.oracle_calls) - mean;
    squares += d * d;
  }
  const double stddev = outcomes.size() > 1 ? std::sqrt(squares / (count - 1.0)) : 0.0;

  out << "mean,," << format_double(mean) << ",\n";
  out << "stddev,," << format_double(stddev) << ",\n";
  out << "success_rate,," << format_double(static_cast<double>(successes) / count) << ",\n";
  out << "model_8mG,,";
  if (matches > 0 && 4 * matches <= 3 * size) {
    out << format_double(expected_calls_estimate(matches, size));
  } else if (matches > 0) {
    err << "warning: M > 3N/4, outside the range of the 8 m_G cost model\n";
  }
  out << ",\n";
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grover search simulator: tables, figure data and searches as CSV"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path, "Write CSV to this file instead of stdout");

  int n_min = 2;
  int n_max = 6;
  std::size_t grid = 1000;
  int list_qubits = 20;
  RunOptions run_options;
  BbhtOptions bbht_options;
  std::optional<std::uint64_t> seed;
  std::string mode = "simulate";
  std::optional<std::uint64_t> iterations;

  auto* table1 = app.add_subcommand("table1", "First-iteration max/min/average success");
  table1->add_option("--n-min", n_min)->capture_default_str();
  table1->add_option("--n-max", n_max)->capture_default_str();

  auto* fig3 = app.add_subcommand("fig3", "P1 and classical single-guess success vs M/N");
  fig3->add_option("--grid", grid)->capture_default_str();

  auto* fig4 = app.add_subcommand("fig4", "q_G and success at q_G vs M/N");
  fig4->add_option("--grid", grid)->capture_default_str();

  auto* fig5 = app.add_subcommand("fig5", "pi/(4 theta) and 1/sin(2 theta) vs M/N");
  fig5->add_option("--grid", grid)->capture_default_str();
  fig5->add_option("--qubits", list_qubits, "log2 N; m_real is capped at sqrt(N)")
      ->capture_default_str();

  auto* run_cmd = app.add_subcommand("run", "Run one Grover search");
  run_cmd->add_option("--oracle", run_options.oracle, "DIMACS path or <n>:<i,j,...>")
      ->required();
  run_cmd->add_option("--mode", mode)
      ->check(CLI::IsMember({"simulate", "analytic"}))
      ->capture_default_str();
  run_cmd->add_option("--iterations", iterations, "Default: optimal q_G");
  run_cmd->add_option("--seed", seed);

  auto* bbht = app.add_subcommand("bbht", "Unknown-M randomized search ensemble");
  bbht->add_option("--oracle", bbht_options.oracle, "DIMACS path or <n>:<i,j,...>")->required();
  bbht->add_option("--trials", bbht_options.trials)->capture_default_str();
  bbht->add_option("--lambda", bbht_options.lambda)->capture_default_str();
  bbht->add_option("--seed", seed);
  bbht->add_option("--max-calls", bbht_options.max_calls)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::uint64_t resolved_seed = 0;
  if (seed) {
    resolved_seed = *seed;
  } else if (const char* env = std::getenv("GROVER_SEED"); env != nullptr && *env != '\0') {
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), resolved_seed);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      err << "error: GROVER_SEED must be an unsigned integer\n";
      return kExitUsage;
    }
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << out_path << '\n';
      return kExitUsage;
    }
  }
  std::ostream& sink = out_path.empty() ? out : file;

  try {
    if (*table1) {
      cmd_table1(sink, n_min, n_max);
    } else if (*fig3) {
      cmd_fig3(sink, grid);
    } else if (*fig4) {
      cmd_fig4(sink, grid);
    } else if (*fig5) {
      cmd_fig5(sink, grid, list_qubits);
    } else if (*run_cmd) {
      run_options.mode = mode == "analytic" ? RunMode::analytic : RunMode::simulate;
      run_options.iterations = iterations;
      run_options.seed = resolved_seed;
      return cmd_run(sink, err, run_options);
    } else if (*bbht) {
      bbht_options.seed = resolved_seed;
      return cmd_bbht(sink, err, bbht_options);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}

}  // namespace grover::cli
