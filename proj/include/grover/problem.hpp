#pragma once

#include <utility>

#include "grover/oracles.hpp"

namespace grover {

// A list of N = 2^n items together with the oracle that marks the matches.
class SearchProblem {
 public:
  explicit SearchProblem(MarkedSetOracle oracle) : oracle_(std::move(oracle)) {}

  int qubits() const noexcept { return oracle_.qubits(); }
  Index size() const noexcept { return oracle_.size(); }
  Index match_count() const noexcept { return oracle_.match_count(); }
  bool is_marked(Index i) const { return oracle_.contains(i); }
  const MarkedSetOracle& oracle() const noexcept { return oracle_; }

 private:
  MarkedSetOracle oracle_;
};

// n = variable_count; f(i) = 1 iff assignment i satisfies every clause.
SearchProblem cnf_oracle(const CnfFormula& formula);

}  // namespace grover
