#include "grover/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "grover/problem.hpp"

namespace grover {

void MarkedSetOracle::check_qubits(int qubits, int cap) {
  if (qubits < 1 || qubits > cap) {
    throw ConstructionError("qubit count " + std::to_string(qubits) + " outside 1.." +
                            std::to_string(cap));
  }
}

MarkedSetOracle::MarkedSetOracle(int qubits, std::vector<Index> marked) : qubits_(qubits) {
  check_qubits(qubits, kMaxOracleQubits);
  std::sort(marked.begin(), marked.end());
  if (!marked.empty() && marked.back() >= size()) {
    throw ConstructionError("marked index " + std::to_string(marked.back()) +
                            " out of range for " + std::to_string(qubits) + " qubits");
  }
  if (auto dup = std::adjacent_find(marked.begin(), marked.end()); dup != marked.end()) {
    throw ConstructionError("duplicate marked index " + std::to_string(*dup));
  }
  marked_ = std::move(marked);
}

MarkedSetOracle::MarkedSetOracle(int qubits, std::vector<Index> marked, sorted_tag)
    : qubits_(qubits), marked_(std::move(marked)) {}

bool MarkedSetOracle::contains(Index i) const {
  return std::binary_search(marked_.begin(), marked_.end(), i);
}

Index MarkedSetOracle::nth_marked(Index k) const {
  if (k >= marked_.size()) throw std::out_of_range("nth_marked: rank out of range");
  return marked_[k];
}

Index MarkedSetOracle::nth_unmarked(Index k) const {
  if (k >= size() - match_count()) throw std::out_of_range("nth_unmarked: rank out of range");
  // marked_[i] - i is non-decreasing; every marked index with marked_[i] - i <= k
  // sits below the answer and shifts it up by one.
  Index lo = 0;
  Index hi = marked_.size();
  while (lo < hi) {
    const Index mid = lo + (hi - lo) / 2;
    if (marked_[mid] - mid <= k) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return k + lo;
}

MarkedSetOracle explicit_oracle(int qubits, std::vector<Index> indices) {
  return MarkedSetOracle(qubits, std::move(indices));
}

void CnfFormula::validate() const {
  if (variable_count < 1) throw ConstructionError("variable count must be positive");
  for (const auto& clause : clauses) {
    for (int literal : clause) {
      if (literal == 0 || std::abs(literal) > variable_count) {
        throw ConstructionError("literal " + std::to_string(literal) + " out of range 1.." +
                                std::to_string(variable_count));
      }
    }
  }
}

bool CnfFormula::satisfied_by(Index assignment) const {
  for (const auto& clause : clauses) {
    bool any = false;
    for (int literal : clause) {
      const bool value = (assignment >> (std::abs(literal) - 1)) & 1U;
      if (value == (literal > 0)) {
        any = true;
        break;
      }
    }
    if (!any) return false;
  }
  return true;
}

SearchProblem cnf_oracle(const CnfFormula& formula) {
  formula.validate();
  if (formula.variable_count > kMaxEnumeratedQubits) {
    throw SizeError("CNF with " + std::to_string(formula.variable_count) +
                    " variables exceeds the enumeration cap of " +
                    std::to_string(kMaxEnumeratedQubits));
  }
  return SearchProblem(MarkedSetOracle::from_predicate(
      formula.variable_count, [&](Index i) { return formula.satisfied_by(i); }));
}

}  // namespace grover
