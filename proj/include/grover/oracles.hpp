#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grover/errors.hpp"

namespace grover {

using Index = std::uint64_t;

// Largest register an oracle may describe; N = 2^n must fit an Index.
inline constexpr int kMaxOracleQubits = 62;

// Largest register whose truth table is enumerated eagerly (CNF oracles).
inline constexpr int kMaxEnumeratedQubits = 24;

// f(i) = 1 iff i is in a fixed set of marked indices.
//
// Indices are stored sorted, so membership is a binary search and the k-th
// marked / unmarked index can be found without materializing the complement.
class MarkedSetOracle {
 public:
  MarkedSetOracle(int qubits, std::vector<Index> marked);

  template <class Predicate>
  static MarkedSetOracle from_predicate(int qubits, Predicate&& predicate) {
    check_qubits(qubits, kMaxEnumeratedQubits);
    std::vector<Index> marked;
    const Index size = Index{1} << qubits;
    for (Index i = 0; i < size; ++i) {
      if (predicate(i)) marked.push_back(i);
    }
    return MarkedSetOracle(qubits, std::move(marked), sorted_tag{});
  }

  int qubits() const noexcept { return qubits_; }
  Index size() const noexcept { return Index{1} << qubits_; }
  Index match_count() const noexcept { return marked_.size(); }
  std::span<const Index> marked() const noexcept { return marked_; }

  bool contains(Index i) const;
  bool operator()(Index i) const { return contains(i); }

  // k-th smallest marked index, 0 <= k < match_count().
  Index nth_marked(Index k) const;
  // k-th smallest unmarked index, 0 <= k < size() - match_count().
  Index nth_unmarked(Index k) const;

 private:
  struct sorted_tag {};
  MarkedSetOracle(int qubits, std::vector<Index> marked, sorted_tag);
  static void check_qubits(int qubits, int cap);

  int qubits_;
  std::vector<Index> marked_;
};

MarkedSetOracle explicit_oracle(int qubits, std::vector<Index> indices);

// Conjunctive normal form over variables 1..variable_count.
// Literal v > 0 means x_v, v < 0 means not x_v.
struct CnfFormula {
  int variable_count = 0;
  std::vector<std::vector<int>> clauses;

  // Throws ConstructionError on literal 0 or |literal| > variable_count.
  void validate() const;

  // Bit k of the assignment holds the value of variable k + 1 (LSB first).
  bool satisfied_by(Index assignment) const;
};

CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(std::string_view text);
CnfFormula parse_dimacs_file(const std::filesystem::path& path);

std::string render_dimacs(const CnfFormula& formula);

}  // namespace grover
