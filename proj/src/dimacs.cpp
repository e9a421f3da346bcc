#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>

#include "grover/oracles.hpp"

namespace grover {

namespace {

std::optional<long long> to_integer(std::string_view token) {
  long long value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) return std::nullopt;
  return value;
}

}  // namespace

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula formula;
  std::optional<long long> declared_clauses;
  std::vector<int> current;
  std::size_t line_no = 0;
  std::size_t clause_start_line = 0;
  std::string line;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::istringstream tokens(line);
    std::string token;
    if (!(tokens >> token)) continue;
    if (token[0] == 'c') continue;
    if (token == "%") break;

    if (token == "p") {
      if (declared_clauses) throw ParseError(line_no, "duplicate problem line");
      std::string format, vars, count, extra;
      if (!(tokens >> format >> vars >> count) || format != "cnf") {
        throw ParseError(line_no, "malformed problem line, expected 'p cnf <vars> <clauses>'");
      }
      if (tokens >> extra) throw ParseError(line_no, "trailing data after problem line");
      const auto v = to_integer(vars);
      const auto c = to_integer(count);
      if (!v || !c || *v < 1 || *v > 1'000'000 || *c < 0) {
        throw ParseError(line_no, "invalid variable or clause count in problem line");
      }
      formula.variable_count = static_cast<int>(*v);
      declared_clauses = *c;
      continue;
    }

    if (!declared_clauses) throw ParseError(line_no, "clause data before 'p cnf' header");

    do {
      const auto literal = to_integer(token);
      if (!literal) throw ParseError(line_no, "invalid literal '" + token + "'");
      if (*literal == 0) {
        formula.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (*literal < -formula.variable_count || *literal > formula.variable_count) {
        throw ParseError(line_no, "literal " + token + " out of range 1.." +
                                      std::to_string(formula.variable_count));
      }
      if (current.empty()) clause_start_line = line_no;
      current.push_back(static_cast<int>(*literal));
    } while (tokens >> token);
  }

  if (!declared_clauses) throw ParseError(line_no, "missing 'p cnf' header");
  if (!current.empty()) {
    throw ParseError(clause_start_line, "unterminated final clause (missing trailing 0)");
  }
  if (static_cast<long long>(formula.clauses.size()) != *declared_clauses) {
    throw ParseError(line_no, "header declares " + std::to_string(*declared_clauses) +
                                  " clauses but " + std::to_string(formula.clauses.size()) +
                                  " were found");
  }
  return formula;
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

CnfFormula parse_dimacs_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return parse_dimacs(in);
}

std::string render_dimacs(const CnfFormula& formula) {
  std::ostringstream out;
  out << "p cnf " << formula.variable_count << ' ' << formula.clauses.size() << '\n';
  for (const auto& clause : formula.clauses) {
    for (int literal : clause) out << literal << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace grover
