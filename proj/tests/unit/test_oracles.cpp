#include <doctest.h>

#include <random>
#include <sstream>

#include "grover/problem.hpp"
#include "support/reference.hpp"

using namespace grover;

TEST_CASE("explicit_oracle marks exactly the given indices") {
  const auto o = explicit_oracle(3, {6});
  CHECK(o.match_count() == 1);
  for (Index i = 0; i < 8; ++i) CHECK(o(i) == (i == 6));

  const auto empty = explicit_oracle(2, {});
  CHECK(empty.match_count() == 0);

  const auto all = explicit_oracle(2, {3, 1, 0, 2});
  CHECK(all.match_count() == 4);
  for (Index i = 0; i < 4; ++i) CHECK(all(i));
}

TEST_CASE("explicit_oracle rejects bad input") {
  CHECK_THROWS_AS(explicit_oracle(3, {8}), ConstructionError);
  CHECK_THROWS_AS(explicit_oracle(3, {1, 2, 1}), ConstructionError);
  CHECK_THROWS_AS(explicit_oracle(0, {}), ConstructionError);
  CHECK_THROWS_AS(explicit_oracle(kMaxOracleQubits + 1, {}), ConstructionError);
}

TEST_CASE("nth_marked and nth_unmarked enumerate both classes in order") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Index size = Index{1} << n;
    const auto marked = reference::random_marked(rng, n, rng() % (size + 1));
    const MarkedSetOracle o(n, marked);
    Index k_marked = 0;
    Index k_unmarked = 0;
    for (Index i = 0; i < size; ++i) {
      if (o(i)) {
        CHECK(o.nth_marked(k_marked++) == i);
      } else {
        CHECK(o.nth_unmarked(k_unmarked++) == i);
      }
    }
    CHECK_THROWS_AS(o.nth_unmarked(k_unmarked), std::out_of_range);
    CHECK_THROWS_AS(o.nth_marked(k_marked), std::out_of_range);
  }
}

TEST_CASE("parse_dimacs minimal file") {
  const auto f = parse_dimacs("p cnf 2 1\n1 -2 0\n");
  CHECK(f.variable_count == 2);
  REQUIRE(f.clauses.size() == 1);
  CHECK(f.clauses[0] == std::vector<int>{1, -2});
}

TEST_CASE("parse_dimacs accepts comments, split clauses, CRLF and % terminator") {
  const auto f = parse_dimacs(
      "c a comment\r\n"
      "p cnf 3 2\r\n"
      "1   -3\n"
      "  2 0 -1\n"
      "c mid-file comment\n"
      "0\n"
      "%\n"
      "0\n");
  REQUIRE(f.clauses.size() == 2);
  CHECK(f.clauses[0] == std::vector<int>{1, -3, 2});
  CHECK(f.clauses[1] == std::vector<int>{-1});
}

TEST_CASE("parse_dimacs keeps an explicit empty clause") {
  const auto f = parse_dimacs("p cnf 2 2\n1 0\n0\n");
  REQUIRE(f.clauses.size() == 2);
  CHECK(f.clauses[1].empty());
  CHECK(cnf_oracle(f).match_count() == 0);
}

TEST_CASE("parse_dimacs errors carry line numbers") {
  auto line_of = [](const char* text) {
    try {
      parse_dimacs(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("1 2 0\n") == 1);                       // clause before header
  CHECK(line_of("c x\np dnf 2 1\n1 0\n") == 2);          // garbled header
  CHECK(line_of("p cnf 2 1\n1 3 0\n") == 2);             // literal out of range
  CHECK(line_of("p cnf 2 1\n1 x 0\n") == 2);             // not an integer
  CHECK(line_of("p cnf 2 1\n1 0\np cnf 2 1\n") == 3);    // duplicate header
  CHECK(line_of("p cnf 2 1\n\n1 2\n\n") == 3);           // unterminated final clause
  CHECK(line_of("c only comments\n") == 1);              // missing header
  CHECK_THROWS_AS(parse_dimacs("p cnf 0 0\n"), ParseError);

  try {
    parse_dimacs("p cnf 3 3\n1 0\n2 0\n");
    FAIL("expected a clause-count error");
  } catch (const ParseError& e) {
    const std::string what = e.what();
    CHECK(what.find("3 clauses") != std::string::npos);
    CHECK(what.find("2 were found") != std::string::npos);
  }
}

TEST_CASE("cnf_oracle truth tables") {
  SUBCASE("x1 or x2") {
    const auto p = cnf_oracle(parse_dimacs("p cnf 2 1\n1 2 0\n"));
    CHECK(p.match_count() == 3);
    CHECK_FALSE(p.is_marked(0));
    CHECK(p.is_marked(1));
    CHECK(p.is_marked(2));
    CHECK(p.is_marked(3));
  }
  SUBCASE("no clauses is the vacuous conjunction") {
    const auto p = cnf_oracle(CnfFormula{4, {}});
    CHECK(p.match_count() == 16);
  }
  SUBCASE("x1 and not x1") {
    CHECK(cnf_oracle(parse_dimacs("c comment\np cnf 1 2\n1 0\n-1 0\n")).match_count() == 0);
  }
  SUBCASE("variable k is bit k-1") {
    // x3 and not x1: bit 2 set, bit 0 clear.
    const auto p = cnf_oracle(parse_dimacs("p cnf 3 2\n3 0\n-1 0\n"));
    CHECK(p.match_count() == 2);
    CHECK(p.is_marked(0b100));
    CHECK(p.is_marked(0b110));
  }
  SUBCASE("cap") {
    CHECK_THROWS_AS(cnf_oracle(CnfFormula{kMaxEnumeratedQubits + 1, {}}), SizeError);
  }
}

TEST_CASE("property: cnf_oracle agrees with brute-force evaluation and survives rendering") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto f = reference::random_formula(rng, 12);
    const auto p = cnf_oracle(f);
    CHECK(p.match_count() == reference::brute_force_count(f));

    const auto again = cnf_oracle(parse_dimacs(render_dimacs(f)));
    REQUIRE(again.match_count() == p.match_count());
    const auto a = p.oracle().marked();
    const auto b = again.oracle().marked();
    CHECK(std::equal(a.begin(), a.end(), b.begin(), b.end()));

    // Spot-check the bit convention on a few indices.
    for (int k = 0; k < 4; ++k) {
      const Index i = rng() % p.size();
      CHECK(p.is_marked(i) == reference::satisfies(f, reference::decode(i, f.variable_count)));
    }
  }
}
