#include <doctest.h>

#include <random>

#include "sasaki/linalg.hpp"
#include "sasaki/rational.hpp"

using namespace sasaki;

TEST_CASE("parse_rational handles integers and fractions") {
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(parse_rational("1/3") + parse_rational("1/6") == rat(1, 2));
  CHECK(format_rational(parse_rational("4/6")) == "2/3");
  CHECK(format_rational(parse_rational("0")) == "0");
  CHECK(format_rational(parse_rational("-10/4")) == "-5/2");
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("a/b"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);
  CHECK_THROWS_AS(parse_rational(" 1"), ParseError);
}

TEST_CASE("format o parse is identity on canonical forms") {
  for (const char* s : {"0", "7", "-7", "2/3", "-5/2", "1000000000000000000000/7"})
    CHECK(format_rational(parse_rational(s)) == s);
}

TEST_CASE("solve_exact classifies the three outcomes") {
  LinearSystem diag{{{rat(2), rat(0)}, {rat(0), rat(2)}}, {rat(-4), rat(-4)}};
  auto res = solve_exact(diag);
  REQUIRE(res.status == SolveStatus::unique);
  CHECK(res.solution[0] == -2);
  CHECK(res.solution[1] == -2);

  LinearSystem dep{{{rat(1), rat(1)}, {rat(2), rat(2)}}, {rat(0), rat(0)}};
  CHECK(solve_exact(dep).status == SolveStatus::underdetermined);

  LinearSystem bad{{{rat(1), rat(0)}, {rat(1), rat(0)}}, {rat(0), rat(1)}};
  CHECK(solve_exact(bad).status == SolveStatus::inconsistent);
}

TEST_CASE("solve_exact recovers planted solutions exactly") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const size_t n = 1 + trial % 4;
    std::vector<Rational> planted(n);
    for (auto& x : planted) x = rat(num(rng), den(rng));
    LinearSystem sys;
    // Extra rows keep the system overdetermined but consistent.
    for (size_t i = 0; i < n + 2; ++i) {
      std::vector<Rational> row(n);
      for (auto& a : row) a = rat(num(rng), den(rng));
      Rational b;
      for (size_t j = 0; j < n; ++j) b += row[j] * planted[j];
      sys.rows.push_back(std::move(row));
      sys.rhs.push_back(b);
    }
    auto res = solve_exact(sys);
    if (res.status != SolveStatus::unique) continue;  // rank-deficient draw
    for (size_t j = 0; j < n; ++j) CHECK(res.solution[j] == planted[j]);
  }
}
