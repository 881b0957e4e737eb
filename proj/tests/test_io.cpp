#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lva/io.hpp"
#include "lva/subspaces.hpp"

using namespace lva;

TEST_CASE("rendering the generator states") {
  CHECK(render_vector(phi(1), OscBasis::A) == "3/16*a(-1)^2*e[2] - 1/8*a(-2)*e[2]");
  CHECK(render_vector(phi(1)) == "3/4*w(-1)^2*e[2] - 1/4*w(-2)*e[2]");
  CHECK(render_vector(phi(0)) == "1*e[2]");
  CHECK(render_vector(FockVector{}) == "0");
}

TEST_CASE("parsing the term grammar") {
  FockVector parsed = parse_vector("3/4*w(-1)^2*e[2] - 1/4*w(-2)*e[2]");
  CHECK(parsed == phi(1));

  CHECK(parse_vector("1*e[0]") == vacuum());
  CHECK(parse_vector("-2*w(-3)*e[-1]") ==
        Rational(-2) * FockVector(FockMonomial(-1, {3})));
  // a(-n) doubles the oscillator
  CHECK(parse_vector("3/16*a(-1)^2*e[2] - 1/8*a(-2)*e[2]") == phi(1));
  // merging like terms across the sum
  CHECK(parse_vector("1*e[2] + 1/2*e[2]") == Rational(3, 2) * lattice_state(2));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_vector("1*w(2)*e[0]"), ParseError);
  CHECK_THROWS_AS(parse_vector("1*w(-1)"), ParseError);
  CHECK_THROWS_AS(parse_vector("q + 1"), ParseError);
  CHECK_THROWS_AS(parse_vector("1*e[0] 2*e[0]"), ParseError);
}

TEST_CASE("round trip through the grammar") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    FockVector v;
    std::size_t terms = 1 + rng() % 4;
    for (std::size_t t = 0; t < terms; ++t) {
      std::vector<std::int64_t> parts;
      std::size_t count = rng() % 3;
      for (std::size_t i = 0; i < count; ++i) {
        parts.push_back(1 + static_cast<std::int64_t>(rng() % 4));
      }
      std::int64_t num = static_cast<std::int64_t>(rng() % 11) - 5;
      std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 6);
      v.add(FockMonomial(static_cast<std::int64_t>(rng() % 9) - 4, parts), Rational(num, den));
    }
    CHECK(parse_vector(render_vector(v)) == v);
    CHECK(parse_vector(render_vector(v, OscBasis::A)) == v);
  }
}
