#include <catch2/catch_amalgamated.hpp>

#include "lva/graded.hpp"
#include "lva/subspaces.hpp"

using namespace lva;

namespace {

// Independent partition counter (parts of any size), simple recursion with
// memo-free bounded inputs.
std::int64_t count_partitions(std::int64_t n, std::int64_t max_part) {
  if (n < 0) return 0;
  if (n == 0) return 1;
  std::int64_t total = 0;
  for (std::int64_t p = std::min(n, max_part); p >= 1; --p) {
    total += count_partitions(n - p, p);
  }
  return total;
}

}  // namespace

TEST_CASE("graded piece enumeration") {
  GradedPiece w1 = enumerate_graded_monomials(2, Rational(1));
  REQUIRE(w1.dim() == 1);
  CHECK(w1.monomials[0] == exponential(2));

  GradedPiece w3 = enumerate_graded_monomials(2, Rational(3));
  REQUIRE(w3.dim() == 2);
  CHECK(w3.monomials[0] == FockMonomial(2, {2}));
  CHECK(w3.monomials[1] == FockMonomial(2, {1, 1}));

  CHECK(enumerate_graded_monomials(1, Rational(1, 2)).dim() == 0);
}

TEST_CASE("piece sizes count partitions") {
  for (std::int64_t charge = -3; charge <= 3; ++charge) {
    for (std::int64_t off = 0; off <= 7; ++off) {
      GradedPiece piece = enumerate_graded_monomials(charge, charge * charge + 4 * off);
      CHECK(static_cast<std::int64_t>(piece.dim()) == count_partitions(off, off));
    }
  }
}

TEST_CASE("span ranks") {
  GradedPiece piece = enumerate_graded_monomials(2, Rational(3));
  FockVector phi1 = phi(1);
  FockVector dd_phi0 = derivation(derivation(phi(0)));

  CHECK(span_rank({phi1}, piece).rank == 1);
  CHECK(span_rank({}, piece).rank == 0);
  FockVector combo = Rational(3) * phi1 - dd_phi0;
  CHECK(span_rank({phi1, dd_phi0, combo}, piece).rank == 2);
}

TEST_CASE("span rejects vectors outside the piece") {
  GradedPiece piece = enumerate_graded_monomials(2, Rational(3));
  CHECK_THROWS_AS(span_rank({lattice_state(2)}, piece), BidegreeMismatchError);
}

TEST_CASE("mode kernels") {
  GradedPiece piece = enumerate_graded_monomials(2, Rational(3));
  std::vector<std::pair<FockVector, HalfInt>> ops;
  for (std::int64_t n = 0; n <= 3; ++n) ops.emplace_back(lattice_state(2), HalfInt::whole(n));
  LinearSpan kernel = mode_kernel(ops, piece);
  CHECK(kernel.rank == 2);

  // explicit commutant vectors lie inside
  CHECK(kernel.contains(coordinates(generalized_principal_vector({0, 2}), piece)));
  CHECK(kernel.contains(coordinates(generalized_principal_vector({1, 1}), piece)));

  CHECK(mode_kernel({}, piece).rank == piece.dim());

  GradedPiece vac_piece = enumerate_graded_monomials(0, Rational(0));
  LinearSpan vac_kernel =
      mode_kernel({{lattice_state(2), HalfInt::whole(0)}}, vac_piece);
  CHECK(vac_kernel.rank == 1);
}

TEST_CASE("solve_in_span expresses a vector in a basis") {
  GradedPiece piece = enumerate_graded_monomials(2, Rational(3));
  FockVector b1 = generalized_principal_vector({0, 2});
  FockVector b2 = generalized_principal_vector({1, 1});
  FockVector target = Rational(2) * b1 - Rational(5, 3) * b2;
  auto coeffs = solve_in_span({b1, b2}, piece, target);
  REQUIRE(coeffs.has_value());
  CHECK((*coeffs)[0] == Rational(2));
  CHECK((*coeffs)[1] == Rational(-5, 3));

  // outside the span
  auto none = solve_in_span({b1}, piece, b2);
  CHECK(!none.has_value());
}

TEST_CASE("rref is deterministic and idempotent") {
  Matrix m = {{Rational(0), Rational(2), Rational(4)},
              {Rational(1), Rational(1), Rational(1)},
              {Rational(1), Rational(3), Rational(5)}};
  std::size_t rank = rref(m);
  CHECK(rank == 2);
  Matrix again = m;
  CHECK(rref(again) == rank);
  CHECK(again == m);
  // leading ones
  CHECK(m[0][0] == Rational(1));
  CHECK(m[1][1] == Rational(1));
}
