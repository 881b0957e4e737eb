#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lva/fock.hpp"
#include "lva/vertex.hpp"

using namespace lva;

namespace {

// e^w(-5/2)e^w(-2)1 built by hand, avoiding the subspace helpers.
FockVector phi_like() {
  return vertex_mode_apply(1, HalfInt::halves(-5),
                           vertex_mode_apply(1, HalfInt::whole(-2), vacuum()));
}

std::vector<FockMonomial> sample_monomials() {
  return {
      vacuum_monomial(),
      exponential(1),
      exponential(2),
      exponential(-1),
      exponential(-2),
      FockMonomial(0, {1}),
      FockMonomial(1, {1}),
      FockMonomial(2, {2, 1}),
      FockMonomial(-1, {2}),
      FockMonomial(3, {1}),
  };
}

}  // namespace

TEST_CASE("schur polynomials of the creation exponential") {
  FockVector v(FockMonomial(2, {3}), Rational(5, 7));
  CHECK(schur_creation_apply(0, 1, v) == v);

  FockVector s2 = schur_creation_apply(2, 1, vacuum());
  CHECK(s2.coefficient(FockMonomial(0, {1, 1})) == Rational(1, 2));
  CHECK(s2.coefficient(FockMonomial(0, {2})) == Rational(1, 2));
  CHECK(s2.size() == 2);

  FockVector s1a = schur_creation_apply(1, 2, vacuum());
  CHECK(s1a == Rational(2) * FockVector(FockMonomial(0, {1})));
}

TEST_CASE("lattice vertex operator modes") {
  // e^w(-3/2) e^w = e^{2w}
  CHECK(vertex_mode_apply(1, HalfInt::halves(-3), lattice_state(1)) == lattice_state(2));
  // e^w(-1/2) e^w = 0
  CHECK(vertex_mode_apply(1, HalfInt::halves(-1), lattice_state(1)).is_zero());
  // e^a(0) e^{-a} = a(-1)1 = 2 w(-1)1
  CHECK(vertex_mode_apply(2, HalfInt::whole(0), lattice_state(-2)) ==
        Rational(2) * FockVector(FockMonomial(0, {1})));
  // e^w(-5/2) w(-1)e^w = 3/4 w(-1)^2 e^{2w} - 1/4 w(-2) e^{2w}
  FockVector result = vertex_mode_apply(1, HalfInt::halves(-5), FockVector(FockMonomial(1, {1})));
  FockVector expected;
  expected.add(FockMonomial(2, {1, 1}), Rational(3, 4));
  expected.add(FockMonomial(2, {2}), Rational(-1, 4));
  CHECK(result == expected);
}

TEST_CASE("incompatible mode cosets contribute zero") {
  CHECK(vertex_mode_apply(1, HalfInt::whole(0), lattice_state(1)).is_zero());
  CHECK(vertex_mode_apply(2, HalfInt::halves(-1), lattice_state(2)).is_zero());
}

TEST_CASE("state_field_mode agrees with vertex_mode_apply on exi1ponentials") {
  for (const auto& vm : sample_monomials()) {
    for (std::int64_t d = -8; d <= 6; ++d) {
      HalfInt m = HalfInt::halves(d);
      CHECK(state_field_mode(lattice_state(2), m, FockVector(vm)) ==
            vertex_mode_apply(2, m, FockVector(vm)));
      CHECK(state_field_mode(lattice_state(1), m, FockVector(vm)) ==
            vertex_mode_apply(1, m, FockVector(vm)));
    }
  }
}

TEST_CASE("creation identity") {
  for (const auto& um : sample_monomials()) {
    FockVector u(um);
    CHECK(state_field_mode(u, HalfInt::whole(-1), vacuum()) == u);
    for (std::int64_t n = 0; n <= 3; ++n) {
      CHECK(state_field_mode(u, HalfInt::whole(n), vacuum()).is_zero());
    }
  }
}

TEST_CASE("grading contract of modes") {
  for (const auto& um : sample_monomials()) {
    for (const auto& vm : sample_monomials()) {
      for (std::int64_t d = -6; d <= 6; ++d) {
        HalfInt m = HalfInt::halves(d);
        FockVector image = state_field_mode(FockVector(um), m, FockVector(vm));
        if (image.is_zero()) continue;
        CHECK(image.is_homogeneous(um.charge + vm.charge,
                                   um.weight_x4() + vm.weight_x4() - 2 * d - 4));
      }
    }
  }
}

TEST_CASE("translation covariance") {
  for (const auto& um : sample_monomials()) {
    for (const auto& vm : sample_monomials()) {
      FockVector du = derivation(FockVector(um));
      for (std::int64_t d = -5; d <= 5; ++d) {
        HalfInt m = HalfInt::halves(d);
        FockVector lhs = state_field_mode(du, m, FockVector(vm));
        FockVector rhs = (-m.as_rational()) *
                         state_field_mode(FockVector(um), m - 1, FockVector(vm));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("heisenberg-vertex commutator") {
  for (const auto& vm : sample_monomials()) {
    for (std::int64_t b : {1, 2, -1}) {
      for (std::int64_t n = -3; n <= 3; ++n) {
        for (std::int64_t d = -5; d <= 3; ++d) {
          HalfInt m = HalfInt::halves(d);
          FockVector v(vm);
          FockVector lhs = heisenberg_apply(n, vertex_mode_apply(b, m, v)) -
                           vertex_mode_apply(b, m, heisenberg_apply(n, v));
          FockVector rhs = Rational(b, 2) * vertex_mode_apply(b, m + n, v);
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("derivation basics") {
  CHECK(derivation(vacuum()).is_zero());
  CHECK(derivation(lattice_state(1)) == FockVector(FockMonomial(1, {1})));
  for (const auto& vm : sample_monomials()) {
    FockVector v(vm);
    CHECK(derivation(v) == state_field_mode(v, HalfInt::whole(-2), vacuum()));
  }
}

TEST_CASE("results do not depend on the memo table") {
  FockVector p1 = phi_like();
  clear_mode_cache();
  FockVector cold = state_field_mode(p1, HalfInt::whole(1), p1);
  FockVector warm = state_field_mode(p1, HalfInt::whole(1), p1);
  CHECK(cold == warm);
  clear_mode_cache();
  CHECK(state_field_mode(p1, HalfInt::whole(1), p1) == cold);
}

TEST_CASE("virasoro modes") {
  CHECK(virasoro_mode(0, lattice_state(1)) == Rational(1, 4) * lattice_state(1));
  CHECK(virasoro_mode(1, lattice_state(2)).is_zero());
  CHECK(state_field_mode(virasoro_vector(), HalfInt::whole(1), lattice_state(2)) ==
        lattice_state(2));
  for (const auto& vm : sample_monomials()) {
    FockVector v(vm);
    CHECK(virasoro_mode(-1, v) == derivation(v));
    CHECK(virasoro_mode(0, v) == vm.weight() * v);
  }
}
