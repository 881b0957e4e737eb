#include <catch2/catch_amalgamated.hpp>

#include "lva/jet.hpp"
#include "lva/qseries.hpp"
#include "lva/zhu.hpp"

using namespace lva;

namespace {

// Independent count of jet monomials of weight d over letters of the given
// weights, each available in infinitely many derivative orders.
std::int64_t free_monomial_count(const std::vector<std::int64_t>& var_weights, std::int64_t d) {
  // letters: weight w for each variable of weight <= w, i.e. multiplicity
  // of available letters at weight w = #{vars with base weight <= w}.
  std::vector<std::int64_t> table(static_cast<std::size_t>(d) + 1, 0);
  table[0] = 1;
  for (std::int64_t w = 1; w <= d; ++w) {
    std::int64_t copies = 0;
    for (auto vw : var_weights) {
      if (vw <= w) ++copies;
    }
    // each letter of weight w, used any number of times
    for (std::int64_t copy = 0; copy < copies; ++copy) {
      for (std::int64_t n = w; n <= d; ++n) {
        table[static_cast<std::size_t>(n)] += table[static_cast<std::size_t>(n - w)];
      }
    }
  }
  return table[static_cast<std::size_t>(d)];
}

}  // namespace

TEST_CASE("zhu quotient of W") {
  ZhuClassTable table = c2_dims(Space::W, 6);
  const std::size_t expected[] = {1, 1, 0, 0, 0, 0, 0};
  for (std::int64_t w = 0; w <= 6; ++w) CHECK(table.quotient_at_weight(w) == expected[w]);
}

TEST_CASE("zhu quotient of C") {
  ZhuClassTable table = c2_dims(Space::C, 7);
  const std::size_t expected[] = {1, 1, 0, 1, 0, 1, 0, 1};
  for (std::int64_t w = 0; w <= 7; ++w) CHECK(table.quotient_at_weight(w) == expected[w]);
}

TEST_CASE("zhu quotient of the lattice algebra at weight zero") {
  ZhuClassTable table = c2_dims(Space::VA1, 2);
  CHECK(table.quotient_at_weight(0) == 1);
}

TEST_CASE("zhu classes of the generators multiply to zero") {
  CHECK(zhu_product(phi(1), phi(1), Space::C).zero);
  CHECK(zhu_bracket(phi(1), phi(2), Space::C).zero);
  ZhuClass unit = zhu_product(vacuum(), phi(3), Space::C);
  CHECK(!unit.zero);
  CHECK(zhu_reduce(unit.representative - phi(3), Space::C).zero);
}

TEST_CASE("zhu product is commutative and bracket antisymmetric in slices") {
  std::vector<FockVector> samples = {
      lattice_state(2), FockVector(FockMonomial(0, {1})), lattice_state(-2),
      FockVector(FockMonomial(2, {1})), FockVector(FockMonomial(0, {1, 1}))};
  for (const auto& u : samples) {
    for (const auto& v : samples) {
      FockVector prod_diff = state_field_mode(u, HalfInt::whole(-1), v) -
                             state_field_mode(v, HalfInt::whole(-1), u);
      CHECK(zhu_reduce(prod_diff, Space::VA1).zero);
      FockVector bracket_sum = state_field_mode(u, HalfInt::whole(0), v) +
                               state_field_mode(v, HalfInt::whole(0), u);
      CHECK(zhu_reduce(bracket_sum, Space::VA1).zero);
    }
  }
}

TEST_CASE("C(-2)C contains the derivative of C^a and all higher charges") {
  for (std::int64_t w = 2; w <= 8; ++w) {
    for (const auto& t : basis_tuples(Space::C, 2, 4 * (w - 1))) {
      FockVector dv = derivation(generalized_principal_vector(t));
      CHECK(zhu_reduce(dv, Space::C).zero);
    }
    for (const auto& t : basis_tuples(Space::C, 4, 4 * w)) {
      CHECK(zhu_reduce(generalized_principal_vector(t), Space::C).zero);
    }
  }
}

TEST_CASE("jet dimension of a relation-free ring counts weighted monomials") {
  DifferentialRingSpec spec;
  spec.variables = {{"x", 1}, {"y", 2}};
  for (std::int64_t d = 0; d <= 6; ++d) {
    CHECK(jet_dimension(spec, d) == free_monomial_count({1, 2}, d));
  }
}

TEST_CASE("jet algebra of R_W matches the principal character") {
  DifferentialRingSpec spec = ring_spec_rw();
  QSeries jet = jet_character(spec, 8);
  QSeries wchar = fermionic_char_W(8);
  CHECK(!QSeries::compare(jet, wchar).has_value());
}

TEST_CASE("jet algebra of R_C") {
  DifferentialRingSpec spec = ring_spec_rc(5);
  const std::int64_t expected[] = {1, 1, 1, 2, 3, 5};
  for (std::int64_t d = 0; d <= 5; ++d) CHECK(jet_dimension(spec, d) == expected[d]);

  QSeries jet = jet_character(spec, 5);
  QSeries cchar = fermionic_char_C(5);
  auto mismatch = QSeries::compare(jet, cchar);
  REQUIRE(mismatch.has_value());
  CHECK(mismatch->q_power == 5);
  CHECK(mismatch->left == 5);
  CHECK(mismatch->right == 4);
}

TEST_CASE("jet polynomial parsing") {
  DifferentialRingSpec spec;
  spec.variables = {{"x1", 1}, {"x2", 3}};
  auto p = parse_jet_polynomial(spec, "x1*x1");
  REQUIRE(p.size() == 1);
  CHECK(p.begin()->second == Rational(1));
  CHECK(spec.monomial_weight(p.begin()->first) == 2);

  auto q = parse_jet_polynomial(spec, "2*x1^2 - x1*x1");
  REQUIRE(q.size() == 1);
  CHECK(q.begin()->second == Rational(1));

  CHECK_THROWS_AS(parse_jet_polynomial(spec, "y*x1"), std::invalid_argument);
}

TEST_CASE("inhomogeneous relations are rejected") {
  DifferentialRingSpec spec;
  spec.variables = {{"x", 1}};
  spec.relations.push_back(parse_jet_polynomial(spec, "x*x + x"));
  CHECK_THROWS_AS(jet_dimension(spec, 3), std::invalid_argument);
}

TEST_CASE("generalized quotient of the generalized principal subalgebra") {
  WCircQuotientTable table = generalized_c2_dims_wcirc(6);
  CHECK(table.total_dim == 3);
  CHECK(table.threshold_x4 == 4);  // last new class at weight 1
  CHECK(table.stabilized);
  // weight 0, weight 1/4 and weight 1 classes: 1, e^w, e^a
  std::size_t found = 0;
  for (const auto& e : table.entries) {
    if (e.quotient_dim == 0) continue;
    ++found;
    bool expected = (e.charge_pi == 0 && e.weight_x4 == 0) ||
                    (e.charge_pi == 1 && e.weight_x4 == 1) ||
                    (e.charge_pi == 2 && e.weight_x4 == 4);
    CHECK(expected);
    CHECK(e.quotient_dim == 1);
  }
  CHECK(found == 3);
}
