// Acceptance suite: runs every top-level verification of the library at its
// pinned bound and tolerance (all tolerances are zero; equality is exact),
// printing one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "lva/identities.hpp"
#include "lva/io.hpp"
#include "lva/jet.hpp"
#include "lva/qseries.hpp"
#include "lva/subspaces.hpp"
#include "lva/zhu.hpp"

using namespace lva;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, double seconds,
            const std::string& detail = "") {
  if (!pass) ++failures;
  std::printf("%s  criterion %2d: %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", number,
              name.c_str(), seconds, detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void criterion_1_generator_coefficients() {
  Stopwatch sw;
  bool pass = render_vector(phi(1), OscBasis::A) == "3/16*a(-1)^2*e[2] - 1/8*a(-2)*e[2]";
  FockVector expected2;
  expected2.add(FockMonomial(2, {4}), Rational(-1, 64) * Rational(2));
  expected2.add(FockMonomial(2, {3, 1}), Rational(-5, 96) * Rational(4));
  expected2.add(FockMonomial(2, {2, 2}), Rational(15, 256) * Rational(4));
  expected2.add(FockMonomial(2, {2, 1, 1}), Rational(7, 256) * Rational(8));
  expected2.add(FockMonomial(2, {1, 1, 1, 1}), Rational(31, 3072) * Rational(16));
  pass = pass && phi(2) == expected2;
  report(1, "generator coefficients phi_1, phi_2", pass, sw.seconds());
}

void criterion_2_ope() {
  Stopwatch sw;
  FockVector p1 = phi(1);
  bool pass = state_field_mode(p1, 1, p1) == Rational(-25, 32) * lattice_state(4);
  FockVector alpha_desc = Rational(2) * FockVector(FockMonomial(4, {1}));  // a(-1)e^{2a}
  pass = pass && state_field_mode(p1, 0, p1) == Rational(-25, 32) * alpha_desc;
  for (std::int64_t n = 2; n <= 6; ++n) {
    pass = pass && state_field_mode(p1, n, p1).is_zero();
  }
  for (std::int64_t n = 0; n <= 4; ++n) {
    for (std::int64_t k = 0; k <= 4; ++k) {
      pass = pass && state_field_mode(phi(0), n, phi(k)).is_zero();
    }
  }
  report(2, "OPE phi_1 phi_1 and phi_0 phi_k", pass, sw.seconds());
}

void criterion_3_borcherds() {
  Stopwatch sw;
  IdentityReport exhaustive = borcherds_exhaustive(5);
  IdentityReport sampled = borcherds_sampled(7, 500, 0);
  bool pass = exhaustive.pass() && sampled.pass() &&
              sampled.checked + sampled.inapplicable >= 500;
  report(3, "Borcherds identity suites", pass, sw.seconds(),
         "exhaustive " + std::to_string(exhaustive.checked) + " checked, " +
             std::to_string(exhaustive.inapplicable) + " inapplicable; sampled " +
             std::to_string(sampled.checked) + " checked, " +
             std::to_string(exhaustive.failures.size() + sampled.failures.size()) +
             " failures");
}

void criterion_4_commutant_dimensions() {
  Stopwatch sw;
  CommutantTable table = commutant_dimension_table(GeneratorSet::WGenerators, 8, 3);
  bool pass = table.all_ok;
  QSeries graded = fermionic_char_C(8, true);
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> dims;
  for (const auto& e : table.entries) {
    if (e.kernel_dim > 0) dims[{e.charge_alpha, e.weight}] = static_cast<std::int64_t>(e.kernel_dim);
    if (e.charge_alpha < 0 && e.kernel_dim != 0) pass = false;
  }
  QSeries from_table = char_from_dimensions(dims, 8, true);
  pass = pass && !QSeries::compare(from_table, graded).has_value();
  const std::int64_t totals[] = {1, 1, 1, 2, 3, 4, 5, 7, 9};
  for (std::int64_t w = 0; w <= 8; ++w) {
    pass = pass && table.total_at_weight(w) == static_cast<std::size_t>(totals[w]);
  }
  report(4, "commutant dimensions vs fermionic character (weight <= 8)", pass, sw.seconds());
}

void criterion_5_duality() {
  Stopwatch sw;
  CommutantTable table = commutant_dimension_table(GeneratorSet::CGenerators, 6, 3, 3);
  bool pass = table.all_ok;
  for (const auto& e : table.entries) {
    pass = pass && e.kernel_dim == space_dim(Space::W, 2 * e.charge_alpha, 4 * e.weight);
  }
  report(5, "duality: C-generator kernel equals W (weight <= 6)", pass, sw.seconds());
}

void criterion_6_zhu() {
  Stopwatch sw;
  ZhuClassTable rc = c2_dims(Space::C, 9);
  bool pass = true;
  for (std::int64_t w = 0; w <= 9; ++w) {
    std::size_t expected = (w == 0 || w % 2 == 1) ? 1 : 0;
    pass = pass && rc.quotient_at_weight(w) == expected;
  }
  ZhuClassTable rw = c2_dims(Space::W, 6);
  for (std::int64_t w = 0; w <= 6; ++w) {
    pass = pass && rw.quotient_at_weight(w) == (w <= 1 ? 1u : 0u);
  }
  for (std::int64_t n = 0; n <= 3; ++n) {
    for (std::int64_t m = 0; m <= 3; ++m) {
      pass = pass && zhu_product(phi(n), phi(m), Space::C).zero;
      pass = pass && zhu_bracket(phi(n), phi(m), Space::C).zero;
    }
  }
  report(6, "Zhu Poisson algebra of C and W", pass, sw.seconds());
}

void criterion_7_jet() {
  Stopwatch sw;
  QSeries jet_w = jet_character(ring_spec_rw(), 8);
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> wdims;
  for (std::int64_t r = 0; r * r <= 8; ++r) {
    for (std::int64_t w = r * r; w <= 8; ++w) {
      auto d = static_cast<std::int64_t>(space_dim(Space::W, 2 * r, 4 * w));
      if (d > 0) wdims[{r, w}] += d;
    }
  }
  QSeries enumerated_w = char_from_dimensions(wdims, 8);
  bool pass = !QSeries::compare(jet_w, enumerated_w).has_value();

  QSeries jet_c = jet_character(ring_spec_rc(5), 5);
  const std::int64_t expected_c[] = {1, 1, 1, 2, 3, 5};
  for (std::int64_t d = 0; d <= 5; ++d) pass = pass && jet_c.at(d) == expected_c[d];

  auto mismatch = QSeries::compare(jet_c, fermionic_char_C(5));
  pass = pass && mismatch.has_value() && mismatch->q_power == 5 && mismatch->left == 5 &&
         mismatch->right == 4;
  report(7, "jet characters: gr W = J(R_W), gr C != J(R_C) at q^5", pass, sw.seconds());
}

void criterion_8_structure() {
  Stopwatch sw;
  bool pass = true;
  // kernel dims at charge a up to weight 9 follow floor((w+1)/2)
  for (std::int64_t w = 1; w <= 9; ++w) {
    GradedPiece piece = enumerate_graded_monomials(2, 4 * w);
    std::vector<std::pair<FockVector, HalfInt>> ops;
    for (std::int64_t n = 0; n <= w; ++n) ops.emplace_back(lattice_state(2), HalfInt::whole(n));
    LinearSpan kernel = mode_kernel(ops, piece);
    pass = pass && kernel.rank == static_cast<std::size_t>((w + 1) / 2);
    pass = pass && kernel.rank == space_dim(Space::C, 2, 4 * w);
  }
  StructureReport sl2 = sl2_report(9);
  pass = pass && sl2.pass;
  for (std::int64_t n = 0; n <= 4 && pass; ++n) {
    for (std::int64_t m = 0; m <= 4; ++m) {
      FockVector lhs = derivation(generalized_principal_vector({n, m}));
      FockVector rhs = Rational(2 * m + 3, 2) * generalized_principal_vector({n, m + 1}) +
                       Rational(n + 1) * generalized_principal_vector({n + 1, m});
      pass = pass && lhs == rhs;
    }
  }
  StructureReport cnew = verify_basis_cnew(2, 8);
  pass = pass && cnew.pass;
  report(8, "charge-a structure, derivative recurrence, nested basis", pass, sw.seconds());
}

void criterion_9_generation() {
  Stopwatch sw;
  StructureReport strong = strong_generation_check(6);
  bool pass = strong.pass;
  for (std::int64_t k = 0; k <= 3; ++k) {
    pass = pass && minimality_check(k).pass;
  }
  report(9, "strong generation and minimality", pass, sw.seconds());
}

void criterion_10_virasoro() {
  Stopwatch sw;
  IdentityReport quasi = quasiconformal_suite(4, 3, 4);
  IdentityReport vira = virasoro_suite(4, 3);
  bool pass = quasi.pass() && vira.pass();
  report(10, "quasiconformality and Virasoro relations (c = 1)", pass, sw.seconds(),
         std::to_string(quasi.checked) + " + " + std::to_string(vira.checked) + " instances");
}

}  // namespace

int main() {
  criterion_1_generator_coefficients();
  criterion_2_ope();
  criterion_3_borcherds();
  criterion_4_commutant_dimensions();
  criterion_5_duality();
  criterion_6_zhu();
  criterion_7_jet();
  criterion_8_structure();
  criterion_9_generation();
  criterion_10_virasoro();
  if (failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
