#ifndef LVA_IDENTITIES_HPP
#define LVA_IDENTITIES_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lva/fock.hpp"
#include "lva/graded.hpp"
#include "lva/rational.hpp"
#include "lva/vertex.hpp"

namespace lva {

struct IdentityFailure {
  std::string inputs;
  std::string left;
  std::string right;
};

struct IdentityReport {
  std::string identity;
  std::int64_t checked = 0;
  std::int64_t inapplicable = 0;
  std::vector<IdentityFailure> failures;
  double elapsed_seconds = 0.0;

  bool pass() const { return failures.empty(); }

  void merge(const IdentityReport& o) {
    checked += o.checked;
    inapplicable += o.inapplicable;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    elapsed_seconds += o.elapsed_seconds;
  }
};

namespace detail {

inline std::string render_brief(const FockVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  std::size_t count = 0;
  for (const auto& [m, c] : v.terms()) {
    if (count++) out += " + ";
    if (count > 4) return out + "...";
    out += c.str() + "*[chg " + std::to_string(m.charge) + ", parts";
    for (auto p : m.parts) out += " " + std::to_string(p);
    out += "]";
  }
  return out;
}

inline bool coset_ok(HalfInt mode, std::int64_t charge_a, std::int64_t charge_b) {
  return (mode.doubled + charge_a * charge_b) % 2 == 0;
}

// Parity sign (-1)^{(beta,gamma)+n} for n in the admissible coset.
inline Rational braiding_sign(std::int64_t charge_a, std::int64_t charge_b, HalfInt n) {
  std::int64_t twice = charge_a * charge_b + n.doubled;  // even by admissibility
  std::int64_t val = twice / 2;
  return (val % 2 == 0) ? Rational(1) : Rational(-1);
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

inline void record(IdentityReport& report, const FockVector& left, const FockVector& right,
                   const std::string& inputs) {
  ++report.checked;
  if (!(left == right)) {
    report.failures.push_back({inputs, render_brief(left), render_brief(right)});
  }
}

}  // namespace detail

/// One instance of the Borcherds identity
///   sum_j C(m,j) (b(n+j)c)(m+k-j) d
///     = sum_j (-1)^j C(n,j) [ b(m+n-j) c(k+j) d - sign * c(n+k-j) b(m+j) d ]
/// with sign = (-1)^{(beta,gamma)+n}, evaluated exactly. Instances whose
/// modes sit outside the admissible cosets are counted as inapplicable.
inline IdentityReport check_borcherds(const FockVector& b, const FockVector& c,
                                      const FockVector& d, HalfInt n, HalfInt m, HalfInt k) {
  detail::Timer timer;
  IdentityReport report;
  report.identity = "borcherds";
  const std::int64_t cb = b.charge(), cc = c.charge(), cd = d.charge();
  if (!detail::coset_ok(n, cb, cc) || !detail::coset_ok(k, cc, cd) ||
      !detail::coset_ok(m, cb, cd)) {
    report.inapplicable = 1;
    report.elapsed_seconds = timer.seconds();
    return report;
  }
  const std::int64_t wb4 = b.weight_x4(), wc4 = c.weight_x4(), wd4 = d.weight_x4();

  FockVector lhs;
  const std::int64_t j_lhs = floor_div(wb4 + wc4 - 2 * n.doubled - 4, 4);
  for (std::int64_t j = 0; j <= j_lhs; ++j) {
    Rational cj = binomial(m.as_rational(), j);
    if (cj.is_zero()) continue;
    FockVector inner = state_field_mode(b, n + j, c);
    if (inner.is_zero()) continue;
    lhs += cj * state_field_mode(inner, m + k - j, FockVector(d));
  }

  FockVector rhs;
  const Rational sign = detail::braiding_sign(cb, cc, n);
  const std::int64_t j_r1 = floor_div(wc4 + wd4 - 2 * k.doubled - 4, 4);
  for (std::int64_t j = 0; j <= j_r1; ++j) {
    Rational cj = binomial(n.as_rational(), j);
    if (cj.is_zero()) continue;
    if (j % 2 == 1) cj = -cj;
    FockVector inner = state_field_mode(c, k + j, d);
    if (inner.is_zero()) continue;
    rhs += cj * state_field_mode(b, m + n - j, inner);
  }
  const std::int64_t j_r2 = floor_div(wb4 + wd4 - 2 * m.doubled - 4, 4);
  for (std::int64_t j = 0; j <= j_r2; ++j) {
    Rational cj = binomial(n.as_rational(), j) * sign;
    if (cj.is_zero()) continue;
    if (j % 2 == 1) cj = -cj;
    FockVector inner = state_field_mode(b, m + j, d);
    if (inner.is_zero()) continue;
    rhs -= cj * state_field_mode(c, n + k - j, inner);
  }

  detail::record(report, lhs, rhs,
                 "n=" + n.str() + " m=" + m.str() + " k=" + k.str() + " b=" +
                     detail::render_brief(b) + " c=" + detail::render_brief(c) +
                     " d=" + detail::render_brief(d));
  report.elapsed_seconds = timer.seconds();
  return report;
}

/// Anti-commutation e^a(m) e^w(k) = -e^w(k) e^a(m) on v.
inline IdentityReport check_commutation_sign(HalfInt m, HalfInt k, const FockVector& v) {
  detail::Timer timer;
  IdentityReport report;
  report.identity = "commutation-sign";
  FockVector left = vertex_mode_apply(2, m, vertex_mode_apply(1, k, v));
  FockVector right = Rational(-1) * vertex_mode_apply(1, k, vertex_mode_apply(2, m, v));
  detail::record(report, left, right, "m=" + m.str() + " k=" + k.str() + " v=" +
                                          detail::render_brief(v));
  report.elapsed_seconds = timer.seconds();
  return report;
}

/// Quasiconformality on v: [L_n, e^a(m)] = -m e^a(n+m) and
/// [L_n, e^w(m)] = (-m - 3n/4 - 3/4) e^w(n+m), for n >= -1.
inline IdentityReport check_quasiconformal(std::int64_t n, HalfInt m, const FockVector& v) {
  if (n < -1) throw std::invalid_argument("check_quasiconformal: n must be >= -1");
  detail::Timer timer;
  IdentityReport report;
  report.identity = "quasiconformal";

  auto commutator = [&](std::int64_t b) {
    return virasoro_mode(n, vertex_mode_apply(b, m, v)) -
           vertex_mode_apply(b, m, virasoro_mode(n, v));
  };
  FockVector lhs_a = commutator(2);
  FockVector rhs_a = (-m.as_rational()) * vertex_mode_apply(2, m + n, v);
  detail::record(report, lhs_a, rhs_a,
                 "e^a case n=" + std::to_string(n) + " m=" + m.str() + " v=" +
                     detail::render_brief(v));

  FockVector lhs_w = commutator(1);
  Rational coeff = -m.as_rational() - Rational(3 * n, 4) - Rational(3, 4);
  FockVector rhs_w = coeff * vertex_mode_apply(1, m + n, v);
  detail::record(report, lhs_w, rhs_w,
                 "e^w case n=" + std::to_string(n) + " m=" + m.str() + " v=" +
                     detail::render_brief(v));
  report.elapsed_seconds = timer.seconds();
  return report;
}

/// Virasoro relation [L_m, L_n] = (m-n) L_{m+n} + delta_{m+n,0} (m^3-m)/12 c
/// with central charge c = 1, on v.
inline IdentityReport check_virasoro_algebra(std::int64_t m, std::int64_t n,
                                             const FockVector& v) {
  detail::Timer timer;
  IdentityReport report;
  report.identity = "virasoro";
  FockVector lhs = virasoro_mode(m, virasoro_mode(n, v)) -
                   virasoro_mode(n, virasoro_mode(m, v));
  FockVector rhs = Rational(m - n) * virasoro_mode(m + n, v);
  if (m + n == 0) {
    rhs += Rational(m * m * m - m, 12) * v;
  }
  detail::record(report, lhs, rhs,
                 "m=" + std::to_string(m) + " n=" + std::to_string(n) + " v=" +
                     detail::render_brief(v));
  report.elapsed_seconds = timer.seconds();
  return report;
}

/// rho_{m,k;n} evaluated on v two ways: the defining sum
/// sum_{j=0}^m C(m,j) (e^w(n-1/2+j)e^w)(m+k-j) and its Borcherds reduction
/// sum_j (-1)^j C(n-1/2,j) { e^w(m+n-j-1/2) e^w(k+j)
///                           - (-1)^n e^w(n+k-j-1/2) e^w(m+j) }.
inline IdentityReport check_rho_identity(std::int64_t m, std::int64_t k, std::int64_t n,
                                         const FockVector& v) {
  if (m < 0 || k < 0) throw std::invalid_argument("check_rho_identity: m, k must be >= 0");
  detail::Timer timer;
  IdentityReport report;
  report.identity = "rho";
  if (v.charge() % 2 != 0) {
    report.inapplicable = 1;
    report.elapsed_seconds = timer.seconds();
    return report;
  }
  const FockVector ew = lattice_state(1);

  FockVector lhs;
  for (std::int64_t j = 0; j <= m; ++j) {
    FockVector inner = vertex_mode_apply(1, HalfInt::halves(2 * (n + j) - 1), ew);
    if (inner.is_zero()) continue;
    lhs += binomial(Rational(m), j) * state_field_mode(inner, HalfInt::whole(m + k - j), v);
  }

  FockVector rhs;
  const Rational half_top = Rational(2 * n - 1, 2);
  const Rational sign_n = (n % 2 == 0) ? Rational(1) : Rational(-1);
  const std::int64_t v4 = v.weight_x4();
  const std::int64_t j_r1 = floor_div(1 + v4 - 4 * k - 4, 4);
  for (std::int64_t j = 0; j <= j_r1; ++j) {
    Rational cj = binomial(half_top, j);
    if (j % 2 == 1) cj = -cj;
    FockVector inner = vertex_mode_apply(1, HalfInt::whole(k + j), v);
    if (inner.is_zero()) continue;
    rhs += cj * vertex_mode_apply(1, HalfInt::halves(2 * (m + n - j) - 1), inner);
  }
  const std::int64_t j_r2 = floor_div(1 + v4 - 4 * m - 4, 4);
  for (std::int64_t j = 0; j <= j_r2; ++j) {
    Rational cj = binomial(half_top, j) * sign_n;
    if (j % 2 == 1) cj = -cj;
    FockVector inner = vertex_mode_apply(1, HalfInt::whole(m + j), v);
    if (inner.is_zero()) continue;
    rhs -= cj * vertex_mode_apply(1, HalfInt::halves(2 * (n + k - j) - 1), inner);
  }

  detail::record(report, lhs, rhs,
                 "m=" + std::to_string(m) + " k=" + std::to_string(k) + " n=" +
                     std::to_string(n) + " v=" + detail::render_brief(v));
  report.elapsed_seconds = timer.seconds();
  return report;
}

// ---------------------------------------------------------------------------
// Suites over graded slices.

namespace detail {

inline std::vector<FockMonomial> monomials_up_to_weight(std::int64_t max_weight_x4) {
  std::int64_t bound = 0;
  while ((bound + 1) * (bound + 1) <= max_weight_x4) ++bound;
  std::vector<FockMonomial> out;
  for (std::int64_t r = -bound; r <= bound; ++r) {
    for (std::int64_t w4 = r * r; w4 <= max_weight_x4; w4 += 4) {
      for (const auto& m : enumerate_graded_monomials(r, w4).monomials) out.push_back(m);
    }
  }
  return out;
}

}  // namespace detail

/// Exhaustive Borcherds suite: every monomial triple with total weight at
/// most max_total_weight, over the grading-forced mode box extended by two
/// steps on each end. Wrong-coset combinations never enter the box since
/// modes step inside their cosets.
inline IdentityReport borcherds_exhaustive(std::int64_t max_total_weight) {
  detail::Timer timer;
  IdentityReport report;
  report.identity = "borcherds-exhaustive";
  const std::int64_t cap4 = 4 * max_total_weight;
  const auto universe = detail::monomials_up_to_weight(cap4);
  for (const auto& bm : universe) {
    const std::int64_t wb4 = bm.weight_x4();
    for (const auto& cm : universe) {
      const std::int64_t wc4 = cm.weight_x4();
      if (wb4 + wc4 > cap4) continue;
      for (const auto& dm : universe) {
        const std::int64_t wd4 = dm.weight_x4();
        if (wb4 + wc4 + wd4 > cap4) continue;
        const FockVector b{bm}, c{cm}, d{dm};
        // Per-mode windows in doubled units: the vanishing threshold of the
        // matching composition, extended by two steps on each end, with the
        // depth below it capped so intermediates stay inside the weight
        // universe. The triple sum is clipped to output weights in [-2, D+2].
        const std::int64_t depth = 2 * max_total_weight + 4;
        const std::int64_t hi_n = (wb4 + wc4 - 4) / 2 + 4;
        const std::int64_t hi_m = (wb4 + wd4 - 4) / 2 + 4;
        const std::int64_t hi_k = (wc4 + wd4 - 4) / 2 + 4;
        const std::int64_t lo_sum = (wb4 + wc4 + wd4) / 2 - 2 * max_total_weight - 8;
        const std::int64_t hi_sum = (wb4 + wc4 + wd4) / 2 - 4 + 4;
        auto align = [](std::int64_t lo, std::int64_t parity) {
          return (((lo + parity) % 2 + 2) % 2 == 0) ? lo : lo + 1;
        };
        const std::int64_t pn = bm.charge * cm.charge, pm = bm.charge * dm.charge,
                           pk = cm.charge * dm.charge;
        for (std::int64_t nd = align(std::max(lo_sum - hi_m - hi_k, hi_n - depth), pn);
             nd <= hi_n; nd += 2) {
          for (std::int64_t md = align(std::max(lo_sum - nd - hi_k, hi_m - depth), pm);
               md <= hi_m && nd + md <= hi_sum - (hi_k - depth); md += 2) {
            for (std::int64_t kd = align(std::max(lo_sum - nd - md, hi_k - depth), pk);
                 kd <= std::min(hi_k, hi_sum - nd - md); kd += 2) {
              report.merge(check_borcherds(b, c, d, HalfInt::halves(nd), HalfInt::halves(md),
                                           HalfInt::halves(kd)));
            }
          }
        }
      }
    }
  }
  report.identity = "borcherds-exhaustive";
  report.elapsed_seconds = timer.seconds();
  return report;
}

/// Seeded random Borcherds instances at bounded total weight. The sampler
/// draws through a fixed modular scheme so instance sets are identical
/// across runs and platforms; instance_log, when given, receives one line
/// per drawn instance.
inline IdentityReport borcherds_sampled(std::int64_t max_total_weight, std::int64_t count,
                                        std::uint64_t seed,
                                        std::vector<std::string>* instance_log = nullptr) {
  detail::Timer timer;
  IdentityReport report;
  report.identity = "borcherds-sampled";
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](std::int64_t lo, std::int64_t hi) {
    if (hi <= lo) return lo;
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  const std::int64_t cap4 = 4 * max_total_weight;
  const auto universe = detail::monomials_up_to_weight(cap4);
  std::int64_t done = 0;
  while (done < count) {
    const auto& bm = universe[static_cast<std::size_t>(uniform(0, universe.size() - 1))];
    const auto& cm = universe[static_cast<std::size_t>(uniform(0, universe.size() - 1))];
    const auto& dm = universe[static_cast<std::size_t>(uniform(0, universe.size() - 1))];
    if (bm.weight_x4() + cm.weight_x4() + dm.weight_x4() > cap4) continue;
    const std::int64_t wb4 = bm.weight_x4(), wc4 = cm.weight_x4(), wd4 = dm.weight_x4();
    const std::int64_t hi_n = (wb4 + wc4 - 4) / 2 + 4;
    const std::int64_t hi_m = (wb4 + wd4 - 4) / 2 + 4;
    const std::int64_t hi_k = (wc4 + wd4 - 4) / 2 + 4;
    const std::int64_t span = 2 * max_total_weight + 8;
    auto pick = [&](std::int64_t hi, std::int64_t parity) {
      std::int64_t v = uniform(hi - span, hi);
      if ((((v + parity) % 2) + 2) % 2 != 0) v -= 1;
      return v;
    };
    HalfInt n = HalfInt::halves(pick(hi_n, bm.charge * cm.charge));
    HalfInt m = HalfInt::halves(pick(hi_m, bm.charge * dm.charge));
    HalfInt k = HalfInt::halves(pick(hi_k, cm.charge * dm.charge));
    if (instance_log) {
      instance_log->push_back("b=" + detail::render_brief(FockVector(bm)) +
                              " c=" + detail::render_brief(FockVector(cm)) +
                              " d=" + detail::render_brief(FockVector(dm)) + " n=" + n.str() +
                              " m=" + m.str() + " k=" + k.str());
    }
    report.merge(check_borcherds(FockVector(bm), FockVector(cm), FockVector(dm), n, m, k));
    ++done;
  }
  report.identity = "borcherds-sampled";
  report.elapsed_seconds = timer.seconds();
  return report;
}

/// Anti-commutation of e^a and e^w modes over all monomials of weight at
/// most max_weight.
inline IdentityReport commutation_suite(std::int64_t max_weight) {
  detail::Timer timer;
  IdentityReport report;
  report.identity = "commutation-sign";
  for (const auto& vm : detail::monomials_up_to_weight(4 * max_weight)) {
    const std::int64_t v4 = vm.weight_x4();
    const std::int64_t hi_m = (v4 + 1) / 2 + 4;       // doubled, even modes
    const std::int64_t hi_k = (v4 + 1 - 4) / 2 + 4;   // doubled
    const std::int64_t lo = -2 * max_weight - 6;
    const FockVector v{vm};
    for (std::int64_t md = (lo / 2) * 2; md <= hi_m; md += 2) {
      for (std::int64_t kd = lo + ((lo + vm.charge) % 2 == 0 ? 0 : 1); kd <= hi_k; kd += 2) {
        report.merge(check_commutation_sign(HalfInt::halves(md), HalfInt::halves(kd), v));
      }
    }
  }
  report.identity = "commutation-sign";
  report.elapsed_seconds = timer.seconds();
  return report;
}

/// Quasiconformal commutators over all monomials of weight at most
/// max_weight, for -1 <= n <= n_max and mode |m| <= m_abs in half steps.
inline IdentityReport quasiconformal_suite(std::int64_t max_weight, std::int64_t n_max,
                                           std::int64_t m_abs) {
  detail::Timer timer;
  IdentityReport report;
  report.identity = "quasiconformal";
  for (const auto& vm : detail::monomials_up_to_weight(4 * max_weight)) {
    const FockVector v{vm};
    for (std::int64_t n = -1; n <= n_max; ++n) {
      for (std::int64_t md = -2 * m_abs; md <= 2 * m_abs; ++md) {
        report.merge(check_quasiconformal(n, HalfInt::halves(md), v));
      }
    }
  }
  report.identity = "quasiconformal";
  report.elapsed_seconds = timer.seconds();
  return report;
}

/// Virasoro algebra relations over all monomials of weight at most
/// max_weight, for |m|, |n| <= mode_abs.
inline IdentityReport virasoro_suite(std::int64_t max_weight, std::int64_t mode_abs) {
  detail::Timer timer;
  IdentityReport report;
  report.identity = "virasoro";
  for (const auto& vm : detail::monomials_up_to_weight(4 * max_weight)) {
    const FockVector v{vm};
    for (std::int64_t m = -mode_abs; m <= mode_abs; ++m) {
      for (std::int64_t n = -mode_abs; n <= mode_abs; ++n) {
        report.merge(check_virasoro_algebra(m, n, v));
      }
    }
  }
  report.identity = "virasoro";
  report.elapsed_seconds = timer.seconds();
  return report;
}

/// The rho operator identity over even-charge monomials of weight at most
/// max_weight, for 0 <= m, k <= mk_max and |n| <= n_abs.
inline IdentityReport rho_suite(std::int64_t max_weight, std::int64_t mk_max,
                                std::int64_t n_abs) {
  detail::Timer timer;
  IdentityReport report;
  report.identity = "rho";
  for (const auto& vm : detail::monomials_up_to_weight(4 * max_weight)) {
    if (vm.charge % 2 != 0) continue;
    const FockVector v{vm};
    for (std::int64_t m = 0; m <= mk_max; ++m) {
      for (std::int64_t k = 0; k <= mk_max; ++k) {
        for (std::int64_t n = -n_abs; n <= n_abs; ++n) {
          report.merge(check_rho_identity(m, k, n, v));
        }
      }
    }
  }
  report.identity = "rho";
  report.elapsed_seconds = timer.seconds();
  return report;
}

}  // namespace lva

#endif  // LVA_IDENTITIES_HPP
