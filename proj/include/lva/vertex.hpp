#ifndef LVA_VERTEX_HPP
#define LVA_VERTEX_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "lva/fock.hpp"
#include "lva/partitions.hpp"
#include "lva/rational.hpp"

namespace lva {

/// A truncation bound of the mode recursion was exceeded by a nonzero term.
/// The grading of the lattice GVA forbids this; seeing it means a bug.
class InternalBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

namespace detail {

// (value, multiplicity) runs of a sorted part list.
inline std::vector<std::pair<std::int64_t, std::int64_t>> part_runs(
    const std::vector<std::int64_t>& parts) {
  std::vector<std::pair<std::int64_t, std::int64_t>> runs;
  for (std::int64_t p : parts) {
    if (!runs.empty() && runs.back().first == p) {
      ++runs.back().second;
    } else {
      runs.emplace_back(p, 1);
    }
  }
  return runs;
}

inline Rational int_pow(const Rational& base, std::int64_t e) {
  Rational r(1);
  for (std::int64_t i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace detail

/// Applies the elementary Schur polynomial S_k(b*w), the degree-k coefficient
/// of the creation exponential exp(sum_{i>=1} b*w(-i)/i z^i). Expanded over
/// partitions mu of k as prod_i (b*w(-i))^{m_i} / (m_i! i^{m_i}).
inline FockVector schur_creation_apply(std::int64_t k, std::int64_t b, const FockVector& v) {
  if (k < 0) return {};
  if (k == 0) return v;
  FockVector out;
  for (const auto& mu : partitions(k)) {
    Rational coeff(1);
    for (const auto& [i, mult] : detail::part_runs(mu)) {
      Integer den(1);
      for (std::int64_t t = 0; t < mult; ++t) den *= i;
      for (std::int64_t t = 2; t <= mult; ++t) den *= t;
      Integer num(1);
      for (std::int64_t t = 0; t < mult; ++t) num *= b;
      coeff *= Rational(num, den);
    }
    for (const auto& [m, c] : v.terms()) {
      FockMonomial created = m;
      created.parts.insert(created.parts.end(), mu.begin(), mu.end());
      std::sort(created.parts.begin(), created.parts.end(), std::greater<>());
      out.add(created, c * coeff);
    }
  }
  return out;
}

/// Mode e^{b*w}(m) of the lattice vertex operator, applied to v.
///
/// Per monomial of charge c the z-power bookkeeping forces m in -bc/2 + Z;
/// other cosets contribute zero. The annihilation exponential acts by
/// dropping sub-multisets of oscillator parts, each dropped copy carrying a
/// factor -b/2; the remainder of the z-power is matched by one creation
/// Schur polynomial.
inline FockVector vertex_mode_apply(std::int64_t b, HalfInt m, const FockVector& v) {
  FockVector out;
  for (const auto& [mono, coeff] : v.terms()) {
    const std::int64_t c = mono.charge;
    if ((m.doubled + b * c) % 2 != 0) continue;
    const std::int64_t pairing_plus_mode = (b * c + m.doubled) / 2;
    const auto runs = detail::part_runs(mono.parts);
    const Rational drop_unit(-b, 2);

    // Odometer over how many copies of each distinct part value to drop.
    std::vector<std::int64_t> drops(runs.size(), 0);
    while (true) {
      std::int64_t dropped_weight = 0;
      Rational factor(1);
      for (std::size_t g = 0; g < runs.size(); ++g) {
        if (drops[g] > 0) {
          dropped_weight += drops[g] * runs[g].first;
          factor *= binomial(Rational(runs[g].second), drops[g]) *
                    detail::int_pow(drop_unit, drops[g]);
        }
      }
      const std::int64_t k = dropped_weight - pairing_plus_mode - 1;
      if (k >= 0 && !factor.is_zero()) {
        FockMonomial base;
        base.charge = c + b;
        for (std::size_t g = 0; g < runs.size(); ++g) {
          for (std::int64_t t = 0; t < runs[g].second - drops[g]; ++t) {
            base.parts.push_back(runs[g].first);
          }
        }
        out += schur_creation_apply(k, b, FockVector(base, coeff * factor));
      }
      std::size_t g = 0;
      while (g < runs.size() && drops[g] == runs[g].second) {
        drops[g] = 0;
        ++g;
      }
      if (g == runs.size()) break;
      ++drops[g];
    }
  }
  return out;
}

namespace detail {

struct ModeKey {
  FockMonomial u;
  HalfInt m;
  FockMonomial v;
  // Compare scalar fields before the part lists.
  friend bool operator<(const ModeKey& a, const ModeKey& b) {
    if (a.m != b.m) return a.m < b.m;
    if (a.u.charge != b.u.charge) return a.u.charge < b.u.charge;
    if (a.v.charge != b.v.charge) return a.v.charge < b.v.charge;
    if (a.u.parts != b.u.parts) return a.u.parts < b.u.parts;
    return a.v.parts < b.v.parts;
  }
};

inline std::map<ModeKey, FockVector>& mode_cache() {
  thread_local std::map<ModeKey, FockVector> cache;
  return cache;
}

const FockVector& state_field_mode_monomial(const FockMonomial& u, HalfInt m,
                                            const FockMonomial& v);

// Number of extra summands probed past each grading bound; nonzero values
// there raise InternalBoundError.
inline constexpr std::int64_t kBoundProbe = 2;

inline FockVector state_field_mode_uncached(const FockMonomial& u, HalfInt m,
                                            const FockMonomial& v) {
  if (u.parts.empty()) {
    return vertex_mode_apply(u.charge, m, FockVector(v));
  }
  // Peel the largest oscillator: u = w(-n) u'. The associativity formula for
  // the Heisenberg state w(-1)1 gives
  //   (w(-n)u')(m)v = sum_j (-1)^j C(-n,j) [ w(-n-j) u'(m+j) v
  //                                          - (-1)^n u'(m-n-j) w(j) v ].
  const std::int64_t n = u.parts.front();
  FockMonomial u_rest = u;
  u_rest.parts.erase(u_rest.parts.begin());

  FockVector out;
  const std::int64_t rest_vw4 = u_rest.weight_x4() + v.weight_x4();
  // u'(m+j)v vanishes once its forced weight goes negative.
  const std::int64_t j_max = floor_div(rest_vw4 - 2 * m.doubled - 4, 4);
  for (std::int64_t j = 0; j <= j_max + kBoundProbe; ++j) {
    const FockVector& inner = state_field_mode_monomial(u_rest, m + j, v);
    if (inner.is_zero()) continue;
    if (j > j_max) {
      throw InternalBoundError("state_field_mode: creation-side sum exceeded grading bound");
    }
    Rational coef = (j % 2 == 0 ? Rational(1) : Rational(-1)) * binomial(Rational(-n), j);
    out.add_scaled(coef, heisenberg_apply(-n - j, inner));
  }

  const Rational sign_n = (n % 2 == 0) ? Rational(1) : Rational(-1);
  for (std::int64_t j = 0; j <= v.weight_x4() / 4; ++j) {
    FockVector contracted = heisenberg_apply(j, FockVector(v));
    if (contracted.is_zero()) continue;
    Rational coef = (j % 2 == 0 ? Rational(-1) : Rational(1)) * binomial(Rational(-n), j) * sign_n;
    for (const auto& [cm, cc] : contracted.terms()) {
      out.add_scaled(coef * cc, state_field_mode_monomial(u_rest, m - n - j, cm));
    }
  }
  return out;
}

inline const FockVector& state_field_mode_monomial(const FockMonomial& u, HalfInt m,
                                                   const FockMonomial& v) {
  ModeKey key{u, m, v};
  auto& cache = mode_cache();
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  FockVector result = state_field_mode_uncached(u, m, v);
  return cache.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace detail

/// The mode u(m) applied to v, for arbitrary states of the lattice GVA.
/// Computed by structural recursion peeling oscillators off u, with the
/// lattice exponential handled by vertex_mode_apply.
inline FockVector state_field_mode(const FockVector& u, HalfInt m, const FockVector& v) {
  FockVector out;
  for (const auto& [um, uc] : u.terms()) {
    for (const auto& [vm, vc] : v.terms()) {
      out.add_scaled(uc * vc, detail::state_field_mode_monomial(um, m, vm));
    }
  }
  return out;
}

inline FockVector state_field_mode(const FockVector& u, std::int64_t m, const FockVector& v) {
  return state_field_mode(u, HalfInt::whole(m), v);
}

/// Drops the per-thread memo table of state_field_mode.
inline void clear_mode_cache() { detail::mode_cache().clear(); }

/// The translation operator: d(w(-n)u) = n w(-n-1)u + w(-n) du and
/// d e^{r*w} = r w(-1) e^{r*w}. Agrees with v(-2)1.
inline FockVector derivation(const FockVector& v) {
  FockVector out;
  for (const auto& [mono, coeff] : v.terms()) {
    for (const auto& [p, mult] : detail::part_runs(mono.parts)) {
      FockMonomial shifted = mono;
      shifted.parts.erase(std::find(shifted.parts.begin(), shifted.parts.end(), p));
      shifted.parts.insert(
          std::upper_bound(shifted.parts.begin(), shifted.parts.end(), p + 1, std::greater<>()),
          p + 1);
      out.add(shifted, coeff * Rational(p * mult));
    }
    if (mono.charge != 0) {
      FockMonomial created = mono;
      created.parts.push_back(1);
      out.add(created, coeff * Rational(mono.charge));
    }
  }
  return out;
}

/// The Virasoro vector (1/4) a(-1)^2 1 = w(-1)^2 1.
inline FockVector virasoro_vector() { return FockVector(FockMonomial(0, {1, 1})); }

/// L_n = omega(n+1).
inline FockVector virasoro_mode(std::int64_t n, const FockVector& v) {
  return state_field_mode(virasoro_vector(), HalfInt::whole(n + 1), v);
}

}  // namespace lva

#endif  // LVA_VERTEX_HPP
