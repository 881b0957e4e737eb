#ifndef LVA_FOCK_HPP
#define LVA_FOCK_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lva/rational.hpp"

namespace lva {

/// Element b*w of the dual lattice Z*w, where w is the fundamental weight
/// with (w,w) = 1/2 and a = 2w is the simple root with (a,a) = 2.
struct LatticeElement {
  std::int64_t b = 0;
  constexpr explicit LatticeElement(std::int64_t bb) : b(bb) {}
};

inline constexpr LatticeElement fundamental_weight() { return LatticeElement(1); }
inline constexpr LatticeElement simple_root() { return LatticeElement(2); }

/// Bilinear form: (b*w, c*w) = b*c/2.
inline Rational pairing(LatticeElement beta, LatticeElement gamma) {
  return Rational(beta.b * gamma.b, 2);
}

/// Oscillator word w(-n1)...w(-ns) e^{r*w}, with parts n1 >= ... >= ns >= 1.
/// Weight is r^2/4 + sum of parts; charge is r (in w units).
struct FockMonomial {
  std::int64_t charge = 0;
  std::vector<std::int64_t> parts;

  FockMonomial() = default;
  FockMonomial(std::int64_t r, std::vector<std::int64_t> p) : charge(r), parts(std::move(p)) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    for (std::int64_t n : parts) {
      if (n < 1) throw std::invalid_argument("oscillator part must be >= 1");
    }
  }

  /// 4x the conformal weight, always an integer: r^2 + 4*sum(parts).
  std::int64_t weight_x4() const {
    std::int64_t s = std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
    return charge * charge + 4 * s;
  }
  Rational weight() const { return Rational(weight_x4(), 4); }

  friend bool operator==(const FockMonomial& a, const FockMonomial& b) {
    return a.charge == b.charge && a.parts == b.parts;
  }

  /// Canonical order: weight ascending, then charge ascending, then parts
  /// lexicographically descending.
  friend bool operator<(const FockMonomial& a, const FockMonomial& b) {
    std::int64_t wa = a.weight_x4(), wb = b.weight_x4();
    if (wa != wb) return wa < wb;
    if (a.charge != b.charge) return a.charge < b.charge;
    return std::lexicographical_compare(b.parts.begin(), b.parts.end(),
                                        a.parts.begin(), a.parts.end());
  }
};

/// The pure lattice exponential e^{r*w}.
inline FockMonomial exponential(std::int64_t r) { return FockMonomial(r, {}); }
inline FockMonomial vacuum_monomial() { return exponential(0); }

/// Finite Q-linear combination of Fock monomials. The map holds no zero
/// coefficients, so equality of vectors is equality of maps.
class FockVector {
 public:
  using TermMap = std::map<FockMonomial, Rational>;

  FockVector() = default;
  explicit FockVector(const FockMonomial& m) { terms_[m] = Rational(1); }
  FockVector(const FockMonomial& m, const Rational& c) { add(m, c); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const FockMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  FockVector& operator+=(const FockVector& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  /// *this += s * o without building the intermediate vector.
  void add_scaled(const Rational& s, const FockVector& o) {
    if (s.is_zero()) return;
    for (const auto& [m, c] : o.terms_) add(m, s * c);
  }
  FockVector& operator-=(const FockVector& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  FockVector& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const Rational& s, FockVector v) { return v *= s; }

  friend bool operator==(const FockVector& a, const FockVector& b) {
    return a.terms_ == b.terms_;
  }

  Rational coefficient(const FockMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// True if every term has the given charge and weight.
  bool is_homogeneous(std::int64_t charge, std::int64_t weight_x4) const {
    for (const auto& [m, c] : terms_) {
      if (m.charge != charge || m.weight_x4() != weight_x4) return false;
    }
    return true;
  }

  /// Charge of a nonzero homogeneous vector; throws on mixed charges.
  std::int64_t charge() const {
    if (is_zero()) throw std::domain_error("zero vector has no charge");
    std::int64_t r = terms_.begin()->first.charge;
    for (const auto& [m, c] : terms_)
      if (m.charge != r) throw std::domain_error("vector is not charge-homogeneous");
    return r;
  }

  /// 4x weight of a nonzero homogeneous vector; throws on mixed weights.
  std::int64_t weight_x4() const {
    if (is_zero()) throw std::domain_error("zero vector has no weight");
    std::int64_t w = terms_.begin()->first.weight_x4();
    for (const auto& [m, c] : terms_)
      if (m.weight_x4() != w) throw std::domain_error("vector is not weight-homogeneous");
    return w;
  }

 private:
  TermMap terms_;
};

inline FockVector vacuum() { return FockVector(vacuum_monomial()); }
inline FockVector lattice_state(std::int64_t r) { return FockVector(exponential(r)); }

/// Merges raw (monomial, coefficient) pairs into canonical form.
inline FockVector canonicalize(const std::vector<std::pair<FockMonomial, Rational>>& raw) {
  FockVector v;
  for (const auto& [m, c] : raw) v.add(m, c);
  return v;
}

/// Applies the Heisenberg mode w(n). Negative n creates a part, n = 0 scales
/// by (w, charge*w) = charge/2, positive n contracts against matching parts
/// with factor n/2 per copy.
inline FockVector heisenberg_apply(std::int64_t n, const FockVector& v) {
  FockVector out;
  for (const auto& [m, c] : v.terms()) {
    if (n < 0) {
      FockMonomial created = m;
      created.parts.insert(
          std::upper_bound(created.parts.begin(), created.parts.end(), -n, std::greater<>()),
          -n);
      out.add(created, c);
    } else if (n == 0) {
      out.add(m, c * Rational(m.charge, 2));
    } else {
      auto lo = std::find(m.parts.begin(), m.parts.end(), n);
      if (lo == m.parts.end()) continue;
      auto hi = std::find_if(lo, m.parts.end(), [n](std::int64_t p) { return p != n; });
      std::int64_t mult = hi - lo;
      FockMonomial contracted = m;
      contracted.parts.erase(contracted.parts.begin() + (lo - m.parts.begin()));
      out.add(contracted, c * Rational(n * mult, 2));
    }
  }
  return out;
}

}  // namespace lva

#endif  // LVA_FOCK_HPP
