#ifndef LVA_RATIONAL_HPP
#define LVA_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lva {

using Integer = mpz_class;

/// Exact rational scalar. Always in lowest terms with positive denominator;
/// zero is stored as 0/1.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}
  Rational(const Integer& n) : q_(n) {}
  Rational(long num, long den) : q_(num, den) { normalize(); }
  Rational(const Integer& num, const Integer& den) : q_(num, den) { normalize(); }

  static Rational from_string(const std::string& s) {
    Rational r;
    if (r.q_.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.q_.canonicalize();
    return r;
  }

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// The value as an Integer; throws unless the denominator is 1.
  Integer to_integer() const {
    if (!is_integer()) throw std::domain_error("rational is not an integer");
    return q_.get_num();
  }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// Renders as "p" or "p/q".
  std::string str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  void normalize() {
    if (q_.get_den() == 0) throw std::domain_error("zero denominator");
    q_.canonicalize();
  }
  mpq_class q_;
};

/// Half-integer, stored as its doubled value. Mode indices of the lattice
/// generalized vertex algebra live in (1/2)Z.
struct HalfInt {
  std::int64_t doubled = 0;

  HalfInt() = default;
  constexpr explicit HalfInt(std::int64_t d) : doubled(d) {}
  static constexpr HalfInt whole(std::int64_t n) { return HalfInt(2 * n); }
  static constexpr HalfInt halves(std::int64_t d) { return HalfInt(d); }

  bool is_integer() const { return doubled % 2 == 0; }
  std::int64_t floor() const {
    return doubled >= 0 ? doubled / 2 : (doubled - 1) / 2;
  }
  /// The integer value; only valid when is_integer().
  std::int64_t as_integer() const {
    if (!is_integer()) throw std::domain_error("half-integer is not integral");
    return doubled / 2;
  }
  Rational as_rational() const { return Rational(doubled, 2); }

  friend HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.doubled + b.doubled); }
  friend HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.doubled - b.doubled); }
  friend HalfInt operator+(HalfInt a, std::int64_t n) { return HalfInt(a.doubled + 2 * n); }
  friend HalfInt operator-(HalfInt a, std::int64_t n) { return HalfInt(a.doubled - 2 * n); }
  HalfInt operator-() const { return HalfInt(-doubled); }
  auto operator<=>(const HalfInt&) const = default;

  std::string str() const {
    if (is_integer()) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
  }
};

/// Generalized binomial coefficient m(m-1)...(m-j+1)/j! with rational top.
inline Rational binomial(const Rational& m, std::int64_t j) {
  if (j < 0) return Rational(0);
  Rational result(1);
  for (std::int64_t i = 0; i < j; ++i) {
    result *= (m - Rational(i)) / Rational(i + 1);
  }
  return result;
}

inline Rational binomial(HalfInt m, std::int64_t j) { return binomial(m.as_rational(), j); }
inline Rational binomial(std::int64_t m, std::int64_t j) { return binomial(Rational(m), j); }

}  // namespace lva

#endif  // LVA_RATIONAL_HPP
