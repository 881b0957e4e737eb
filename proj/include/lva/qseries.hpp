#ifndef LVA_QSERIES_HPP
#define LVA_QSERIES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lva {

class TruncationMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Truncated integer power series in q, optionally graded by a charge
/// variable z. Coefficients above the truncation order are never stored;
/// arithmetic between different orders is an error rather than a silent
/// re-truncation.
class QSeries {
 public:
  using Key = std::pair<std::int64_t, std::int64_t>;  // (z power, q power)

  explicit QSeries(std::int64_t order) : order_(order) {
    if (order < 0) throw std::invalid_argument("QSeries: negative order");
  }

  std::int64_t order() const { return order_; }
  const std::map<Key, std::int64_t>& coefficients() const { return coeffs_; }

  std::int64_t at(std::int64_t q_power, std::int64_t z_power = 0) const {
    auto it = coeffs_.find({z_power, q_power});
    return it == coeffs_.end() ? 0 : it->second;
  }

  void add(std::int64_t q_power, std::int64_t z_power, std::int64_t value) {
    if (q_power > order_) return;
    if (q_power < 0) throw std::invalid_argument("QSeries: negative q power");
    if (value == 0) return;
    auto [it, inserted] = coeffs_.try_emplace({z_power, q_power}, value);
    if (!inserted) {
      it->second += value;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  QSeries& operator+=(const QSeries& o) {
    check_order(o);
    for (const auto& [k, v] : o.coeffs_) add(k.second, k.first, v);
    return *this;
  }
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    a.check_order(b);
    QSeries out(a.order_);
    for (const auto& [ka, va] : a.coeffs_) {
      for (const auto& [kb, vb] : b.coeffs_) {
        out.add(ka.second + kb.second, ka.first + kb.first, va * vb);
      }
    }
    return out;
  }

  /// Multiplies by z^dz q^dq, discarding anything pushed past the order.
  QSeries shifted(std::int64_t dq, std::int64_t dz) const {
    QSeries out(order_);
    for (const auto& [k, v] : coeffs_) out.add(k.second + dq, k.first + dz, v);
    return out;
  }

  /// Sets z = 1: collapses the charge grading.
  QSeries specialize_z() const {
    QSeries out(order_);
    for (const auto& [k, v] : coeffs_) out.add(k.second, 0, v);
    return out;
  }

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  /// First (q, z) bidegree where the two series differ, scanning q-major,
  /// or nothing when equal. Orders must match.
  struct Mismatch {
    std::int64_t q_power;
    std::int64_t z_power;
    std::int64_t left;
    std::int64_t right;
  };
  static std::optional<Mismatch> compare(const QSeries& a, const QSeries& b) {
    a.check_order(b);
    std::optional<Mismatch> best;
    auto scan = [&](const std::map<Key, std::int64_t>& coeffs) {
      for (const auto& [k, v] : coeffs) {
        std::int64_t la = a.at(k.second, k.first), lb = b.at(k.second, k.first);
        if (la == lb) continue;
        if (!best || k.second < best->q_power ||
            (k.second == best->q_power && k.first < best->z_power)) {
          best = Mismatch{k.second, k.first, la, lb};
        }
      }
    };
    scan(a.coeffs_);
    scan(b.coeffs_);
    return best;
  }

  /// Text rendering, e.g. "1 + q + 2q^2" or "1 + z*q + 2z^2*q^4".
  std::string str() const {
    if (coeffs_.empty()) return "0";
    // q-major ordering for display
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> by_q;
    for (const auto& [k, v] : coeffs_) by_q[{k.second, k.first}] = v;
    std::string out;
    bool first = true;
    for (const auto& [k, v] : by_q) {
      std::int64_t c = v;
      if (first) {
        if (c < 0) {
          out += "-";
          c = -c;
        }
      } else {
        out += c < 0 ? " - " : " + ";
        if (c < 0) c = -c;
      }
      first = false;
      const auto [qp, zp] = k;
      std::string factors;
      if (zp != 0) factors += zp == 1 ? "z" : "z^" + std::to_string(zp);
      if (qp != 0) factors += qp == 1 ? "q" : "q^" + std::to_string(qp);
      if (factors.empty()) {
        out += std::to_string(c);
      } else {
        out += (c == 1 ? "" : std::to_string(c)) + factors;
      }
    }
    return out;
  }

 private:
  void check_order(const QSeries& o) const {
    if (order_ != o.order_) {
      throw TruncationMismatchError("QSeries order mismatch: " + std::to_string(order_) +
                                    " vs " + std::to_string(o.order_));
    }
  }
  std::int64_t order_;
  std::map<Key, std::int64_t> coeffs_;
};

/// 1/(q)_r to order D; the coefficient of q^n counts partitions of n into
/// parts of size at most r.
inline QSeries pochhammer_inverse(std::int64_t r, std::int64_t order) {
  if (r < 0) throw std::invalid_argument("pochhammer_inverse: r must be non-negative");
  // Dynamic programming over part sizes.
  std::vector<std::int64_t> coeff(static_cast<std::size_t>(order) + 1, 0);
  coeff[0] = 1;
  for (std::int64_t part = 1; part <= r; ++part) {
    for (std::int64_t n = part; n <= order; ++n) {
      coeff[static_cast<std::size_t>(n)] += coeff[static_cast<std::size_t>(n - part)];
    }
  }
  QSeries out(order);
  for (std::int64_t n = 0; n <= order; ++n) out.add(n, 0, coeff[static_cast<std::size_t>(n)]);
  return out;
}

/// Fermionic character of the commutant: sum_r q^{r^2} z^r / (q)_{2r}.
inline QSeries fermionic_char_C(std::int64_t order, bool with_z = false) {
  QSeries out(order);
  for (std::int64_t r = 0; r * r <= order; ++r) {
    QSeries term = pochhammer_inverse(2 * r, order).shifted(r * r, with_z ? r : 0);
    out += term;
  }
  return out;
}

/// Character of the principal subalgebra: sum_r q^{r^2} z^r / (q)_r.
inline QSeries fermionic_char_W(std::int64_t order, bool with_z = false) {
  QSeries out(order);
  for (std::int64_t r = 0; r * r <= order; ++r) {
    QSeries term = pochhammer_inverse(r, order).shifted(r * r, with_z ? r : 0);
    out += term;
  }
  return out;
}

/// Builds a character from a (charge, weight) -> dimension table.
inline QSeries char_from_dimensions(
    const std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t>& dims,
    std::int64_t order, bool with_z = false) {
  QSeries out(order);
  for (const auto& [k, d] : dims) {
    const auto [charge, weight] = k;
    if (weight > order) continue;
    out.add(weight, with_z ? charge : 0, d);
  }
  return out;
}

}  // namespace lva

#endif  // LVA_QSERIES_HPP
