#ifndef LVA_GRADED_HPP
#define LVA_GRADED_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lva/fock.hpp"
#include "lva/partitions.hpp"
#include "lva/rational.hpp"
#include "lva/vertex.hpp"

namespace lva {

class BidegreeMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One (charge, weight) component of the Fock space, carrying its full
/// monomial basis in canonical order.
struct GradedPiece {
  std::int64_t charge = 0;
  std::int64_t weight_x4 = 0;
  std::vector<FockMonomial> monomials;

  Rational weight() const { return Rational(weight_x4, 4); }
  std::size_t dim() const { return monomials.size(); }

  /// Index of a monomial in the basis, or -1.
  std::int64_t index_of(const FockMonomial& m) const {
    auto it = std::lower_bound(monomials.begin(), monomials.end(), m);
    if (it == monomials.end() || !(*it == m)) return -1;
    return it - monomials.begin();
  }
};

/// All monomials of the given bidegree. Empty when weight - charge^2/4 is
/// not a non-negative integer.
inline GradedPiece enumerate_graded_monomials(std::int64_t charge, std::int64_t weight_x4) {
  GradedPiece piece{charge, weight_x4, {}};
  const std::int64_t offset_x4 = weight_x4 - charge * charge;
  if (offset_x4 < 0 || offset_x4 % 4 != 0) return piece;
  for (const auto& p : partitions(offset_x4 / 4)) {
    piece.monomials.push_back(FockMonomial(charge, p));
  }
  return piece;
}

inline GradedPiece enumerate_graded_monomials(std::int64_t charge, const Rational& weight) {
  Rational w4 = weight * Rational(4);
  if (!w4.is_integer()) return GradedPiece{charge, 0, {}};
  return enumerate_graded_monomials(charge, static_cast<std::int64_t>(w4.to_integer().get_si()));
}

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

/// In-place reduced row echelon form with deterministic pivoting (leftmost
/// nonzero column, topmost row). Zero rows are removed; returns the rank.
inline std::size_t rref(Matrix& m) {
  if (m.empty()) return 0;
  const std::size_t ncols = m[0].size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < ncols && pivot_row < m.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[pivot_row], m[sel]);
    Rational inv = Rational(1) / m[pivot_row][col];
    for (auto& x : m[pivot_row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == pivot_row || m[r][col].is_zero()) continue;
      Rational factor = m[r][col];
      for (std::size_t cc = col; cc < ncols; ++cc) {
        m[r][cc] -= factor * m[pivot_row][cc];
      }
    }
    ++pivot_row;
  }
  m.erase(std::remove_if(m.begin(), m.end(),
                         [](const Row& r) {
                           return std::all_of(r.begin(), r.end(),
                                              [](const Rational& x) { return x.is_zero(); });
                         }),
          m.end());
  return m.size();
}

/// Basis of the right kernel {x : Mx = 0}, one row per free column of the
/// RREF, itself row-reduced for a canonical result.
inline Matrix kernel_basis(Matrix m, std::size_t ncols) {
  rref(m);
  std::vector<std::int64_t> pivot_of_col(ncols, -1);
  for (std::size_t r = 0; r < m.size(); ++r) {
    std::size_t col = 0;
    while (col < ncols && m[r][col].is_zero()) ++col;
    if (col < ncols) pivot_of_col[col] = static_cast<std::int64_t>(r);
  }
  Matrix basis;
  for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
    if (pivot_of_col[free_col] >= 0) continue;
    Row x(ncols, Rational(0));
    x[free_col] = Rational(1);
    for (std::size_t col = 0; col < ncols; ++col) {
      if (pivot_of_col[col] >= 0) {
        x[col] = -m[static_cast<std::size_t>(pivot_of_col[col])][free_col];
      }
    }
    basis.push_back(std::move(x));
  }
  rref(basis);
  return basis;
}

/// Row-reduced span of vectors inside one graded piece.
struct LinearSpan {
  GradedPiece piece;
  Matrix rows;  // RREF
  std::size_t rank = 0;

  /// Residual of coords after reduction against the span.
  Row reduce(Row coords) const {
    for (const auto& row : rows) {
      std::size_t lead = 0;
      while (lead < row.size() && row[lead].is_zero()) ++lead;
      if (lead == row.size() || coords[lead].is_zero()) continue;
      Rational factor = coords[lead];
      for (std::size_t c = lead; c < row.size(); ++c) coords[c] -= factor * row[c];
    }
    return coords;
  }

  bool contains(const Row& coords) const {
    Row res = reduce(coords);
    return std::all_of(res.begin(), res.end(), [](const Rational& x) { return x.is_zero(); });
  }
};

/// Coordinates of v in the piece's monomial basis; rejects terms outside it.
inline Row coordinates(const FockVector& v, const GradedPiece& piece,
                       const std::string& what = "vector") {
  Row coords(piece.dim(), Rational(0));
  for (const auto& [m, c] : v.terms()) {
    std::int64_t idx = piece.index_of(m);
    if (idx < 0) {
      throw BidegreeMismatchError(what + " has a term of bidegree (charge " +
                                  std::to_string(m.charge) + ", 4*weight " +
                                  std::to_string(m.weight_x4()) + ") outside piece (charge " +
                                  std::to_string(piece.charge) + ", 4*weight " +
                                  std::to_string(piece.weight_x4) + ")");
    }
    coords[static_cast<std::size_t>(idx)] = c;
  }
  return coords;
}

/// Exact row-reduced span of the vectors inside the piece.
inline LinearSpan span_rank(const std::vector<FockVector>& vectors, const GradedPiece& piece) {
  Matrix m;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].is_zero()) continue;
    m.push_back(coordinates(vectors[i], piece, "vector #" + std::to_string(i)));
  }
  LinearSpan span{piece, std::move(m), 0};
  span.rank = rref(span.rows);
  return span;
}

/// Expresses target as a combination of the given vectors. Returns the
/// coefficient row when the vectors are independent and target lies in
/// their span, otherwise nothing.
inline std::optional<Row> solve_in_span(const std::vector<FockVector>& vectors,
                                        const GradedPiece& piece, const FockVector& target) {
  const std::size_t n = vectors.size();
  Matrix aug(piece.dim(), Row(n + 1, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    Row col = coordinates(vectors[i], piece, "vector #" + std::to_string(i));
    for (std::size_t d = 0; d < piece.dim(); ++d) aug[d][i] = col[d];
  }
  Row b = coordinates(target, piece, "target");
  for (std::size_t d = 0; d < piece.dim(); ++d) aug[d][n] = b[d];
  rref(aug);
  Row x(n, Rational(0));
  std::vector<bool> pivot_col(n, false);
  for (const auto& row : aug) {
    std::size_t lead = 0;
    while (lead < row.size() && row[lead].is_zero()) ++lead;
    if (lead == n) return std::nullopt;  // inconsistent
    if (lead < n) {
      x[lead] = row[n];
      pivot_col[lead] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!pivot_col[i]) return std::nullopt;  // dependent family
  }
  return x;
}

/// Joint kernel of the mode operators (u, m) restricted to the piece.
inline LinearSpan mode_kernel(const std::vector<std::pair<FockVector, HalfInt>>& operators,
                              const GradedPiece& piece) {
  Matrix conditions;
  for (const auto& [u, m] : operators) {
    // Rows of the operator matrix, indexed by image monomials.
    std::map<FockMonomial, Row> rows;
    for (std::size_t s = 0; s < piece.dim(); ++s) {
      FockVector image = state_field_mode(u, m, FockVector(piece.monomials[s]));
      for (const auto& [t, c] : image.terms()) {
        auto [it, inserted] = rows.try_emplace(t, Row(piece.dim(), Rational(0)));
        it->second[s] = c;
      }
    }
    for (auto& [t, row] : rows) conditions.push_back(std::move(row));
  }
  LinearSpan span{piece, {}, 0};
  if (piece.dim() == 0) return span;
  span.rows = kernel_basis(std::move(conditions), piece.dim());
  span.rank = span.rows.size();
  return span;
}

}  // namespace lva

#endif  // LVA_GRADED_HPP
