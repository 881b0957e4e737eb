#ifndef LVA_ZHU_HPP
#define LVA_ZHU_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "lva/graded.hpp"
#include "lva/subspaces.hpp"
#include "lva/vertex.hpp"

namespace lva {

struct ZhuEntry {
  std::int64_t charge_alpha = 0;
  std::int64_t weight = 0;
  std::size_t piece_dim = 0;
  std::size_t span_dim = 0;
  std::size_t quotient_dim = 0;
};

struct ZhuClassTable {
  Space space;
  std::vector<ZhuEntry> entries;

  std::size_t quotient_at_weight(std::int64_t weight) const {
    std::size_t s = 0;
    for (const auto& e : entries) {
      if (e.weight == weight) s += e.quotient_dim;
    }
    return s;
  }
};

namespace detail {

// Span of {u(-2)v} inside one bidegree of the space, over graded basis pairs.
inline LinearSpan c2_span(Space space, std::int64_t charge_alpha, std::int64_t weight,
                          const GradedPiece& piece) {
  std::vector<FockVector> products;
  const std::int64_t lo = space == Space::VA1 ? charge_alpha - weight : 0;
  const std::int64_t hi = space == Space::VA1 ? weight : charge_alpha;
  for (std::int64_t r1 = lo; r1 <= hi; ++r1) {
    const std::int64_t r2 = charge_alpha - r1;
    for (std::int64_t w1 = r1 * r1; w1 <= weight - 1 - r2 * r2; ++w1) {
      const std::int64_t w2 = weight - 1 - w1;
      const auto us = space_basis(space, 2 * r1, 4 * w1);
      if (us.empty()) continue;
      const auto vs = space_basis(space, 2 * r2, 4 * w2);
      for (const auto& u : us) {
        for (const auto& v : vs) {
          FockVector p = state_field_mode(u, HalfInt::whole(-2), v);
          if (!p.is_zero()) products.push_back(std::move(p));
        }
      }
    }
  }
  return span_rank(products, piece);
}

}  // namespace detail

/// Graded dimensions of Zhu's Poisson algebra R = V / V(-2)V for the named
/// space, bidegree by bidegree up to the weight bound.
inline ZhuClassTable c2_dims(Space space, std::int64_t max_weight,
                             const BidegreeProgress& progress = {}) {
  ZhuClassTable table{space, {}};
  const std::int64_t charge_bound = max_weight;  // wt >= r^2 kills larger charges
  for (std::int64_t r = space == Space::VA1 ? -charge_bound : 0; r <= charge_bound; ++r) {
    for (std::int64_t weight = r * r; weight <= max_weight; ++weight) {
      const std::size_t piece_dim = space_dim(space, 2 * r, 4 * weight);
      if (piece_dim == 0) continue;
      if (progress) progress(2 * r, 4 * weight);
      GradedPiece piece = enumerate_graded_monomials(2 * r, 4 * weight);
      LinearSpan span = detail::c2_span(space, r, weight, piece);
      table.entries.push_back({r, weight, piece_dim, span.rank, piece_dim - span.rank});
    }
  }
  return table;
}

/// A class in R_V, held by a canonical representative (the residual after
/// reduction against the row-reduced span of V(-2)V at its bidegree).
struct ZhuClass {
  FockVector representative;
  bool zero = true;
};

/// Reduces w modulo V(-2)V of the space at w's own bidegree.
inline ZhuClass zhu_reduce(const FockVector& w, Space space) {
  if (w.is_zero()) return {FockVector{}, true};
  const std::int64_t charge_pi = w.charge();
  const std::int64_t weight_x4 = w.weight_x4();
  if (charge_pi % 2 != 0 || weight_x4 % 4 != 0) {
    throw std::invalid_argument("zhu_reduce: state outside the integral lattice part");
  }
  GradedPiece piece = enumerate_graded_monomials(charge_pi, weight_x4);
  LinearSpan span = detail::c2_span(space, charge_pi / 2, weight_x4 / 4, piece);
  Row residual = span.reduce(coordinates(w, piece));
  FockVector rep;
  for (std::size_t i = 0; i < residual.size(); ++i) {
    rep.add(piece.monomials[i], residual[i]);
  }
  return {rep, rep.is_zero()};
}

/// [u][v] = [u(-1)v] in R_V.
inline ZhuClass zhu_product(const FockVector& u, const FockVector& v, Space space) {
  return zhu_reduce(state_field_mode(u, HalfInt::whole(-1), v), space);
}

/// {[u],[v]} = [u(0)v] in R_V.
inline ZhuClass zhu_bracket(const FockVector& u, const FockVector& v, Space space) {
  return zhu_reduce(state_field_mode(u, HalfInt::whole(0), v), space);
}

// ---------------------------------------------------------------------------
// The generalized quotient W° / W°(<=-2)W°.

struct WCircQuotientEntry {
  std::int64_t charge_pi = 0;
  std::int64_t weight_x4 = 0;
  std::size_t piece_dim = 0;
  std::size_t quotient_dim = 0;
};

struct WCircQuotientTable {
  std::vector<WCircQuotientEntry> entries;
  // Largest weight (x4) carrying a nonzero quotient.
  std::int64_t threshold_x4 = -1;
  bool stabilized = false;  // no nonzero quotients in (threshold, bound]
  std::size_t total_dim = 0;
};

/// Quotient dimensions of W° by the span of u(n)v with n <= -2, computed
/// from the combinatorial basis. The table certifies the quotient vanishes
/// strictly above the threshold it finds, up to the weight bound.
inline WCircQuotientTable generalized_c2_dims_wcirc(std::int64_t max_weight) {
  WCircQuotientTable table;
  for (std::int64_t r = 0; r * r <= 4 * max_weight; ++r) {
    for (std::int64_t wx4 = r * r; wx4 <= 4 * max_weight; wx4 += 4) {
      const auto tuples = basis_tuples(Space::WCirc, r, wx4);
      if (tuples.empty()) continue;
      GradedPiece piece = enumerate_graded_monomials(r, wx4);
      std::vector<FockVector> products;
      for (std::int64_t r1 = 0; r1 <= r; ++r1) {
        const std::int64_t r2 = r - r1;
        for (std::int64_t w1x4 = r1 * r1; w1x4 <= wx4; w1x4 += 4) {
          for (std::int64_t w2x4 = r2 * r2; w2x4 <= wx4; w2x4 += 4) {
            // u(n)v lands here with n = wt(u)+wt(v)-weight-1; keep n <= -2.
            const std::int64_t n_doubled = (w1x4 + w2x4 - wx4 - 4) / 2;
            if (n_doubled > -4) continue;
            for (const auto& u : space_basis(Space::WCirc, r1, w1x4)) {
              for (const auto& v : space_basis(Space::WCirc, r2, w2x4)) {
                FockVector p = state_field_mode(u, HalfInt::halves(n_doubled), v);
                if (!p.is_zero()) products.push_back(std::move(p));
              }
            }
          }
        }
      }
      LinearSpan span = span_rank(products, piece);
      const std::size_t quotient = tuples.size() - span.rank;
      table.entries.push_back({r, wx4, tuples.size(), quotient});
      table.total_dim += quotient;
      if (quotient > 0 && wx4 > table.threshold_x4) table.threshold_x4 = wx4;
    }
  }
  // Finite-dimensionality witness: every weight strictly above the last
  // nonzero quotient, up to the bound, came out zero.
  table.stabilized = table.threshold_x4 < 4 * max_weight;
  return table;
}

}  // namespace lva

#endif  // LVA_ZHU_HPP
