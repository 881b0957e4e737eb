#ifndef LVA_SUBSPACES_HPP
#define LVA_SUBSPACES_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lva/fock.hpp"
#include "lva/graded.hpp"
#include "lva/partitions.hpp"
#include "lva/vertex.hpp"

namespace lva {

/// Exponent tuple (n1,...,nr). Basis enumerations use non-decreasing tuples
/// nr >= ... >= n1 >= 0 stored ascending; arbitrary tuples are allowed where
/// recurrences leave that range.
using IndexTuple = std::vector<std::int64_t>;

/// All non-decreasing tuples of the given length summing to total.
inline std::vector<IndexTuple> nondecreasing_tuples(std::int64_t length, std::int64_t total) {
  std::vector<IndexTuple> out;
  if (total < 0 || length < 0) return out;
  if (length == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  for (const auto& p : partitions(total, -1, length)) {
    IndexTuple t(static_cast<std::size_t>(length), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      t[static_cast<std::size_t>(length) - 1 - i] = p[i];
    }
    out.push_back(std::move(t));
  }
  return out;
}

/// Phi(n1,...,nr): the word with i-th factor e^a(-n_i-(2i-1)), applied right
/// to left to the vacuum. Weight r^2 + sum(n_i), charge r*a.
inline FockVector principal_vector(const IndexTuple& t) {
  FockVector v = vacuum();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 0) throw std::invalid_argument("principal_vector: negative entry");
    std::int64_t step = static_cast<std::int64_t>(i) + 1;
    v = vertex_mode_apply(2, HalfInt::whole(-t[i] - (2 * step - 1)), v);
  }
  return v;
}

/// Phi°(n1,...,nr): the word with i-th factor e^w(-n_i-(i+1)/2). Weight
/// r^2/4 + sum(n_i), charge r*w. Entries may be arbitrary integers; the
/// basis range is n_r >= ... >= n_1 >= 0.
inline FockVector generalized_principal_vector(const IndexTuple& t) {
  FockVector v = vacuum();
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::int64_t step = static_cast<std::int64_t>(i) + 1;
    // mode -n_i - (i+1)/2, doubled: -2 n_i - (i+1)
    v = vertex_mode_apply(1, HalfInt::halves(-2 * t[i] - (step + 1)), v);
  }
  return v;
}

/// The commutant generator phi_n = Phi°(n,n) = e^w(-n-3/2)e^w(-n-1)1,
/// of weight 2n+1 and charge a.
inline FockVector phi(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("phi: n must be non-negative");
  return generalized_principal_vector({n, n});
}

// ---------------------------------------------------------------------------
// Graded bases of the named subspaces.

enum class Space { W, C, VA1, WCirc, VA1Circ };

inline std::string space_name(Space s) {
  switch (s) {
    case Space::W: return "W";
    case Space::C: return "C";
    case Space::VA1: return "VA1";
    case Space::WCirc: return "Wo";
    case Space::VA1Circ: return "VA1o";
  }
  return "?";
}

/// Exponent tuples of the combinatorial basis of the space at one bidegree
/// (charge in w units, weight quadrupled). Only W, C and WCirc have tuple
/// bases; VA1 pieces are full Fock pieces.
inline std::vector<IndexTuple> basis_tuples(Space space, std::int64_t charge_pi,
                                            std::int64_t weight_x4) {
  std::int64_t length = 0;
  switch (space) {
    case Space::W:
      if (charge_pi < 0 || charge_pi % 2 != 0) return {};
      length = charge_pi / 2;
      break;
    case Space::C:
      if (charge_pi < 0 || charge_pi % 2 != 0) return {};
      length = charge_pi;  // tuples of length 2r at charge r*a = 2r*w
      break;
    case Space::WCirc:
      if (charge_pi < 0) return {};
      length = charge_pi;
      break;
    default:
      throw std::invalid_argument("basis_tuples: space has no tuple basis");
  }
  const std::int64_t offset_x4 = weight_x4 - charge_pi * charge_pi;
  if (offset_x4 < 0 || offset_x4 % 4 != 0) return {};
  return nondecreasing_tuples(length, offset_x4 / 4);
}

inline FockVector basis_vector(Space space, const IndexTuple& t) {
  switch (space) {
    case Space::W: return principal_vector(t);
    case Space::C:
    case Space::WCirc: return generalized_principal_vector(t);
    default: throw std::invalid_argument("basis_vector: space has no tuple basis");
  }
}

/// Basis of the space's (charge, weight) component as Fock vectors.
inline std::vector<FockVector> space_basis(Space space, std::int64_t charge_pi,
                                           std::int64_t weight_x4) {
  if (space == Space::VA1 || space == Space::VA1Circ) {
    if (space == Space::VA1 && charge_pi % 2 != 0) return {};
    std::vector<FockVector> out;
    for (const auto& m : enumerate_graded_monomials(charge_pi, weight_x4).monomials) {
      out.push_back(FockVector(m));
    }
    return out;
  }
  std::vector<FockVector> out;
  for (const auto& t : basis_tuples(space, charge_pi, weight_x4)) {
    out.push_back(basis_vector(space, t));
  }
  return out;
}

inline std::size_t space_dim(Space space, std::int64_t charge_pi, std::int64_t weight_x4) {
  if (space == Space::VA1 || space == Space::VA1Circ) {
    if (space == Space::VA1 && charge_pi % 2 != 0) return 0;
    return enumerate_graded_monomials(charge_pi, weight_x4).dim();
  }
  return basis_tuples(space, charge_pi, weight_x4).size();
}

// ---------------------------------------------------------------------------
// Commutant tables.

class SandwichError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GeneratorSet { WGenerators, CGenerators };

struct CommutantEntry {
  std::int64_t charge_alpha = 0;
  std::int64_t weight = 0;
  std::size_t kernel_dim = 0;
  std::size_t basis_rank = 0;
  bool sandwich_ok = false;
};

struct CommutantTable {
  GeneratorSet generators;
  std::vector<CommutantEntry> entries;
  bool all_ok = true;

  std::size_t dim_at(std::int64_t charge_alpha, std::int64_t weight) const {
    for (const auto& e : entries) {
      if (e.charge_alpha == charge_alpha && e.weight == weight) return e.kernel_dim;
    }
    return 0;
  }
  std::size_t total_at_weight(std::int64_t weight) const {
    std::size_t s = 0;
    for (const auto& e : entries) {
      if (e.weight == weight) s += e.kernel_dim;
    }
    return s;
  }
};

namespace detail {

// Non-negative modes of g that can act without forcing negative weight on
// a target of the given weight.
inline void append_nonneg_modes(std::vector<std::pair<FockVector, HalfInt>>& ops,
                                const FockVector& g, std::int64_t target_weight_x4) {
  const std::int64_t gw4 = g.weight_x4();
  const std::int64_t n_max = floor_div(target_weight_x4 + gw4 - 4, 4);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    ops.emplace_back(g, HalfInt::whole(n));
  }
}

}  // namespace detail

using BidegreeProgress = std::function<void(std::int64_t charge, std::int64_t weight_x4)>;

/// Joint kernel of all non-negative generator modes on each bidegree of
/// V_{A1}, validated against the explicit combinatorial basis of the
/// expected commutant (the basis must both lie in the kernel and have the
/// kernel's full rank). WGenerators cut out C, CGenerators cut out W.
inline CommutantTable commutant_dimension_table(GeneratorSet gens, std::int64_t max_weight,
                                                std::int64_t max_charge_alpha,
                                                std::int64_t c_generator_count = -1,
                                                const BidegreeProgress& progress = {}) {
  CommutantTable table{gens, {}, true};
  std::vector<FockVector> generators;
  Space expected;
  if (gens == GeneratorSet::WGenerators) {
    generators.push_back(lattice_state(2));
    expected = Space::C;
  } else {
    std::int64_t count = c_generator_count >= 0 ? c_generator_count : max_weight / 2;
    for (std::int64_t k = 0; k <= count; ++k) generators.push_back(phi(k));
    expected = Space::W;
  }

  for (std::int64_t r = -max_charge_alpha; r <= max_charge_alpha; ++r) {
    for (std::int64_t weight = 0; weight <= max_weight; ++weight) {
      GradedPiece piece = enumerate_graded_monomials(2 * r, 4 * weight);
      if (piece.dim() == 0) continue;
      if (progress) progress(2 * r, 4 * weight);
      std::vector<std::pair<FockVector, HalfInt>> ops;
      for (const auto& g : generators) detail::append_nonneg_modes(ops, g, piece.weight_x4);
      LinearSpan kernel = mode_kernel(ops, piece);

      std::vector<FockVector> expected_basis = space_basis(expected, 2 * r, 4 * weight);
      LinearSpan basis_span = span_rank(expected_basis, piece);
      bool membership = true;
      for (const auto& v : expected_basis) {
        if (!kernel.contains(coordinates(v, piece))) {
          membership = false;
          break;
        }
      }
      bool ok = membership && basis_span.rank == kernel.rank;
      if (!ok) {
        // Second tier: include modes of weight-bounded descendants of the
        // generators before declaring a mismatch.
        Space gen_space = gens == GeneratorSet::WGenerators ? Space::W : Space::C;
        std::vector<std::pair<FockVector, HalfInt>> extended = ops;
        for (std::int64_t gc = 1; gc <= max_charge_alpha + 1; ++gc) {
          for (std::int64_t gw = 0; gw <= weight + 2; ++gw) {
            for (const auto& g : space_basis(gen_space, 2 * gc, 4 * gw)) {
              detail::append_nonneg_modes(extended, g, piece.weight_x4);
            }
          }
        }
        kernel = mode_kernel(extended, piece);
        membership = true;
        for (const auto& v : expected_basis) {
          if (!kernel.contains(coordinates(v, piece))) {
            membership = false;
            break;
          }
        }
        ok = membership && basis_span.rank == kernel.rank;
        if (!ok) {
          throw SandwichError("commutant sandwich failed at charge " + std::to_string(r) +
                              "a, weight " + std::to_string(weight) + ": basis rank " +
                              std::to_string(basis_span.rank) + ", kernel dim " +
                              std::to_string(kernel.rank));
        }
      }
      table.entries.push_back({r, weight, kernel.rank, basis_span.rank, ok});
      table.all_ok = table.all_ok && ok;
    }
  }
  return table;
}

// ---------------------------------------------------------------------------
// Section-level structure reports.

struct CheckLine {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct StructureReport {
  std::string name;
  std::vector<CheckLine> lines;
  bool pass = true;

  void add(std::string label, bool ok, std::string detail = "") {
    pass = pass && ok;
    lines.push_back({std::move(label), ok, std::move(detail)});
  }
};

/// Nested-mode vectors Phi°(n_{2r-1}, n_{2r}+r-1)(-r) ... Phi°(n1,n2)(-1)1
/// for one non-decreasing tuple.
inline FockVector nested_mode_vector(std::int64_t r, const IndexTuple& t) {
  if (static_cast<std::int64_t>(t.size()) != 2 * r) {
    throw std::invalid_argument("nested_mode_vector: tuple length must be 2r");
  }
  FockVector v = vacuum();
  for (std::int64_t i = 1; i <= r; ++i) {
    FockVector factor =
        generalized_principal_vector({t[2 * i - 2], t[2 * i - 1] + i - 1});
    v = state_field_mode(factor, HalfInt::whole(-i), v);
  }
  return v;
}

/// Checks that the nested-mode vectors are a basis of C^{ra} weight by
/// weight, with the lexicographic leading-term property relative to the
/// combinatorial basis.
inline StructureReport verify_basis_cnew(std::int64_t r, std::int64_t max_weight) {
  StructureReport report{"basis-cnew r=" + std::to_string(r), {}, true};
  for (std::int64_t weight = r * r; weight <= max_weight; ++weight) {
    const auto tuples = basis_tuples(Space::C, 2 * r, 4 * weight);
    if (tuples.empty()) continue;
    GradedPiece piece = enumerate_graded_monomials(2 * r, 4 * weight);
    std::vector<FockVector> nested;
    for (const auto& t : tuples) nested.push_back(nested_mode_vector(r, t));
    LinearSpan span = span_rank(nested, piece);
    report.add("rank at weight " + std::to_string(weight), span.rank == tuples.size(),
               std::to_string(span.rank) + " of " + std::to_string(tuples.size()));

    std::vector<FockVector> comb;
    for (const auto& t : tuples) comb.push_back(generalized_principal_vector(t));
    bool leading_ok = true;
    for (std::size_t i = 0; i < tuples.size() && leading_ok; ++i) {
      auto coeffs = solve_in_span(comb, piece, nested[i]);
      if (!coeffs) {
        leading_ok = false;
        break;
      }
      // lexicographically greatest tuple with nonzero coefficient
      std::int64_t top = -1;
      for (std::size_t j = 0; j < tuples.size(); ++j) {
        if ((*coeffs)[j].is_zero()) continue;
        if (top < 0 || std::lexicographical_compare(tuples[static_cast<std::size_t>(top)].begin(),
                                                    tuples[static_cast<std::size_t>(top)].end(),
                                                    tuples[j].begin(), tuples[j].end())) {
          top = static_cast<std::int64_t>(j);
        }
      }
      leading_ok = top >= 0 && tuples[static_cast<std::size_t>(top)] == tuples[i];
    }
    report.add("leading terms at weight " + std::to_string(weight), leading_ok);
  }
  return report;
}

/// sl2 structure of C^a: dimension pattern, injectivity of the translation
/// operator, kernel of L_1, and the derivative bases {d^n phi_m}.
inline StructureReport sl2_report(std::int64_t max_weight) {
  StructureReport report{"sl2", {}, true};
  for (std::int64_t weight = 1; weight <= max_weight; ++weight) {
    const auto tuples = basis_tuples(Space::C, 2, 4 * weight);
    std::vector<FockVector> basis;
    for (const auto& t : tuples) basis.push_back(generalized_principal_vector(t));
    const std::size_t dim = basis.size();
    const std::size_t expected_dim = static_cast<std::size_t>((weight + 1) / 2);
    report.add("dim C^a at weight " + std::to_string(weight), dim == expected_dim,
               std::to_string(dim));

    if (weight + 1 <= max_weight + 1) {
      GradedPiece target = enumerate_graded_monomials(2, 4 * (weight + 1));
      std::vector<FockVector> images;
      for (const auto& v : basis) images.push_back(derivation(v));
      LinearSpan span = span_rank(images, target);
      report.add("d injective at weight " + std::to_string(weight), span.rank == dim,
                 "rank " + std::to_string(span.rank));
    }

    // Kernel of L_1 restricted to C^a at this weight.
    Matrix conditions;
    std::map<FockMonomial, Row> rows;
    for (std::size_t s = 0; s < basis.size(); ++s) {
      FockVector image = virasoro_mode(1, basis[s]);
      for (const auto& [t, c] : image.terms()) {
        auto [it, inserted] = rows.try_emplace(t, Row(basis.size(), Rational(0)));
        it->second[s] = c;
      }
    }
    for (auto& [t, row] : rows) conditions.push_back(std::move(row));
    std::size_t ker = dim == 0 ? 0 : kernel_basis(std::move(conditions), dim).size();
    std::size_t expected_ker = weight % 2 == 1 ? 1 : 0;
    report.add("ker L1 at weight " + std::to_string(weight), ker == expected_ker,
               std::to_string(ker));

    // Basis {d^{weight-1-2m} phi_m} of C^a at this weight.
    GradedPiece piece = enumerate_graded_monomials(2, 4 * weight);
    std::vector<FockVector> derived;
    for (std::int64_t m = 0; 2 * m + 1 <= weight; ++m) {
      FockVector v = phi(m);
      for (std::int64_t i = 0; i < weight - (2 * m + 1); ++i) v = derivation(v);
      derived.push_back(v);
    }
    LinearSpan phi_span = span_rank(derived, piece);
    report.add("phi-derivative basis at weight " + std::to_string(weight),
               phi_span.rank == dim && derived.size() == dim,
               "rank " + std::to_string(phi_span.rank));
  }
  return report;
}

/// Spans of monomials phi_{m1}(-l1-1)...phi_{ms}(-ls-1)1 reproduce every
/// bidegree dimension of C up to the weight bound.
inline StructureReport strong_generation_check(std::int64_t max_weight) {
  StructureReport report{"strong-generation", {}, true};
  // Enumerate words as sequences of factors (m, l), cost 2m+1+l each.
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> words;
  std::vector<std::pair<std::int64_t, std::int64_t>> current;
  std::function<void(std::int64_t)> rec = [&](std::int64_t budget) {
    words.push_back(current);
    for (std::int64_t m = 0; 2 * m + 1 <= budget; ++m) {
      for (std::int64_t l = 0; 2 * m + 1 + l <= budget; ++l) {
        current.emplace_back(m, l);
        rec(budget - (2 * m + 1 + l));
        current.pop_back();
      }
    }
  };
  rec(max_weight);

  // Group the resulting vectors by bidegree.
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<FockVector>> by_bidegree;
  for (const auto& word : words) {
    FockVector v = vacuum();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      v = state_field_mode(phi(it->first), HalfInt::whole(-it->second - 1), v);
    }
    if (v.is_zero()) continue;
    std::int64_t charge = 0, weight = 0;
    for (const auto& [m, l] : word) {
      charge += 1;
      weight += 2 * m + 1 + l;
    }
    by_bidegree[{charge, weight}].push_back(std::move(v));
  }

  for (std::int64_t r = 0; r * r <= max_weight; ++r) {
    for (std::int64_t weight = r * r; weight <= max_weight; ++weight) {
      const std::size_t expected = space_dim(Space::C, 2 * r, 4 * weight);
      auto it = by_bidegree.find({r, weight});
      std::size_t rank = 0;
      if (it != by_bidegree.end()) {
        GradedPiece piece = enumerate_graded_monomials(2 * r, 4 * weight);
        rank = span_rank(it->second, piece).rank;
      }
      report.add("span at charge " + std::to_string(r) + "a weight " + std::to_string(weight),
                 rank == expected,
                 std::to_string(rank) + " of " + std::to_string(expected));
    }
  }
  return report;
}

/// Dropping phi_k from the generating set loses exactly one dimension in
/// C^a at weight 2k+1.
inline StructureReport minimality_check(std::int64_t k) {
  StructureReport report{"minimality k=" + std::to_string(k), {}, true};
  const std::int64_t weight = 2 * k + 1;
  GradedPiece piece = enumerate_graded_monomials(2, 4 * weight);
  const std::size_t dim = space_dim(Space::C, 2, 4 * weight);
  std::vector<FockVector> others;
  for (std::int64_t m = 0; m < k; ++m) {
    FockVector v = phi(m);
    for (std::int64_t i = 0; i < 2 * (k - m); ++i) v = derivation(v);
    others.push_back(v);
  }
  LinearSpan span = span_rank(others, piece);
  report.add("deficit at weight " + std::to_string(weight), span.rank + 1 == dim,
             "rank " + std::to_string(span.rank) + " of " + std::to_string(dim));
  return report;
}

}  // namespace lva

#endif  // LVA_SUBSPACES_HPP
