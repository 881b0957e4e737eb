#ifndef LVA_JET_HPP
#define LVA_JET_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lva/graded.hpp"
#include "lva/qseries.hpp"
#include "lva/rational.hpp"

namespace lva {

/// A weighted polynomial ring presentation: variables with positive weights
/// and weighted-homogeneous relation polynomials (no derivatives).
struct DifferentialRingSpec {
  std::vector<std::pair<std::string, std::int64_t>> variables;

  // Monomial in the jet variables d^k x_i: sorted list of (variable index,
  // derivative order), one entry per factor.
  using Monomial = std::vector<std::pair<std::size_t, std::int64_t>>;
  using Polynomial = std::map<Monomial, Rational>;

  std::vector<Polynomial> relations;

  std::int64_t variable_weight(std::size_t i) const { return variables[i].second; }

  std::int64_t monomial_weight(const Monomial& m) const {
    std::int64_t w = 0;
    for (const auto& [var, der] : m) w += variable_weight(var) + der;
    return w;
  }
};

namespace jetdetail {

inline DifferentialRingSpec::Monomial merge(const DifferentialRingSpec::Monomial& a,
                                            const DifferentialRingSpec::Monomial& b) {
  DifferentialRingSpec::Monomial out = a;
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Formal derivation: d(d^k x_i) = d^{k+1} x_i, extended by Leibniz.
inline DifferentialRingSpec::Polynomial derive(const DifferentialRingSpec::Polynomial& p) {
  DifferentialRingSpec::Polynomial out;
  for (const auto& [mono, coeff] : p) {
    for (std::size_t pos = 0; pos < mono.size(); ++pos) {
      DifferentialRingSpec::Monomial bumped = mono;
      bumped[pos].second += 1;
      std::sort(bumped.begin(), bumped.end());
      auto [it, inserted] = out.try_emplace(bumped, coeff);
      if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

// All jet monomials of total weight exactly d, over letters d^k x_i.
inline std::vector<DifferentialRingSpec::Monomial> monomials_of_weight(
    const DifferentialRingSpec& spec, std::int64_t d) {
  std::vector<std::pair<std::pair<std::size_t, std::int64_t>, std::int64_t>> letters;
  for (std::size_t i = 0; i < spec.variables.size(); ++i) {
    for (std::int64_t k = 0; spec.variable_weight(i) + k <= d; ++k) {
      letters.push_back({{i, k}, spec.variable_weight(i) + k});
    }
  }
  std::vector<DifferentialRingSpec::Monomial> out;
  DifferentialRingSpec::Monomial current;
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t from, std::int64_t rest) {
    if (rest == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = from; i < letters.size(); ++i) {
      if (letters[i].second > rest) continue;
      current.push_back(letters[i].first);
      rec(i, rest - letters[i].second);
      current.pop_back();
    }
  };
  rec(0, d);
  for (auto& m : out) std::sort(m.begin(), m.end());
  return out;
}

}  // namespace jetdetail

/// Dimension of the weight-d piece of the jet algebra
/// C[x, dx, d^2 x, ...] / (relations)_d, by exact linear algebra on the
/// differential ideal's weight-d slice.
inline std::int64_t jet_dimension(const DifferentialRingSpec& spec, std::int64_t d) {
  if (d < 0) return 0;
  if (d == 0) return 1;
  const auto basis = jetdetail::monomials_of_weight(spec, d);
  std::map<DifferentialRingSpec::Monomial, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

  Matrix rows;
  for (const auto& rel : spec.relations) {
    if (rel.empty()) continue;
    const std::int64_t rel_weight = spec.monomial_weight(rel.begin()->first);
    for (const auto& [mono, coeff] : rel) {
      if (spec.monomial_weight(mono) != rel_weight) {
        throw std::invalid_argument("relation is not weighted-homogeneous");
      }
    }
    DifferentialRingSpec::Polynomial derived = rel;
    for (std::int64_t s = 0; rel_weight + s <= d; ++s) {
      if (s > 0) derived = jetdetail::derive(derived);
      for (const auto& cof : jetdetail::monomials_of_weight(spec, d - rel_weight - s)) {
        Row row(basis.size(), Rational(0));
        for (const auto& [mono, coeff] : derived) {
          row[index.at(jetdetail::merge(mono, cof))] += coeff;
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return static_cast<std::int64_t>(basis.size() - rref(rows));
}

inline QSeries jet_character(const DifferentialRingSpec& spec, std::int64_t order) {
  QSeries out(order);
  for (std::int64_t d = 0; d <= order; ++d) out.add(d, 0, jet_dimension(spec, d));
  return out;
}

/// R_W presented as C[x]/(x^2) with x of weight 1.
inline DifferentialRingSpec ring_spec_rw() {
  DifferentialRingSpec spec;
  spec.variables = {{"x", 1}};
  DifferentialRingSpec::Polynomial rel;
  rel[{{0, 0}, {0, 0}}] = Rational(1);
  spec.relations.push_back(rel);
  return spec;
}

/// R_C presented as C[x1,x2,...]/(x_i x_j) with x_i of weight 2i-1,
/// truncated to the variables and relations of weight at most max_weight.
inline DifferentialRingSpec ring_spec_rc(std::int64_t max_weight) {
  DifferentialRingSpec spec;
  for (std::int64_t i = 1; 2 * i - 1 <= max_weight; ++i) {
    spec.variables.push_back({"x" + std::to_string(i), 2 * i - 1});
  }
  for (std::size_t i = 0; i < spec.variables.size(); ++i) {
    for (std::size_t j = i; j < spec.variables.size(); ++j) {
      if (spec.variable_weight(i) + spec.variable_weight(j) > max_weight) continue;
      DifferentialRingSpec::Polynomial rel;
      rel[jetdetail::merge({{i, 0}}, {{j, 0}})] = Rational(1);
      spec.relations.push_back(rel);
    }
  }
  return spec;
}

/// Parses a relation polynomial such as "x1*x1 - 2*x1*x2" over the spec's
/// variables. Factors are variable names with optional ^power; terms are
/// joined by + and -.
inline DifferentialRingSpec::Polynomial parse_jet_polynomial(const DifferentialRingSpec& spec,
                                                             const std::string& text) {
  std::map<std::string, std::size_t> var_index;
  for (std::size_t i = 0; i < spec.variables.size(); ++i) var_index[spec.variables[i].first] = i;

  DifferentialRingSpec::Polynomial poly;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  bool first = true;
  while (pos < text.size()) {
    Rational sign(1);
    skip_space();
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = Rational(-1);
      ++pos;
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' in polynomial: " + text);
    }
    first = false;
    Rational coeff = sign;
    DifferentialRingSpec::Monomial mono;
    bool expect_factor = true;
    while (expect_factor) {
      skip_space();
      if (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])))) {
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) {
          ++pos;
        }
        coeff *= Rational::from_string(text.substr(start, pos - start));
      } else {
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
          ++pos;
        }
        if (start == pos) throw std::invalid_argument("expected variable in polynomial: " + text);
        std::string name = text.substr(start, pos - start);
        auto it = var_index.find(name);
        if (it == var_index.end()) throw std::invalid_argument("unknown variable: " + name);
        std::int64_t power = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          std::size_t s2 = pos;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
          power = std::stoll(text.substr(s2, pos - s2));
        }
        for (std::int64_t t = 0; t < power; ++t) mono.push_back({it->second, 0});
      }
      skip_space();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
      } else {
        expect_factor = false;
      }
    }
    std::sort(mono.begin(), mono.end());
    auto [it, inserted] = poly.try_emplace(mono, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) poly.erase(it);
    }
  }
  return poly;
}

}  // namespace lva

#endif  // LVA_JET_HPP
