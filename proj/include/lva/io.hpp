#ifndef LVA_IO_HPP
#define LVA_IO_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lva/fock.hpp"
#include "lva/rational.hpp"

namespace lva {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OscBasis { W, A };  // render oscillators as w(-n) or a(-n) = 2w(-n)

/// Renders a vector in the term grammar, e.g.
/// "3/4*w(-1)^2*e[2] - 1/4*w(-2)*e[2]". Terms are ordered by weight, then
/// charge, then parts in ascending lexicographic order, which reproduces
/// the conventional display of the generator states.
inline std::string render_vector(const FockVector& v, OscBasis osc = OscBasis::W) {
  if (v.is_zero()) return "0";
  std::vector<std::pair<FockMonomial, Rational>> items(v.terms().begin(), v.terms().end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    std::int64_t wa = a.first.weight_x4(), wb = b.first.weight_x4();
    if (wa != wb) return wa < wb;
    if (a.first.charge != b.first.charge) return a.first.charge < b.first.charge;
    return std::lexicographical_compare(a.first.parts.begin(), a.first.parts.end(),
                                        b.first.parts.begin(), b.first.parts.end());
  });

  std::string out;
  bool first = true;
  for (const auto& [m, raw_coeff] : items) {
    Rational coeff = raw_coeff;
    if (osc == OscBasis::A) {
      for (std::size_t i = 0; i < m.parts.size(); ++i) coeff /= Rational(2);
    }
    bool negative = coeff.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (negative) coeff = -coeff;
    out += coeff.str();
    // runs of equal parts as powers, largest part first
    for (std::size_t i = 0; i < m.parts.size();) {
      std::size_t j = i;
      while (j < m.parts.size() && m.parts[j] == m.parts[i]) ++j;
      out += "*";
      out += (osc == OscBasis::A ? "a(-" : "w(-") + std::to_string(m.parts[i]) + ")";
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
    out += "*e[" + std::to_string(m.charge) + "]";
  }
  return out;
}

namespace iodetail {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_space();
    return pos >= text.size();
  }
  char peek() {
    skip_space();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    skip_space();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) {
      throw ParseError(std::string("expected '") + c + "' at position " + std::to_string(pos) +
                       " in: " + text);
    }
  }
  std::int64_t integer() {
    skip_space();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || (pos - start == 1 && !std::isdigit(static_cast<unsigned char>(text[start])))) {
      throw ParseError("expected integer at position " + std::to_string(start) + " in: " + text);
    }
    return std::stoll(text.substr(start, pos - start));
  }
};

}  // namespace iodetail

/// Parses the term grammar
///   vector := signed-term { ('+'|'-') term }
///   term   := rational '*' { ('w'|'a') '(-' posint ')' [ '^' posint ] } 'e[' int ']'
/// where a(-n) denotes 2w(-n).
inline FockVector parse_vector(const std::string& text) {
  iodetail::Cursor cur{text};
  FockVector out;
  bool first = true;
  while (!cur.done()) {
    Rational sign(1);
    if (cur.accept('-')) {
      sign = Rational(-1);
    } else if (cur.accept('+')) {
      // explicit plus
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms in: " + text);
    }
    first = false;

    std::int64_t num = cur.integer();
    Rational coeff = sign * Rational(num);
    if (cur.accept('/')) {
      std::int64_t den = cur.integer();
      coeff = coeff / Rational(den);
    }

    std::vector<std::int64_t> parts;
    bool have_charge = false;
    std::int64_t charge = 0;
    while (cur.accept('*')) {
      char head = cur.peek();
      if (head == 'w' || head == 'a') {
        ++cur.pos;
        cur.expect('(');
        std::int64_t mode = cur.integer();
        if (mode >= 0) throw ParseError("oscillator mode must be negative in: " + text);
        cur.expect(')');
        std::int64_t power = 1;
        if (cur.accept('^')) power = cur.integer();
        if (power < 1) throw ParseError("oscillator power must be positive in: " + text);
        for (std::int64_t t = 0; t < power; ++t) {
          parts.push_back(-mode);
          if (head == 'a') coeff *= Rational(2);
        }
      } else if (head == 'e') {
        ++cur.pos;
        cur.expect('[');
        charge = cur.integer();
        cur.expect(']');
        have_charge = true;
        break;
      } else {
        throw ParseError("expected oscillator or e[..] in: " + text);
      }
    }
    if (!have_charge) throw ParseError("term is missing its e[charge] factor in: " + text);
    out.add(FockMonomial(charge, parts), coeff);
  }
  return out;
}

}  // namespace lva

#endif  // LVA_IO_HPP
