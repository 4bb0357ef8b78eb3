#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gradalg/rational.hpp"

namespace gradalg {

/// A word in the generators, as 0-based generator indices.
using Word = std::vector<std::uint8_t>;

/// Degree-lexicographic order: shorter words first, then lexicographic in
/// the declared generator order.
struct DegLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

Word concat(const Word& a, const Word& b);

/// Noncommutative polynomial: words mapped to nonzero rational coefficients.
class NcPoly {
 public:
  using Terms = std::map<Word, Rational, DegLex>;

  NcPoly() = default;
  static NcPoly word(Word w, Rational c = Rational(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Word& w, const Rational& c);
  /// Largest word under DegLex; the polynomial must be nonzero.
  const Word& leading_word() const;
  const Rational& leading_coefficient() const;
  bool is_homogeneous() const;
  /// Common length of all words; requires a nonzero homogeneous polynomial.
  int degree() const;
  /// Scaled so that the leading coefficient is 1.
  NcPoly normalized() const;

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly& operator*=(const Rational& c);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(NcPoly a, const Rational& c) { return a *= c; }
  /// Concatenation product.
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  friend bool operator==(const NcPoly&, const NcPoly&) = default;

  /// Terms from the leading word down, e.g. "x2*x1 - x1*x2 + 2*x3*x3".
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  Terms terms_;
};

std::string word_to_string(const Word& w, const std::vector<std::string>& names);

}  // namespace gradalg
