#pragma once

// Graded Lie algebras given by generators and relations, their enveloping
// algebras, and dimension sequences through the logarithmic formulas.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gradalg/ncpoly.hpp"
#include "gradalg/presentation.hpp"
#include "gradalg/series.hpp"

namespace gradalg {

/// A Lie expression as written: a generator, a bracket of two expressions,
/// or a rational linear combination of expressions.
class LieExpr {
 public:
  enum class Kind { Generator, Bracket, Sum };

  static LieExpr generator(std::size_t index);
  static LieExpr bracket(LieExpr a, LieExpr b);
  /// sum_k c_k e_k
  static LieExpr sum(std::vector<std::pair<Rational, LieExpr>> terms);

  Kind kind() const { return kind_; }
  std::size_t generator_index() const { return gen_; }
  const LieExpr& left() const { return *children_.at(0); }
  const LieExpr& right() const { return *children_.at(1); }
  const std::vector<std::pair<Rational, LieExpr>>& terms() const { return terms_; }

  /// Degree; throws Inhomogeneous for a sum of mixed degrees.
  int degree() const;
  /// Sign; throws InvalidInput when a sum mixes even and odd terms.
  Parity sign(const std::vector<VarSpec>& vars) const;
  /// Image in the free associative algebra, [a,b] = ab - (-1)^{|a||b|} ba.
  NcPoly expand(const std::vector<VarSpec>& vars) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  Kind kind_ = Kind::Generator;
  std::size_t gen_ = 0;
  std::vector<std::shared_ptr<const LieExpr>> children_;
  std::vector<std::pair<Rational, LieExpr>> terms_;
};

struct LiePresentation {
  std::string name;
  std::vector<VarSpec> vars;
  std::vector<LieExpr> relations;

  std::vector<std::string> var_names() const;
  /// Throws on duplicate names or relations that are not homogeneous in
  /// degree and sign.
  void validate() const;
};

/// Reads `lie <name>` / `var <name> <even|odd>` / `rel <lie-expr>`, where
/// expressions use nested [A,B], rational coefficients and +/-.
LiePresentation parse_lie_presentation(std::string_view text);
/// Parses one Lie expression against the given generator names.
LieExpr parse_lie_expr(std::string_view text, const std::vector<std::string>& names);

/// Enveloping algebra as a free-flavor associative presentation.
Presentation uea_presentation(const LiePresentation& l);

/// Dimensions of a Lie algebra split by sign.
struct LieDims {
  DimSequence even;
  DimSequence odd;

  DimSequence total() const;
  friend bool operator==(const LieDims&, const LieDims&) = default;
};

/// Dimensions in degrees 1..N from the enveloping-algebra Hilbert series:
/// logg_0 for even generators, logg_1 for odd ones, the mixed logg otherwise.
/// The degree-2 value is cross-checked against a direct rank count.
LieDims lie_dims(const LiePresentation& l, int N);

/// logg_1(1 / H(-z)): Lie dimensions of a Koszul algebra with Hilbert series H.
DimSequence koszul_lie_dims(const TruncSeries& h, int N);

/// n z + sum_{r,s >= 1} mu(r)/(r s) (1 - d((-z)^r))^s, the Lie dimensions of
/// a Koszul ring with d(z) = H(K_R)(-1, z).
DimSequence edge_ideal_lie_dims(const TruncSeries& d, int n, int N);

/// Whether e vanishes in L, decided in the enveloping algebra.
bool lie_element_is_zero(const LiePresentation& l, const LieExpr& e);

}  // namespace gradalg
