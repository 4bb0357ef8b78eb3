#pragma once

// Truncated power series over the rationals, in one variable, two variables,
// and in Z[[z]][y]/(y^2 - 1), plus the Moebius-logarithm machinery that
// recovers graded Lie algebra dimensions from enveloping-algebra series.

#include <cstdint>
#include <optional>
#include <vector>

#include "gradalg/rational.hpp"

namespace gradalg {

/// sum_{n <= N} c_n z^n. Binary operations truncate to the smaller N; reading
/// a coefficient beyond N is an error rather than an implicit zero.
class TruncSeries {
 public:
  explicit TruncSeries(int truncation);
  explicit TruncSeries(std::vector<Rational> coeffs);

  static TruncSeries one(int truncation);
  /// c * z^k truncated at N (zero when k > N).
  static TruncSeries monomial(const Rational& c, int k, int truncation);
  static TruncSeries from_integers(const std::vector<std::int64_t>& coeffs);

  int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int n) const;
  void set(int n, Rational value);
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  TruncSeries truncated(int n) const;
  /// V(c * z^k), truncated at the same N.
  TruncSeries substitute(const Rational& c, int k) const;
  bool is_integral() const;

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const Rational& c);

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const Rational& c) { return a *= c; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(TruncSeries a) { return a *= Rational(-1); }
  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Multiplicative inverse; the constant term must be nonzero.
TruncSeries series_inverse(const TruncSeries& v);
/// log V for constant term 1.
TruncSeries series_log(const TruncSeries& v);
/// exp V for constant term 0.
TruncSeries series_exp(const TruncSeries& v);
/// 1 / (A*B) = 1/A + 1/B - 1; both constant terms must be 1.
TruncSeries free_product_series(const TruncSeries& a, const TruncSeries& b);

/// Moebius function by trial factorization; r must be positive.
int moebius(std::int64_t r);

/// even(z) + y * odd(z) with y^2 = 1. The odd part has zero constant term.
struct SignedSeries {
  TruncSeries even;
  TruncSeries odd;

  explicit SignedSeries(TruncSeries even_part);
  SignedSeries(TruncSeries even_part, TruncSeries odd_part);

  int truncation() const { return even.truncation(); }
  /// Evaluation at y = 1.
  TruncSeries total() const { return even + odd; }

  friend SignedSeries operator*(const SignedSeries& a, const SignedSeries& b);
  friend SignedSeries operator+(const SignedSeries& a, const SignedSeries& b);
  friend bool operator==(const SignedSeries&, const SignedSeries&) = default;
};

/// Nonnegative dimensions indexed by degree 1..N (dims[0] is degree 1).
struct DimSequence {
  std::vector<std::int64_t> dims;

  int max_degree() const { return static_cast<int>(dims.size()); }
  std::int64_t at(int degree) const;
  friend bool operator==(const DimSequence&, const DimSequence&) = default;
};

enum class LoggMode { Even, Alternating, Mixed };

/// Rational-valued logg with no integrality check.
SignedSeries logg_rational(const SignedSeries& v, LoggMode mode);
/// logg with integrality enforced (Error NotAnEnvelopingSeries otherwise).
SignedSeries logg(const SignedSeries& v, LoggMode mode);

/// prod_i (1 + y z^i)^beta_i / (1 - z^i)^alpha_i truncated at N.
SignedSeries pbw_env_series_signed(const DimSequence& alpha,
                                   const DimSequence& beta, int truncation);
/// The same product at y = 1.
TruncSeries pbw_env_series(const DimSequence& alpha, const DimSequence& beta,
                           int truncation);

struct Period {
  int offset = 0;  // 1-based degree where repetition starts
  int period = 0;
  friend bool operator==(const Period&, const Period&) = default;
};

/// Smallest offset (then smallest period) from which the sequence repeats
/// through the end, with at least two full periods of data.
std::optional<Period> detect_period(const DimSequence& seq);

/// sum_{j <= J} y^j * p_j(x) with deg_x p_j <= j.
class TruncSeries2 {
 public:
  explicit TruncSeries2(int truncation_y);

  static TruncSeries2 one(int truncation_y);
  /// f(xy): row j holds f_j at x^j.
  static TruncSeries2 diagonal(const TruncSeries& f);

  int truncation_y() const { return static_cast<int>(rows_.size()) - 1; }
  /// Coefficient of x^n y^j; zero for n > j, error for j beyond truncation.
  const Rational& at(int n, int j) const;
  void set(int n, int j, Rational value);
  const std::vector<Rational>& row(int j) const;

  TruncSeries2 truncated(int j) const;
  /// x * V; requires that no row attains x-degree j already.
  TruncSeries2 times_x() const;
  /// y * V.
  TruncSeries2 times_y() const;
  /// V(c, y) as a series in y.
  TruncSeries eval_x(const Rational& c) const;
  /// Coefficients of x^n y^n.
  TruncSeries diagonal_part() const;

  TruncSeries2& operator+=(const TruncSeries2& o);
  TruncSeries2& operator-=(const TruncSeries2& o);
  friend TruncSeries2 operator+(TruncSeries2 a, const TruncSeries2& b) { return a += b; }
  friend TruncSeries2 operator-(TruncSeries2 a, const TruncSeries2& b) { return a -= b; }
  friend TruncSeries2 operator*(const TruncSeries2& a, const TruncSeries2& b);
  friend bool operator==(const TruncSeries2&, const TruncSeries2&) = default;

 private:
  std::vector<std::vector<Rational>> rows_;
};

/// Inverse of a two-variable series with constant term nonzero.
TruncSeries2 series_inverse(const TruncSeries2& v);

}  // namespace gradalg
