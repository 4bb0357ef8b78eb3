#include "gradalg/series.hpp"

#include <algorithm>
#include <string>

#include "gradalg/error.hpp"

namespace gradalg {

namespace {

void require_truncation(int n) {
  if (n < 0) fail(ErrorKind::InvalidInput, "negative truncation " + std::to_string(n));
}

const Rational& zero_rational() {
  static const Rational zero(0);
  return zero;
}

}  // namespace

TruncSeries::TruncSeries(int truncation) {
  require_truncation(truncation);
  coeffs_.assign(static_cast<std::size_t>(truncation) + 1, Rational(0));
}

TruncSeries::TruncSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) fail(ErrorKind::InvalidInput, "series needs at least one coefficient");
}

TruncSeries TruncSeries::one(int truncation) {
  TruncSeries s(truncation);
  s.coeffs_[0] = 1;
  return s;
}

TruncSeries TruncSeries::monomial(const Rational& c, int k, int truncation) {
  TruncSeries s(truncation);
  if (k < 0) fail(ErrorKind::InvalidInput, "negative exponent");
  if (k <= truncation) s.coeffs_[static_cast<std::size_t>(k)] = c;
  return s;
}

TruncSeries TruncSeries::from_integers(const std::vector<std::int64_t>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (auto x : coeffs) c.emplace_back(static_cast<long>(x));
  return TruncSeries(std::move(c));
}

const Rational& TruncSeries::operator[](int n) const {
  if (n < 0) return zero_rational();
  if (n > truncation())
    fail(ErrorKind::TruncationExceeded,
         "coefficient " + std::to_string(n) + " requested from a series truncated at " +
             std::to_string(truncation()));
  return coeffs_[static_cast<std::size_t>(n)];
}

void TruncSeries::set(int n, Rational value) {
  if (n < 0 || n > truncation())
    fail(ErrorKind::TruncationExceeded, "coefficient index " + std::to_string(n) + " out of range");
  coeffs_[static_cast<std::size_t>(n)] = std::move(value);
}

TruncSeries TruncSeries::truncated(int n) const {
  if (n > truncation())
    fail(ErrorKind::TruncationExceeded,
         "cannot extend a series truncated at " + std::to_string(truncation()) + " to " +
             std::to_string(n));
  require_truncation(n);
  return TruncSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + n + 1));
}

TruncSeries TruncSeries::substitute(const Rational& c, int k) const {
  if (k < 1) fail(ErrorKind::InvalidInput, "substitution power must be positive");
  TruncSeries out(truncation());
  Rational cp(1);
  for (int m = 0; m * k <= truncation(); ++m) {
    out.coeffs_[static_cast<std::size_t>(m * k)] = coeffs_[static_cast<std::size_t>(m)] * cp;
    cp *= c;
  }
  return out;
}

bool TruncSeries::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return is_integer(q); });
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  if (o.truncation() < truncation()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  if (o.truncation() < truncation()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const int n = std::min(a.truncation(), b.truncation());
  TruncSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a.coeffs_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= n; ++j)
      out.coeffs_[static_cast<std::size_t>(i + j)] +=
          a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
  }
  return out;
}

TruncSeries series_inverse(const TruncSeries& v) {
  if (v[0] == 0) fail(ErrorKind::InvalidInput, "series with zero constant term is not invertible");
  const int n = v.truncation();
  const Rational inv0 = 1 / v[0];
  TruncSeries out(n);
  out.set(0, inv0);
  for (int k = 1; k <= n; ++k) {
    Rational s(0);
    for (int i = 1; i <= k; ++i) s += v[i] * out[k - i];
    out.set(k, -s * inv0);
  }
  return out;
}

TruncSeries series_log(const TruncSeries& v) {
  if (v[0] != 1) fail(ErrorKind::InvalidInput, "log needs constant term 1");
  const int n = v.truncation();
  TruncSeries out(n);
  // n l_n = n v_n - sum_{k<n} k l_k v_{n-k}
  for (int m = 1; m <= n; ++m) {
    Rational s = Rational(m) * v[m];
    for (int k = 1; k < m; ++k) s -= Rational(k) * out[k] * v[m - k];
    out.set(m, s / m);
  }
  return out;
}

TruncSeries series_exp(const TruncSeries& v) {
  if (v[0] != 0) fail(ErrorKind::InvalidInput, "exp needs constant term 0");
  const int n = v.truncation();
  TruncSeries out(n);
  out.set(0, Rational(1));
  for (int m = 1; m <= n; ++m) {
    Rational s(0);
    for (int k = 1; k <= m; ++k) s += Rational(k) * v[k] * out[m - k];
    out.set(m, s / m);
  }
  return out;
}

TruncSeries free_product_series(const TruncSeries& a, const TruncSeries& b) {
  if (a[0] != 1 || b[0] != 1)
    fail(ErrorKind::InvalidInput, "free product needs constant terms equal to 1");
  const int n = std::min(a.truncation(), b.truncation());
  TruncSeries s = series_inverse(a.truncated(n)) + series_inverse(b.truncated(n)) - TruncSeries::one(n);
  return series_inverse(s);
}

int moebius(std::int64_t r) {
  if (r < 1) fail(ErrorKind::InvalidInput, "moebius needs a positive argument");
  int result = 1;
  for (std::int64_t p = 2; p * p <= r; ++p) {
    if (r % p != 0) continue;
    r /= p;
    if (r % p == 0) return 0;
    result = -result;
  }
  if (r > 1) result = -result;
  return result;
}

SignedSeries::SignedSeries(TruncSeries even_part)
    : even(std::move(even_part)), odd(even.truncation()) {}

SignedSeries::SignedSeries(TruncSeries even_part, TruncSeries odd_part)
    : even(std::move(even_part)), odd(std::move(odd_part)) {
  if (even.truncation() != odd.truncation())
    fail(ErrorKind::InvalidInput, "even and odd parts must share a truncation");
  if (odd[0] != 0) fail(ErrorKind::InvalidInput, "odd part must have zero constant term");
}

SignedSeries operator*(const SignedSeries& a, const SignedSeries& b) {
  return SignedSeries(a.even * b.even + a.odd * b.odd, a.even * b.odd + a.odd * b.even);
}

SignedSeries operator+(const SignedSeries& a, const SignedSeries& b) {
  return SignedSeries(a.even + b.even, a.odd + b.odd);
}

std::int64_t DimSequence::at(int degree) const {
  if (degree < 1 || degree > max_degree())
    fail(ErrorKind::TruncationExceeded, "dimension at degree " + std::to_string(degree) + " not available");
  return dims[static_cast<std::size_t>(degree - 1)];
}

namespace {

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int r = 1; r <= n; ++r)
    if (n % r == 0) out.push_back(r);
  return out;
}

void check_unit(const SignedSeries& v) {
  if (v.truncation() < 1) fail(ErrorKind::InvalidInput, "logg needs truncation at least 1");
  if (v.even[0] != 1) fail(ErrorKind::InvalidInput, "logg needs constant term 1");
}

bool odd_part_is_zero(const SignedSeries& v) {
  return std::all_of(v.odd.coeffs().begin(), v.odd.coeffs().end(),
                     [](const Rational& q) { return q == 0; });
}

}  // namespace

SignedSeries logg_rational(const SignedSeries& v, LoggMode mode) {
  check_unit(v);
  const int n = v.truncation();
  TruncSeries even_out(n), odd_out(n);

  switch (mode) {
    case LoggMode::Even: {
      if (!odd_part_is_zero(v))
        fail(ErrorKind::InvalidInput, "even logg needs a series without odd part");
      const TruncSeries l = series_log(v.even);
      for (int m = 1; m <= n; ++m) {
        Rational s(0);
        for (int r : divisors(m)) s += Rational(moebius(r), r) * l[m / r];
        even_out.set(m, s);
      }
      break;
    }
    case LoggMode::Alternating: {
      // V((-1)^{r+1} z^r): the sign only survives for even r and odd m = n/r.
      const TruncSeries l = series_log(v.total());
      for (int m = 1; m <= n; ++m) {
        Rational s(0);
        for (int r : divisors(m)) {
          Rational term = Rational(moebius(r), r) * l[m / r];
          if (r % 2 == 0 && (m / r) % 2 == 1) term = -term;
          s += term;
        }
        (m % 2 == 0 ? even_out : odd_out).set(m, s);
      }
      break;
    }
    case LoggMode::Mixed: {
      // Split along the idempotents (1 +- y)/2, take scalar logs, recombine.
      const TruncSeries lp = series_log(v.even + v.odd);
      const TruncSeries lm = series_log(v.even - v.odd);
      const TruncSeries a = (lp + lm) * Rational(1, 2);
      const TruncSeries b = (lp - lm) * Rational(1, 2);
      // (z, y) -> (z^r, (-1)^{r+1} y^r) sends y to y for odd r and to -1 for even r.
      for (int m = 1; m <= n; ++m) {
        Rational se(0), so(0);
        for (int r : divisors(m)) {
          const Rational w(moebius(r), r);
          if (r % 2 == 1) {
            se += w * a[m / r];
            so += w * b[m / r];
          } else {
            se += w * (a[m / r] - b[m / r]);
          }
        }
        even_out.set(m, se);
        odd_out.set(m, so);
      }
      break;
    }
  }
  return SignedSeries(std::move(even_out), std::move(odd_out));
}

SignedSeries logg(const SignedSeries& v, LoggMode mode) {
  SignedSeries out = logg_rational(v, mode);
  for (int m = 0; m <= out.truncation(); ++m) {
    if (!is_integer(out.even[m]) || !is_integer(out.odd[m]))
      fail(ErrorKind::NotAnEnvelopingSeries,
           "logg produced a non-integral coefficient at degree " + std::to_string(m) +
               "; the input is not the series of an enveloping algebra");
  }
  return out;
}

SignedSeries pbw_env_series_signed(const DimSequence& alpha, const DimSequence& beta, int truncation) {
  require_truncation(truncation);
  for (const auto* seq : {&alpha, &beta})
    for (auto d : seq->dims)
      if (d < 0) fail(ErrorKind::InvalidInput, "negative dimension in PBW product");

  SignedSeries acc(TruncSeries::one(truncation));
  const int top = std::min(truncation, std::max(alpha.max_degree(), beta.max_degree()));
  for (int i = 1; i <= top; ++i) {
    const long a = i <= alpha.max_degree() ? static_cast<long>(alpha.at(i)) : 0;
    const long b = i <= beta.max_degree() ? static_cast<long>(beta.at(i)) : 0;
    if (a == 0 && b == 0) continue;
    // (1 - z^i)^{-a} = sum_k C(a+k-1, k) z^{ik}
    TruncSeries even_factor(truncation);
    for (int k = 0; k * i <= truncation; ++k) {
      Integer c;
      if (a == 0) {
        c = k == 0 ? 1 : 0;
      } else {
        mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(a + k - 1), static_cast<unsigned long>(k));
      }
      even_factor.set(k * i, Rational(c));
    }
    // (1 + y z^i)^b = sum_k C(b, k) y^k z^{ik}
    TruncSeries e(truncation), o(truncation);
    for (int k = 0; k * i <= truncation && k <= b; ++k) {
      Integer c;
      mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(k));
      (k % 2 == 0 ? e : o).set(k * i, Rational(c));
    }
    acc = acc * SignedSeries(even_factor) * SignedSeries(std::move(e), std::move(o));
  }
  return acc;
}

TruncSeries pbw_env_series(const DimSequence& alpha, const DimSequence& beta, int truncation) {
  return pbw_env_series_signed(alpha, beta, truncation).total();
}

std::optional<Period> detect_period(const DimSequence& seq) {
  const int len = seq.max_degree();
  for (int offset = 1; offset <= len; ++offset) {
    const int avail = len - offset + 1;
    for (int period = 1; 2 * period <= avail; ++period) {
      bool ok = true;
      for (int d = offset; d + period <= len && ok; ++d) ok = seq.at(d) == seq.at(d + period);
      if (ok) return Period{offset, period};
    }
  }
  return std::nullopt;
}

TruncSeries2::TruncSeries2(int truncation_y) {
  require_truncation(truncation_y);
  rows_.resize(static_cast<std::size_t>(truncation_y) + 1);
  for (std::size_t j = 0; j < rows_.size(); ++j) rows_[j].assign(j + 1, Rational(0));
}

TruncSeries2 TruncSeries2::one(int truncation_y) {
  TruncSeries2 s(truncation_y);
  s.rows_[0][0] = 1;
  return s;
}

TruncSeries2 TruncSeries2::diagonal(const TruncSeries& f) {
  TruncSeries2 s(f.truncation());
  for (int j = 0; j <= f.truncation(); ++j) s.rows_[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = f[j];
  return s;
}

const Rational& TruncSeries2::at(int n, int j) const {
  if (j > truncation_y())
    fail(ErrorKind::TruncationExceeded,
         "internal degree " + std::to_string(j) + " beyond truncation " + std::to_string(truncation_y()));
  if (n < 0 || j < 0 || n > j) return zero_rational();
  return rows_[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)];
}

void TruncSeries2::set(int n, int j, Rational value) {
  if (j < 0 || j > truncation_y())
    fail(ErrorKind::TruncationExceeded, "internal degree " + std::to_string(j) + " out of range");
  if (n < 0 || n > j) fail(ErrorKind::InvalidInput, "x-degree must not exceed y-degree");
  rows_[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)] = std::move(value);
}

const std::vector<Rational>& TruncSeries2::row(int j) const {
  if (j < 0 || j > truncation_y())
    fail(ErrorKind::TruncationExceeded, "internal degree " + std::to_string(j) + " out of range");
  return rows_[static_cast<std::size_t>(j)];
}

TruncSeries2 TruncSeries2::truncated(int j) const {
  if (j > truncation_y()) fail(ErrorKind::TruncationExceeded, "cannot extend a two-variable series");
  TruncSeries2 out(j);
  for (int k = 0; k <= j; ++k) out.rows_[static_cast<std::size_t>(k)] = rows_[static_cast<std::size_t>(k)];
  return out;
}

TruncSeries2 TruncSeries2::times_x() const {
  TruncSeries2 out(truncation_y());
  for (int j = 0; j <= truncation_y(); ++j) {
    const auto& r = rows_[static_cast<std::size_t>(j)];
    if (r.back() != 0)
      fail(ErrorKind::InvalidInput, "x-degree would exceed y-degree at internal degree " + std::to_string(j));
    for (int n = 0; n < j; ++n) out.rows_[static_cast<std::size_t>(j)][static_cast<std::size_t>(n + 1)] = r[static_cast<std::size_t>(n)];
  }
  return out;
}

TruncSeries2 TruncSeries2::times_y() const {
  TruncSeries2 out(truncation_y());
  for (int j = 1; j <= truncation_y(); ++j)
    for (int n = 0; n < j; ++n)
      out.rows_[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)] = rows_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(n)];
  return out;
}

TruncSeries TruncSeries2::eval_x(const Rational& c) const {
  TruncSeries out(truncation_y());
  for (int j = 0; j <= truncation_y(); ++j) {
    Rational s(0), cp(1);
    for (const auto& q : rows_[static_cast<std::size_t>(j)]) {
      s += q * cp;
      cp *= c;
    }
    out.set(j, s);
  }
  return out;
}

TruncSeries TruncSeries2::diagonal_part() const {
  TruncSeries out(truncation_y());
  for (int j = 0; j <= truncation_y(); ++j) out.set(j, rows_[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)]);
  return out;
}

TruncSeries2& TruncSeries2::operator+=(const TruncSeries2& o) {
  if (o.truncation_y() < truncation_y()) rows_.resize(o.rows_.size());
  for (std::size_t j = 0; j < rows_.size(); ++j)
    for (std::size_t n = 0; n <= j; ++n) rows_[j][n] += o.rows_[j][n];
  return *this;
}

TruncSeries2& TruncSeries2::operator-=(const TruncSeries2& o) {
  if (o.truncation_y() < truncation_y()) rows_.resize(o.rows_.size());
  for (std::size_t j = 0; j < rows_.size(); ++j)
    for (std::size_t n = 0; n <= j; ++n) rows_[j][n] -= o.rows_[j][n];
  return *this;
}

TruncSeries2 operator*(const TruncSeries2& a, const TruncSeries2& b) {
  const int top = std::min(a.truncation_y(), b.truncation_y());
  TruncSeries2 out(top);
  for (int j1 = 0; j1 <= top; ++j1)
    for (int j2 = 0; j1 + j2 <= top; ++j2) {
      const auto& ra = a.rows_[static_cast<std::size_t>(j1)];
      const auto& rb = b.rows_[static_cast<std::size_t>(j2)];
      auto& ro = out.rows_[static_cast<std::size_t>(j1 + j2)];
      for (std::size_t n1 = 0; n1 < ra.size(); ++n1) {
        if (ra[n1] == 0) continue;
        for (std::size_t n2 = 0; n2 < rb.size(); ++n2)
          if (rb[n2] != 0) ro[n1 + n2] += ra[n1] * rb[n2];
      }
    }
  return out;
}

TruncSeries2 series_inverse(const TruncSeries2& v) {
  const Rational c0 = v.at(0, 0);
  if (c0 == 0) fail(ErrorKind::InvalidInput, "series with zero constant term is not invertible");
  const int top = v.truncation_y();
  const Rational inv0 = 1 / c0;
  TruncSeries2 out(top);
  out.set(0, 0, inv0);
  // Row j: b_j = -inv0 * sum_{k=1..j} a_k * b_{j-k}, with polynomial products in x.
  for (int j = 1; j <= top; ++j) {
    std::vector<Rational> acc(static_cast<std::size_t>(j) + 1, Rational(0));
    for (int k = 1; k <= j; ++k) {
      const auto& ra = v.row(k);
      const auto& rb = out.row(j - k);
      for (std::size_t n1 = 0; n1 < ra.size(); ++n1) {
        if (ra[n1] == 0) continue;
        for (std::size_t n2 = 0; n2 < rb.size(); ++n2)
          if (rb[n2] != 0) acc[n1 + n2] += ra[n1] * rb[n2];
      }
    }
    for (int n = 0; n <= j; ++n) out.set(n, j, -acc[static_cast<std::size_t>(n)] * inv0);
  }
  return out;
}

}  // namespace gradalg
