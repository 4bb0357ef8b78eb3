#include <gtest/gtest.h>

#include <random>

#include "gradalg/error.hpp"
#include "gradalg/json_io.hpp"
#include "gradalg/series.hpp"
#include "oracles.hpp"

using namespace gradalg;

namespace {

TruncSeries from(const std::vector<oracle::Int>& c) { return TruncSeries::from_integers(c); }

TruncSeries random_unit_series(std::mt19937& rng, int N) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::vector<oracle::Int> c{1};
  for (int n = 1; n <= N; ++n) c.push_back(coef(rng));
  return from(c);
}

DimSequence random_dims(std::mt19937& rng, int len, int max_value) {
  std::uniform_int_distribution<int> v(0, max_value);
  DimSequence d;
  for (int k = 0; k < len; ++k) d.dims.push_back(v(rng));
  return d;
}

void expect_error(ErrorKind kind, const std::function<void()>& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

}  // namespace

TEST(Series, InverseMatchesLongDivision) {
  const std::vector<oracle::Int> den{1, -3, 2, -1};
  std::vector<oracle::Int> padded = den;
  padded.resize(9, 0);
  EXPECT_EQ(series_inverse(from(padded)), from(oracle::divide({1}, den, 8)));
}

TEST(Series, InverseOfPaperSeries) {
  EXPECT_EQ(series_inverse(from({1, 2, 2, 0, 0, 0, 0})), from({1, -2, 2, 0, -4, 8, -8}));
}

TEST(Series, InverseIsAnInvolution) {
  std::mt19937 rng(7);
  for (int k = 0; k < 50; ++k) {
    const TruncSeries s = random_unit_series(rng, 8);
    EXPECT_EQ(series_inverse(series_inverse(s)), s);
  }
}

TEST(Series, InverseNeedsNonzeroConstant) {
  expect_error(ErrorKind::InvalidInput, [] { series_inverse(from({0, 1, 1})); });
}

TEST(Series, ProductTruncatesToShorterInput) {
  const TruncSeries a = from({1, 1, 1, 1});
  const TruncSeries b = from({1, 1});
  EXPECT_EQ((a * b).truncation(), 1);
  expect_error(ErrorKind::TruncationExceeded, [&] { (void)b[2]; });
}

TEST(Series, LogAndExpAreInverse) {
  std::mt19937 rng(11);
  for (int k = 0; k < 20; ++k) {
    const TruncSeries s = random_unit_series(rng, 7);
    EXPECT_EQ(series_exp(series_log(s)), s);
  }
}

TEST(Series, FreeProductFormula) {
  // k<x> * k<y> is the free algebra on two generators.
  const TruncSeries a = series_inverse(from({1, -1, 0, 0, 0, 0, 0}));
  const TruncSeries free2 = free_product_series(a, a);
  EXPECT_EQ(free2, from(oracle::divide({1}, {1, -2}, 6)));
}

TEST(Series, FreeProductIsAssociative) {
  std::mt19937 rng(5);
  for (int k = 0; k < 30; ++k) {
    const TruncSeries a = random_unit_series(rng, 6);
    const TruncSeries b = random_unit_series(rng, 6);
    const TruncSeries c = random_unit_series(rng, 6);
    EXPECT_EQ(free_product_series(free_product_series(a, b), c), free_product_series(a, free_product_series(b, c)));
  }
}

TEST(Series, MoebiusMatchesOracle) {
  for (int r = 1; r <= 200; ++r) EXPECT_EQ(moebius(r), oracle::moebius(r)) << r;
}

TEST(Series, SubstituteScalesAndSpreads) {
  const TruncSeries s = from({1, 2, 3, 4, 5, 6, 7});
  EXPECT_EQ(s.substitute(Rational(-1), 2), from({1, 0, -2, 0, 3, 0, -4}));
}

TEST(Logg, WittFormulaForFreeLieAlgebras) {
  for (int d : {2, 3}) {
    std::vector<oracle::Int> den{1, -d};
    const TruncSeries h = from(oracle::divide({1}, den, 10));
    const SignedSeries g = logg(SignedSeries(h), LoggMode::Even);
    for (int n = 1; n <= 10; ++n) EXPECT_EQ(g.even[n], Rational(oracle::witt(d, n))) << "d=" << d << " n=" << n;
  }
}

TEST(Logg, EvenOfPolynomialRing) {
  // 1/(1-z)^3 comes from three even generators of degree one.
  const TruncSeries h = from(oracle::divide({1}, oracle::power({1, -1}, 3, 8), 8));
  const SignedSeries g = logg(SignedSeries(h), LoggMode::Even);
  EXPECT_EQ(g.even, from({0, 3, 0, 0, 0, 0, 0, 0, 0}));
}

TEST(Logg, AlternatingSplitsByParity) {
  // (1+z)^2 / (1-z^2): two odd generators in degree 1, one even in degree 2.
  const TruncSeries h = from(oracle::divide(oracle::power({1, 1}, 2, 8), {1, 0, -1}, 8));
  const SignedSeries g = logg(SignedSeries(h), LoggMode::Alternating);
  EXPECT_EQ(g.total(), from({0, 2, 1, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(g.odd[1], Rational(2));
  EXPECT_EQ(g.even[2], Rational(1));
}

TEST(Logg, RejectsNonEnvelopingSeries) {
  // Integer series with constant term 1 always factor with integer exponents.
  EXPECT_NO_THROW(logg(SignedSeries(from({1, 1, 1, 0, 0})), LoggMode::Even));
  const TruncSeries half(std::vector<Rational>{Rational(1), Rational(1, 2), Rational(0), Rational(0)});
  expect_error(ErrorKind::NotAnEnvelopingSeries, [&] { logg(SignedSeries(half), LoggMode::Even); });
}

TEST(Logg, AdditiveOnProducts) {
  std::mt19937 rng(3);
  for (int k = 0; k < 100; ++k) {
    const TruncSeries a = random_unit_series(rng, 6);
    const TruncSeries b = random_unit_series(rng, 6);
    for (auto mode : {LoggMode::Even, LoggMode::Alternating}) {
      EXPECT_EQ(logg_rational(SignedSeries(a * b), mode),
                logg_rational(SignedSeries(a), mode) + logg_rational(SignedSeries(b), mode));
    }
  }
}

TEST(Logg, CommutesWithSubstitution) {
  std::mt19937 rng(13);
  for (int k = 0; k < 20; ++k) {
    const TruncSeries a = random_unit_series(rng, 8);
    const TruncSeries lhs = logg_rational(SignedSeries(a.substitute(Rational(1), 2)), LoggMode::Even).even;
    const TruncSeries rhs = logg_rational(SignedSeries(a), LoggMode::Even).even.substitute(Rational(1), 2);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Pbw, RoundTripThroughMixedLogg) {
  std::mt19937 rng(2024);
  for (int k = 0; k < 200; ++k) {
    const DimSequence alpha = random_dims(rng, 8, 3);
    const DimSequence beta = random_dims(rng, 8, 3);
    const SignedSeries v = pbw_env_series_signed(alpha, beta, 8);
    const SignedSeries g = logg(v, LoggMode::Mixed);
    for (int d = 1; d <= 8; ++d) {
      ASSERT_EQ(g.even[d], Rational(alpha.at(d))) << "trial " << k << " degree " << d;
      ASSERT_EQ(g.odd[d], Rational(beta.at(d))) << "trial " << k << " degree " << d;
    }
  }
}

TEST(Pbw, ExteriorAndPolynomialFactors) {
  const DimSequence alpha{{0, 1}};
  const DimSequence beta{{2}};
  EXPECT_EQ(pbw_env_series(alpha, beta, 6), from(oracle::divide({1, 2, 1}, {1, 0, -1}, 6)));
}

TEST(Period, DetectsAnickSequence) {
  const DimSequence d{{2, 3, 2, 1, 2, 3, 2, 1}};
  EXPECT_EQ(detect_period(d), (Period{1, 4}));
  EXPECT_EQ(detect_period(DimSequence{{7, 5, 3, 5, 3, 5, 3}}), (Period{2, 2}));
  EXPECT_FALSE(detect_period(DimSequence{{1, 2, 3, 4}}).has_value());
}

TEST(Series2, InverseAndProduct) {
  TruncSeries2 s = TruncSeries2::one(5);
  s.set(1, 1, Rational(-1));
  s.set(2, 3, Rational(-2));
  const TruncSeries2 inv = series_inverse(s);
  EXPECT_EQ(inv * s, TruncSeries2::one(5));
  EXPECT_EQ(inv.at(1, 1), Rational(1));
  EXPECT_EQ(inv.at(2, 3), Rational(2));
}

TEST(Json, SeriesRoundTrip) {
  const TruncSeries s(std::vector<Rational>{Rational(1), Rational(-3, 2), Rational(0), Rational(7)});
  const auto j = to_json(s);
  EXPECT_EQ(j.at("coeffs")[1], "-3/2");
  EXPECT_EQ(series_from_json(j), s);

  TruncSeries2 t = TruncSeries2::one(3);
  t.set(2, 3, Rational(5));
  EXPECT_EQ(series2_from_json(to_json(t)), t);

  const SignedSeries v(from({1, 0, 2}), from({0, 1, 0}));
  EXPECT_EQ(signed_series_from_json(to_json(v)), v);
}

TEST(Json, MalformedDocuments) {
  expect_error(ErrorKind::SyntaxError, [] { series_from_json(nlohmann::json::parse(R"({"coeffs":["1"]})")); });
  expect_error(ErrorKind::SyntaxError,
               [] { series_from_json(nlohmann::json::parse(R"({"truncation":2,"coeffs":["1"]})")); });
  expect_error(ErrorKind::SyntaxError,
               [] { series_from_json(nlohmann::json::parse(R"({"truncation":0,"coeffs":["x"]})")); });
}
