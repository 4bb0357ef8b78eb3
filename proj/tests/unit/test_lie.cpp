#include <gtest/gtest.h>

#include "gradalg/algebra.hpp"
#include "gradalg/corpus.hpp"
#include "gradalg/error.hpp"
#include "gradalg/lie.hpp"
#include "gradalg/quaddual.hpp"
#include "oracles.hpp"

using namespace gradalg;

namespace {

LiePresentation corpus_lie(const char* name) { return parse_lie_presentation(corpus_text(name)); }

ErrorKind error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorKind::Io;
}

TruncSeries from(const std::vector<oracle::Int>& c) { return TruncSeries::from_integers(c); }

}  // namespace

TEST(LieExpr, ParsesNestedBracketsAndSums) {
  const std::vector<std::string> names{"a", "b", "c"};
  const LieExpr e = parse_lie_expr("[a,[b,c]] - 2*[b,[a,c]]", names);
  EXPECT_EQ(e.kind(), LieExpr::Kind::Sum);
  EXPECT_EQ(e.degree(), 3);
  EXPECT_EQ(e.to_string(names), "[a,[b,c]]-2*[b,[a,c]]");
  const LieExpr inner = parse_lie_expr("[a, b + 1/2*c]", names);
  EXPECT_EQ(inner.to_string(names), "[a,b+1/2*c]");
  EXPECT_THROW(parse_lie_expr("[a,d]", names), SyntaxError);
  EXPECT_THROW(parse_lie_expr("[a,b", names), SyntaxError);
  EXPECT_EQ(error_kind([&] { parse_lie_expr("[a,b] + c", names).degree(); }), ErrorKind::Inhomogeneous);
}

TEST(LieExpr, ExpansionUsesSigns) {
  const std::vector<VarSpec> vars{{"a", Parity::Even}, {"b", Parity::Odd}};
  const std::vector<std::string> names{"a", "b"};
  // [b,b] = 2 b^2 for odd b, [a,a] = 0 for even a.
  EXPECT_EQ(parse_lie_expr("[b,b]", names).expand(vars), NcPoly::word(Word{1, 1}, Rational(2)));
  EXPECT_TRUE(parse_lie_expr("[a,a]", names).expand(vars).is_zero());
  EXPECT_EQ(parse_lie_expr("[a,b]", names).sign(vars), Parity::Odd);
}

TEST(LieParser, RejectsBadInput) {
  EXPECT_THROW(parse_lie_presentation("var a even\nrel [a,b]\n"), SyntaxError);
  EXPECT_THROW(parse_lie_presentation("var a even\nrel a\n"), SyntaxError);
  EXPECT_THROW(parse_lie_presentation("var a neutral\n"), SyntaxError);
  EXPECT_EQ(error_kind([] { parse_lie_presentation("var a even\nvar b odd\nrel [a,a] + [a,b]\n"); }),
            ErrorKind::InvalidInput);
}

TEST(LieDims, AnickSequence) {
  const LieDims d = lie_dims(corpus_lie("anick.lie"), 8);
  EXPECT_EQ(d.total().dims, (std::vector<std::int64_t>{2, 3, 2, 1, 2, 3, 2, 1}));
  EXPECT_EQ(d.odd.dims, (std::vector<std::int64_t>{2, 0, 2, 0, 2, 0, 2, 0}));
  EXPECT_EQ(detect_period(d.total()), (Period{1, 4}));
}

TEST(LieDims, Sl3PeriodizationLowDegrees) {
  const LieDims d = lie_dims(corpus_lie("sl3.lie"), 6);
  EXPECT_EQ(d.total().dims, (std::vector<std::int64_t>{5, 3, 5, 3, 5, 3}));
}

TEST(LieDims, FreeLieAlgebraMatchesWitt) {
  for (int n_gens : {2, 3}) {
    LiePresentation l;
    for (int i = 0; i < n_gens; ++i) l.vars.push_back({"g" + std::to_string(i), Parity::Even});
    const LieDims d = lie_dims(l, 6);
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(d.even.at(n), oracle::witt(n_gens, n)) << n_gens << " " << n;
  }
}

TEST(LieDims, MixedSigns) {
  // free(a, b, c) with c odd modulo [a,b] + [c,c] and [a,c] + [b,c].
  const LieDims d = lie_dims(corpus_lie("env_example.lie"), 6);
  EXPECT_EQ(d.even.at(1), 2);
  EXPECT_EQ(d.odd.at(1), 1);
  // degree 2: [a,b], [a,c], [b,c], [c,c] minus two relations
  EXPECT_EQ(d.total().at(2), 2);
}

TEST(LieDims, AbelianAndPbwExample) {
  // free(a,b)/([a,a],[b,b]) on odd generators has basis a, b, [a,b].
  const LiePresentation l = parse_lie_presentation("var a odd\nvar b odd\nrel [a,a]\nrel [b,b]\n");
  const LieDims d = lie_dims(l, 5);
  EXPECT_EQ(d.total().dims, (std::vector<std::int64_t>{2, 1, 0, 0, 0}));
  EXPECT_TRUE(lie_element_is_zero(l, parse_lie_expr("[a,[a,b]]", l.var_names())));
  EXPECT_FALSE(lie_element_is_zero(l, parse_lie_expr("[a,b]", l.var_names())));
}

TEST(LieZero, AbelianAndJacobi) {
  const LiePresentation abelian = parse_lie_presentation("var x even\nvar y even\nrel [x,y]\n");
  EXPECT_TRUE(lie_element_is_zero(abelian, parse_lie_expr("[x,y]", abelian.var_names())));
  const LiePresentation free3 = parse_lie_presentation("var a even\nvar b even\nvar c even\n");
  const auto names = free3.var_names();
  EXPECT_TRUE(lie_element_is_zero(free3, parse_lie_expr("[a,[b,c]] + [b,[c,a]] + [c,[a,b]]", names)));
  EXPECT_TRUE(lie_element_is_zero(free3, parse_lie_expr("[a,b] + [b,a]", names)));
  EXPECT_FALSE(lie_element_is_zero(free3, parse_lie_expr("[a,[b,c]]", names)));
}

TEST(KoszulLieDims, SmallRings) {
  EXPECT_EQ(koszul_lie_dims(from({1, 1, 1, 1, 1, 1}), 5).dims, (std::vector<std::int64_t>{1, 0, 0, 0, 0}));
  EXPECT_EQ(koszul_lie_dims(from({1, 1, 0, 0, 0, 0}), 5).dims, (std::vector<std::int64_t>{1, 1, 0, 0, 0}));
}

TEST(KoszulLieDims, Example6AgainstItsLiePresentation) {
  const Presentation ex6 = parse_presentation(corpus_text("ex6.alg"));
  const DimSequence via_series = koszul_lie_dims(hilbert_series(ex6, 6), 6);
  const LiePresentation l = parse_lie_presentation(
      "var T1 odd\nvar T2 odd\nvar T3 odd\nrel [T1,T1]\nrel [T2,T2]\nrel [T3,T3]\nrel [T1,T3]\n");
  EXPECT_EQ(via_series, lie_dims(l, 6).total());
  EXPECT_EQ(via_series.at(1), 3);
}

TEST(KoszulLieDims, RejectsNonKoszulSeries) {
  const Presentation ex9 = parse_presentation(corpus_text("ex9.alg"));
  EXPECT_EQ(error_kind([&] { koszul_lie_dims(hilbert_series(ex9, 5), 5); }), ErrorKind::NotAnEnvelopingSeries);
}

TEST(EdgeIdeal, AgreesWithKoszulFormula) {
  const Presentation ex6 = parse_presentation(corpus_text("ex6.alg"));
  const TruncSeries d = from({1, 0, -2, 1, 0, 0, 0, 0});
  EXPECT_EQ(edge_ideal_lie_dims(d, 3, 7), koszul_lie_dims(hilbert_series(ex6, 7), 7));
  EXPECT_EQ(edge_ideal_lie_dims(from({1, 0, 0, 0, 0, 0}), 4, 5).dims, (std::vector<std::int64_t>{4, 0, 0, 0, 0}));
  EXPECT_EQ(edge_ideal_lie_dims(from({1, 0, -1, 0, 0, 0}), 2, 5).dims, (std::vector<std::int64_t>{2, 1, 0, 0, 0}));
}

TEST(Uea, EnvelopingAlgebraOfExteriorDual) {
  // The dual of the five-variable exterior ring has the Hilbert series of the
  // enveloping algebra of the sl3 periodization, at least in low degrees.
  const Presentation ring = parse_presentation(corpus_text("sl3_ring.alg"));
  const TruncSeries h = hilbert_series(koszul_dual(ring), 5);
  const LieDims d = lie_dims(corpus_lie("sl3.lie"), 5);
  EXPECT_EQ(h, pbw_env_series(d.total(), DimSequence{{0, 0, 0, 0, 0}}, 5));
}

TEST(Uea, PresentationShape) {
  const Presentation p = uea_presentation(corpus_lie("sl3.lie"));
  EXPECT_EQ(p.flavor, Flavor::Free);
  EXPECT_EQ(p.relations.size(), 7u);
  for (const auto& r : p.relations) EXPECT_EQ(r.leading_coefficient(), Rational(1));
}
