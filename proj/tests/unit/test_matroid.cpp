#include <gtest/gtest.h>

#include <random>

#include "gradalg/algebra.hpp"
#include "gradalg/corpus.hpp"
#include "gradalg/error.hpp"
#include "gradalg/matroid.hpp"
#include "oracles.hpp"

using namespace gradalg;

namespace {

TwoFlatFamily k4() { return graph_two_flats(parse_graph(corpus_text("k4.graph"))); }

std::vector<std::vector<std::string>> flat_names(const TwoFlatFamily& f) {
  std::vector<std::vector<std::string>> out;
  for (const auto& flat : f.flats) {
    out.emplace_back();
    for (auto e : flat) out.back().push_back(f.ground[e]);
  }
  return out;
}

std::vector<std::string> relation_text(const LiePresentation& l) {
  std::vector<std::string> out;
  for (const auto& r : l.relations) out.push_back(r.to_string(l.var_names()));
  return out;
}

ErrorKind error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorKind::Io;
}

}  // namespace

TEST(Graph, K4Triangles) {
  const TwoFlatFamily f = k4();
  EXPECT_EQ(flat_names(f), (std::vector<std::vector<std::string>>{
                               {"e1", "e2", "e5"}, {"e3", "e4", "e5"}, {"e1", "e4", "e6"}, {"e2", "e3", "e6"}}));
  EXPECT_EQ(commuting_pairs(f), (std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {1, 3}, {4, 5}}));
  EXPECT_EQ(f.flats, parse_flats(corpus_text("k4.flats")).flats);
}

TEST(Graph, TriangleAndPath) {
  const TwoFlatFamily k3 = graph_two_flats(parse_graph("vertices 3\nedge a 1 2\nedge b 2 3\nedge c 1 3\n"));
  EXPECT_EQ(k3.flats.size(), 1u);
  EXPECT_TRUE(commuting_pairs(k3).empty());
  const TwoFlatFamily path = graph_two_flats(parse_graph("vertices 3\nedge a 1 2\nedge b 2 3\n"));
  EXPECT_TRUE(path.flats.empty());
  EXPECT_EQ(commuting_pairs(path).size(), 1u);
}

TEST(Graph, ParserErrors) {
  EXPECT_THROW(parse_graph("vertices 2\nedge a 1 1\n"), SyntaxError);
  EXPECT_THROW(parse_graph("vertices 2\nedge a 1 2\nedge b 2 1\n"), SyntaxError);
  EXPECT_THROW(parse_graph("vertices 2\nedge a 1 3\n"), SyntaxError);
  EXPECT_THROW(parse_graph("edge a 1 2\nvertices 2\n"), SyntaxError);
  EXPECT_THROW(parse_graph("vertices two\n"), SyntaxError);
  EXPECT_THROW(parse_flats("ground a b c d\nflat a b\n"), SyntaxError);
  EXPECT_THROW(parse_flats("ground a b c d\nflat a b c\nflat a b d\n"), SyntaxError);
  EXPECT_EQ(error_kind([] { parse_flats("ground a b c\nflat a b z\n"); }), ErrorKind::UnknownVariable);
}

TEST(Graph, RandomGraphsGiveValidFamilies) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g;
    g.num_vertices = 4 + static_cast<int>(rng() % 4);
    int k = 0;
    for (int u = 1; u <= g.num_vertices; ++u)
      for (int v = u + 1; v <= g.num_vertices; ++v)
        if (rng() % 2) g.edges.push_back({"e" + std::to_string(++k), u, v});
    EXPECT_NO_THROW(graph_two_flats(g).validate());
  }
}

TEST(Holonomy, K4Relations) {
  const LiePresentation l = holonomy_presentation(k4());
  EXPECT_EQ(relation_text(l), (std::vector<std::string>{
                                  "[e1,e2+e5]", "[e2,e1+e5]", "[e3,e4+e5]", "[e4,e3+e5]", "[e1,e4+e6]", "[e4,e1+e6]",
                                  "[e2,e3+e6]", "[e3,e2+e6]", "[e1,e3]", "[e2,e4]", "[e5,e6]"}));
  for (const auto& v : l.vars) EXPECT_EQ(v.sign, Parity::Even);
}

TEST(Holonomy, K4DegreeTwoCount) {
  const LieDims d = lie_dims(holonomy_presentation(k4()), 3);
  EXPECT_EQ(d.total().at(1), 6);
  EXPECT_EQ(d.total().at(2), oracle::binomial(6, 2) - 4 * 2 - 3);
}

TEST(Holonomy, SingleFlat) {
  const TwoFlatFamily f = parse_flats("ground a b c\nflat a b c\n");
  const LiePresentation l = holonomy_presentation(f);
  EXPECT_EQ(relation_text(l), (std::vector<std::string>{"[a,b+c]", "[b,a+c]"}));
  // The omitted third relation [c,a+b] lies in their span.
  EXPECT_TRUE(lie_element_is_zero(l, parse_lie_expr("[c,a+b]", l.var_names())));
}

TEST(Holonomy, FlatRelationsHaveRankKMinusOne) {
  const TwoFlatFamily f = parse_flats("ground a b c d\nflat a b c d\n");
  const LiePresentation l = holonomy_presentation(f);
  EXPECT_EQ(l.relations.size(), 3u);
  EXPECT_EQ(lie_dims(l, 2).total().at(2), oracle::binomial(4, 2) - 3);
  EXPECT_TRUE(lie_element_is_zero(l, parse_lie_expr("[d,a+b+c]", l.var_names())));
}

TEST(Holonomy, EmptyFamilyIsAbelian) {
  const TwoFlatFamily f = parse_flats("ground a b c\n");
  const LiePresentation l = holonomy_presentation(f);
  EXPECT_EQ(l.relations.size(), 3u);
  EXPECT_EQ(lie_dims(l, 4).total().dims, (std::vector<std::int64_t>{3, 0, 0, 0}));
}

TEST(OrlikSolomon, QuadraticPart) {
  const Presentation single = orlik_solomon_quadratic(parse_flats("ground a b c\nflat a b c\n"));
  EXPECT_EQ(single.flavor, Flavor::Exterior);
  EXPECT_EQ(single.relations.size(), 1u);
  EXPECT_EQ(single.relations[0].to_string(single.var_names()), "b*c - a*c + a*b");
  EXPECT_EQ(hilbert_series(single, 4), TruncSeries::from_integers({1, 3, 2, 0, 0}));
  const Presentation none = orlik_solomon_quadratic(parse_flats("ground a b c d\n"));
  EXPECT_EQ(hilbert_series(none, 5), TruncSeries::from_integers({1, 4, 6, 4, 1, 0}));
}

TEST(Decomposable, K4IsNot) {
  const DecomposabilityReport r = is_decomposable(k4());
  EXPECT_FALSE(r.decomposable);
  ASSERT_TRUE(r.witness.has_value());
  const LiePresentation l = holonomy_presentation(k4());
  EXPECT_FALSE(lie_element_is_zero(l, parse_lie_expr("[e3,[e4,e6]]", l.var_names())));
}

TEST(Decomposable, SingleFlatAndDisjointFlats) {
  EXPECT_TRUE(is_decomposable(parse_flats("ground a b c\nflat a b c\n")).decomposable);
  const TwoFlatFamily two = parse_flats("ground a b c d e f\nflat a b c\nflat d e f\n");
  EXPECT_TRUE(is_decomposable(two).decomposable);
  // Each flat contributes a center plus a free Lie algebra on two generators
  // in degrees >= 2; the two halves commute.
  const LieDims whole = lie_dims(holonomy_presentation(two), 5);
  const LieDims half = lie_dims(holonomy_presentation(parse_flats("ground a b c\nflat a b c\n")), 5);
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(whole.total().at(n), 2 * half.total().at(n)) << n;
  for (int n = 2; n <= 5; ++n) EXPECT_EQ(half.total().at(n), oracle::witt(2, n)) << n;
}
