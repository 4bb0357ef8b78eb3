#include "gradalg/matroid.hpp"

#include <algorithm>
#include <set>

#include "gradalg/algebra.hpp"
#include "gradalg/error.hpp"
#include "scanner.hpp"

namespace gradalg {

void Graph::validate() const {
  if (num_vertices < 0) fail(ErrorKind::InvalidInput, "negative vertex count");
  std::set<std::string> names;
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges) {
    if (!names.insert(e.name).second) fail(ErrorKind::InvalidInput, "duplicate edge name '" + e.name + "'");
    if (e.u < 1 || e.v < 1 || e.u > num_vertices || e.v > num_vertices)
      fail(ErrorKind::InvalidInput, "edge '" + e.name + "' has a vertex out of range");
    if (e.u == e.v) fail(ErrorKind::InvalidInput, "edge '" + e.name + "' is a loop");
    if (!seen.insert(std::minmax(e.u, e.v)).second)
      fail(ErrorKind::InvalidInput, "edge '" + e.name + "' is parallel to an earlier edge");
  }
}

void TwoFlatFamily::validate() const {
  std::set<std::string> names;
  for (const auto& g : ground)
    if (!names.insert(g).second) fail(ErrorKind::InvalidInput, "duplicate ground element '" + g + "'");
  for (const auto& flat : flats) {
    if (flat.size() < 3) fail(ErrorKind::InvalidInput, "flats must have at least 3 elements");
    for (std::size_t k = 0; k < flat.size(); ++k) {
      if (flat[k] >= ground.size()) fail(ErrorKind::InvalidInput, "flat element outside the ground set");
      if (k > 0 && flat[k] <= flat[k - 1])
        fail(ErrorKind::InvalidInput, "flat elements must be distinct and in ground order");
    }
  }
  for (std::size_t a = 0; a < flats.size(); ++a) {
    for (std::size_t b = a + 1; b < flats.size(); ++b) {
      std::vector<std::size_t> common;
      std::set_intersection(flats[a].begin(), flats[a].end(), flats[b].begin(), flats[b].end(),
                            std::back_inserter(common));
      if (common.size() > 1)
        fail(ErrorKind::InvalidInput, "two flats share more than one element ('" + ground[common[0]] + "', '" +
                                          ground[common[1]] + "')");
    }
  }
}

bool TwoFlatFamily::in_common_flat(std::initializer_list<std::size_t> elements) const {
  return std::any_of(flats.begin(), flats.end(), [&](const auto& flat) {
    return std::all_of(elements.begin(), elements.end(),
                       [&](std::size_t e) { return std::binary_search(flat.begin(), flat.end(), e); });
  });
}

namespace {

int parse_count(const std::pair<std::string, int>& word, int line) {
  detail::Scanner sc(word.first, line, word.second);
  const long v = sc.integer();
  if (!sc.eof()) sc.error("expected an integer");
  return static_cast<int>(v);
}

void check_name(const std::pair<std::string, int>& word, int line) {
  if (!detail::is_identifier(word.first))
    throw SyntaxError(ErrorKind::SyntaxError, "invalid name '" + word.first + "'", line, word.second);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  Graph g;
  bool have_name = false, have_vertices = false;
  for (const auto& d : detail::split_directives(text)) {
    const auto words = detail::split_words(d);
    if (d.keyword == "graph") {
      if (words.size() != 1 || have_name)
        throw SyntaxError(ErrorKind::SyntaxError, "expected one 'graph <name>' line", d.line, 1);
      g.name = words[0].first;
      have_name = true;
    } else if (d.keyword == "vertices") {
      if (words.size() != 1 || have_vertices)
        throw SyntaxError(ErrorKind::SyntaxError, "expected one 'vertices <n>' line", d.line, 1);
      g.num_vertices = parse_count(words[0], d.line);
      have_vertices = true;
    } else if (d.keyword == "edge") {
      if (words.size() != 3)
        throw SyntaxError(ErrorKind::SyntaxError, "'edge' expects a name and two vertices", d.line, d.rest_column);
      check_name(words[0], d.line);
      g.edges.push_back({words[0].first, parse_count(words[1], d.line), parse_count(words[2], d.line)});
      if (!have_vertices) throw SyntaxError(ErrorKind::SyntaxError, "'edge' before 'vertices'", d.line, 1);
      try {
        g.validate();
      } catch (const Error& e) {
        throw SyntaxError(e.kind(), e.what(), d.line, d.rest_column);
      }
    } else {
      throw SyntaxError(ErrorKind::SyntaxError, "unknown directive '" + d.keyword + "'", d.line, 1);
    }
  }
  if (!have_vertices) throw SyntaxError(ErrorKind::SyntaxError, "missing 'vertices' line", 0, 0);
  return g;
}

TwoFlatFamily parse_flats(std::string_view text) {
  TwoFlatFamily f;
  bool have_name = false, have_ground = false;
  for (const auto& d : detail::split_directives(text)) {
    const auto words = detail::split_words(d);
    if (d.keyword == "flats") {
      if (words.size() != 1 || have_name)
        throw SyntaxError(ErrorKind::SyntaxError, "expected one 'flats <name>' line", d.line, 1);
      f.name = words[0].first;
      have_name = true;
    } else if (d.keyword == "ground") {
      if (have_ground) throw SyntaxError(ErrorKind::SyntaxError, "duplicate 'ground' line", d.line, 1);
      for (const auto& w : words) {
        check_name(w, d.line);
        if (std::find(f.ground.begin(), f.ground.end(), w.first) != f.ground.end())
          throw SyntaxError(ErrorKind::InvalidInput, "duplicate ground element '" + w.first + "'", d.line, w.second);
        f.ground.push_back(w.first);
      }
      have_ground = true;
    } else if (d.keyword == "flat") {
      if (!have_ground) throw SyntaxError(ErrorKind::SyntaxError, "'flat' before 'ground'", d.line, 1);
      std::vector<std::size_t> flat;
      for (const auto& w : words) {
        const auto it = std::find(f.ground.begin(), f.ground.end(), w.first);
        if (it == f.ground.end())
          throw SyntaxError(ErrorKind::UnknownVariable, "unknown ground element '" + w.first + "'", d.line, w.second);
        flat.push_back(static_cast<std::size_t>(it - f.ground.begin()));
      }
      std::sort(flat.begin(), flat.end());
      if (std::adjacent_find(flat.begin(), flat.end()) != flat.end())
        throw SyntaxError(ErrorKind::InvalidInput, "repeated element in flat", d.line, d.rest_column);
      if (flat.size() < 3)
        throw SyntaxError(ErrorKind::InvalidInput, "flats must have at least 3 elements", d.line, d.rest_column);
      f.flats.push_back(std::move(flat));
      try {
        f.validate();
      } catch (const Error& e) {
        throw SyntaxError(e.kind(), e.what(), d.line, d.rest_column);
      }
    } else {
      throw SyntaxError(ErrorKind::SyntaxError, "unknown directive '" + d.keyword + "'", d.line, 1);
    }
  }
  if (!have_ground) throw SyntaxError(ErrorKind::SyntaxError, "missing 'ground' line", 0, 0);
  return f;
}

TwoFlatFamily graph_two_flats(const Graph& g) {
  g.validate();
  TwoFlatFamily f;
  f.name = g.name;
  const std::size_t m = g.edges.size();
  for (const auto& e : g.edges) f.ground.push_back(e.name);
  auto vertices = [&](std::size_t k) { return std::minmax(g.edges[k].u, g.edges[k].v); };
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t a = 0; a < c; ++a) {
      for (std::size_t b = a + 1; b < c; ++b) {
        std::set<int> vs;
        for (auto k : {a, b, c}) {
          const auto [u, v] = vertices(k);
          vs.insert(u);
          vs.insert(v);
        }
        if (vs.size() == 3) f.flats.push_back({a, b, c});
      }
    }
  }
  f.validate();
  return f;
}

std::vector<std::pair<std::size_t, std::size_t>> commuting_pairs(const TwoFlatFamily& f) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < f.ground.size(); ++a)
    for (std::size_t b = a + 1; b < f.ground.size(); ++b)
      if (!f.in_common_flat({a, b})) out.emplace_back(a, b);
  return out;
}

LiePresentation holonomy_presentation(const TwoFlatFamily& f) {
  f.validate();
  LiePresentation l;
  l.name = f.name.empty() ? std::string() : "holonomy_" + f.name;
  for (const auto& g : f.ground) l.vars.push_back({g, Parity::Even});
  for (const auto& flat : f.flats) {
    for (std::size_t i = 0; i + 1 < flat.size(); ++i) {
      std::vector<std::pair<Rational, LieExpr>> rest;
      for (std::size_t k = 0; k < flat.size(); ++k)
        if (k != i) rest.emplace_back(Rational(1), LieExpr::generator(flat[k]));
      l.relations.push_back(LieExpr::bracket(LieExpr::generator(flat[i]), LieExpr::sum(std::move(rest))));
    }
  }
  for (const auto& [a, b] : commuting_pairs(f))
    l.relations.push_back(LieExpr::bracket(LieExpr::generator(a), LieExpr::generator(b)));
  return l;
}

Presentation orlik_solomon_quadratic(const TwoFlatFamily& f) {
  f.validate();
  Presentation p;
  p.name = f.name.empty() ? std::string() : "os_" + f.name;
  p.flavor = Flavor::Exterior;
  for (const auto& g : f.ground) p.vars.push_back({g, Parity::Odd});
  auto w = [](std::size_t x, std::size_t y) {
    return NcPoly::word(Word{static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y)});
  };
  for (const auto& flat : f.flats) {
    for (std::size_t i = 0; i < flat.size(); ++i)
      for (std::size_t j = i + 1; j < flat.size(); ++j)
        for (std::size_t k = j + 1; k < flat.size(); ++k) {
          const auto a = flat[i], b = flat[j], c = flat[k];
          p.relations.push_back(w(a, b) - w(a, c) + w(b, c));
        }
  }
  return p;
}

DecomposabilityReport is_decomposable(const TwoFlatFamily& f) {
  const LiePresentation l = holonomy_presentation(f);
  const GradedAlgebra env(uea_presentation(l), 3);
  DecomposabilityReport report;
  const std::size_t m = f.ground.size();
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      for (std::size_t z = y + 1; z < m; ++z) {
        if (x == y || x == z || f.in_common_flat({x, y, z})) continue;
        const LieExpr e = LieExpr::bracket(LieExpr::generator(x),
                                           LieExpr::bracket(LieExpr::generator(y), LieExpr::generator(z)));
        if (!env.reduce(e.expand(l.vars)).empty()) {
          report.decomposable = false;
          report.witness = std::array<std::size_t, 3>{x, y, z};
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace gradalg
