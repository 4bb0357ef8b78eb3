#pragma once

// Simple matroids given by their 2-flats: graphs and explicit flat families,
// the holonomy Lie algebra, the quadratic Orlik-Solomon algebra and the
// decomposability test.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gradalg/lie.hpp"
#include "gradalg/presentation.hpp"

namespace gradalg {

struct GraphEdge {
  std::string name;
  int u = 0;  // 1-based vertices
  int v = 0;
};

struct Graph {
  std::string name;
  int num_vertices = 0;
  std::vector<GraphEdge> edges;

  /// Throws InvalidInput for loops, parallel edges or vertices out of range.
  void validate() const;
};

/// Ground set with its 2-flats of size >= 3. Each flat lists ground indices
/// in increasing order.
struct TwoFlatFamily {
  std::string name;
  std::vector<std::string> ground;
  std::vector<std::vector<std::size_t>> flats;

  /// Throws InvalidInput unless every flat has >= 3 distinct ground elements
  /// and two different flats share at most one element.
  void validate() const;
  /// Whether the given ground indices all lie in one flat.
  bool in_common_flat(std::initializer_list<std::size_t> elements) const;
};

/// `graph <name>` / `vertices <n>` / `edge <name> <i> <j>`.
Graph parse_graph(std::string_view text);
/// `flats <name>` / `ground e1 e2 ...` / `flat e1 e2 e5`.
TwoFlatFamily parse_flats(std::string_view text);

/// Triangles of G as edge triples. Flats are listed by their last edge, then
/// lexicographically; ground order is edge order.
TwoFlatFamily graph_two_flats(const Graph& g);

/// Pairs of ground elements lying in no flat, lexicographically.
std::vector<std::pair<std::size_t, std::size_t>> commuting_pairs(const TwoFlatFamily& f);

/// Even generators named after the ground elements. A flat {a_1..a_k} gives
/// [a_i, sum_{l != i} a_l] for i < k (the k-th is their negated sum); each
/// commuting pair gives one commutator.
LiePresentation holonomy_presentation(const TwoFlatFamily& f);

/// Exterior algebra on the ground set modulo ab - ac + bc for every 3-subset
/// a < b < c of every flat.
Presentation orlik_solomon_quadratic(const TwoFlatFamily& f);

struct DecomposabilityReport {
  bool decomposable = true;
  /// (x, y, z) with [x,[y,z]] != 0.
  std::optional<std::array<std::size_t, 3>> witness;
};

/// Checks [x,[y,z]] = 0 in the holonomy Lie algebra for every 3-set
/// {x,y,z} outside all flats and every choice of x.
DecomposabilityReport is_decomposable(const TwoFlatFamily& f);

}  // namespace gradalg
