#pragma once

// Koszul duals of quadratic presentations.

#include <vector>

#include "gradalg/linalg.hpp"
#include "gradalg/presentation.hpp"

namespace gradalg {

/// Value of T_i T_j on x_i x_j: (-1)^{|x_j| (|x_i| + 1)}.
int pairing_sign(Parity first, Parity second);

/// Span of the flavor-expanded relations in the basis x_i x_j (index
/// i * n + j), in reduced echelon form with largest pivots. All relations
/// must have degree 2.
std::vector<SparseVec> quadratic_relation_space(const Presentation& p);

struct KoszulDual {
  Presentation dual;
  /// Reduced echelon basis of the annihilator, in the basis T_i T_j.
  std::vector<SparseVec> solutions;
};

/// R! = T(R_1^*) / (annihilator of the relations). Dual generators get the
/// opposite sign and the suffix "_dual" (removed again when already
/// present). The output flavor is the one whose rules lie in the
/// annihilator; the listed relations complete them to a basis.
KoszulDual koszul_dual_with_solutions(const Presentation& p);
Presentation koszul_dual(const Presentation& p);

/// Whether two presentations on the same number of generators have the same
/// quadratic relation span.
bool same_quadratic_span(const Presentation& a, const Presentation& b);

}  // namespace gradalg
