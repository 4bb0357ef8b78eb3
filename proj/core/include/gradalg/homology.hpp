#pragma once

// Exact homology of the bar, Koszul and generalized Koszul complexes of a
// graded algebra, and the closed-form Poincare series built from them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gradalg/algebra.hpp"
#include "gradalg/linalg.hpp"
#include "gradalg/series.hpp"

namespace gradalg {

/// One internal-degree strand of a chain complex. spaces[n] is the dimension
/// in homological degree n and differentials[n - 1] is d_n : C_n -> C_{n-1}.
struct ComplexSlice {
  int internal_degree = 0;
  std::vector<std::size_t> spaces;
  std::vector<LinearMap> differentials;
};

/// dim ker d_n - rank d_{n+1} for every n. Throws NotAComplex when some
/// d_n d_{n+1} is nonzero and InvalidInput on mismatched dimensions.
std::vector<std::int64_t> homology_ranks(const ComplexSlice& slice);

/// Alternating sum of a list of dimensions.
std::int64_t euler_characteristic(const std::vector<std::int64_t>& dims);
std::int64_t euler_characteristic(const std::vector<std::size_t>& dims);

/// (homological degree n, internal degree j) -> dimension for j <= J; entries
/// with n > j are zero by construction.
class BigradedDims {
 public:
  explicit BigradedDims(int max_internal_degree);

  int max_internal_degree() const { return static_cast<int>(rows_.size()) - 1; }
  std::int64_t at(int n, int j) const;
  void set(int n, int j, std::int64_t value);

  TruncSeries2 to_series() const;
  /// First (n, j) with n != j and a nonzero entry, scanning j then n.
  std::optional<std::pair<int, int>> first_off_diagonal() const;
  bool diagonal_concentrated() const { return !first_off_diagonal(); }

  friend bool operator==(const BigradedDims&, const BigradedDims&) = default;

 private:
  std::vector<std::vector<std::int64_t>> rows_;
};

/// Strand j of the normalized bar complex T(R_+): components
/// R_{i_1} (x) ... (x) R_{i_n} with i_1 + ... + i_n = j and
/// d = sum_i (-1)^{i-1} (.. | r_i r_{i+1} | ..).
ComplexSlice bar_strand(const GradedAlgebra& a, int j);
/// Tor^R_{n,j}(k, k) for j <= J.
BigradedDims bar_tor_dims(const Presentation& p, int J);

/// Strand j of R (x) Lambda(T_1..T_n) with dT_i = x_i; polynomial flavor only.
ComplexSlice koszul_strand(const GradedAlgebra& a, int j);
BigradedDims koszul_complex_homology(const Presentation& p, int J);

enum class IdentityMode { Form, Froberg, Kos };

struct VerifyReport {
  bool pass = true;
  std::string reason;                    // empty, "OffDiagonal" or "Mismatch"
  std::optional<int> first_discrepancy;  // degree of the first failing coefficient
  std::optional<std::pair<int, int>> off_diagonal;
  TruncSeries lhs{0};
  TruncSeries rhs{0};
};

/// form: H(y) P(-1, y) = 1. froberg: Tor is diagonal and H(z) P(-z) = 1.
/// kos: H(z) (1 - z)^n = H(K_R)(-1, z), polynomial flavor only.
VerifyReport verify_series_identity(const Presentation& p, IdentityMode mode, int N);

/// (1 + xy)^n / (1 - x (HK(x, y) - 1)) truncated at y-degree N.
TruncSeries2 golod_poincare(const TruncSeries2& hk, int n, int N);

struct ProductCheckReport {
  bool pass = true;
  std::size_t classes = 0;
  std::size_t products = 0;
  std::string witness;  // first product that is not a boundary
};

/// Checks that products of positive-degree Koszul homology classes vanish
/// in homology, for products of internal degree <= J.
ProductCheckReport golod_product_check(const Presentation& p, int J);

struct GKData {
  /// k_spaces[n]: basis of K_n as vectors in R_1 (x) K_{n-1}, index
  /// a * dim K_{n-1} + k.
  std::vector<std::vector<SparseVec>> k_spaces;
  BigradedDims homology{0};
  /// c_n = sum_j H_{n-1,j} for n >= 2, truncated at J - 1.
  TruncSeries c_series{0};
  /// 0 -> K_{n+1} -> R_1 (x) K_n -> R_2 (x) K_{n-1} exact within range.
  bool exsec_exact = true;
  bool acyclic = true;

  std::vector<std::int64_t> k_dims() const;
};

GKData gk_homology(const Presentation& p, int J);

/// H_{R!}(xy) / (1 - y C(xy)) with zC(z) = H_{R!}(z)(1 - |R_1| z + |R_2| z^2) - 1,
/// where R! is the Koszul dual of the quadratic part. Requires R_3 = 0.
TruncSeries2 r3_poincare(const Presentation& p, int N);

}  // namespace gradalg
