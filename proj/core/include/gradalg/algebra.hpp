#pragma once

// Degreewise normal forms of a finitely presented graded algebra.

#include <cstdint>
#include <memory>
#include <vector>

#include "gradalg/linalg.hpp"
#include "gradalg/presentation.hpp"
#include "gradalg/series.hpp"

namespace gradalg {

/// Quotient bases of R = k<x>/I in degrees 0..N. Degree n is computed as
/// R_{n-1} (x) V modulo the images of u*r for normal words u and relations r,
/// so each basis element is a word whose prefixes are all normal. Normal
/// words are the deglex-smallest words outside the leading words of I_n.
class GradedAlgebra {
 public:
  GradedAlgebra(const Presentation& p, int max_degree);

  const Presentation& presentation() const { return pres_; }
  int max_degree() const { return static_cast<int>(basis_.size()) - 1; }
  std::size_t num_vars() const { return pres_.num_vars(); }

  std::size_t dim(int n) const;
  /// Normal words of degree n in increasing deglex order.
  const std::vector<Word>& basis(int n) const;
  /// Position of a normal word in basis(|w|), or -1.
  std::int64_t index_of(const Word& w) const;

  /// Coordinates of basis(n)[b] * x_g in basis(n + 1); requires n < N.
  const SparseVec& times_generator(int n, std::uint32_t b, std::uint8_t g) const;
  /// Right multiplication of a degree-n element by a generator.
  SparseVec times_generator(int n, const SparseVec& v, std::uint8_t g) const;

  /// Normal form of a word or homogeneous polynomial, in basis(degree).
  SparseVec reduce(const Word& w) const;
  SparseVec reduce(const NcPoly& p) const;
  /// Product of a degree-n element and a degree-m element.
  SparseVec multiply(int n, const SparseVec& a, int m, const SparseVec& b) const;

  TruncSeries hilbert() const;
  /// Split by the sign of normal words; the relations must be sign-homogeneous.
  SignedSeries hilbert_signed() const;

 private:
  Presentation pres_;
  std::vector<std::vector<Word>> basis_;
  // mult_[n][b * nv + g] = basis(n)[b] * x_g in basis(n + 1).
  std::vector<std::vector<SparseVec>> mult_;
};

/// Truncated Hilbert series of the presented algebra.
TruncSeries hilbert_series(const Presentation& p, int N);

/// The normal words of one degree, with reduction of arbitrary words of that
/// degree into them.
struct DegreeBasis {
  int degree = 0;
  std::vector<Word> normal_words;
  std::shared_ptr<const GradedAlgebra> algebra;

  /// Coordinates of w in normal_words; w must have length `degree`.
  SparseVec reduce(const Word& w) const;
};

DegreeBasis quotient_basis(const Presentation& p, int n);

}  // namespace gradalg
