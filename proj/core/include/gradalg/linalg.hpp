#pragma once

// Exact sparse linear algebra over the rationals.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "gradalg/rational.hpp"

namespace gradalg {

/// Sparse vector with strictly increasing indices and no stored zeros.
struct SparseVec {
  std::vector<std::uint32_t> idx;
  std::vector<Rational> val;

  bool empty() const { return idx.empty(); }
  std::size_t nnz() const { return idx.size(); }

  /// Append an entry; index must exceed every stored index.
  void push(std::uint32_t i, Rational v);

  Rational at(std::uint32_t i) const;
  std::uint32_t leading() const { return idx.back(); }

  static SparseVec unit(std::uint32_t i);
  static SparseVec from_map(const std::map<std::uint32_t, Rational>& m);

  friend bool operator==(const SparseVec&, const SparseVec&) = default;
};

/// a + c * b
SparseVec axpy(const SparseVec& a, const Rational& c, const SparseVec& b);
SparseVec scaled(const SparseVec& v, const Rational& c);

/// Accumulates scaled sparse vectors; used to assemble images of basis
/// vectors before they are frozen into a SparseVec.
class SparseAccumulator {
 public:
  void add(std::uint32_t i, const Rational& v);
  void add(const SparseVec& v, const Rational& c);
  SparseVec take();

 private:
  std::map<std::uint32_t, Rational> entries_;
};

/// A linear map given by the images of the source basis vectors.
struct LinearMap {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::vector<SparseVec> images;

  LinearMap() = default;
  LinearMap(std::size_t source, std::size_t target)
      : source_dim(source), target_dim(target), images(source) {}

  SparseVec apply(const SparseVec& v) const;
  /// (*this) after `first`: source of `first` to target of *this.
  LinearMap compose_after(const LinearMap& first) const;
  bool is_zero() const;
};

/// Incremental row echelon form. Each stored row has a pivot column with
/// coefficient 1, and no other stored row has its pivot at that column.
/// With PivotOrder::Largest the pivot is the largest index of the row, so the
/// non-pivot columns are exactly the "standard" coordinates of the quotient
/// by the row span under the index order.
class Echelon {
 public:
  enum class PivotOrder { Largest, Smallest };

  explicit Echelon(std::size_t dim, PivotOrder order = PivotOrder::Largest);

  std::size_t dim() const { return pivot_row_.size(); }
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::uint32_t col) const { return pivot_row_[col] >= 0; }

  /// Remainder of v modulo the row span; it has no pivot columns.
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  /// Returns true when v was independent of the stored rows.
  bool insert(const SparseVec& v);

  const std::vector<SparseVec>& rows() const { return rows_; }

  /// Fully reduced rows (pivot 1, zero in every other pivot column), sorted
  /// by pivot column ascending.
  std::vector<SparseVec> reduced_rows() const;

  std::vector<std::uint32_t> non_pivot_columns() const;

 private:
  PivotOrder order_;
  std::vector<SparseVec> rows_;
  std::vector<std::int64_t> pivot_row_;
};

/// Rank of the span of the given vectors in a space of dimension `dim`.
std::size_t rank_of(std::span<const SparseVec> vectors, std::size_t dim);
std::size_t rank_of(const LinearMap& map);

/// Basis of {c : sum_k c_k * vectors[k] = 0}, as sparse vectors indexed by k,
/// in reduced echelon form with leading (largest index) coefficient 1.
std::vector<SparseVec> kernel_of(std::span<const SparseVec> vectors,
                                 std::size_t dim);
std::vector<SparseVec> kernel_of(const LinearMap& map);

}  // namespace gradalg
