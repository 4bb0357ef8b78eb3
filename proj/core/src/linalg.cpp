#include "gradalg/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "gradalg/error.hpp"

namespace gradalg {

void SparseVec::push(std::uint32_t i, Rational v) {
  assert(idx.empty() || idx.back() < i);
  if (v == 0) return;
  idx.push_back(i);
  val.push_back(std::move(v));
}

Rational SparseVec::at(std::uint32_t i) const {
  auto it = std::lower_bound(idx.begin(), idx.end(), i);
  if (it == idx.end() || *it != i) return Rational(0);
  return val[static_cast<std::size_t>(it - idx.begin())];
}

SparseVec SparseVec::unit(std::uint32_t i) {
  SparseVec v;
  v.push(i, Rational(1));
  return v;
}

SparseVec SparseVec::from_map(const std::map<std::uint32_t, Rational>& m) {
  SparseVec v;
  v.idx.reserve(m.size());
  v.val.reserve(m.size());
  for (const auto& [i, x] : m)
    if (x != 0) v.push(i, x);
  return v;
}

SparseVec axpy(const SparseVec& a, const Rational& c, const SparseVec& b) {
  SparseVec out;
  if (c == 0) return a;
  out.idx.reserve(a.nnz() + b.nnz());
  out.val.reserve(a.nnz() + b.nnz());
  std::size_t i = 0, j = 0;
  while (i < a.nnz() || j < b.nnz()) {
    if (j == b.nnz() || (i < a.nnz() && a.idx[i] < b.idx[j])) {
      out.idx.push_back(a.idx[i]);
      out.val.push_back(a.val[i]);
      ++i;
    } else if (i == a.nnz() || b.idx[j] < a.idx[i]) {
      out.idx.push_back(b.idx[j]);
      out.val.push_back(c * b.val[j]);
      ++j;
    } else {
      Rational s = a.val[i] + c * b.val[j];
      if (s != 0) {
        out.idx.push_back(a.idx[i]);
        out.val.push_back(std::move(s));
      }
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec scaled(const SparseVec& v, const Rational& c) {
  if (c == 0) return {};
  SparseVec out = v;
  for (auto& x : out.val) x *= c;
  return out;
}

void SparseAccumulator::add(std::uint32_t i, const Rational& v) {
  if (v == 0) return;
  auto [it, inserted] = entries_.try_emplace(i, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) entries_.erase(it);
  }
}

void SparseAccumulator::add(const SparseVec& v, const Rational& c) {
  for (std::size_t k = 0; k < v.nnz(); ++k) add(v.idx[k], c * v.val[k]);
}

SparseVec SparseAccumulator::take() {
  SparseVec out = SparseVec::from_map(entries_);
  entries_.clear();
  return out;
}

SparseVec LinearMap::apply(const SparseVec& v) const {
  SparseAccumulator acc;
  for (std::size_t k = 0; k < v.nnz(); ++k) acc.add(images[v.idx[k]], v.val[k]);
  return acc.take();
}

LinearMap LinearMap::compose_after(const LinearMap& first) const {
  if (first.target_dim != source_dim)
    fail(ErrorKind::InvalidInput, "composition of maps with mismatched dimensions");
  LinearMap out(first.source_dim, target_dim);
  for (std::size_t i = 0; i < first.source_dim; ++i)
    out.images[i] = apply(first.images[i]);
  return out;
}

bool LinearMap::is_zero() const {
  return std::all_of(images.begin(), images.end(),
                     [](const SparseVec& v) { return v.empty(); });
}

Echelon::Echelon(std::size_t dim, PivotOrder order)
    : order_(order), pivot_row_(dim, -1) {}

namespace {

using Acc = std::map<std::uint32_t, Rational>;

void subtract_row(Acc& acc, const Rational& c, const SparseVec& row,
                  std::uint32_t skip) {
  for (std::size_t k = 0; k < row.nnz(); ++k) {
    if (row.idx[k] == skip) continue;
    auto [it, inserted] = acc.try_emplace(row.idx[k]);
    it->second -= c * row.val[k];
  }
}

// Eliminates pivot columns from acc. `on_subtract(row, c)` observes each
// elimination step so callers can track combinations.
template <class OnSubtract>
void eliminate(Acc& acc, const std::vector<SparseVec>& rows,
               const std::vector<std::int64_t>& pivot_row,
               Echelon::PivotOrder order, OnSubtract&& on_subtract) {
  if (order == Echelon::PivotOrder::Largest) {
    // Rows only reach below their pivot, so one descending sweep suffices.
    auto it = acc.end();
    while (it != acc.begin()) {
      --it;
      if (it->second == 0) {
        it = acc.erase(it);
        continue;
      }
      const auto r = pivot_row[it->first];
      if (r < 0) continue;
      const Rational c = it->second;
      subtract_row(acc, c, rows[static_cast<std::size_t>(r)], it->first);
      on_subtract(static_cast<std::size_t>(r), c);
      it = acc.erase(it);
    }
  } else {
    auto it = acc.begin();
    while (it != acc.end()) {
      if (it->second == 0) {
        it = acc.erase(it);
        continue;
      }
      const auto r = pivot_row[it->first];
      if (r < 0) {
        ++it;
        continue;
      }
      const Rational c = it->second;
      subtract_row(acc, c, rows[static_cast<std::size_t>(r)], it->first);
      on_subtract(static_cast<std::size_t>(r), c);
      it = acc.erase(it);
    }
  }
}

Acc to_acc(const SparseVec& v) {
  Acc acc;
  for (std::size_t k = 0; k < v.nnz(); ++k) acc.emplace_hint(acc.end(), v.idx[k], v.val[k]);
  return acc;
}

}  // namespace

SparseVec Echelon::reduce(const SparseVec& v) const {
  Acc acc = to_acc(v);
  eliminate(acc, rows_, pivot_row_, order_, [](std::size_t, const Rational&) {});
  return SparseVec::from_map(acc);
}

bool Echelon::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  const std::size_t lead_pos = order_ == PivotOrder::Largest ? r.nnz() - 1 : 0;
  const std::uint32_t pivot = r.idx[lead_pos];
  const Rational inv = 1 / r.val[lead_pos];
  for (auto& x : r.val) x *= inv;
  pivot_row_[pivot] = static_cast<std::int64_t>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

std::vector<SparseVec> Echelon::reduced_rows() const {
  std::vector<std::uint32_t> pivots;
  for (std::uint32_t c = 0; c < pivot_row_.size(); ++c)
    if (pivot_row_[c] >= 0) pivots.push_back(c);
  std::vector<SparseVec> out;
  out.reserve(pivots.size());
  for (auto p : pivots) {
    const SparseVec& row = rows_[static_cast<std::size_t>(pivot_row_[p])];
    Acc acc = to_acc(row);
    acc.erase(p);
    eliminate(acc, rows_, pivot_row_, order_, [](std::size_t, const Rational&) {});
    acc[p] = Rational(1);
    out.push_back(SparseVec::from_map(acc));
  }
  return out;
}

std::vector<std::uint32_t> Echelon::non_pivot_columns() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 0; c < pivot_row_.size(); ++c)
    if (pivot_row_[c] < 0) out.push_back(c);
  return out;
}

std::size_t rank_of(std::span<const SparseVec> vectors, std::size_t dim) {
  std::vector<std::size_t> order(vectors.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return vectors[a].nnz() < vectors[b].nnz();
  });
  Echelon ech(dim, Echelon::PivotOrder::Smallest);
  for (auto k : order) {
    if (ech.rank() == dim) break;
    ech.insert(vectors[k]);
  }
  return ech.rank();
}

std::size_t rank_of(const LinearMap& map) {
  return rank_of(map.images, map.target_dim);
}

std::vector<SparseVec> kernel_of(std::span<const SparseVec> vectors,
                                 std::size_t dim) {
  std::vector<SparseVec> rows;
  std::vector<SparseVec> combos;
  std::vector<std::int64_t> pivot_row(dim, -1);
  Echelon kernel(vectors.size(), Echelon::PivotOrder::Largest);

  for (std::uint32_t k = 0; k < vectors.size(); ++k) {
    Acc acc = to_acc(vectors[k]);
    SparseAccumulator combo;
    combo.add(k, Rational(1));
    eliminate(acc, rows, pivot_row, Echelon::PivotOrder::Largest,
              [&](std::size_t r, const Rational& c) { combo.add(combos[r], -c); });
    SparseVec rest = SparseVec::from_map(acc);
    if (rest.empty()) {
      kernel.insert(combo.take());
      continue;
    }
    const Rational inv = 1 / rest.val.back();
    for (auto& x : rest.val) x *= inv;
    pivot_row[rest.leading()] = static_cast<std::int64_t>(rows.size());
    rows.push_back(std::move(rest));
    combos.push_back(scaled(combo.take(), inv));
  }
  return kernel.reduced_rows();
}

std::vector<SparseVec> kernel_of(const LinearMap& map) {
  return kernel_of(map.images, map.target_dim);
}

}  // namespace gradalg
