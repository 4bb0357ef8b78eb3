#include "gradalg/algebra.hpp"

#include <algorithm>

#include "gradalg/error.hpp"

namespace gradalg {

GradedAlgebra::GradedAlgebra(const Presentation& p, int max_degree) : pres_(p) {
  if (max_degree < 0) fail(ErrorKind::InvalidInput, "negative truncation degree");
  pres_.validate();
  const std::size_t nv = pres_.num_vars();

  std::vector<std::vector<NcPoly>> rels_by_degree(static_cast<std::size_t>(max_degree) + 1);
  for (const auto& r : pres_.all_relations()) {
    const int d = r.degree();
    if (d <= max_degree) rels_by_degree[static_cast<std::size_t>(d)].push_back(r);
  }

  basis_.push_back({Word{}});
  for (int n = 1; n <= max_degree; ++n) {
    const auto& prev = basis_.back();
    const std::size_t cols = prev.size() * nv;
    Echelon ech(cols, Echelon::PivotOrder::Largest);

    for (int d = 2; d <= n; ++d) {
      for (const auto& r : rels_by_degree[static_cast<std::size_t>(d)]) {
        const auto& heads = basis_[static_cast<std::size_t>(n - d)];
        for (std::uint32_t u = 0; u < heads.size(); ++u) {
          SparseAccumulator row;
          for (const auto& [w, c] : r.terms()) {
            SparseVec v = SparseVec::unit(u);
            int deg = n - d;
            for (std::size_t k = 0; k + 1 < w.size(); ++k) v = times_generator(deg++, v, w[k]);
            for (std::size_t k = 0; k < v.nnz(); ++k)
              row.add(static_cast<std::uint32_t>(v.idx[k] * nv + w.back()), c * v.val[k]);
          }
          ech.insert(row.take());
        }
      }
    }

    const auto free_cols = ech.non_pivot_columns();
    std::vector<std::int64_t> col_to_basis(cols, -1);
    std::vector<Word> next;
    next.reserve(free_cols.size());
    for (std::uint32_t k = 0; k < free_cols.size(); ++k) {
      const auto c = free_cols[k];
      col_to_basis[c] = k;
      Word w = prev[c / nv];
      w.push_back(static_cast<std::uint8_t>(c % nv));
      next.push_back(std::move(w));
    }

    std::vector<SparseVec> table(cols);
    for (auto c : free_cols) table[c] = SparseVec::unit(static_cast<std::uint32_t>(col_to_basis[c]));
    for (const auto& row : ech.reduced_rows()) {
      const auto pivot = row.leading();
      SparseVec image;
      for (std::size_t k = 0; k + 1 < row.nnz(); ++k)
        image.push(static_cast<std::uint32_t>(col_to_basis[row.idx[k]]), -row.val[k]);
      table[pivot] = std::move(image);
    }
    mult_.push_back(std::move(table));
    basis_.push_back(std::move(next));
  }
}

std::size_t GradedAlgebra::dim(int n) const { return basis(n).size(); }

const std::vector<Word>& GradedAlgebra::basis(int n) const {
  if (n < 0 || n > max_degree())
    fail(ErrorKind::TruncationExceeded, "degree " + std::to_string(n) + " beyond the computed range");
  return basis_[static_cast<std::size_t>(n)];
}

std::int64_t GradedAlgebra::index_of(const Word& w) const {
  const auto& b = basis(static_cast<int>(w.size()));
  auto it = std::lower_bound(b.begin(), b.end(), w);
  if (it == b.end() || *it != w) return -1;
  return it - b.begin();
}

const SparseVec& GradedAlgebra::times_generator(int n, std::uint32_t b, std::uint8_t g) const {
  if (n < 0 || n >= max_degree())
    fail(ErrorKind::TruncationExceeded, "product lands beyond the computed range");
  return mult_[static_cast<std::size_t>(n)][b * num_vars() + g];
}

SparseVec GradedAlgebra::times_generator(int n, const SparseVec& v, std::uint8_t g) const {
  if (v.nnz() == 1 && v.val[0] == 1) return times_generator(n, v.idx[0], g);
  SparseAccumulator acc;
  for (std::size_t k = 0; k < v.nnz(); ++k) acc.add(times_generator(n, v.idx[k], g), v.val[k]);
  return acc.take();
}

SparseVec GradedAlgebra::reduce(const Word& w) const {
  if (static_cast<int>(w.size()) > max_degree())
    fail(ErrorKind::TruncationExceeded, "word longer than the computed range");
  SparseVec v = SparseVec::unit(0);
  int deg = 0;
  for (auto g : w) {
    if (g >= num_vars()) fail(ErrorKind::UnknownVariable, "generator index out of range");
    v = times_generator(deg++, v, g);
  }
  return v;
}

SparseVec GradedAlgebra::reduce(const NcPoly& p) const {
  if (p.is_zero()) return {};
  p.degree();
  SparseAccumulator acc;
  for (const auto& [w, c] : p.terms()) acc.add(reduce(w), c);
  return acc.take();
}

SparseVec GradedAlgebra::multiply(int n, const SparseVec& a, int m, const SparseVec& b) const {
  const auto& bw = basis(m);
  SparseAccumulator acc;
  for (std::size_t k = 0; k < b.nnz(); ++k) {
    SparseVec v = a;
    int deg = n;
    for (auto g : bw[b.idx[k]]) v = times_generator(deg++, v, g);
    acc.add(v, b.val[k]);
  }
  return acc.take();
}

TruncSeries GradedAlgebra::hilbert() const {
  TruncSeries s(max_degree());
  for (int n = 0; n <= max_degree(); ++n) s.set(n, Rational(static_cast<long>(dim(n))));
  return s;
}

SignedSeries GradedAlgebra::hilbert_signed() const {
  for (const auto& r : pres_.all_relations()) {
    const Parity s = pres_.sign_of(r.leading_word());
    for (const auto& [w, c] : r.terms())
      if (pres_.sign_of(w) != s) fail(ErrorKind::InvalidInput, "relations are not sign-homogeneous");
  }
  TruncSeries even(max_degree()), odd(max_degree());
  for (int n = 0; n <= max_degree(); ++n) {
    long e = 0, o = 0;
    for (const auto& w : basis(n)) (pres_.sign_of(w) == Parity::Even ? e : o)++;
    even.set(n, Rational(e));
    odd.set(n, Rational(o));
  }
  return SignedSeries(even, odd);
}

TruncSeries hilbert_series(const Presentation& p, int N) { return GradedAlgebra(p, N).hilbert(); }

SparseVec DegreeBasis::reduce(const Word& w) const {
  if (static_cast<int>(w.size()) != degree) fail(ErrorKind::InvalidInput, "word of the wrong degree");
  return algebra->reduce(w);
}

DegreeBasis quotient_basis(const Presentation& p, int n) {
  auto alg = std::make_shared<const GradedAlgebra>(p, n);
  return DegreeBasis{n, alg->basis(n), alg};
}

}  // namespace gradalg
