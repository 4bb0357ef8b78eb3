#include "gradalg/homology.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "gradalg/error.hpp"
#include "gradalg/quaddual.hpp"

namespace gradalg {

std::vector<std::int64_t> homology_ranks(const ComplexSlice& slice) {
  const std::size_t len = slice.spaces.size();
  if (slice.differentials.size() + 1 != len && !(len == 0 && slice.differentials.empty()))
    fail(ErrorKind::InvalidInput, "complex needs one differential per positive degree");
  for (std::size_t n = 1; n < len; ++n) {
    const auto& d = slice.differentials[n - 1];
    if (d.source_dim != slice.spaces[n] || d.target_dim != slice.spaces[n - 1] ||
        d.images.size() != d.source_dim)
      fail(ErrorKind::InvalidInput, "differential d_" + std::to_string(n) + " has the wrong shape");
  }
  for (std::size_t n = 1; n + 1 < len; ++n)
    if (!slice.differentials[n - 1].compose_after(slice.differentials[n]).is_zero())
      fail(ErrorKind::NotAComplex, "d_" + std::to_string(n) + " d_" + std::to_string(n + 1) +
                                       " is nonzero in internal degree " +
                                       std::to_string(slice.internal_degree));

  std::vector<std::int64_t> ranks(len + 1, 0);  // ranks[n] = rank d_n
  for (std::size_t n = 1; n < len; ++n)
    ranks[n] = static_cast<std::int64_t>(rank_of(slice.differentials[n - 1]));
  std::vector<std::int64_t> out(len);
  for (std::size_t n = 0; n < len; ++n)
    out[n] = static_cast<std::int64_t>(slice.spaces[n]) - ranks[n] - ranks[n + 1];
  return out;
}

std::int64_t euler_characteristic(const std::vector<std::int64_t>& dims) {
  std::int64_t s = 0;
  for (std::size_t n = 0; n < dims.size(); ++n) s += n % 2 ? -dims[n] : dims[n];
  return s;
}

std::int64_t euler_characteristic(const std::vector<std::size_t>& dims) {
  return euler_characteristic(std::vector<std::int64_t>(dims.begin(), dims.end()));
}

BigradedDims::BigradedDims(int max_internal_degree) {
  if (max_internal_degree < 0) fail(ErrorKind::InvalidInput, "negative internal degree bound");
  for (int j = 0; j <= max_internal_degree; ++j) rows_.emplace_back(static_cast<std::size_t>(j) + 1, 0);
}

std::int64_t BigradedDims::at(int n, int j) const {
  if (j < 0 || n < 0) return 0;
  if (j > max_internal_degree())
    fail(ErrorKind::TruncationExceeded, "internal degree " + std::to_string(j) + " beyond the computed range");
  return n > j ? 0 : rows_[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)];
}

void BigradedDims::set(int n, int j, std::int64_t value) {
  if (j < 0 || n < 0 || j > max_internal_degree()) fail(ErrorKind::InvalidInput, "bidegree out of range");
  if (n > j) {
    if (value != 0) fail(ErrorKind::InvalidInput, "nonzero entry below the diagonal bound n <= j");
    return;
  }
  rows_[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)] = value;
}

TruncSeries2 BigradedDims::to_series() const {
  TruncSeries2 s(max_internal_degree());
  for (int j = 0; j <= max_internal_degree(); ++j)
    for (int n = 0; n <= j; ++n) s.set(n, j, Rational(static_cast<long>(at(n, j))));
  return s;
}

std::optional<std::pair<int, int>> BigradedDims::first_off_diagonal() const {
  for (int j = 0; j <= max_internal_degree(); ++j)
    for (int n = 0; n < j; ++n)
      if (at(n, j) != 0) return std::pair{n, j};
  return std::nullopt;
}

namespace {

// Products of basis elements, memoized per pair.
class ProductCache {
 public:
  explicit ProductCache(const GradedAlgebra& a) : a_(a) {}

  const SparseVec& get(int da, std::uint32_t ia, int db, std::uint32_t ib) {
    auto key = std::make_tuple(da, ia, db, ib);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    SparseVec v = a_.multiply(da, SparseVec::unit(ia), db, SparseVec::unit(ib));
    return cache_.emplace(key, std::move(v)).first->second;
  }

 private:
  const GradedAlgebra& a_;
  std::map<std::tuple<int, std::uint32_t, int, std::uint32_t>, SparseVec> cache_;
};

void compositions(int j, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (j == 0) {
    out.push_back(cur);
    return;
  }
  for (int i = 1; i <= j; ++i) {
    cur.push_back(i);
    compositions(j - i, cur, out);
    cur.pop_back();
  }
}

struct BarLayout {
  // Components of each homological degree, with their offsets.
  std::vector<std::map<std::vector<int>, std::size_t>> offsets;
  std::vector<std::size_t> dims;
};

std::size_t component_size(const GradedAlgebra& a, const std::vector<int>& c) {
  std::size_t s = 1;
  for (int i : c) s *= a.dim(i);
  return s;
}

}  // namespace

ComplexSlice bar_strand(const GradedAlgebra& a, int j) {
  if (j < 0 || j > a.max_degree()) fail(ErrorKind::TruncationExceeded, "bar strand beyond the computed range");
  ComplexSlice slice;
  slice.internal_degree = j;
  if (j == 0) {
    slice.spaces = {1};
    return slice;
  }

  std::vector<std::vector<int>> comps;
  std::vector<int> cur;
  compositions(j, cur, comps);

  BarLayout layout;
  layout.offsets.resize(static_cast<std::size_t>(j) + 1);
  layout.dims.assign(static_cast<std::size_t>(j) + 1, 0);
  for (const auto& c : comps) {
    const std::size_t n = c.size();
    const std::size_t size = component_size(a, c);
    if (size == 0) continue;
    layout.offsets[n].emplace(c, layout.dims[n]);
    layout.dims[n] += size;
  }
  slice.spaces = layout.dims;

  ProductCache products(a);
  slice.differentials.emplace_back(layout.dims[1], 0);
  for (std::size_t n = 2; n <= static_cast<std::size_t>(j); ++n) {
    LinearMap d(layout.dims[n], layout.dims[n - 1]);
    for (const auto& [c, offset] : layout.offsets[n]) {
      const std::size_t size = component_size(a, c);
      std::vector<std::uint32_t> digits(n);
      for (std::size_t t = 0; t < size; ++t) {
        std::size_t rest = t;
        for (std::size_t k = n; k-- > 0;) {
          const std::size_t base = a.dim(c[k]);
          digits[k] = static_cast<std::uint32_t>(rest % base);
          rest /= base;
        }
        SparseAccumulator img;
        for (std::size_t i = 0; i + 1 < n; ++i) {
          std::vector<int> merged;
          merged.reserve(n - 1);
          for (std::size_t k = 0; k < n; ++k) {
            if (k == i + 1) continue;
            merged.push_back(k == i ? c[i] + c[i + 1] : c[k]);
          }
          auto target = layout.offsets[n - 1].find(merged);
          if (target == layout.offsets[n - 1].end()) continue;
          const SparseVec& prod = products.get(c[i], digits[i], c[i + 1], digits[i + 1]);
          const Rational sign(i % 2 ? -1 : 1);
          for (std::size_t e = 0; e < prod.nnz(); ++e) {
            std::size_t idx = 0;
            for (std::size_t k = 0; k < n; ++k) {
              if (k == i + 1) continue;
              const std::uint32_t digit = k == i ? prod.idx[e] : digits[k];
              idx = idx * a.dim(merged[k < i + 1 ? k : k - 1]) + digit;
            }
            img.add(static_cast<std::uint32_t>(target->second + idx), sign * prod.val[e]);
          }
        }
        d.images[offset + t] = img.take();
      }
    }
    slice.differentials.push_back(std::move(d));
  }
  return slice;
}

BigradedDims bar_tor_dims(const Presentation& p, int J) {
  if (J < 0) fail(ErrorKind::InvalidInput, "negative internal degree bound");
  GradedAlgebra a(p, J);
  BigradedDims out(J);
  out.set(0, 0, 1);
  for (int j = 1; j <= J; ++j) {
    const auto h = homology_ranks(bar_strand(a, j));
    for (std::size_t n = 1; n < h.size(); ++n) out.set(static_cast<int>(n), j, h[n]);
  }
  return out;
}

namespace {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// All p-subsets of {0..n-1} as bitmasks, lexicographic in their elements.
std::vector<std::uint32_t> subsets(int n, int p) {
  std::vector<std::uint32_t> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == p) {
      std::uint32_t m = 0;
      for (int e : cur) m |= 1u << e;
      out.push_back(m);
      return;
    }
    for (int e = start; e < n; ++e) {
      cur.push_back(e);
      self(self, e + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

void require_polynomial(const Presentation& p) {
  if (p.flavor != Flavor::Polynomial)
    fail(ErrorKind::NonCommutativeInput, "the Koszul complex needs a presentation of polynomial flavor");
  if (p.num_vars() > 20) fail(ErrorKind::InvalidInput, "too many generators for the Koszul complex");
}

struct KoszulIndex {
  std::vector<std::vector<std::uint32_t>> subsets;  // by size
  std::vector<std::map<std::uint32_t, std::uint32_t>> position;

  explicit KoszulIndex(int n) {
    for (int p = 0; p <= n; ++p) {
      subsets.push_back(gradalg::subsets(n, p));
      std::map<std::uint32_t, std::uint32_t> pos;
      for (std::uint32_t k = 0; k < subsets.back().size(); ++k) pos[subsets.back()[k]] = k;
      position.push_back(std::move(pos));
    }
  }
};

}  // namespace

ComplexSlice koszul_strand(const GradedAlgebra& a, int j) {
  require_polynomial(a.presentation());
  if (j < 0 || j > a.max_degree()) fail(ErrorKind::TruncationExceeded, "Koszul strand beyond the computed range");
  const int nv = static_cast<int>(a.num_vars());
  const KoszulIndex index(nv);
  const int top = std::min(j, nv);

  ComplexSlice slice;
  slice.internal_degree = j;
  for (int p = 0; p <= top; ++p)
    slice.spaces.push_back(a.dim(j - p) * static_cast<std::size_t>(binomial(nv, p)));
  for (int p = 1; p <= top; ++p) {
    const auto& subs = index.subsets[static_cast<std::size_t>(p)];
    const std::size_t lower = index.subsets[static_cast<std::size_t>(p) - 1].size();
    LinearMap d(slice.spaces[static_cast<std::size_t>(p)], slice.spaces[static_cast<std::size_t>(p) - 1]);
    for (std::uint32_t b = 0; b < a.dim(j - p); ++b) {
      for (std::uint32_t s = 0; s < subs.size(); ++s) {
        SparseAccumulator img;
        int k = 0;
        for (int e = 0; e < nv; ++e) {
          if (!(subs[s] >> e & 1u)) continue;
          const auto rest = index.position[static_cast<std::size_t>(p) - 1].at(subs[s] & ~(1u << e));
          const SparseVec& prod = a.times_generator(j - p, b, static_cast<std::uint8_t>(e));
          const Rational sign(k % 2 ? -1 : 1);
          for (std::size_t t = 0; t < prod.nnz(); ++t)
            img.add(static_cast<std::uint32_t>(prod.idx[t] * lower + rest), sign * prod.val[t]);
          ++k;
        }
        d.images[b * subs.size() + s] = img.take();
      }
    }
    slice.differentials.push_back(std::move(d));
  }
  return slice;
}

BigradedDims koszul_complex_homology(const Presentation& p, int J) {
  require_polynomial(p);
  if (J < 0) fail(ErrorKind::InvalidInput, "negative internal degree bound");
  GradedAlgebra a(p, J);
  BigradedDims out(J);
  for (int j = 0; j <= J; ++j) {
    const auto h = homology_ranks(koszul_strand(a, j));
    for (std::size_t n = 0; n < h.size(); ++n) out.set(static_cast<int>(n), j, h[n]);
  }
  return out;
}

VerifyReport verify_series_identity(const Presentation& p, IdentityMode mode, int N) {
  if (N < 0) fail(ErrorKind::InvalidInput, "negative truncation degree");
  VerifyReport report;
  const TruncSeries h = hilbert_series(p, N);

  if (mode == IdentityMode::Kos) {
    const BigradedDims hk = koszul_complex_homology(p, N);
    TruncSeries power = TruncSeries::one(N);
    const TruncSeries one_minus_z = TruncSeries::one(N) - TruncSeries::monomial(Rational(1), 1, N);
    for (std::size_t i = 0; i < p.num_vars(); ++i) power = power * one_minus_z;
    report.lhs = h * power;
    report.rhs = hk.to_series().eval_x(Rational(-1));
  } else {
    const BigradedDims tor = bar_tor_dims(p, N);
    if (mode == IdentityMode::Froberg) {
      report.off_diagonal = tor.first_off_diagonal();
      if (report.off_diagonal) {
        report.pass = false;
        report.reason = "OffDiagonal";
        report.first_discrepancy = report.off_diagonal->second;
        return report;
      }
      TruncSeries pz = tor.to_series().diagonal_part();
      report.lhs = h * pz.substitute(Rational(-1), 1);
    } else {
      report.lhs = h * tor.to_series().eval_x(Rational(-1));
    }
    report.rhs = TruncSeries::one(N);
  }
  for (int n = 0; n <= N; ++n) {
    if (report.lhs[n] != report.rhs[n]) {
      report.pass = false;
      report.reason = "Mismatch";
      report.first_discrepancy = n;
      break;
    }
  }
  return report;
}

TruncSeries2 golod_poincare(const TruncSeries2& hk, int n, int N) {
  if (hk.at(0, 0) != 1) fail(ErrorKind::InvalidInput, "Koszul homology series must have constant term 1");
  if (n < 0) fail(ErrorKind::InvalidInput, "negative number of generators");
  const TruncSeries2 k = hk.truncated(std::min(N, hk.truncation_y()));
  const int J = k.truncation_y();
  TruncSeries2 one_plus_xy = TruncSeries2::one(J);
  one_plus_xy.set(1, 1, Rational(1));
  TruncSeries2 numerator = TruncSeries2::one(J);
  for (int i = 0; i < n; ++i) numerator = numerator * one_plus_xy;
  const TruncSeries2 denominator = TruncSeries2::one(J) - (k - TruncSeries2::one(J)).times_x();
  return numerator * series_inverse(denominator);
}

namespace {

// Boundaries and cycle representatives of one Koszul strand position.
struct KoszulCell {
  Echelon boundaries{0};
  std::vector<SparseVec> classes;
};

std::string describe(const Presentation& p, const KoszulIndex& index, const GradedAlgebra& a, int deg, int pos,
                     const SparseVec& v) {
  const auto& subs = index.subsets[static_cast<std::size_t>(pos)];
  const auto names = p.var_names();
  std::string s;
  for (std::size_t k = 0; k < v.nnz(); ++k) {
    const auto b = v.idx[k] / subs.size();
    const auto mask = subs[v.idx[k] % subs.size()];
    std::string term = word_to_string(a.basis(deg - pos)[b], names);
    for (std::size_t e = 0; e < names.size(); ++e)
      if (mask >> e & 1u) term += "*T" + std::to_string(e + 1);
    if (!s.empty()) s += v.val[k] < 0 ? " - " : " + ";
    else if (v.val[k] < 0) s += "-";
    const Rational c = abs(v.val[k]);
    s += (c == 1 ? std::string() : to_string(c) + "*") + term;
  }
  return s;
}

}  // namespace

ProductCheckReport golod_product_check(const Presentation& p, int J) {
  require_polynomial(p);
  if (J < 0) fail(ErrorKind::InvalidInput, "negative internal degree bound");
  GradedAlgebra a(p, J);
  const int nv = static_cast<int>(a.num_vars());
  const KoszulIndex index(nv);

  std::map<std::pair<int, int>, KoszulCell> cells;
  for (int j = 0; j <= J; ++j) {
    const ComplexSlice slice = koszul_strand(a, j);
    homology_ranks(slice);
    for (int pos = 0; pos < static_cast<int>(slice.spaces.size()); ++pos) {
      KoszulCell cell;
      cell.boundaries = Echelon(slice.spaces[static_cast<std::size_t>(pos)]);
      if (pos + 1 < static_cast<int>(slice.spaces.size()))
        for (const auto& img : slice.differentials[static_cast<std::size_t>(pos)].images) cell.boundaries.insert(img);
      if (pos >= 1) {
        Echelon span = cell.boundaries;
        for (const auto& z : kernel_of(slice.differentials[static_cast<std::size_t>(pos) - 1]))
          if (span.insert(z)) cell.classes.push_back(z);
      }
      cells.emplace(std::pair{pos, j}, std::move(cell));
    }
  }

  struct Class {
    int pos, deg;
    const SparseVec* vec;
  };
  std::vector<Class> classes;
  for (const auto& [key, cell] : cells)
    for (const auto& z : cell.classes) classes.push_back({key.first, key.second, &z});

  ProductCheckReport report;
  report.classes = classes.size();
  for (std::size_t u = 0; u < classes.size(); ++u) {
    for (std::size_t w = u; w < classes.size(); ++w) {
      const Class& x = classes[u];
      const Class& y = classes[w];
      const int pos = x.pos + y.pos;
      const int deg = x.deg + y.deg;
      if (deg > J || pos > nv) continue;
      const auto& subs_x = index.subsets[static_cast<std::size_t>(x.pos)];
      const auto& subs_y = index.subsets[static_cast<std::size_t>(y.pos)];
      const auto& subs = index.subsets[static_cast<std::size_t>(pos)];
      SparseAccumulator prod;
      for (std::size_t s = 0; s < x.vec->nnz(); ++s) {
        const auto bx = x.vec->idx[s] / subs_x.size();
        const auto mx = subs_x[x.vec->idx[s] % subs_x.size()];
        for (std::size_t t = 0; t < y.vec->nnz(); ++t) {
          const auto by = y.vec->idx[t] / subs_y.size();
          const auto my = subs_y[y.vec->idx[t] % subs_y.size()];
          if (mx & my) continue;
          int inversions = 0;
          for (int e = 0; e < nv; ++e)
            if (mx >> e & 1u) inversions += std::popcount(my & ((1u << e) - 1));
          const Rational c = (inversions % 2 ? -1 : 1) * x.vec->val[s] * y.vec->val[t];
          const SparseVec r = a.multiply(x.deg - x.pos, SparseVec::unit(static_cast<std::uint32_t>(bx)),
                                         y.deg - y.pos, SparseVec::unit(static_cast<std::uint32_t>(by)));
          const auto mask_pos = index.position[static_cast<std::size_t>(pos)].at(mx | my);
          for (std::size_t e = 0; e < r.nnz(); ++e)
            prod.add(static_cast<std::uint32_t>(r.idx[e] * subs.size() + mask_pos), c * r.val[e]);
        }
      }
      ++report.products;
      const SparseVec z = prod.take();
      if (!cells.at({pos, deg}).boundaries.contains(z)) {
        report.pass = false;
        report.witness = "(" + describe(p, index, a, x.deg, x.pos, *x.vec) + ") * (" +
                         describe(p, index, a, y.deg, y.pos, *y.vec) + ") = " +
                         describe(p, index, a, deg, pos, z) + " is not a boundary";
        return report;
      }
    }
  }
  return report;
}

std::vector<std::int64_t> GKData::k_dims() const {
  std::vector<std::int64_t> out;
  for (const auto& k : k_spaces) out.push_back(static_cast<std::int64_t>(k.size()));
  return out;
}

GKData gk_homology(const Presentation& p, int J) {
  if (J < 0) fail(ErrorKind::InvalidInput, "negative internal degree bound");
  const int top = std::max(J, 2);
  GradedAlgebra a(p, top);
  const std::size_t nv = a.num_vars();
  GKData out;

  out.k_spaces.push_back({SparseVec::unit(0)});
  std::vector<SparseVec> k1;
  for (std::uint32_t i = 0; i < nv; ++i) k1.push_back(SparseVec::unit(i));
  out.k_spaces.push_back(std::move(k1));
  std::vector<SparseVec> phi;
  for (std::uint8_t x = 0; x < nv; ++x)
    for (std::uint8_t y = 0; y < nv; ++y) phi.push_back(a.reduce(Word{x, y}));
  const std::size_t r2 = a.dim(2);
  for (int n = 2; n <= J; ++n) {
    // V (x) K_{n-1} -> R_2 (x) K_{n-2}
    const auto& prev = out.k_spaces[static_cast<std::size_t>(n) - 1];
    const std::size_t dprev2 = out.k_spaces[static_cast<std::size_t>(n) - 2].size();
    LinearMap m(nv * prev.size(), r2 * dprev2);
    for (std::size_t x = 0; x < nv; ++x) {
      for (std::size_t k = 0; k < prev.size(); ++k) {
        SparseAccumulator img;
        const SparseVec& kv = prev[k];
        for (std::size_t e = 0; e < kv.nnz(); ++e) {
          const auto y = kv.idx[e] / dprev2;
          const auto k2 = kv.idx[e] % dprev2;
          const SparseVec& f = phi[x * nv + y];
          for (std::size_t t = 0; t < f.nnz(); ++t)
            img.add(static_cast<std::uint32_t>(f.idx[t] * dprev2 + k2), kv.val[e] * f.val[t]);
        }
        m.images[x * prev.size() + k] = img.take();
      }
    }
    out.k_spaces.push_back(kernel_of(m));
  }

  out.homology = BigradedDims(J);
  for (int j = 0; j <= J; ++j) {
    ComplexSlice slice;
    slice.internal_degree = j;
    for (int m = 0; m <= j; ++m)
      slice.spaces.push_back(a.dim(j - m) * out.k_spaces[static_cast<std::size_t>(m)].size());
    for (int m = 1; m <= j; ++m) {
      const auto& km = out.k_spaces[static_cast<std::size_t>(m)];
      const std::size_t dlow = out.k_spaces[static_cast<std::size_t>(m) - 1].size();
      LinearMap d(slice.spaces[static_cast<std::size_t>(m)], slice.spaces[static_cast<std::size_t>(m) - 1]);
      for (std::uint32_t b = 0; b < a.dim(j - m); ++b) {
        for (std::size_t k = 0; k < km.size(); ++k) {
          SparseAccumulator img;
          for (std::size_t e = 0; e < km[k].nnz(); ++e) {
            const auto x = static_cast<std::uint8_t>(km[k].idx[e] / dlow);
            const auto k2 = km[k].idx[e] % dlow;
            const SparseVec& prod = a.times_generator(j - m, b, x);
            for (std::size_t t = 0; t < prod.nnz(); ++t)
              img.add(static_cast<std::uint32_t>(prod.idx[t] * dlow + k2), km[k].val[e] * prod.val[t]);
          }
          d.images[b * km.size() + k] = img.take();
        }
      }
      slice.differentials.push_back(std::move(d));
    }
    const auto h = homology_ranks(slice);
    for (std::size_t n = 0; n < h.size(); ++n) out.homology.set(static_cast<int>(n), j, h[n]);
  }

  for (int j = 1; j <= J; ++j) {
    if (out.homology.at(j, j) != 0 || out.homology.at(j - 1, j) != 0) out.exsec_exact = false;
    for (int n = 0; n <= j; ++n)
      if (out.homology.at(n, j) != 0) out.acyclic = false;
  }

  out.c_series = TruncSeries(std::max(J - 1, 0));
  for (int n = 2; n <= J - 1; ++n) {
    std::int64_t c = 0;
    for (int j = 0; j <= J; ++j) c += out.homology.at(n - 1, j);
    out.c_series.set(n, Rational(static_cast<long>(c)));
  }
  return out;
}

TruncSeries2 r3_poincare(const Presentation& p, int N) {
  if (N < 0) fail(ErrorKind::InvalidInput, "negative truncation degree");
  const GradedAlgebra a(p, 3);
  if (a.dim(3) != 0) fail(ErrorKind::PreconditionFailed, "the algebra has a nonzero degree-3 component");
  const TruncSeries hd = hilbert_series(koszul_dual(quadratic_part(p)), N);
  const Rational r1(static_cast<long>(a.dim(1)));
  const Rational r2(static_cast<long>(a.dim(2)));

  // zC(z) = H!(z)(1 - r1 z + r2 z^2) - 1
  TruncSeries q = TruncSeries::one(N) - TruncSeries::monomial(r1, 1, N) + TruncSeries::monomial(r2, 2, N);
  TruncSeries zc = hd * q - TruncSeries::one(N);
  TruncSeries2 y_c(N);
  for (int n = 0; n + 1 <= N; ++n) y_c.set(n, n + 1, zc[n + 1]);
  return TruncSeries2::diagonal(hd) * series_inverse(TruncSeries2::one(N) - y_c);
}

}  // namespace gradalg
