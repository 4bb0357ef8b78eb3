#include "gradalg/quaddual.hpp"

#include "gradalg/error.hpp"

namespace gradalg {

namespace {

constexpr std::string_view kDualSuffix = "_dual";

std::string dual_name(const std::string& name) {
  if (name.size() > kDualSuffix.size() && name.ends_with(kDualSuffix))
    return name.substr(0, name.size() - kDualSuffix.size());
  return name + std::string(kDualSuffix);
}

SparseVec coordinates(const NcPoly& r, std::size_t n) {
  SparseAccumulator acc;
  for (const auto& [w, c] : r.terms()) acc.add(static_cast<std::uint32_t>(w[0] * n + w[1]), c);
  return acc.take();
}

NcPoly from_coordinates(const SparseVec& v, std::size_t n) {
  NcPoly p;
  for (std::size_t k = 0; k < v.nnz(); ++k)
    p.add(Word{static_cast<std::uint8_t>(v.idx[k] / n), static_cast<std::uint8_t>(v.idx[k] % n)}, v.val[k]);
  return p;
}

void require_sign_homogeneous(const Presentation& p) {
  bool mixed = false;
  for (const auto& v : p.vars) mixed |= v.sign != p.vars.front().sign;
  if (!mixed) return;
  for (const auto& r : p.relations) {
    const Parity s = p.sign_of(r.leading_word());
    for (const auto& [w, c] : r.terms())
      if (p.sign_of(w) != s)
        fail(ErrorKind::InvalidInput,
             "relation " + r.to_string(p.var_names()) + " mixes even and odd words over mixed-sign generators");
  }
}

}  // namespace

int pairing_sign(Parity first, Parity second) {
  return (as_int(second) * (as_int(first) + 1)) % 2 ? -1 : 1;
}

std::vector<SparseVec> quadratic_relation_space(const Presentation& p) {
  p.validate();
  const std::size_t n = p.num_vars();
  Echelon ech(n * n, Echelon::PivotOrder::Largest);
  for (const auto& r : p.all_relations()) {
    if (r.degree() != 2)
      fail(ErrorKind::NotQuadratic, "relation " + r.to_string(p.var_names()) + " is not quadratic");
    ech.insert(coordinates(r, n));
  }
  return ech.reduced_rows();
}

KoszulDual koszul_dual_with_solutions(const Presentation& p) {
  const auto space = quadratic_relation_space(p);
  require_sign_homogeneous(p);
  const std::size_t n = p.num_vars();

  // Column ij of the pairing matrix: s_ij * r_ij over the relation basis.
  std::vector<SparseVec> columns(n * n);
  for (std::uint32_t r = 0; r < space.size(); ++r) {
    const auto& row = space[r];
    for (std::size_t k = 0; k < row.nnz(); ++k) {
      const auto ij = row.idx[k];
      const int s = pairing_sign(p.vars[ij / n].sign, p.vars[ij % n].sign);
      columns[ij].push(r, s * row.val[k]);
    }
  }
  KoszulDual out;
  out.solutions = kernel_of(columns, space.size());

  Presentation& d = out.dual;
  d.name = p.name.empty() ? std::string() : dual_name(p.name);
  for (const auto& v : p.vars) d.vars.push_back({dual_name(v.name), flip(v.sign)});

  bool all_even = true, all_odd = true;
  for (const auto& v : d.vars) {
    all_even &= v.sign == Parity::Even;
    all_odd &= v.sign == Parity::Odd;
  }
  Echelon span(n * n, Echelon::PivotOrder::Largest);
  for (const auto& s : out.solutions) span.insert(s);

  const Flavor candidate = all_even ? Flavor::Polynomial : all_odd ? Flavor::Exterior : Flavor::Graded;
  d.flavor = Flavor::Free;
  if (n > 0) {
    Presentation probe = d;
    probe.flavor = candidate;
    bool contained = true;
    for (const auto& r : probe.flavor_relations()) contained &= span.contains(coordinates(r, n));
    if (contained) d.flavor = candidate;
  }

  Echelon remainders(n * n, Echelon::PivotOrder::Largest);
  Echelon flavor_only(n * n, Echelon::PivotOrder::Largest);
  for (const auto& r : d.flavor_relations()) flavor_only.insert(coordinates(r, n));
  for (const auto& s : out.solutions) {
    SparseVec rest = flavor_only.reduce(s);
    if (!rest.empty()) remainders.insert(rest);
  }
  for (const auto& row : remainders.reduced_rows()) d.relations.push_back(from_coordinates(row, n));
  return out;
}

Presentation koszul_dual(const Presentation& p) { return koszul_dual_with_solutions(p).dual; }

bool same_quadratic_span(const Presentation& a, const Presentation& b) {
  if (a.num_vars() != b.num_vars()) return false;
  return quadratic_relation_space(a) == quadratic_relation_space(b);
}

}  // namespace gradalg
