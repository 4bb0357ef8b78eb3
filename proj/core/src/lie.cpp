#include "gradalg/lie.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gradalg/algebra.hpp"
#include "gradalg/error.hpp"
#include "gradalg/linalg.hpp"
#include "scanner.hpp"

namespace gradalg {

LieExpr LieExpr::generator(std::size_t index) {
  LieExpr e;
  e.kind_ = Kind::Generator;
  e.gen_ = index;
  return e;
}

LieExpr LieExpr::bracket(LieExpr a, LieExpr b) {
  LieExpr e;
  e.kind_ = Kind::Bracket;
  e.children_.push_back(std::make_shared<const LieExpr>(std::move(a)));
  e.children_.push_back(std::make_shared<const LieExpr>(std::move(b)));
  return e;
}

LieExpr LieExpr::sum(std::vector<std::pair<Rational, LieExpr>> terms) {
  if (terms.empty()) fail(ErrorKind::InvalidInput, "empty Lie sum");
  LieExpr e;
  e.kind_ = Kind::Sum;
  e.terms_ = std::move(terms);
  return e;
}

int LieExpr::degree() const {
  switch (kind_) {
    case Kind::Generator: return 1;
    case Kind::Bracket: return left().degree() + right().degree();
    case Kind::Sum: {
      const int d = terms_.front().second.degree();
      for (const auto& [c, t] : terms_)
        if (t.degree() != d) fail(ErrorKind::Inhomogeneous, "Lie sum mixes degrees");
      return d;
    }
  }
  return 0;
}

Parity LieExpr::sign(const std::vector<VarSpec>& vars) const {
  switch (kind_) {
    case Kind::Generator:
      if (gen_ >= vars.size()) fail(ErrorKind::UnknownVariable, "generator index out of range");
      return vars[gen_].sign;
    case Kind::Bracket:
      return (as_int(left().sign(vars)) + as_int(right().sign(vars))) % 2 ? Parity::Odd : Parity::Even;
    case Kind::Sum: {
      const Parity s = terms_.front().second.sign(vars);
      for (const auto& [c, t] : terms_)
        if (t.sign(vars) != s) fail(ErrorKind::InvalidInput, "Lie sum mixes even and odd terms");
      return s;
    }
  }
  return Parity::Even;
}

NcPoly LieExpr::expand(const std::vector<VarSpec>& vars) const {
  switch (kind_) {
    case Kind::Generator:
      if (gen_ >= vars.size()) fail(ErrorKind::UnknownVariable, "generator index out of range");
      return NcPoly::word(Word{static_cast<std::uint8_t>(gen_)});
    case Kind::Bracket: {
      const NcPoly a = left().expand(vars);
      const NcPoly b = right().expand(vars);
      const bool both_odd = left().sign(vars) == Parity::Odd && right().sign(vars) == Parity::Odd;
      return a * b - (b * a) * Rational(both_odd ? -1 : 1);
    }
    case Kind::Sum: {
      NcPoly out;
      for (const auto& [c, t] : terms_) out += t.expand(vars) * c;
      return out;
    }
  }
  return {};
}

std::string LieExpr::to_string(const std::vector<std::string>& names) const {
  switch (kind_) {
    case Kind::Generator: return names.at(gen_);
    case Kind::Bracket: return "[" + left().to_string(names) + "," + right().to_string(names) + "]";
    case Kind::Sum: {
      std::string s;
      for (std::size_t k = 0; k < terms_.size(); ++k) {
        Rational c = terms_[k].first;
        if (c < 0) {
          s += "-";
        } else if (k > 0) {
          s += "+";
        }
        if (c < 0) c = -c;
        if (c != 1) s += gradalg::to_string(c) + "*";
        s += terms_[k].second.to_string(names);
      }
      return s;
    }
  }
  return {};
}

std::vector<std::string> LiePresentation::var_names() const {
  std::vector<std::string> out;
  for (const auto& v : vars) out.push_back(v.name);
  return out;
}

void LiePresentation::validate() const {
  if (vars.size() > 255) fail(ErrorKind::InvalidInput, "at most 255 generators are supported");
  std::set<std::string> seen;
  for (const auto& v : vars)
    if (!seen.insert(v.name).second) fail(ErrorKind::InvalidInput, "duplicate generator '" + v.name + "'");
  for (const auto& r : relations) {
    if (r.degree() < 2) fail(ErrorKind::InvalidInput, "Lie relation of degree below 2");
    r.sign(vars);
  }
}

namespace {

LieExpr parse_sum(detail::Scanner& sc, const std::vector<std::string>& names);

LieExpr parse_atom(detail::Scanner& sc, const std::vector<std::string>& names) {
  if (sc.try_consume('[')) {
    LieExpr a = parse_sum(sc, names);
    sc.expect(',');
    LieExpr b = parse_sum(sc, names);
    sc.expect(']');
    return LieExpr::bracket(std::move(a), std::move(b));
  }
  if (sc.try_consume('(')) {
    LieExpr e = parse_sum(sc, names);
    sc.expect(')');
    return e;
  }
  const int col = sc.column();
  const std::string name = sc.identifier();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return LieExpr::generator(i);
  throw SyntaxError(ErrorKind::UnknownVariable, "unknown variable '" + name + "'", sc.line(), col);
}

LieExpr parse_sum(detail::Scanner& sc, const std::vector<std::string>& names) {
  std::vector<std::pair<Rational, LieExpr>> terms;
  bool first = true;
  while (true) {
    Rational sign(1);
    if (sc.try_consume('-')) {
      sign = -1;
    } else if (!sc.try_consume('+') && !first) {
      break;
    }
    first = false;
    Rational c(1);
    if (sc.at_number()) {
      c = sc.number();
      sc.expect('*');
    }
    terms.emplace_back(sign * c, parse_atom(sc, names));
    const char next = sc.peek();
    if (next != '+' && next != '-') break;
  }
  if (terms.size() == 1 && terms[0].first == 1) return terms[0].second;
  return LieExpr::sum(std::move(terms));
}

}  // namespace

LieExpr parse_lie_expr(std::string_view text, const std::vector<std::string>& names) {
  detail::Scanner sc(text, 0, 1);
  LieExpr e = parse_sum(sc, names);
  if (!sc.eof()) sc.error("unexpected trailing input");
  return e;
}

LiePresentation parse_lie_presentation(std::string_view text) {
  LiePresentation l;
  bool have_name = false;
  std::vector<detail::Directive> rels;
  for (const auto& d : detail::split_directives(text)) {
    const auto words = detail::split_words(d);
    if (d.keyword == "lie") {
      if (words.size() != 1) throw SyntaxError(ErrorKind::SyntaxError, "'lie' expects a name", d.line, d.rest_column);
      if (have_name) throw SyntaxError(ErrorKind::SyntaxError, "duplicate 'lie' line", d.line, 1);
      l.name = words[0].first;
      have_name = true;
    } else if (d.keyword == "var") {
      if (words.size() != 2)
        throw SyntaxError(ErrorKind::SyntaxError, "'var' expects a name and a sign", d.line, d.rest_column);
      const auto& [name, col] = words[0];
      if (!detail::is_identifier(name))
        throw SyntaxError(ErrorKind::SyntaxError, "invalid generator name '" + name + "'", d.line, col);
      for (const auto& v : l.vars)
        if (v.name == name) throw SyntaxError(ErrorKind::InvalidInput, "duplicate generator '" + name + "'", d.line, col);
      Parity sign;
      if (words[1].first == "even") {
        sign = Parity::Even;
      } else if (words[1].first == "odd") {
        sign = Parity::Odd;
      } else {
        throw SyntaxError(ErrorKind::SyntaxError, "sign must be 'even' or 'odd'", d.line, words[1].second);
      }
      l.vars.push_back({name, sign});
    } else if (d.keyword == "rel") {
      if (d.rest.empty()) throw SyntaxError(ErrorKind::SyntaxError, "empty relation", d.line, d.rest_column);
      rels.push_back(d);
    } else {
      throw SyntaxError(ErrorKind::SyntaxError, "unknown directive '" + d.keyword + "'", d.line, 1);
    }
  }
  const auto names = l.var_names();
  for (const auto& d : rels) {
    detail::Scanner sc(d.rest, d.line, d.rest_column);
    LieExpr e = parse_sum(sc, names);
    if (!sc.eof()) sc.error("unexpected trailing input");
    try {
      if (e.degree() < 2)
        throw SyntaxError(ErrorKind::InvalidInput, "Lie relation of degree below 2", d.line, d.rest_column);
      e.sign(l.vars);
    } catch (const SyntaxError&) {
      throw;
    } catch (const Error& err) {
      throw SyntaxError(err.kind(), err.what(), d.line, d.rest_column);
    }
    l.relations.push_back(std::move(e));
  }
  return l;
}

Presentation uea_presentation(const LiePresentation& l) {
  l.validate();
  Presentation p;
  p.name = l.name.empty() ? std::string() : "env_" + l.name;
  p.flavor = Flavor::Free;
  p.vars = l.vars;
  for (const auto& r : l.relations) {
    NcPoly e = r.expand(l.vars);
    if (e.is_zero()) continue;
    e = e.normalized();
    if (std::find(p.relations.begin(), p.relations.end(), e) == p.relations.end()) p.relations.push_back(e);
  }
  return p;
}

DimSequence LieDims::total() const {
  DimSequence out;
  for (int d = 1; d <= even.max_degree(); ++d) out.dims.push_back(even.at(d) + odd.at(d));
  return out;
}

namespace {

DimSequence dims_of(const TruncSeries& s) {
  DimSequence out;
  for (int m = 1; m <= s.truncation(); ++m) out.dims.push_back(to_int64(s[m]));
  return out;
}

DimSequence nonnegative_dims_of(const TruncSeries& s) {
  DimSequence out = dims_of(s);
  for (int d = 1; d <= out.max_degree(); ++d)
    if (out.at(d) < 0) fail(ErrorKind::NotAnEnvelopingSeries, "negative Lie dimension at degree " + std::to_string(d));
  return out;
}

// dim L_2 = #{[x_i,x_j] : i < j} + #{[x_i,x_i] : x_i odd} - rank of the degree-2 relations.
std::int64_t degree_two_count(const LiePresentation& l) {
  const std::size_t n = l.vars.size();
  std::int64_t free_dim = static_cast<std::int64_t>(n * (n - 1) / 2);
  for (const auto& v : l.vars) free_dim += v.sign == Parity::Odd;
  std::vector<SparseVec> rows;
  for (const auto& r : l.relations) {
    if (r.degree() != 2) continue;
    SparseAccumulator acc;
    const NcPoly e = r.expand(l.vars);
    for (const auto& [w, c] : e.terms()) acc.add(static_cast<std::uint32_t>(w[0] * n + w[1]), c);
    rows.push_back(acc.take());
  }
  return free_dim - static_cast<std::int64_t>(rank_of(rows, n * n));
}

}  // namespace

LieDims lie_dims(const LiePresentation& l, int N) {
  if (N < 1) fail(ErrorKind::InvalidInput, "lie_dims needs N >= 1");
  const Presentation env = uea_presentation(l);
  const GradedAlgebra a(env, N);

  bool all_even = true, all_odd = true;
  for (const auto& v : l.vars) {
    all_even &= v.sign == Parity::Even;
    all_odd &= v.sign == Parity::Odd;
  }
  LieDims out;
  if (all_even) {
    const SignedSeries g = logg(SignedSeries(a.hilbert()), LoggMode::Even);
    out.even = dims_of(g.even);
    out.odd.dims.assign(static_cast<std::size_t>(N), 0);
  } else if (all_odd) {
    const SignedSeries g = logg(SignedSeries(a.hilbert()), LoggMode::Alternating);
    out.even = dims_of(g.even);
    out.odd = dims_of(g.odd);
  } else {
    const SignedSeries g = logg(a.hilbert_signed(), LoggMode::Mixed);
    out.even = dims_of(g.even);
    out.odd = dims_of(g.odd);
  }
  for (int d = 1; d <= N; ++d)
    if (out.even.at(d) < 0 || out.odd.at(d) < 0)
      fail(ErrorKind::NotAnEnvelopingSeries, "negative Lie dimension at degree " + std::to_string(d));

  if (N >= 2 && out.total().at(2) != degree_two_count(l))
    throw std::logic_error("degree-2 Lie dimension disagrees with the direct rank count");
  return out;
}

DimSequence koszul_lie_dims(const TruncSeries& h, int N) {
  if (N < 1) fail(ErrorKind::InvalidInput, "koszul_lie_dims needs N >= 1");
  if (h[0] != 1) fail(ErrorKind::InvalidInput, "Hilbert series must have constant term 1");
  const TruncSeries v = series_inverse(h.truncated(std::min(N, h.truncation())).substitute(Rational(-1), 1));
  return nonnegative_dims_of(logg(SignedSeries(v), LoggMode::Alternating).total());
}

DimSequence edge_ideal_lie_dims(const TruncSeries& d, int n, int N) {
  if (N < 1) fail(ErrorKind::InvalidInput, "edge_ideal_lie_dims needs N >= 1");
  if (d[0] != 1) fail(ErrorKind::InvalidInput, "d must have constant term 1");
  if (n < 0) fail(ErrorKind::InvalidInput, "negative number of generators");
  const int top = std::min(N, d.truncation());
  const TruncSeries dd = d.truncated(top);
  TruncSeries l = TruncSeries::monomial(Rational(n), 1, top);
  for (int r = 1; r <= top; ++r) {
    const int mu = moebius(r);
    if (mu == 0) continue;
    // 1 - d((-z)^r)
    const TruncSeries g = TruncSeries::one(top) - dd.substitute(Rational(r % 2 ? -1 : 1), r);
    TruncSeries power = g;
    for (int s = 1; s * r <= top; ++s) {
      l += power * Rational(mu, r * s);
      power = power * g;
    }
  }
  if (!l.is_integral())
    fail(ErrorKind::NotAnEnvelopingSeries, "the double sum has non-integral coefficients");
  return nonnegative_dims_of(l);
}

bool lie_element_is_zero(const LiePresentation& l, const LieExpr& e) {
  const int n = e.degree();
  e.sign(l.vars);
  const NcPoly p = e.expand(l.vars);
  if (p.is_zero()) return true;
  const GradedAlgebra a(uea_presentation(l), n);
  return a.reduce(p).empty();
}

}  // namespace gradalg
