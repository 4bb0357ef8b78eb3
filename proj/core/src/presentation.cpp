#include "gradalg/presentation.hpp"

#include <algorithm>
#include <set>

#include "gradalg/error.hpp"
#include "scanner.hpp"

namespace gradalg {

const char* to_string(Flavor f) {
  switch (f) {
    case Flavor::Free: return "free";
    case Flavor::Polynomial: return "polynomial";
    case Flavor::Exterior: return "exterior";
    case Flavor::Graded: return "graded";
  }
  return "free";
}

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

std::vector<std::string> Presentation::var_names() const {
  std::vector<std::string> names;
  names.reserve(vars.size());
  for (const auto& v : vars) names.push_back(v.name);
  return names;
}

std::optional<std::size_t> Presentation::var_index(std::string_view n) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i].name == n) return i;
  return std::nullopt;
}

Parity Presentation::sign_of(const Word& w) const {
  int s = 0;
  for (auto g : w) s += as_int(vars.at(g).sign);
  return s % 2 ? Parity::Odd : Parity::Even;
}

std::vector<NcPoly> Presentation::flavor_relations() const {
  std::vector<NcPoly> out;
  const auto n = static_cast<std::uint8_t>(vars.size());
  auto two = [](std::uint8_t a, std::uint8_t b) { return Word{a, b}; };
  for (std::uint8_t i = 0; i < n; ++i) {
    for (std::uint8_t j = i; j < n; ++j) {
      NcPoly r;
      switch (flavor) {
        case Flavor::Free: break;
        case Flavor::Polynomial:
          if (i < j) {
            r.add(two(i, j), Rational(1));
            r.add(two(j, i), Rational(-1));
          }
          break;
        case Flavor::Exterior:
          r.add(two(i, j), Rational(1));
          r.add(two(j, i), Rational(1));
          break;
        case Flavor::Graded: {
          const bool both_odd = vars[i].sign == Parity::Odd && vars[j].sign == Parity::Odd;
          if (i < j) {
            r.add(two(i, j), Rational(1));
            r.add(two(j, i), Rational(both_odd ? 1 : -1));
          } else if (vars[i].sign == Parity::Odd) {
            r.add(two(i, i), Rational(1));
          }
          break;
        }
      }
      if (!r.is_zero()) out.push_back(r.normalized());
    }
  }
  return out;
}

std::vector<NcPoly> Presentation::all_relations() const {
  std::vector<NcPoly> out = relations;
  for (auto& r : flavor_relations()) out.push_back(std::move(r));
  return out;
}

void Presentation::validate() const {
  if (vars.size() > 255) fail(ErrorKind::InvalidInput, "at most 255 generators are supported");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!detail::is_identifier(v.name)) fail(ErrorKind::InvalidInput, "invalid generator name '" + v.name + "'");
    if (!seen.insert(v.name).second) fail(ErrorKind::InvalidInput, "duplicate generator '" + v.name + "'");
    if (flavor == Flavor::Polynomial && v.sign != Parity::Even)
      fail(ErrorKind::FlavorMismatch, "polynomial flavor needs even generators, '" + v.name + "' is odd");
    if (flavor == Flavor::Exterior && v.sign != Parity::Odd)
      fail(ErrorKind::FlavorMismatch, "exterior flavor needs odd generators, '" + v.name + "' is even");
  }
  for (const auto& r : relations) {
    if (r.is_zero()) fail(ErrorKind::InvalidInput, "zero relation");
    for (const auto& [w, c] : r.terms())
      for (auto g : w)
        if (g >= vars.size()) fail(ErrorKind::UnknownVariable, "relation uses an undeclared generator");
    if (!r.is_homogeneous()) fail(ErrorKind::Inhomogeneous, "inhomogeneous relation " + r.to_string(var_names()));
    if (r.degree() < 2)
      fail(ErrorKind::InvalidInput, "relation of degree " + std::to_string(r.degree()) +
                                        " (generators must stay a basis of the degree-1 part)");
  }
}

namespace {

Flavor parse_flavor(const std::string& s, const detail::Directive& d, int col) {
  if (s == "free") return Flavor::Free;
  if (s == "polynomial") return Flavor::Polynomial;
  if (s == "exterior") return Flavor::Exterior;
  if (s == "graded" || s == "graded_commutative") return Flavor::Graded;
  throw SyntaxError(ErrorKind::SyntaxError, "unknown flavor '" + s + "'", d.line, col);
}

NcPoly parse_poly_scanner(detail::Scanner& sc, const std::vector<std::string>& names) {
  NcPoly out;
  bool first = true;
  while (true) {
    Rational sign(1);
    if (sc.try_consume('-')) {
      sign = -1;
    } else if (sc.try_consume('+')) {
    } else if (!first) {
      break;
    }
    first = false;

    Rational coeff(1);
    Word w;
    bool need_factor = true;
    if (sc.at_number()) {
      coeff = sc.number();
      need_factor = sc.try_consume('*');
    }
    if (need_factor) {
      do {
        const int col = sc.column();
        const std::string name = sc.identifier();
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end())
          throw SyntaxError(ErrorKind::UnknownVariable, "unknown variable '" + name + "'", sc.line(), col);
        long power = 1;
        if (sc.try_consume('^')) power = sc.integer();
        for (long k = 0; k < power; ++k) w.push_back(static_cast<std::uint8_t>(it - names.begin()));
      } while (sc.try_consume('*'));
    }
    out.add(w, sign * coeff);
    if (sc.eof()) break;
  }
  if (!sc.eof()) sc.error("unexpected trailing input");
  return out;
}

}  // namespace

NcPoly parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
  detail::Scanner sc(text, 0, 1);
  return parse_poly_scanner(sc, names);
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_name = false, have_flavor = false;
  std::vector<detail::Directive> rels;
  for (const auto& d : detail::split_directives(text)) {
    const auto words = detail::split_words(d);
    auto arity = [&](std::size_t n) {
      if (words.size() != n)
        throw SyntaxError(ErrorKind::SyntaxError,
                          "'" + d.keyword + "' expects " + std::to_string(n) + " argument(s)", d.line,
                          d.rest_column);
    };
    if (d.keyword == "algebra") {
      arity(1);
      if (have_name) throw SyntaxError(ErrorKind::SyntaxError, "duplicate 'algebra' line", d.line, 1);
      p.name = words[0].first;
      have_name = true;
    } else if (d.keyword == "flavor") {
      arity(1);
      if (have_flavor) throw SyntaxError(ErrorKind::SyntaxError, "duplicate 'flavor' line", d.line, 1);
      p.flavor = parse_flavor(words[0].first, d, words[0].second);
      have_flavor = true;
    } else if (d.keyword == "var") {
      arity(2);
      const auto& [name, col] = words[0];
      if (!detail::is_identifier(name))
        throw SyntaxError(ErrorKind::SyntaxError, "invalid generator name '" + name + "'", d.line, col);
      if (p.var_index(name))
        throw SyntaxError(ErrorKind::InvalidInput, "duplicate generator '" + name + "'", d.line, col);
      Parity sign;
      if (words[1].first == "even") {
        sign = Parity::Even;
      } else if (words[1].first == "odd") {
        sign = Parity::Odd;
      } else {
        throw SyntaxError(ErrorKind::SyntaxError, "sign must be 'even' or 'odd'", d.line, words[1].second);
      }
      p.vars.push_back({name, sign});
    } else if (d.keyword == "rel") {
      if (d.rest.empty()) throw SyntaxError(ErrorKind::SyntaxError, "empty relation", d.line, d.rest_column);
      rels.push_back(d);
    } else {
      throw SyntaxError(ErrorKind::SyntaxError, "unknown directive '" + d.keyword + "'", d.line, 1);
    }
  }

  const auto names = p.var_names();
  for (const auto& d : rels) {
    detail::Scanner sc(d.rest, d.line, d.rest_column);
    NcPoly r = parse_poly_scanner(sc, names);
    if (r.is_zero()) throw SyntaxError(ErrorKind::InvalidInput, "relation is zero", d.line, d.rest_column);
    if (!r.is_homogeneous())
      throw SyntaxError(ErrorKind::Inhomogeneous, "inhomogeneous relation '" + d.rest + "'", d.line, d.rest_column);
    if (r.degree() < 2)
      throw SyntaxError(ErrorKind::InvalidInput, "relation of degree below 2 '" + d.rest + "'", d.line,
                        d.rest_column);
    p.relations.push_back(r.normalized());
  }
  try {
    p.validate();
  } catch (const SyntaxError&) {
    throw;
  } catch (const Error& e) {
    throw SyntaxError(e.kind(), e.what(), 0, 0);
  }
  return p;
}

std::string to_text(const Presentation& p) {
  std::string s;
  s += "algebra " + (p.name.empty() ? std::string("unnamed") : p.name) + "\n";
  s += std::string("flavor ") + to_string(p.flavor) + "\n";
  for (const auto& v : p.vars) s += "var " + v.name + " " + to_string(v.sign) + "\n";
  const auto names = p.var_names();
  for (const auto& r : p.relations) s += "rel " + r.normalized().to_string(names) + "\n";
  return s;
}

Presentation quadratic_part(const Presentation& p) {
  Presentation q = p;
  q.relations.clear();
  for (const auto& r : p.relations)
    if (r.degree() == 2) q.relations.push_back(r);
  return q;
}

Presentation normalized(Presentation p) {
  std::vector<NcPoly> rels;
  for (const auto& r : p.relations) {
    NcPoly n = r.normalized();
    if (std::find(rels.begin(), rels.end(), n) == rels.end()) rels.push_back(std::move(n));
  }
  p.relations = std::move(rels);
  return p;
}

}  // namespace gradalg
