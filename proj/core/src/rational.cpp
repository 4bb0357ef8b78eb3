#include "gradalg/rational.hpp"

#include <limits>

#include "gradalg/error.hpp"

namespace gradalg {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_decimal_integer(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_decimal_integer(text))
      fail(ErrorKind::InvalidInput,
           "not a rational number: '" + std::string(text) + "'");
    return Rational(parse_integer(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den) || den[0] == '-' ||
      den[0] == '+')
    fail(ErrorKind::InvalidInput,
         "not a rational number: '" + std::string(text) + "'");
  Integer d = parse_integer(den);
  if (d == 0)
    fail(ErrorKind::InvalidInput,
         "zero denominator: '" + std::string(text) + "'");
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q))
    fail(ErrorKind::InvalidInput, "not an integer: " + to_string(q));
  const Integer& n = q.get_num();
  if (!n.fits_slong_p())
    fail(ErrorKind::InvalidInput, "integer out of range: " + to_string(q));
  return static_cast<std::int64_t>(n.get_si());
}

}  // namespace gradalg
