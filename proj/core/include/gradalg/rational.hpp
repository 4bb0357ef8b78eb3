#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gradalg {

using Rational = mpq_class;
using Integer = mpz_class;

/// "n" for integers, "p/q" otherwise; the canonical exact string form.
std::string to_string(const Rational& q);

/// Accepts "n", "-n", "p/q"; throws Error(InvalidInput) otherwise.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Throws Error(InvalidInput) unless q is an integer fitting in int64.
std::int64_t to_int64(const Rational& q);

}  // namespace gradalg
