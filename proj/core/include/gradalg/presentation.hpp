#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gradalg/ncpoly.hpp"

namespace gradalg {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline int as_int(Parity p) { return static_cast<int>(p); }
inline Parity flip(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }

enum class Flavor { Free, Polynomial, Exterior, Graded };

const char* to_string(Flavor f);
const char* to_string(Parity p);

/// A degree-1 generator with its sign.
struct VarSpec {
  std::string name;
  Parity sign = Parity::Even;

  friend bool operator==(const VarSpec&, const VarSpec&) = default;
};

/// A finitely presented graded algebra k<x_1..x_n>/I with degree-1
/// generators. `relations` are the explicitly listed ones; the flavor adds
/// commutation rules on top (see flavor_relations()).
struct Presentation {
  std::string name;
  Flavor flavor = Flavor::Free;
  std::vector<VarSpec> vars;
  std::vector<NcPoly> relations;

  std::size_t num_vars() const { return vars.size(); }
  std::vector<std::string> var_names() const;
  std::optional<std::size_t> var_index(std::string_view name) const;
  Parity sign_of(const Word& w) const;

  /// Relations implied by the flavor, normalized.
  std::vector<NcPoly> flavor_relations() const;
  /// Listed relations followed by the flavor relations.
  std::vector<NcPoly> all_relations() const;

  /// Throws on duplicate names, flavor/sign mismatch, or relations that are
  /// zero, inhomogeneous, or of degree below 2.
  void validate() const;
};

/// Reads the line-oriented presentation format:
///   algebra <name> / flavor <free|polynomial|exterior|graded> /
///   var <name> <even|odd> / rel <poly>
Presentation parse_presentation(std::string_view text);

/// Parses a polynomial in the presentation grammar against the given names.
NcPoly parse_polynomial(std::string_view text, const std::vector<std::string>& names);

/// Writes the same format back; listed relations are emitted normalized.
std::string to_text(const Presentation& p);

/// Same flavor, listed relations restricted to degree 2: the quadratic part
/// of the ideal.
Presentation quadratic_part(const Presentation& p);

/// The presentation with its listed relations normalized (leading
/// coefficient 1) and duplicates removed.
Presentation normalized(Presentation p);

}  // namespace gradalg
