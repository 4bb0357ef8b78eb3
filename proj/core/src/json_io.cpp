#include "gradalg/json_io.hpp"

#include "gradalg/error.hpp"

namespace gradalg {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw SyntaxError(ErrorKind::SyntaxError, what, 0, 0); }

json coeff_array(const std::vector<Rational>& c, std::size_t count) {
  json out = json::array();
  for (std::size_t k = 0; k < count; ++k) out.push_back(to_string(c[k]));
  return out;
}

Rational coeff_from_json(const json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      bad(std::string("bad coefficient: ") + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(std::to_string(j.get<std::int64_t>()));
  bad("coefficients must be strings or integers");
}

int int_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
    bad(std::string("missing integer field '") + key + "'");
  return j.at(key).get<int>();
}

const json& array_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
    bad(std::string("missing array field '") + key + "'");
  return j.at(key);
}

}  // namespace

json to_json(const TruncSeries& s) {
  return {{"truncation", s.truncation()},
          {"coeffs", coeff_array(s.coeffs(), s.coeffs().size())}};
}

json to_json(const TruncSeries2& s) {
  json rows = json::array();
  for (int j = 0; j <= s.truncation_y(); ++j) {
    const auto& row = s.row(j);
    std::size_t len = row.size();
    while (len > 0 && row[len - 1] == 0) --len;
    if (len == 0) continue;
    rows.push_back({{"j", j}, {"coeffs_x", coeff_array(row, len)}});
  }
  return {{"truncation_y", s.truncation_y()}, {"rows", rows}};
}

json to_json(const SignedSeries& s) { return {{"even", to_json(s.even)}, {"odd", to_json(s.odd)}}; }

json to_json(const DimSequence& d) {
  json out = json::array();
  for (auto v : d.dims) out.push_back(std::to_string(v));
  return out;
}

json to_json(const LieDims& d) {
  return {{"even", to_json(d.even)}, {"odd", to_json(d.odd)}, {"total", to_json(d.total())}};
}

TruncSeries series_from_json(const json& j) {
  const int n = int_field(j, "truncation");
  const json& coeffs = array_field(j, "coeffs");
  if (n < 0) bad("negative truncation");
  if (coeffs.size() != static_cast<std::size_t>(n) + 1)
    bad("'coeffs' must have truncation + 1 entries");
  std::vector<Rational> c;
  for (const auto& v : coeffs) c.push_back(coeff_from_json(v));
  return TruncSeries(std::move(c));
}

TruncSeries2 series2_from_json(const json& j) {
  const int J = int_field(j, "truncation_y");
  if (J < 0) bad("negative truncation");
  TruncSeries2 out(J);
  for (const auto& row : array_field(j, "rows")) {
    const int y = int_field(row, "j");
    if (y < 0 || y > J) bad("row index out of range");
    const json& xs = array_field(row, "coeffs_x");
    if (xs.size() > static_cast<std::size_t>(y) + 1) bad("x-degree above the row's y-degree");
    for (std::size_t n = 0; n < xs.size(); ++n) out.set(static_cast<int>(n), y, coeff_from_json(xs[n]));
  }
  return out;
}

SignedSeries signed_series_from_json(const json& j) {
  if (j.is_object() && j.contains("even")) {
    TruncSeries even = series_from_json(j.at("even"));
    if (!j.contains("odd")) return SignedSeries(std::move(even));
    TruncSeries odd = series_from_json(j.at("odd"));
    if (odd.truncation() != even.truncation()) bad("even and odd parts differ in truncation");
    return SignedSeries(std::move(even), std::move(odd));
  }
  return SignedSeries(series_from_json(j));
}

}  // namespace gradalg
