#include "gradalg/ncpoly.hpp"

#include "gradalg/error.hpp"

namespace gradalg {

Word concat(const Word& a, const Word& b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

NcPoly NcPoly::word(Word w, Rational c) {
  NcPoly p;
  p.add(w, c);
  return p;
}

void NcPoly::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

const Word& NcPoly::leading_word() const {
  if (terms_.empty()) fail(ErrorKind::InvalidInput, "zero polynomial has no leading word");
  return terms_.rbegin()->first;
}

const Rational& NcPoly::leading_coefficient() const {
  if (terms_.empty()) fail(ErrorKind::InvalidInput, "zero polynomial has no leading coefficient");
  return terms_.rbegin()->second;
}

bool NcPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

int NcPoly::degree() const {
  if (terms_.empty() || !is_homogeneous())
    fail(ErrorKind::Inhomogeneous, "degree of a zero or inhomogeneous polynomial");
  return static_cast<int>(terms_.begin()->first.size());
}

NcPoly NcPoly::normalized() const {
  if (terms_.empty()) return *this;
  return *this * (1 / leading_coefficient());
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  NcPoly out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add(concat(wa, wb), ca * cb);
  return out;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '*';
    s += names.at(w[i]);
  }
  return s;
}

std::string NcPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    if (first) {
      if (c < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    const bool unit_word = it->first.empty();
    if (c != 1 || unit_word) {
      s += gradalg::to_string(c);
      if (!unit_word) s += "*";
    }
    if (!unit_word) s += word_to_string(it->first, names);
  }
  return s;
}

}  // namespace gradalg
