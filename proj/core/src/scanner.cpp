#include "scanner.hpp"

#include <cctype>

namespace gradalg::detail {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

}  // namespace

std::vector<Directive> split_directives(std::string_view text) {
  std::vector<Directive> out;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i < line.size()) {
      std::size_t k = i;
      while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) ++k;
      Directive d;
      d.line = line_no;
      d.keyword = std::string(line.substr(i, k - i));
      while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
      std::size_t e = line.size();
      while (e > k && std::isspace(static_cast<unsigned char>(line[e - 1]))) --e;
      d.rest = std::string(line.substr(k, e - k));
      d.rest_column = static_cast<int>(k) + 1;
      out.push_back(std::move(d));
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::vector<std::pair<std::string, int>> split_words(const Directive& d) {
  std::vector<std::pair<std::string, int>> out;
  std::size_t i = 0;
  const std::string& s = d.rest;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i == s.size()) break;
    std::size_t k = i;
    while (k < s.size() && !std::isspace(static_cast<unsigned char>(s[k]))) ++k;
    out.emplace_back(s.substr(i, k - i), d.rest_column + static_cast<int>(i));
    i = k;
  }
  return out;
}

void Scanner::skip_ws() {
  while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
}

bool Scanner::eof() {
  skip_ws();
  return pos_ >= text_.size();
}

char Scanner::peek() {
  skip_ws();
  return pos_ < text_.size() ? text_[pos_] : '\0';
}

bool Scanner::try_consume(char c) {
  if (peek() != c) return false;
  ++pos_;
  return true;
}

void Scanner::expect(char c) {
  if (!try_consume(c)) {
    if (eof()) error(std::string("expected '") + c + "' but reached end of line");
    error(std::string("expected '") + c + "' but found '" + text_[pos_] + "'");
  }
}

bool Scanner::at_identifier() { return ident_start(peek()); }

bool Scanner::at_number() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

std::string Scanner::identifier() {
  if (!at_identifier()) error("expected an identifier");
  const std::size_t start = pos_;
  while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
  return std::string(text_.substr(start, pos_ - start));
}

Rational Scanner::number() {
  if (!at_number()) error("expected a number");
  const std::size_t start = pos_;
  while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  if (pos_ < text_.size() && text_[pos_] == '/') {
    ++pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      error("expected a denominator after '/'");
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  const auto lexeme = text_.substr(start, pos_ - start);
  try {
    return parse_rational(lexeme);
  } catch (const Error& e) {
    error(e.what());
  }
}

long Scanner::integer() {
  if (!at_number()) error("expected an integer");
  const std::size_t start = pos_;
  while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  const auto lexeme = std::string(text_.substr(start, pos_ - start));
  if (lexeme.size() > 9) error("integer too large: " + lexeme);
  return std::stol(lexeme);
}

void Scanner::error(const std::string& what, ErrorKind kind) const {
  throw SyntaxError(kind, what, line_, first_column_ + static_cast<int>(pos_));
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !ident_start(s[0])) return false;
  for (char c : s)
    if (!ident_char(c)) return false;
  return true;
}

}  // namespace gradalg::detail
