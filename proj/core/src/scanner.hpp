#pragma once

// Line-oriented lexing shared by the presentation, Lie and matroid readers.

#include <string>
#include <string_view>
#include <vector>

#include "gradalg/error.hpp"
#include "gradalg/rational.hpp"

namespace gradalg::detail {

struct Directive {
  int line = 0;
  std::string keyword;
  std::string rest;
  int rest_column = 1;  // 1-based column where `rest` starts
};

/// Splits text into "keyword rest" lines, dropping '#' comments and blanks.
std::vector<Directive> split_directives(std::string_view text);

/// Splits on whitespace, reporting each word's 1-based column.
std::vector<std::pair<std::string, int>> split_words(const Directive& d);

class Scanner {
 public:
  Scanner(std::string_view text, int line, int first_column)
      : text_(text), line_(line), first_column_(first_column) {}

  void skip_ws();
  bool eof();
  char peek();
  bool try_consume(char c);
  void expect(char c);

  bool at_identifier();
  bool at_number();
  std::string identifier();
  /// Integer or p/q.
  Rational number();
  /// Unsigned integer.
  long integer();

  int line() const { return line_; }
  int column() const { return first_column_ + static_cast<int>(pos_); }

  [[noreturn]] void error(const std::string& what, ErrorKind kind = ErrorKind::SyntaxError) const;

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int first_column_;
};

bool is_identifier(std::string_view s);

}  // namespace gradalg::detail
