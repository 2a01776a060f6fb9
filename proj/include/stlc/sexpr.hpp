#pragma once

// S-expression surface syntax for types, terms, contexts and language files.
//
//   types  (b NAME) | unit | empty | (prod T T) | (sum T T) | (arr T T)
//   terms  (var N) | (cst NAME) | star | (pair t u) | (proj1 t) | (proj2 t)
//          | (lam T t) | (app t u) | (raise T t) | (inl T t) | (inr T t)
//          | (case T s bl br)
//   language files: one `base NAME` or `const NAME : T` per line, `#` starts
//   a comment.

#include <stdexcept>
#include <string>
#include <string_view>

#include "stlc/syntax.hpp"

namespace stlc {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

std::string print(const Type& type);
std::string print(const Term& term);
// Space separated, oldest binding first.
std::string print(const Context& gamma);
std::string print(const Language& lang);

Type parse_type(std::string_view text);
Term parse_term(std::string_view text);
// Zero or more types separated by whitespace, leftmost is the oldest binding.
Context parse_context(std::string_view text);
Language parse_language(std::string_view text);

}  // namespace stlc
