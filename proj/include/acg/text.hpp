#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "acg/term.hpp"

namespace acg {

struct SourcePosition {
  std::size_t line = 1;
  std::size_t column = 1;

  friend bool operator==(const SourcePosition&, const SourcePosition&) = default;
};

class ParseError : public Error {
public:
  ParseError(SourcePosition pos, std::vector<std::string> expected, std::string found);

  const SourcePosition& position() const { return pos_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

private:
  SourcePosition pos_;
  std::vector<std::string> expected_;
  std::string found_;
};

/// Raised for a character that starts no token.
class UnknownCharacterError : public Error {
public:
  UnknownCharacterError(SourcePosition pos, char c);

  const SourcePosition& position() const { return pos_; }
  char character() const { return c_; }

private:
  SourcePosition pos_;
  char c_;
};

// Concrete syntax, loosest to tightest, binary operators left-associative:
//   t + t   choice of player 1
//   t & t   choice of player 2
//   t || t  parallel
//   t ; t   composition
//   t^d     dual (postfix)
//   1       idle
Term parse_term(std::string_view text);

/// Minimal-parenthesis rendering; parse_term(print_term(t)) == t.
std::string print_term(const Term& t);

} // namespace acg
