#include "acg/text.hpp"

#include <cctype>
#include <sstream>

namespace acg {

namespace {

std::string describe_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i)
      out += ", ";
    out += expected[i];
  }
  return out;
}

std::string parse_message(SourcePosition pos, const std::vector<std::string>& expected,
                          const std::string& found) {
  std::ostringstream os;
  os << pos.line << ":" << pos.column << ": syntax error: expected one of {"
     << describe_expected(expected) << "} but found " << found;
  return os.str();
}

std::string unknown_message(SourcePosition pos, char c) {
  std::ostringstream os;
  os << pos.line << ":" << pos.column << ": unknown character '" << c << "'";
  return os.str();
}

enum class Tok { Atom, One, LParen, RParen, Plus, Amp, Par, Semi, Dual, End };

const char* tok_spelling(Tok t) {
  switch (t) {
  case Tok::Atom: return "atom";
  case Tok::One: return "'1'";
  case Tok::LParen: return "'('";
  case Tok::RParen: return "')'";
  case Tok::Plus: return "'+'";
  case Tok::Amp: return "'&'";
  case Tok::Par: return "'||'";
  case Tok::Semi: return "';'";
  case Tok::Dual: return "'^d'";
  case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  SourcePosition pos;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      SourcePosition start = pos_;
      if (i_ >= src_.size()) {
        out.push_back({Tok::End, "", start});
        return out;
      }
      char c = src_[i_];
      if (std::islower(static_cast<unsigned char>(c))) {
        std::size_t b = i_;
        while (i_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_'))
          advance();
        out.push_back({Tok::Atom, std::string(src_.substr(b, i_ - b)), start});
        continue;
      }
      switch (c) {
      case '1':
        // "1x" is neither idle nor an atom.
        if (i_ + 1 < src_.size() &&
            (std::isalnum(static_cast<unsigned char>(src_[i_ + 1])) || src_[i_ + 1] == '_')) {
          advance();
          throw ParseError(pos_, {"'+'", "'&'", "'||'", "';'", "'^d'", "')'", "end of input"},
                           std::string("'") + src_[i_] + "'");
        }
        single(out, Tok::One, start);
        break;
      case '(': single(out, Tok::LParen, start); break;
      case ')': single(out, Tok::RParen, start); break;
      case '+': single(out, Tok::Plus, start); break;
      case '&': single(out, Tok::Amp, start); break;
      case ';': single(out, Tok::Semi, start); break;
      case '|':
        if (i_ + 1 < src_.size() && src_[i_ + 1] == '|') {
          advance();
          advance();
          out.push_back({Tok::Par, "||", start});
          break;
        }
        throw UnknownCharacterError(start, c);
      case '^':
        if (i_ + 1 < src_.size() && src_[i_ + 1] == 'd' &&
            !(i_ + 2 < src_.size() &&
              (std::isalnum(static_cast<unsigned char>(src_[i_ + 2])) || src_[i_ + 2] == '_'))) {
          advance();
          advance();
          out.push_back({Tok::Dual, "^d", start});
          break;
        }
        throw UnknownCharacterError(start, c);
      default:
        throw UnknownCharacterError(start, c);
      }
    }
  }

private:
  void advance() {
    if (src_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  void skip_space() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_])))
      advance();
  }

  void single(std::vector<Token>& out, Tok kind, SourcePosition start) {
    out.push_back({kind, std::string(1, src_[i_]), start});
    advance();
  }

  std::string_view src_;
  std::size_t i_ = 0;
  SourcePosition pos_;
};

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Term parse() {
    Term t = choice1();
    expect(Tok::End, {tok_spelling(Tok::End), tok_spelling(Tok::Plus), tok_spelling(Tok::Amp),
                      tok_spelling(Tok::Par), tok_spelling(Tok::Semi), tok_spelling(Tok::Dual)});
    return t;
  }

private:
  const Token& peek() const { return toks_[i_]; }

  bool accept(Tok k) {
    if (peek().kind == k) {
      ++i_;
      return true;
    }
    return false;
  }

  void expect(Tok k, std::vector<std::string> expected) {
    if (!accept(k))
      fail(std::move(expected));
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? std::string(tok_spelling(Tok::End)) : "'" + t.text + "'";
    throw ParseError(t.pos, std::move(expected), std::move(found));
  }

  Term choice1() {
    Term t = choice2();
    while (accept(Tok::Plus))
      t = Term::choice1(t, choice2());
    return t;
  }

  Term choice2() {
    Term t = par();
    while (accept(Tok::Amp))
      t = Term::choice2(t, par());
    return t;
  }

  Term par() {
    Term t = seq();
    while (accept(Tok::Par))
      t = Term::parallel(t, seq());
    return t;
  }

  Term seq() {
    Term t = unary();
    while (accept(Tok::Semi))
      t = Term::compose(t, unary());
    return t;
  }

  Term unary() {
    Term t = primary();
    while (accept(Tok::Dual))
      t = Term::dual(t);
    return t;
  }

  Term primary() {
    const Token& t = peek();
    switch (t.kind) {
    case Tok::Atom:
      ++i_;
      return Term::atom(t.text);
    case Tok::One:
      ++i_;
      return Term::idle();
    case Tok::LParen: {
      ++i_;
      Term inner = choice1();
      expect(Tok::RParen, {tok_spelling(Tok::RParen), tok_spelling(Tok::Plus), tok_spelling(Tok::Amp),
                           tok_spelling(Tok::Par), tok_spelling(Tok::Semi), tok_spelling(Tok::Dual)});
      return inner;
    }
    default:
      fail({tok_spelling(Tok::Atom), tok_spelling(Tok::One), tok_spelling(Tok::LParen)});
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

int precedence(TermKind k) {
  switch (k) {
  case TermKind::Choice1: return 1;
  case TermKind::Choice2: return 2;
  case TermKind::Parallel: return 3;
  case TermKind::Compose: return 4;
  case TermKind::Dual: return 5;
  default: return 6;
  }
}

const char* spelling(TermKind k) {
  switch (k) {
  case TermKind::Choice1: return " + ";
  case TermKind::Choice2: return " & ";
  case TermKind::Parallel: return " || ";
  case TermKind::Compose: return " ; ";
  default: return "";
  }
}

void print_into(const Term& t, std::string& out);

void print_child(const Term& child, bool parens, std::string& out) {
  if (parens)
    out += '(';
  print_into(child, out);
  if (parens)
    out += ')';
}

void print_into(const Term& t, std::string& out) {
  switch (t.kind()) {
  case TermKind::Idle:
    out += '1';
    return;
  case TermKind::Atom:
    out += t.atom_name().name();
    return;
  case TermKind::Dual:
    print_child(t.inner(), precedence(t.inner().kind()) < precedence(TermKind::Dual), out);
    out += "^d";
    return;
  default: {
    int p = precedence(t.kind());
    print_child(t.left(), precedence(t.left().kind()) < p, out);
    out += spelling(t.kind());
    print_child(t.right(), precedence(t.right().kind()) <= p, out);
  }
  }
}

} // namespace

ParseError::ParseError(SourcePosition pos, std::vector<std::string> expected, std::string found)
    : Error(parse_message(pos, expected, found)), pos_(pos), expected_(std::move(expected)),
      found_(std::move(found)) {}

UnknownCharacterError::UnknownCharacterError(SourcePosition pos, char c)
    : Error(unknown_message(pos, c)), pos_(pos), c_(c) {}

Term parse_term(std::string_view text) { return Parser(Lexer(text).run()).parse(); }

std::string print_term(const Term& t) {
  std::string out;
  print_into(t, out);
  return out;
}

} // namespace acg
