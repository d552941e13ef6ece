#include "polita/lexer.hpp"

#include "polita/errors.hpp"

#include <cctype>

namespace polita {

namespace {

constexpr unsigned kMaxExponent = 4096;

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  static const char* const kTwoChar[] = {"<=", ">=", "==", "!=", "&&", "||", "->"};
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.offset = i;
    if (is_digit(c) || (c == '.' && i + 1 < text.size() && is_digit(text[i + 1]))) {
      std::size_t j = i;
      while (j < text.size() && is_digit(text[j])) ++j;
      if (j < text.size() && text[j] == '.' && j + 1 < text.size() && is_digit(text[j + 1])) {
        ++j;
        while (j < text.size() && is_digit(text[j])) ++j;
      }
      t.kind = Token::Kind::Number;
      t.text = std::string(text.substr(i, j - i));
      i = j;
    } else if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      t.kind = Token::Kind::Ident;
      t.text = std::string(text.substr(i, j - i));
      i = j;
    } else {
      t.kind = Token::Kind::Symbol;
      t.text = std::string(1, c);
      if (i + 1 < text.size()) {
        std::string two(text.substr(i, 2));
        for (const char* s : kTwoChar)
          if (two == s) t.text = two;
      }
      static const std::string kSingles = "+-*/^()[].,<>=!&|";
      if (t.text.size() == 1 && kSingles.find(c) == std::string::npos)
        throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(i));
      i += t.text.size();
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.offset = text.size();
  out.push_back(end);
  return out;
}

int resolve_indexed_variable(const std::string& name) {
  if (name.size() >= 2 && (name[0] == 'x' || name[0] == 'X')) {
    bool digits = true;
    for (std::size_t i = 1; i < name.size(); ++i) digits = digits && is_digit(name[i]);
    if (digits && name[1] != '0' && name.size() < 8) return std::stoi(name.substr(1));
  }
  throw ParseError("unknown variable '" + name + "' (expected x1, x2, ...)");
}

TokenStream::TokenStream(std::string_view source, Resolver resolver)
    : source_(source), tokens_(tokenize(source)), resolver_(std::move(resolver)) {}

const Token& TokenStream::peek(std::size_t ahead) const {
  std::size_t i = pos_ + ahead;
  return i < tokens_.size() ? tokens_[i] : tokens_.back();
}

Token TokenStream::next() {
  Token t = peek();
  if (pos_ < tokens_.size() - 1) ++pos_;
  return t;
}

bool TokenStream::accept(std::string_view s) {
  const Token& t = peek();
  if (t.kind != Token::Kind::End && t.kind != Token::Kind::Number && t.text == s) {
    ++pos_;
    return true;
  }
  return false;
}

void TokenStream::expect(std::string_view s) {
  if (!accept(s)) fail("expected '" + std::string(s) + "'");
}

void TokenStream::fail(const std::string& what) const {
  const Token& t = peek();
  std::string found = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
  throw ParseError(what + " at offset " + std::to_string(t.offset) + ", found " + found);
}

Poly TokenStream::parse_expression() {
  Poly acc = parse_term();
  while (true) {
    if (accept("+")) {
      acc += parse_term();
    } else if (accept("-")) {
      acc -= parse_term();
    } else {
      return acc;
    }
  }
}

Poly TokenStream::parse_term() {
  Poly acc = parse_unary();
  while (true) {
    if (accept("*")) {
      acc *= parse_unary();
    } else if (accept("/")) {
      Poly d = parse_unary();
      if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
      acc = acc.scaled(1 / d.constant_value());
    } else {
      return acc;
    }
  }
}

Poly TokenStream::parse_unary() {
  if (accept("-")) return -parse_unary();
  if (accept("+")) return parse_unary();
  return parse_power();
}

Poly TokenStream::parse_power() {
  Poly base = parse_primary();
  if (accept("^")) {
    const Token& t = peek();
    if (t.kind != Token::Kind::Number || t.text.find('.') != std::string::npos) fail("expected integer exponent");
    if (t.text.size() > 5 || std::stoul(t.text) > kMaxExponent) fail("exponent too large");
    unsigned e = static_cast<unsigned>(std::stoul(next().text));
    return pow(base, e);
  }
  return base;
}

Poly TokenStream::parse_primary() {
  const Token& t = peek();
  switch (t.kind) {
    case Token::Kind::Number:
      return Poly(parse_rational(next().text));
    case Token::Kind::Ident: {
      std::string name = next().text;
      return Poly::variable(resolver_(name));
    }
    case Token::Kind::Symbol:
      if (accept("(")) {
        Poly inner = parse_expression();
        expect(")");
        return inner;
      }
      break;
    case Token::Kind::End:
      break;
  }
  fail("expected a number, variable or '('");
}

}  // namespace polita
