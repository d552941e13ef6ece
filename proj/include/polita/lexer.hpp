#pragma once

#include "polita/poly.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace polita {

struct Token {
  enum class Kind { Number, Ident, Symbol, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t offset = 0;
};

// Splits text into numbers (digits with an optional fractional part),
// identifiers and symbols. Multi-character symbols: <= >= == != && || ->.
std::vector<Token> tokenize(std::string_view text);

// Recursive-descent reader for polynomial expressions over a token stream.
// Formula parsers share one instance and call parse_expression() at atom
// positions, backtracking through pos() / set_pos() when needed.
class TokenStream {
 public:
  using Resolver = std::function<int(const std::string&)>;

  TokenStream(std::string_view source, Resolver resolver);

  const Token& peek(std::size_t ahead = 0) const;
  Token next();
  bool accept(std::string_view symbol_or_keyword);
  void expect(std::string_view symbol_or_keyword);
  bool at_end() const { return peek().kind == Token::Kind::End; }

  std::size_t pos() const { return pos_; }
  void set_pos(std::size_t p) { pos_ = p; }

  void set_resolver(Resolver r) { resolver_ = std::move(r); }

  Poly parse_expression();

  [[noreturn]] void fail(const std::string& what) const;

 private:
  Poly parse_term();
  Poly parse_unary();
  Poly parse_power();
  Poly parse_primary();

  std::string source_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Resolver resolver_;
};

// Resolver accepting x1, x2, ... (also X1, X2, ...).
int resolve_indexed_variable(const std::string& name);

}  // namespace polita
