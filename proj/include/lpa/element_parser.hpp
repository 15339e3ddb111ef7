#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/graph_dsl.hpp"

namespace lpa {

namespace detail {

enum class ExprToken { identifier, number, slash, star, dot, lparen, rparen, plus, minus, end };

struct ExprLexeme {
  ExprToken kind;
  std::string text;
  std::size_t column;
};

inline std::vector<ExprLexeme> lex_element(std::string_view text) {
  std::vector<ExprLexeme> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      out.push_back({ExprToken::identifier, std::string(text.substr(i, j - i)), col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({ExprToken::number, std::string(text.substr(i, j - i)), col});
      i = j;
    } else {
      ExprToken kind;
      switch (c) {
        case '/': kind = ExprToken::slash; break;
        case '*': kind = ExprToken::star; break;
        case '.': kind = ExprToken::dot; break;
        case '(': kind = ExprToken::lparen; break;
        case ')': kind = ExprToken::rparen; break;
        case '+': kind = ExprToken::plus; break;
        case '-': kind = ExprToken::minus; break;
        default:
          throw ParseError(1, col, std::string("unexpected character '") + c + "'");
      }
      out.push_back({kind, std::string(1, c), col});
      ++i;
    }
  }
  out.push_back({ExprToken::end, "end of input", text.size() + 1});
  return out;
}

// element := ['+'|'-'] term (('+'|'-') term)*
// term    := [scalar '*'] product | scalar    (a bare scalar is c * sum of vertices)
// scalar  := integer ['/' integer]
// product := factor (['.'] factor)*    ('.' may be omitted before '(')
// factor  := (id | '(' element ')') '*'*
//
// '.' is multiplication in the algebra, postfix '*' is the involution, so
// "f2.(f4.f3)*" is f2 (f4 f3)^* and "f2*.f2" reduces to r(f2).
template <CoefficientRing R>
class ElementParser {
 public:
  using ElementType = Element<R>;

  ElementParser(const LeavittAlgebra<R>& alg, std::string_view text)
      : alg_(alg), tokens_(lex_element(text)) {}

  ElementType parse() {
    ElementType result = element();
    if (peek().kind != ExprToken::end) fail("'+', '-' or end of input");
    return result;
  }

 private:
  const ExprLexeme& peek() const { return tokens_[pos_]; }
  const ExprLexeme& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(1, peek().column,
                     "expected " + expected + ", found '" + peek().text + "'");
  }

  ElementType element() {
    bool negate = false;
    if (peek().kind == ExprToken::plus || peek().kind == ExprToken::minus)
      negate = next().kind == ExprToken::minus;
    ElementType acc = term();
    if (negate) acc = alg_.neg(acc);
    while (peek().kind == ExprToken::plus || peek().kind == ExprToken::minus) {
      const bool minus = next().kind == ExprToken::minus;
      ElementType t = term();
      acc = minus ? alg_.sub(acc, t) : alg_.add(acc, t);
    }
    return acc;
  }

  ElementType term() {
    if (peek().kind == ExprToken::number) {
      const auto& num = next();
      std::string text = num.text;
      if (peek().kind == ExprToken::slash) {
        next();
        if (peek().kind != ExprToken::number) fail("denominator");
        text += "/" + next().text;
      }
      typename R::Scalar scalar;
      try {
        scalar = alg_.ring().parse(text);
      } catch (const RingError& e) {
        throw ParseError(1, num.column, e.what());
      }
      if (peek().kind != ExprToken::star) return alg_.scalar_mul(scalar, alg_.identity());
      next();
      return alg_.scalar_mul(scalar, product());
    }
    return product();
  }

  ElementType product() {
    ElementType acc = factor();
    // A '(' directly after a factor also multiplies: "f2(f4.f3)*".
    while (peek().kind == ExprToken::dot || peek().kind == ExprToken::lparen) {
      if (peek().kind == ExprToken::dot) next();
      acc = alg_.mul(acc, factor());
    }
    return acc;
  }

  ElementType factor() {
    ElementType value;
    if (peek().kind == ExprToken::identifier) {
      const auto& tok = next();
      const auto& g = alg_.graph();
      if (auto v = g.find_vertex(tok.text)) {
        value = alg_.vertex(*v);
      } else if (auto e = g.find_edge(tok.text)) {
        value = alg_.edge(*e);
      } else {
        throw ParseError(1, tok.column, "unknown vertex or edge '" + tok.text + "'");
      }
    } else if (peek().kind == ExprToken::lparen) {
      next();
      value = element();
      if (peek().kind != ExprToken::rparen) fail("')'");
      next();
    } else {
      fail("vertex, edge or '('");
    }
    while (peek().kind == ExprToken::star) {
      next();
      value = alg_.involution(value);
    }
    return value;
  }

  const LeavittAlgebra<R>& alg_;
  std::vector<ExprLexeme> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an element expression such as "f2.(f4.f3)* - 3*v1".
template <CoefficientRing R>
Element<R> parse_element(const LeavittAlgebra<R>& alg, std::string_view text) {
  return detail::ElementParser<R>(alg, text).parse();
}

}  // namespace lpa
