#ifndef RELPROVE_TOKEN_HPP
#define RELPROVE_TOKEN_HPP

#include <string>

#include "relprove/diagnostics.hpp"

namespace relprove {

enum class TokenKind {
  Identifier,
  IntLiteral,    // decimal, non-negative; unary minus is an operator
  Keyword,       // int if else while return
  AnnotKeyword,  // requires ensures assigns assert loop invariant relational
                 // lemma logic behavior axiomatic \call \result \forall
                 // \exists \nothing \true \false
  Operator,      // + - * / % = == != < <= > >= ==> && || !
  Punct,         // ( ) { } , ; :
  AnnotOpen,     // "/*@" or "//@"
  AnnotClose,    // "*/" or the zero-width end of a //@ line
};

struct Token {
  TokenKind kind;
  std::string lexeme;
  Span span;

  bool is(TokenKind k) const { return kind == k; }
  bool is(TokenKind k, const std::string& text) const {
    return kind == k && lexeme == text;
  }
};

const char* token_kind_name(TokenKind kind);

}  // namespace relprove

#endif
