#ifndef RELPROVE_LEXER_HPP
#define RELPROVE_LEXER_HPP

#include <string>
#include <vector>

#include "relprove/diagnostics.hpp"
#include "relprove/token.hpp"

namespace relprove {

struct SourceFile {
  std::string path;
  std::string text;
};

// Normalize CRLF/CR to LF. Lexing and all spans refer to the normalized text.
std::string normalize_newlines(std::string text);

// Tokenize RelC source. Plain comments vanish; annotation comments
// ("/*@ ... */", "//@ ...") are framed by AnnotOpen/AnnotClose tokens with
// annotation keywords lexed inside. The token list never includes an EOF
// sentinel.
Result<std::vector<Token>> lex(const SourceFile& src);

}  // namespace relprove

#endif
