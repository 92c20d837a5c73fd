#include "relprove/lexer.hpp"

#include <array>
#include <cctype>

namespace relprove {

const char* token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::IntLiteral: return "integer literal";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::AnnotKeyword: return "annotation keyword";
    case TokenKind::Operator: return "operator";
    case TokenKind::Punct: return "punctuation";
    case TokenKind::AnnotOpen: return "annotation open";
    case TokenKind::AnnotClose: return "annotation close";
  }
  return "token";
}

std::string normalize_newlines(std::string text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\r') {
      out.push_back('\n');
      if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

const std::array<const char*, 5> kKeywords = {"int", "if", "else", "while",
                                              "return"};

const std::array<const char*, 11> kAnnotWords = {
    "requires", "ensures",    "assigns", "assert",     "loop", "invariant",
    "relational", "lemma",    "logic",   "behavior",   "axiomatic"};

const std::array<const char*, 7> kBackslashWords = {
    "\\call", "\\result", "\\forall", "\\exists", "\\nothing", "\\true",
    "\\false"};

bool valid_utf8(const std::string& s) {
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = s[i];
    std::size_t extra;
    if (c < 0x80) extra = 0;
    else if ((c >> 5) == 0x6) extra = 1;
    else if ((c >> 4) == 0xE) extra = 2;
    else if ((c >> 3) == 0x1E) extra = 3;
    else return false;
    if (i + extra >= s.size() && extra > 0) return false;
    for (std::size_t k = 1; k <= extra; ++k)
      if ((static_cast<unsigned char>(s[i + k]) >> 6) != 0x2) return false;
    i += extra + 1;
  }
  return true;
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Result<std::vector<Token>> run() {
    while (pos_ < text_.size()) {
      if (in_annotation_) {
        lex_annotation_interior();
      } else {
        lex_code();
      }
    }
    if (in_annotation_) {
      if (line_annotation_) {
        // //@ terminated by EOF: close with a zero-width token.
        push_zero_width_close();
      } else {
        diags_.push_back(error_at(span_from(annot_open_pos_),
                                  "unterminated annotation comment"));
      }
    }
    Result<std::vector<Token>> r;
    r.value = std::move(tokens_);
    r.diagnostics = std::move(diags_);
    return r;
  }

 private:
  void lex_code() {
    char c = text_[pos_];
    if (c == '\n') {
      advance_newline();
      return;
    }
    if (c == ' ' || c == '\t' || c == '\v' || c == '\f') {
      ++pos_;
      ++col_;
      return;
    }
    if (c == '/' && pos_ + 1 < text_.size()) {
      char d = text_[pos_ + 1];
      if (d == '*' && pos_ + 2 < text_.size() && text_[pos_ + 2] == '@') {
        open_annotation(3, false);
        return;
      }
      if (d == '/' && pos_ + 2 < text_.size() && text_[pos_ + 2] == '@') {
        open_annotation(3, true);
        return;
      }
      if (d == '*') {
        skip_block_comment();
        return;
      }
      if (d == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') {
          ++pos_;
          ++col_;
        }
        return;
      }
    }
    lex_common_token();
  }

  void lex_annotation_interior() {
    char c = text_[pos_];
    if (c == '\n') {
      if (line_annotation_) {
        push_zero_width_close();
        in_annotation_ = false;
      }
      advance_newline();
      return;
    }
    if (c == ' ' || c == '\t' || c == '\v' || c == '\f') {
      ++pos_;
      ++col_;
      return;
    }
    if (!line_annotation_ && c == '*' && pos_ + 1 < text_.size() &&
        text_[pos_ + 1] == '/') {
      push_token(TokenKind::AnnotClose, 2);
      in_annotation_ = false;
      return;
    }
    // ACSL-style continuation: a leading '*' on its own inside a block
    // annotation (as in " * ensures ...") is decoration, not a token, when
    // it sits at the start of a line.
    if (!line_annotation_ && c == '*' && at_line_start_modulo_ws()) {
      ++pos_;
      ++col_;
      return;
    }
    if (c == '\\') {
      lex_backslash_word();
      return;
    }
    lex_common_token();
  }

  bool at_line_start_modulo_ws() const {
    std::size_t i = pos_;
    while (i > 0) {
      char c = text_[i - 1];
      if (c == '\n') return true;
      if (c != ' ' && c != '\t') return false;
      --i;
    }
    return true;
  }

  void open_annotation(std::size_t len, bool line) {
    push_token(TokenKind::AnnotOpen, len);
    in_annotation_ = true;
    line_annotation_ = line;
    annot_open_pos_ = pos_ - len;
  }

  void skip_block_comment() {
    std::size_t start = pos_;
    Span start_span = span_from(start);
    pos_ += 2;
    col_ += 2;
    while (pos_ < text_.size()) {
      if (text_[pos_] == '*' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        pos_ += 2;
        col_ += 2;
        return;
      }
      if (text_[pos_] == '\n') advance_newline();
      else {
        ++pos_;
        ++col_;
      }
    }
    diags_.push_back(error_at(start_span, "unterminated comment"));
  }

  void lex_backslash_word() {
    std::size_t start = pos_;
    std::size_t i = pos_ + 1;
    while (i < text_.size() && is_ident_char(text_[i])) ++i;
    std::string word = text_.substr(start, i - start);
    for (const char* kw : kBackslashWords) {
      if (word == kw) {
        push_token(TokenKind::AnnotKeyword, word.size());
        return;
      }
    }
    diags_.push_back(error_at(span_from(start, i),
                              "unknown annotation construct '" + word + "'"));
    pos_ = i;
    col_ += static_cast<int>(i - start);
  }

  void lex_common_token() {
    char c = text_[pos_];
    if (is_ident_start(c)) {
      std::size_t i = pos_;
      while (i < text_.size() && is_ident_char(text_[i])) ++i;
      std::string word = text_.substr(pos_, i - pos_);
      TokenKind kind = TokenKind::Identifier;
      for (const char* kw : kKeywords)
        if (word == kw) kind = TokenKind::Keyword;
      if (in_annotation_) {
        for (const char* kw : kAnnotWords)
          if (word == kw) kind = TokenKind::AnnotKeyword;
      }
      push_token(kind, word.size());
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t i = pos_;
      while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
      push_token(TokenKind::IntLiteral, i - pos_);
      return;
    }
    // Multi-char operators first.
    static const std::array<const char*, 7> two_or_three = {"==>", "==", "!=",
                                                            "<=", ">=", "&&", "||"};
    for (const char* op : two_or_three) {
      std::size_t n = std::char_traits<char>::length(op);
      if (text_.compare(pos_, n, op) == 0) {
        push_token(TokenKind::Operator, n);
        return;
      }
    }
    switch (c) {
      case '+': case '-': case '*': case '/': case '%':
      case '=': case '<': case '>': case '!':
        push_token(TokenKind::Operator, 1);
        return;
      case '(': case ')': case '{': case '}': case ',': case ';': case ':':
        push_token(TokenKind::Punct, 1);
        return;
      default:
        diags_.push_back(error_at(span_from(pos_, pos_ + 1),
                                  std::string("illegal character '") + c + "'"));
        ++pos_;
        ++col_;
    }
  }

  void push_token(TokenKind kind, std::size_t len) {
    Span span{line_, col_, pos_, pos_ + len};
    tokens_.push_back(Token{kind, text_.substr(pos_, len), span});
    pos_ += len;
    col_ += static_cast<int>(len);
  }

  void push_zero_width_close() {
    Span span{line_, col_, pos_, pos_};
    tokens_.push_back(Token{TokenKind::AnnotClose, "", span});
  }

  void advance_newline() {
    ++pos_;
    ++line_;
    col_ = 1;
  }

  Span span_from(std::size_t begin) const { return span_from(begin, text_.size()); }
  Span span_from(std::size_t begin, std::size_t end) const {
    // Recompute line/col for a past position; error paths only.
    int line = 1, col = 1;
    for (std::size_t i = 0; i < begin && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return Span{line, col, begin, end};
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  bool in_annotation_ = false;
  bool line_annotation_ = false;
  std::size_t annot_open_pos_ = 0;
  std::vector<Token> tokens_;
  std::vector<Diagnostic> diags_;
};

}  // namespace

Result<std::vector<Token>> lex(const SourceFile& src) {
  std::string text = normalize_newlines(src.text);
  if (!valid_utf8(text)) {
    return Result<std::vector<Token>>::failure(
        {error_at(Span{}, "source is not valid UTF-8")});
  }
  Lexer lexer(text);
  return lexer.run();
}

std::string format_diagnostic(const Diagnostic& d, const std::string& path) {
  std::string sev = d.severity == Severity::Error ? "error" : "warning";
  return path + ":" + std::to_string(d.span.line) + ":" +
         std::to_string(d.span.column) + ": " + sev + ": " + d.message;
}

}  // namespace relprove
