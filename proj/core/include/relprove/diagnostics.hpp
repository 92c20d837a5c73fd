#ifndef RELPROVE_DIAGNOSTICS_HPP
#define RELPROVE_DIAGNOSTICS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace relprove {

// Half-open byte range [begin, end) into the newline-normalized source text,
// plus the 1-based line/column of its first byte.
struct Span {
  int line = 1;
  int column = 1;
  std::size_t begin = 0;
  std::size_t end = 0;
};

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string message;
  Span span;
};

inline Diagnostic error_at(Span span, std::string message) {
  return Diagnostic{Severity::Error, std::move(message), span};
}

inline Diagnostic warning_at(Span span, std::string message) {
  return Diagnostic{Severity::Warning, std::move(message), span};
}

// Outcome of a phase that either yields a value or a diagnostic list.
// A phase may produce a partial value together with error diagnostics;
// ok() is the authoritative success test.
template <typename T>
struct Result {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  bool has_errors() const {
    for (const auto& d : diagnostics)
      if (d.severity == Severity::Error) return true;
    return false;
  }
  bool ok() const { return value.has_value() && !has_errors(); }

  static Result success(T v) {
    Result r;
    r.value = std::move(v);
    return r;
  }
  static Result failure(std::vector<Diagnostic> diags) {
    Result r;
    r.diagnostics = std::move(diags);
    return r;
  }
};

// "file:line:col: error: message" rendering used by the CLI.
std::string format_diagnostic(const Diagnostic& d, const std::string& path);

}  // namespace relprove

#endif
