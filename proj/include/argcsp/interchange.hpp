#pragma once

// Text formats: the .dl framework format (arg/att statements) with a
// weighted extension (watt), Graphviz DOT export, and a line-oriented results
// document of `key: value` lines.

#include "argcsp/csp.hpp"
#include "argcsp/framework.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace argcsp {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Statements end with '.'; '%' starts a line comment.
///   arg(NAME).   att(NAME,NAME).   watt(NAME,NAME,W).
/// W is an integer or "inf" (Weighted semiring) or a decimal in [0,1) with at
/// most two places (Fuzzy semiring). NAME is [A-Za-z0-9_]+.
Framework parse_dl(std::string_view text);

/// Canonical text: arguments in index order, then attacks in lexicographic
/// order. Weighted frameworks are written with watt unless `unweighted`.
std::string emit_dl(const Framework& f, bool unweighted = false);

std::string emit_dot(const Framework& f, const std::optional<Extension>& highlight = std::nullopt);

struct ResultsMeta {
  /// Written first, in order, as `key: value` lines.
  std::vector<std::pair<std::string, std::string>> fields;
  /// Wall-clock time varies between runs; it is left out unless requested.
  bool include_timing = false;
};

/// Results document:
///   <meta fields>
///   complete: true|false
///   timed-out: true|false
///   nodes: N
///   solutions: K
///   solution: {..}        (K lines, canonical order)
///   elapsed-ms: T         (only with include_timing)
std::string emit_results(const Framework& f, const SolveOutcome& outcome, const ResultsMeta& meta);

}  // namespace argcsp
