#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "yf/formula.hpp"

namespace yf::fol {

/// Lexical or syntactic error in DSL text, with a 1-based position.
class DslSyntaxError : public std::runtime_error {
 public:
  DslSyntaxError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses a sequence of `(def name (params...) body)` forms.
///
/// Body grammar:
///   (geq t t) (eq t t) (not f) (and f...) (or f...) (implies f g) (iff f g)
///   (forall v f) (exists v f) (call name t...) (builtin name t...) true false
/// Terms are variable names or word literals w"212" (w"" is the empty word).
/// `;` starts a comment that runs to the end of the line.
///
/// The returned set carries the builtins of `base` and any definitions
/// already in it; the whole set is validated before returning.
DefinitionSet parse_defs(std::string_view text, DefinitionSet base = with_default_builtins());

/// Parses a single formula (no surrounding def).
FormulaPtr parse_formula(std::string_view text);

/// Canonical single-line rendering.
std::string to_string(const Term& t);
std::string to_string(const Formula& f);

/// Canonical multi-line rendering; long forms break one child per line.
std::string pretty(const Definition& def);
std::string pretty(const DefinitionSet& set);

}  // namespace yf::fol
