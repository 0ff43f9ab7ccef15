#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "yf/formula.hpp"

namespace yf::fol {

/// Prenex alternation class. Level 0 means quantifier-free after expanding
/// every call; kind is then irrelevant and set to kPi.
struct QuantClass {
  enum class Kind { kSigma, kPi };
  Kind kind = Kind::kPi;
  std::size_t level = 0;

  /// Smallest m with the class inside Pi_m: Sigma_n sits in Pi_{n+1}.
  std::size_t pi_bound() const noexcept;
  std::string to_string() const;

  friend bool operator==(const QuantClass&, const QuantClass&) = default;
};

/// Class of `name` after inlining calls, NNF and left-to-right prenexing.
/// Upper bound only: a different quantifier order may do better.
/// Calls are handled per definition, so the expansion is never built.
QuantClass classify(const DefinitionSet& defs, std::string_view name);

/// Class of a closed or open formula over `defs`.
QuantClass classify(const DefinitionSet& defs, const FormulaPtr& f);

/// max pi_bound over the named definitions.
std::size_t common_pi_bound(const DefinitionSet& defs, const std::vector<std::string>& names);

}  // namespace yf::fol
