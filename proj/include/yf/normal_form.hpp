#pragma once

#include "yf/formula.hpp"

namespace yf::fol {

/// Negation normal form: implies/iff eliminated, negation only on atoms,
/// calls and builtins.
FormulaPtr nnf(const FormulaPtr& f);

/// Pushes every quantifier down to the smallest subformula containing its
/// variable: forall distributes over and, exists over or, and conjuncts or
/// disjuncts not mentioning the variable are pulled out. The result is in
/// NNF and is equivalent over any nonempty domain.
FormulaPtr miniscope(const FormulaPtr& f);

}  // namespace yf::fol
