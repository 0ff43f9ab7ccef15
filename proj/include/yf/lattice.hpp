#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "yf/word.hpp"

namespace yf {

/// The Young-Fibonacci order x <= y: strip the longest common suffix
/// (x = x'w, y = y'w); then x <= y iff y' has at least as many 2s as x' has
/// digits.
bool leq(const Word& x, const Word& y) noexcept;

/// Up-covers of w, in shortlex order. Every child has rank(w) + 1.
std::vector<Word> children(const Word& w);

/// Down-covers of w, in shortlex order.
std::vector<Word> parents(const Word& w);

/// Least upper bound o(u, v).
Word join(const Word& u, const Word& v);

class LatticeConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Greatest lower bound found by scanning every word of rank at most
/// min(rank u, rank v). Throws LatticeConsistencyError if the maximal common
/// lower bound is not unique.
Word meet_bounded(const Word& u, const Word& v);

/// The nontrivial automorphism a: v11 <-> v2, v21 and 1 and ε fixed.
Word automorphism(const Word& w);

/// All words of digit sum n in shortlex order; there are F_{n+1} of them.
std::vector<Word> enumerate_rank(std::size_t n);

}  // namespace yf
