#pragma once

#include <cstddef>
#include <cstdint>

#include "yf/word.hpp"

namespace yf {

/// Size of the built-in prime table (p_0 = 2, p_1 = 3, ...).
inline constexpr std::size_t kPrimeTableSize = 128;

/// p_i; trial division past the table.
std::uint64_t nth_prime(std::size_t i);

/// Exponent of p_i in l (l >= 1).
std::size_t prime_exponent(std::uint64_t l, std::size_t i);

/// The prime-exponent coding b : words -> N_0.
///   b(ε) = 0, b(1^n) = 2^{n-1},
///   otherwise, with blocks (e_0, ..., e_d), d >= 1:
///   b(v) = p_d^{e_d + 1} * prod_{i=0}^{d-1} p_i^{e_i}.
/// Throws std::overflow_error if the value does not fit in 64 bits.
std::uint64_t b_forward(const Word& w);

/// Exact inverse of b_forward.
Word b_inverse(std::uint64_t n);

}  // namespace yf
