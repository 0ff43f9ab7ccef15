#include "yf/bijection.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace yf {

namespace {

constexpr std::array<std::uint64_t, kPrimeTableSize> make_prime_table() {
  std::array<std::uint64_t, kPrimeTableSize> table{};
  std::size_t count = 0;
  for (std::uint64_t c = 2; count < kPrimeTableSize; ++c) {
    bool prime = true;
    for (std::size_t j = 0; j < count && table[j] * table[j] <= c; ++j) {
      if (c % table[j] == 0) {
        prime = false;
        break;
      }
    }
    if (prime) table[count++] = c;
  }
  return table;
}

constexpr auto kPrimes = make_prime_table();

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("b(v) exceeds 64 bits");
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

std::uint64_t next_prime(std::uint64_t p) {
  for (std::uint64_t c = p + 1;; ++c) {
    bool prime = true;
    for (std::uint64_t q = 2; q * q <= c && prime; ++q) prime = c % q != 0;
    if (prime) return c;
  }
}

}  // namespace

std::uint64_t nth_prime(std::size_t i) {
  if (i < kPrimes.size()) return kPrimes[i];
  std::uint64_t p = kPrimes.back();
  for (std::size_t k = kPrimes.size() - 1; k < i; ++k) p = next_prime(p);
  return p;
}

std::size_t prime_exponent(std::uint64_t l, std::size_t i) {
  if (l == 0) throw std::domain_error("prime_exponent of 0");
  const std::uint64_t p = nth_prime(i);
  std::size_t e = 0;
  while (l % p == 0) {
    l /= p;
    ++e;
  }
  return e;
}

std::uint64_t b_forward(const Word& w) {
  if (w.empty()) return 0;
  const Blocks e = blocks(w);
  const std::size_t d = e.size() - 1;
  if (d == 0) return checked_pow(2, e[0] - 1);
  std::uint64_t out = checked_pow(nth_prime(d), e[d] + 1);
  for (std::size_t i = 0; i < d; ++i) out = checked_mul(out, checked_pow(nth_prime(i), e[i]));
  return out;
}

Word b_inverse(std::uint64_t n) {
  if (n == 0) return Word();
  Blocks e;
  std::uint64_t rest = n;
  // walk the primes directly: a factor of n may lie past the table
  for (std::uint64_t p = 2; rest > 1; p = next_prime(p)) {
    std::size_t k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    e.push_back(k);
  }
  // Only powers of two (including 1 = 2^0) come from words 1^n.
  if (e.size() <= 1) return Word::ones((e.empty() ? 0 : e[0]) + 1);
  --e.back();
  return from_blocks(e);
}

}  // namespace yf
