#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace yf {

/// A finite word over the digits {1,2}; the empty word is the bottom element.
///
/// Digits are stored as the characters '1' and '2', which makes the
/// serialized form identical to the in-memory one.
class Word {
 public:
  Word() = default;

  /// Throws WordParseError on any character other than '1' or '2'.
  explicit Word(std::string_view digits);

  static Word ones(std::size_t n) { return Word(std::string(n, '1'), Trusted{}); }
  static Word twos(std::size_t n) { return Word(std::string(n, '2'), Trusted{}); }

  const std::string& str() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }
  char operator[](std::size_t i) const noexcept { return digits_[i]; }

  Word operator+(const Word& rhs) const { return Word(digits_ + rhs.digits_, Trusted{}); }
  Word substr(std::size_t pos, std::size_t n = std::string::npos) const {
    return Word(digits_.substr(pos, n), Trusted{});
  }

  friend bool operator==(const Word&, const Word&) = default;

  /// Shortlex: shorter words first, then lexicographic with 1 < 2.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.digits_.compare(b.digits_) <=> 0;
  }

  /// Printable form; ε is spelled "eps" so that it is visible in logs.
  std::string display() const { return digits_.empty() ? "eps" : digits_; }

 private:
  struct Trusted {};
  Word(std::string digits, Trusted) : digits_(std::move(digits)) {}

  std::string digits_;
};

class WordParseError : public std::invalid_argument {
 public:
  WordParseError(std::size_t index, char bad);
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

Word parse_word(std::string_view text);

/// Like parse_word but also accepts the spelling "eps" for the empty word.
Word parse_word_arg(std::string_view text);

struct DigitStats {
  std::size_t rank = 0;    // digit sum |v|
  std::size_t length = 0;  // #v
  std::size_t ones = 0;    // e(v)
  std::size_t twos = 0;    // d(v)

  friend bool operator==(const DigitStats&, const DigitStats&) = default;
};

DigitStats stats(const Word& w) noexcept;

inline std::size_t rank(const Word& w) noexcept { return stats(w).rank; }
inline std::size_t twos(const Word& w) noexcept { return stats(w).twos; }

/// Exponents (e_0, ..., e_d) of v = 1^{e_0} 2 1^{e_1} 2 ... 2 1^{e_d}.
using Blocks = std::vector<std::size_t>;

Blocks blocks(const Word& w);
Word from_blocks(const Blocks& b);

/// Length of the maximal leading run of 1s.
std::size_t ones_prefix_len(const Word& w) noexcept;

/// F_0 = 0, F_1 = 1. Valid for n <= 93.
std::uint64_t fibonacci(std::size_t n);

}  // namespace yf

template <>
struct std::hash<yf::Word> {
  std::size_t operator()(const yf::Word& w) const noexcept {
    return std::hash<std::string>{}(w.str());
  }
};
