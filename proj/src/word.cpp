#include "yf/word.hpp"

#include <string>

namespace yf {

WordParseError::WordParseError(std::size_t index, char bad)
    : std::invalid_argument("invalid digit '" + std::string(1, bad) + "' at index " +
                            std::to_string(index) + " (words use only 1 and 2)"),
      index_(index) {}

Word::Word(std::string_view digits) : digits_(digits) {
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] != '1' && digits_[i] != '2') throw WordParseError(i, digits_[i]);
  }
}

Word parse_word(std::string_view text) { return Word(text); }

Word parse_word_arg(std::string_view text) {
  if (text == "eps" || text == "\"\"") return Word();
  return Word(text);
}

DigitStats stats(const Word& w) noexcept {
  DigitStats s;
  for (char c : w.str()) {
    if (c == '1') {
      ++s.ones;
    } else {
      ++s.twos;
    }
  }
  s.length = s.ones + s.twos;
  s.rank = s.ones + 2 * s.twos;
  return s;
}

Blocks blocks(const Word& w) {
  Blocks out{0};
  for (char c : w.str()) {
    if (c == '1') {
      ++out.back();
    } else {
      out.push_back(0);
    }
  }
  return out;
}

Word from_blocks(const Blocks& b) {
  std::string s;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i > 0) s.push_back('2');
    s.append(b[i], '1');
  }
  return Word(s);
}

std::size_t ones_prefix_len(const Word& w) noexcept {
  std::size_t n = 0;
  while (n < w.size() && w[n] == '1') ++n;
  return n;
}

std::uint64_t fibonacci(std::size_t n) {
  if (n > 93) throw std::out_of_range("fibonacci index exceeds 64-bit range");
  std::uint64_t a = 0, b = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t next = a + b;
    a = b;
    b = next;
  }
  return a;
}

}  // namespace yf
