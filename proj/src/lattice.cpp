#include "yf/lattice.hpp"

#include <algorithm>
#include <string>

namespace yf {

namespace {

std::size_t common_suffix_len(const std::string& a, const std::string& b) noexcept {
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a[a.size() - 1 - k] == b[b.size() - 1 - k]) ++k;
  return k;
}

std::size_t count_twos(const std::string& s, std::size_t len) noexcept {
  return static_cast<std::size_t>(std::count(s.begin(), s.begin() + len, '2'));
}

std::size_t leading_twos(const std::string& s) noexcept {
  std::size_t k = 0;
  while (k < s.size() && s[k] == '2') ++k;
  return k;
}

void enumerate_into(std::size_t n, std::string& prefix, std::vector<Word>& out) {
  if (n == 0) {
    out.emplace_back(prefix);
    return;
  }
  prefix.push_back('1');
  enumerate_into(n - 1, prefix, out);
  prefix.back() = '2';
  if (n >= 2) enumerate_into(n - 2, prefix, out);
  prefix.pop_back();
}

}  // namespace

bool leq(const Word& x, const Word& y) noexcept {
  const std::string& xs = x.str();
  const std::string& ys = y.str();
  const std::size_t k = common_suffix_len(xs, ys);
  return count_twos(ys, ys.size() - k) >= xs.size() - k;
}

std::vector<Word> children(const Word& w) {
  const std::string& s = w.str();
  std::vector<Word> out;
  const std::size_t lead = leading_twos(s);
  if (auto pos = s.find('1'); pos != std::string::npos) {
    std::string t = s;
    t[pos] = '2';
    out.emplace_back(t);
  }
  for (std::size_t i = 0; i <= lead; ++i) {
    std::string t = s;
    t.insert(t.begin() + static_cast<std::ptrdiff_t>(i), '1');
    out.emplace_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> parents(const Word& w) {
  const std::string& s = w.str();
  std::vector<Word> out;
  if (auto pos = s.find('1'); pos != std::string::npos) {
    std::string t = s;
    t.erase(pos, 1);
    out.emplace_back(t);
  }
  const std::size_t lead = leading_twos(s);
  for (std::size_t i = 0; i < lead; ++i) {
    std::string t = s;
    t[i] = '1';
    out.emplace_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Word join(const Word& u_in, const Word& v_in) {
  const bool swap = v_in.size() > u_in.size();
  const std::string& u = swap ? v_in.str() : u_in.str();
  const std::string& v = swap ? u_in.str() : v_in.str();
  const std::size_t k = common_suffix_len(u, v);
  const std::size_t u_head = u.size() - k;
  const std::size_t v_head = v.size() - k;
  const std::size_t twos_u_head = count_twos(u, u_head);
  std::size_t to_replace = v_head > twos_u_head ? v_head - twos_u_head : 0;
  std::string out = u;
  for (char& c : out) {
    if (to_replace == 0) break;
    if (c == '1') {
      c = '2';
      --to_replace;
    }
  }
  return Word(out);
}

Word meet_bounded(const Word& u, const Word& v) {
  const std::size_t top = std::min(rank(u), rank(v));
  std::vector<Word> lower;
  for (std::size_t n = 0; n <= top; ++n) {
    for (Word& w : enumerate_rank(n)) {
      if (leq(w, u) && leq(w, v)) lower.push_back(std::move(w));
    }
  }
  std::vector<Word> maximal;
  for (const Word& a : lower) {
    bool dominated = false;
    for (const Word& b : lower) {
      if (!(a == b) && leq(a, b)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(a);
  }
  if (maximal.size() != 1) {
    throw LatticeConsistencyError("meet of " + u.display() + " and " + v.display() + " has " +
                                  std::to_string(maximal.size()) + " maximal lower bounds");
  }
  return maximal.front();
}

Word automorphism(const Word& w) {
  const std::string& s = w.str();
  const std::size_t n = s.size();
  if (n >= 2 && s[n - 2] == '1' && s[n - 1] == '1') return Word(s.substr(0, n - 2) + "2");
  if (n >= 1 && s[n - 1] == '2') return Word(s.substr(0, n - 1) + "11");
  return w;
}

std::vector<Word> enumerate_rank(std::size_t n) {
  std::vector<Word> out;
  std::string prefix;
  enumerate_into(n, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace yf
