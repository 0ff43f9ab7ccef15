#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "yf/bijection.hpp"
#include "yf/lattice.hpp"
#include "yf/word.hpp"

using yf::Word;

namespace {

Word W(const char* s) { return Word(s); }

std::set<Word> as_set(const std::vector<Word>& v) { return {v.begin(), v.end()}; }

// Independent generator: every {1,2}-string with digit sum n.
std::vector<Word> brute_rank(std::size_t n) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= n; ++len) {
    for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
      std::string s;
      std::size_t sum = 0;
      for (std::size_t i = 0; i < len; ++i) {
        const bool two = (mask >> (len - 1 - i)) & 1u;
        s += two ? '2' : '1';
        sum += two ? 2 : 1;
      }
      if (sum == n) out.push_back(Word(s));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Cover rules written directly on strings.
std::set<std::string> ref_children(const std::string& w) {
  std::set<std::string> out;
  const auto one = w.find('1');
  if (one != std::string::npos) {
    std::string c = w;
    c[one] = '2';
    out.insert(c);
  }
  std::size_t k = 0;
  while (k < w.size() && w[k] == '2') ++k;
  for (std::size_t i = 0; i <= k; ++i) out.insert(w.substr(0, i) + "1" + w.substr(i));
  return out;
}

// Reflexive-transitive closure of ref_children on words of rank <= n.
std::map<Word, std::set<Word>> closure_up(std::size_t n) {
  std::vector<Word> all;
  for (std::size_t r = 0; r <= n; ++r) {
    auto lv = brute_rank(r);
    all.insert(all.end(), lv.begin(), lv.end());
  }
  std::map<Word, std::set<Word>> up;
  // process from the top rank down so that children are complete first
  for (auto it = all.rbegin(); it != all.rend(); ++it) {
    std::set<Word> s{*it};
    if (yf::rank(*it) < n) {
      for (const auto& c : ref_children(it->str())) {
        const auto& cu = up[Word(c)];
        s.insert(cu.begin(), cu.end());
      }
    }
    up[*it] = std::move(s);
  }
  return up;
}

std::uint64_t fib(std::size_t n) {
  std::uint64_t a = 0, b = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const auto t = a + b;
    a = b;
    b = t;
  }
  return a;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("parse_word") {
  CHECK(yf::parse_word("").empty());
  CHECK(yf::parse_word("212").str() == "212");
  try {
    (void)yf::parse_word("213");
    FAIL("no error");
  } catch (const yf::WordParseError& e) {
    CHECK(e.index() == 2);
  }
  CHECK(yf::parse_word_arg("eps").empty());
  CHECK(yf::parse_word_arg("\"\"").empty());
  CHECK_THROWS_AS(yf::parse_word("1a"), yf::WordParseError);
}

TEST_CASE("stats") {
  CHECK(yf::stats(Word()) == yf::DigitStats{0, 0, 0, 0});
  CHECK(yf::stats(W("212")) == yf::DigitStats{5, 3, 1, 2});
  CHECK(yf::stats(W("1111")) == yf::DigitStats{4, 4, 4, 0});
  for (std::size_t n = 0; n <= 10; ++n) {
    for (const auto& w : brute_rank(n)) {
      const auto s = yf::stats(w);
      CHECK(s.rank == n);
      CHECK(s.rank == s.ones + 2 * s.twos);
      CHECK(s.length == s.ones + s.twos);
    }
  }
}

TEST_CASE("blocks") {
  CHECK(yf::blocks(W("12112")) == yf::Blocks{1, 2, 0});
  CHECK(yf::blocks(W("2")) == yf::Blocks{0, 0});
  CHECK(yf::blocks(Word::ones(5)) == yf::Blocks{5});
  CHECK(yf::blocks(Word()) == yf::Blocks{0});
  for (std::size_t n = 0; n <= 12; ++n) {
    for (const auto& w : brute_rank(n)) {
      const auto b = yf::blocks(w);
      CHECK(b.size() == yf::twos(w) + 1);
      CHECK(yf::from_blocks(b) == w);
    }
  }
}

TEST_CASE("ones_prefix_len") {
  CHECK(yf::ones_prefix_len(W("1121")) == 2);
  CHECK(yf::ones_prefix_len(W("212")) == 0);
  CHECK(yf::ones_prefix_len(Word::ones(7)) == 7);
}

TEST_CASE("enumerate_rank matches brute force and Fibonacci counts") {
  CHECK(yf::enumerate_rank(0) == std::vector<Word>{Word()});
  CHECK(yf::enumerate_rank(4) == std::vector<Word>{W("22"), W("112"), W("121"), W("211"), W("1111")});
  CHECK(yf::enumerate_rank(5).size() == 8);
  for (std::size_t n = 0; n <= 20; ++n) {
    const auto words = yf::enumerate_rank(n);
    CHECK(words.size() == fib(n + 1));
    CHECK(std::is_sorted(words.begin(), words.end()));
    if (n <= 14) CHECK(words == brute_rank(n));
  }
  CHECK(yf::fibonacci(0) == 0);
  CHECK(yf::fibonacci(15) == 610);
}

TEST_CASE("children and parents") {
  CHECK(yf::children(Word()) == std::vector<Word>{W("1")});
  CHECK(as_set(yf::children(W("2"))) == std::set<Word>{W("12"), W("21")});
  CHECK(as_set(yf::children(W("21"))) == std::set<Word>{W("22"), W("121"), W("211")});
  CHECK(as_set(yf::children(W("1"))) == std::set<Word>{W("2"), W("11")});
  CHECK(yf::parents(Word()).empty());
  CHECK(as_set(yf::parents(W("21"))) == std::set<Word>{W("2"), W("11")});
  CHECK(as_set(yf::parents(W("22"))) == std::set<Word>{W("12"), W("21")});

  std::map<Word, std::set<Word>> inverse;
  for (std::size_t n = 0; n <= 10; ++n) {
    for (const auto& w : brute_rank(n)) {
      std::set<Word> ref;
      for (const auto& c : ref_children(w.str())) ref.insert(Word(c));
      CHECK(as_set(yf::children(w)) == ref);
      for (const auto& c : ref) {
        CHECK(yf::rank(c) == n + 1);
        inverse[c].insert(w);
      }
    }
  }
  for (std::size_t n = 0; n <= 10; ++n) {
    for (const auto& w : brute_rank(n)) CHECK(as_set(yf::parents(w)) == inverse[w]);
  }
}

TEST_CASE("one-differential up to rank 13") {
  for (std::size_t n = 0; n <= 13; ++n) {
    for (const auto& w : yf::enumerate_rank(n)) {
      REQUIRE(yf::children(w).size() == yf::parents(w).size() + 1);
    }
  }
}

TEST_CASE("leq examples") {
  CHECK(yf::leq(Word(), W("21")));
  CHECK_FALSE(yf::leq(W("11"), W("2")));
  CHECK(yf::leq(W("12"), W("212")));
  CHECK(yf::leq(W("2"), W("12")));
}

TEST_CASE("leq equals closure of covers on rank <= 9") {
  const std::size_t n = 9;
  const auto up = closure_up(n);
  for (const auto& [x, ups] : up) {
    for (const auto& [y, unused] : up) CHECK(yf::leq(x, y) == (ups.count(y) == 1));
  }
}

TEST_CASE("order axioms on rank <= 10") {
  std::vector<Word> all;
  for (std::size_t r = 0; r <= 10; ++r) {
    auto lv = yf::enumerate_rank(r);
    all.insert(all.end(), lv.begin(), lv.end());
  }
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (const auto& x : all) CHECK(yf::leq(x, x));
  for (int i = 0; i < 20000; ++i) {
    const auto& x = all[pick(rng)];
    const auto& y = all[pick(rng)];
    const auto& z = all[pick(rng)];
    if (yf::leq(x, y) && yf::leq(y, x)) CHECK(x == y);
    if (yf::leq(x, y) && yf::leq(y, z)) CHECK(yf::leq(x, z));
    if (yf::leq(x, y) && x != y) CHECK(yf::rank(x) < yf::rank(y));
  }
}

TEST_CASE("join examples") {
  CHECK(yf::join(W("111"), W("12")) == W("221"));
  CHECK(yf::join(W("11"), W("112")) == W("212"));
  CHECK(yf::join(W("2"), W("11")) == W("21"));
  CHECK(yf::join(W("212"), W("212")) == W("212"));
}

TEST_CASE("join is the least upper bound for rank(u) + rank(v) <= 8") {
  std::vector<Word> all;
  for (std::size_t r = 0; r <= 8; ++r) {
    auto lv = yf::enumerate_rank(r);
    all.insert(all.end(), lv.begin(), lv.end());
  }
  for (const auto& u : all) {
    for (const auto& v : all) {
      if (yf::rank(u) + yf::rank(v) > 8) continue;
      std::vector<Word> ub;
      for (const auto& y : all)
        if (yf::leq(u, y) && yf::leq(v, y)) ub.push_back(y);
      std::vector<Word> least;
      for (const auto& y : ub) {
        bool below_all = true;
        for (const auto& z : ub) below_all = below_all && yf::leq(y, z);
        if (below_all) least.push_back(y);
      }
      REQUIRE(least.size() == 1);
      CHECK(yf::join(u, v) == least.front());
      CHECK(yf::join(u, v) == yf::join(v, u));
    }
  }
}

TEST_CASE("meet_bounded") {
  CHECK(yf::meet_bounded(W("2121"), Word()).empty());
  CHECK(yf::meet_bounded(W("2"), W("11")) == W("1"));
  CHECK(yf::meet_bounded(W("12"), W("21")) == W("2"));
}

TEST_CASE("automorphism") {
  CHECK(yf::automorphism(W("11")) == W("2"));
  CHECK(yf::automorphism(W("2")) == W("11"));
  CHECK(yf::automorphism(W("121")) == W("121"));
  CHECK(yf::automorphism(W("12")) == W("111"));
  CHECK(yf::automorphism(W("1")) == W("1"));
  CHECK(yf::automorphism(Word()).empty());
  std::vector<Word> all;
  for (std::size_t r = 0; r <= 8; ++r) {
    auto lv = yf::enumerate_rank(r);
    all.insert(all.end(), lv.begin(), lv.end());
  }
  for (const auto& x : all) {
    const auto ax = yf::automorphism(x);
    CHECK(yf::automorphism(ax) == x);
    CHECK(yf::rank(ax) == yf::rank(x));
    std::set<Word> mapped;
    for (const auto& c : yf::children(x)) mapped.insert(yf::automorphism(c));
    CHECK(mapped == as_set(yf::children(ax)));
    for (const auto& y : all) CHECK(yf::leq(x, y) == yf::leq(ax, yf::automorphism(y)));
  }
}

TEST_CASE("primes") {
  CHECK(yf::nth_prime(0) == 2);
  CHECK(yf::nth_prime(2) == 5);
  CHECK(yf::prime_exponent(12, 0) == 2);
  CHECK(yf::prime_exponent(7, 1) == 0);
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < 200; ++i) {
    do ++c;
    while (!is_prime(c));
    CHECK(yf::nth_prime(i) == c);
  }
  CHECK(yf::nth_prime(167) == 997);
}

TEST_CASE("bijection b") {
  CHECK(yf::b_forward(Word()) == 0);
  CHECK(yf::b_forward(W("1111")) == 8);
  CHECK(yf::b_forward(W("2")) == 3);
  CHECK(yf::b_forward(W("12")) == 6);
  CHECK(yf::b_forward(W("22")) == 5);
  CHECK(yf::b_inverse(9) == W("21"));

  // injective on rank <= 12, image and b_inverse agree on [0, 1000]
  std::map<std::uint64_t, Word> seen;
  for (std::size_t r = 0; r <= 12; ++r) {
    for (const auto& w : yf::enumerate_rank(r)) {
      const auto b = yf::b_forward(w);
      CHECK(seen.emplace(b, w).second);
      CHECK(yf::b_inverse(b) == w);
    }
  }
  for (std::uint64_t k = 0; k <= 1000; ++k) {
    const auto w = yf::b_inverse(k);
    CHECK(yf::b_forward(w) == k);
    auto it = seen.find(k);
    if (it != seen.end()) CHECK(it->second == w);
  }
}

TEST_CASE("printed product index would not be injective") {
  // dropping e_0 from the product: 12 and 2 collide
  auto printed = [](const Word& w) {
    const auto e = yf::blocks(w);
    const std::size_t d = e.size() - 1;
    std::uint64_t v = 1;
    for (std::size_t k = 0; k <= e[d]; ++k) v *= yf::nth_prime(d);
    for (std::size_t i = 1; i < d; ++i)
      for (std::size_t k = 0; k < e[i]; ++k) v *= yf::nth_prime(i);
    return v;
  };
  CHECK(printed(W("2")) == printed(W("12")));
  CHECK(yf::b_forward(W("2")) != yf::b_forward(W("12")));
}
