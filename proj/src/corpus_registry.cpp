#include <algorithm>
#include <set>
#include <stdexcept>

#include "yf/bijection.hpp"
#include "yf/corpus.hpp"
#include "yf/lattice.hpp"

namespace yf::corpus {

namespace oracles {

bool is_ones(const Word& w) { return twos(w) == 0; }

namespace {

Word repeat(char c, std::size_t n) { return c == '1' ? Word::ones(n) : Word::twos(n); }

}  // namespace

bool in_S(std::size_t n, const Word& v) {
  if (n < 2) return false;
  for (std::size_t i = 1; i <= n; ++i) {
    if (v == repeat('2', i) + repeat('1', n - i)) return true;
  }
  // 2^{n-1} 1^i 2, i >= 1
  const Word head = repeat('2', n - 1);
  if (v.size() < head.size() + 2 || v.substr(0, head.size()) != head || v[v.size() - 1] != '2') return false;
  const Word mid = v.substr(head.size(), v.size() - head.size() - 1);
  return !mid.empty() && is_ones(mid);
}

bool in_T(std::size_t n, std::size_t m, const Word& w) {
  if (!(n > m && m >= 1)) return false;
  for (std::size_t i = 1; i <= m; ++i) {
    if (w == repeat('2', m - i) + Word("1") + repeat('2', i) + repeat('1', n - m - 1)) return true;
  }
  return false;
}

bool in_T_prime(std::size_t n, std::size_t m, const Word& w) {
  if (!(n > m && m >= 1)) return false;
  for (std::size_t i = 1; i <= m; ++i) {
    const Word tail = Word("1") + repeat('2', i) + repeat('1', n - m - 1);
    if (w.size() != (m - i) + tail.size()) continue;
    if (w.substr(m - i) == tail) return true;
  }
  return false;
}

std::vector<Word> down_closure(const Word& w) {
  std::set<Word> seen{w};
  std::vector<Word> frontier{w};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const Word& x : frontier) {
      for (const Word& p : parents(x)) {
        if (seen.insert(p).second) next.push_back(p);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool in_R(std::size_t n, std::size_t m, const Word& w) {
  if (n < m || twos(w) > m) return false;
  for (const Word& x : down_closure(w)) {
    if (ones_prefix_len(x) > n) return false;
  }
  return true;
}

Word R_max(std::size_t n, std::size_t m) {
  Word out = repeat('1', n);
  for (std::size_t k = 1; k <= m; ++k) out = out + Word("2") + repeat('1', n - k);
  return out;
}

Word strip_ones_prefix(const Word& w) { return w.substr(ones_prefix_len(w)); }

}  // namespace oracles

namespace {

using oracles::is_ones;
using Args = std::span<const Word>;

std::size_t len(const Word& w) { return w.size(); }

bool is_ones_n_then(const Word& w, std::string_view tail) {
  if (w.size() < tail.size()) return false;
  const std::size_t k = w.size() - tail.size();
  return is_ones(w.substr(0, k)) && w.str().substr(k) == tail;
}

bool all_ones(Args a) {
  return std::all_of(a.begin(), a.end(), [](const Word& w) { return is_ones(w); });
}

std::size_t tri(std::size_t m) { return (m * m - m) / 2; }

// p_0 = 2, by trial division; kept apart from the bijection's prime table
std::uint64_t prime_at(std::size_t i) {
  std::uint64_t c = 1;
  for (std::size_t found = 0; found <= i;) {
    ++c;
    bool prime = true;
    for (std::uint64_t q = 2; q * q <= c; ++q) {
      if (c % q == 0) {
        prime = false;
        break;
      }
    }
    if (prime) ++found;
  }
  return c;
}

// d(w) = d(v) + n and w >= v
bool dplus(std::size_t n, const Word& v, const Word& w) { return leq(v, w) && twos(w) == twos(v) + n; }

std::optional<std::uint64_t> b_of(const Word& u) {
  try {
    return b_forward(u);
  } catch (const std::overflow_error&) {
    return std::nullopt;
  }
}

bool is_b_pair(const Word& u, const Word& v) {
  auto b = b_of(u);
  return b && is_ones(v) && v.size() == *b;
}

// v <= w with d(v) = d(w) - n and #v maximal among those
bool dplus_longest(std::size_t n, const Word& v, const Word& w) {
  if (!dplus(n, v, w)) return false;
  for (const Word& x : oracles::down_closure(w)) {
    if (twos(x) + n == twos(w) && x.size() > v.size()) return false;
  }
  return true;
}

Blocks tail_blocks(const Blocks& e, std::size_t n) { return Blocks(e.begin() + static_cast<long>(n), e.end()); }

Domain filtered(Domain d, std::function<bool(const Word&)> f, std::string note) {
  d.filter = std::move(f);
  d.note = std::move(note);
  return d;
}

std::vector<CorpusEntry> build_registry() {
  using D = Domain;
  std::vector<CorpusEntry> out;
  auto add = [&](int number, std::string name, std::string def, std::vector<Domain> domains, std::size_t N,
                 std::string claim, std::string margin, Oracle oracle, Status status = Status::kExpectPass,
                 Oracle semantic = {}) {
    CorpusEntry e;
    e.number = number;
    e.name = std::move(name);
    e.definition = std::move(def);
    e.arity = domains.size();
    e.domains = std::move(domains);
    e.universe_rank = N;
    e.claim = std::move(claim);
    e.margin = std::move(margin);
    e.oracle = std::move(oracle);
    e.status = status;
    e.semantic = std::move(semantic);
    out.push_back(std::move(e));
  };
  auto short6 = [](const Word& w) { return w.size() <= 6; };
  const std::string qf = "quantifier-free or quantifies only below the arguments";

  add(1, "id_eps", "id_eps", {D::all(8)}, 8, "{eps}", "eps is below everything at every N",
      [](Args a) { return a[0].empty(); });
  add(2, "r", "r", {D::all(6), D::all(7)}, 7, "cover pairs: u covers v",
      "the forall ranges over words between v and u, all of rank <= rank(u)",
      [](Args a) {
        auto c = children(a[1]);
        return std::find(c.begin(), c.end(), a[0]) != c.end();
      });
  add(3, "id_1", "id_1", {D::all(8)}, 8, "{1}", qf, [](Args a) { return a[0] == Word("1"); });
  add(4, "id_2_11", "id_2_11", {D::all(8)}, 8, "{2, 11}", qf,
      [](Args a) { return a[0] == Word("2") || a[0] == Word("11"); });
  add(5, "id_11", "id_11", {D::all(8)}, 8, "{11}", qf, [](Args a) { return a[0] == Word("11"); });
  add(6, "phi_ones", "phi_ones", {D::all(10)}, 10, "{1^n}", qf, [](Args a) { return is_ones(a[0]); });
  add(7, "phi_ones2", "phi_ones2", {D::all(10)}, 10, "{1^n 2}", qf,
      [](Args a) { return is_ones_n_then(a[0], "2"); });
  add(8, "phi_ones21", "phi_ones21", {D::all(10)}, 10, "{1^n 21}", qf,
      [](Args a) { return is_ones_n_then(a[0], "21"); });
  add(9, "phi_o", "phi_o", {D::all(5), D::all(5), D::all(10)}, 10, "w = o(u, v)",
      "the join has rank <= rank(u) + rank(v) <= 10, so it is inside U_N and pins the forall",
      [](Args a) { return a[2] == join(a[0], a[1]); });
  add(10, "phi_ones_ge2", "phi_ones_ge2", {D::all(10)}, 10, "{1^n : n >= 2}", qf,
      [](Args a) { return is_ones(a[0]) && a[0].size() >= 2; });
  add(11, "phi_S", "phi_S", {D::ones(6), D::all(8)}, 8, "(1^n, v), n >= 2, v in S_n",
      "the witness 1^m 2 has rank <= rank(v)",
      [](Args a) { return is_ones(a[0]) && oracles::in_S(len(a[0]), a[1]); });
  add(12, "phi_S1", "phi_S1", {D::ones(6), D::all(8)}, 11, "(1^n, 1^{m-2} 21), n >= m >= 2",
      "the S_n witness above 1^{n-2}21 is 2^{n-1}1, rank 2n-1 <= 11",
      [](Args a) {
        const Word& v = a[1];
        return is_ones(a[0]) && is_ones_n_then(v, "21") && a[0].size() >= v.size() && v.size() >= 2;
      });
  add(13, "phi_S2", "phi_S2", {D::ones(6), D::all(8)}, 11, "(1^n, 1^{n-2} 21), n >= 2",
      "needs every phi_S1 pair of u, so rank 2n-1 <= 11",
      [](Args a) {
        return is_ones(a[0]) && a[0].size() >= 2 && a[1] == Word::ones(a[0].size() - 2) + Word("21");
      });
  add(14, "phi_S3", "phi_S3", {D::ones(6), D::all(11)}, 11, "(1^n, 2^{n-1} 1), n >= 2",
      "the answer has rank 2n-1 <= 11",
      [](Args a) {
        return is_ones(a[0]) && a[0].size() >= 2 && a[1] == Word::twos(a[0].size() - 1) + Word("1");
      });
  add(15, "phi_pow2_a", "phi_pow2_a", {D::ones(6), D::all(12)}, 12, "(1^n, 2^n), n >= 2",
      "2^n has rank 2n <= 12",
      [](Args a) { return is_ones(a[0]) && a[0].size() >= 2 && a[1] == Word::twos(a[0].size()); });
  add(16, "phi_pow2", "phi_pow2", {D::ones(6), D::all(12)}, 12, "(1^n, 2^n), n >= 0",
      "2^n has rank 2n <= 12",
      [](Args a) { return is_ones(a[0]) && a[1] == Word::twos(a[0].size()); });
  add(17, "phi_pow2_succ", "phi_pow2_succ", {D::all(10), D::all(12)}, 12, "(2^n, 2^{n+1})",
      "needs phi_pow2(1^{n+1}, 2^{n+1}), rank 2n+2 <= 12",
      [](Args a) { return twos(a[0]) == a[0].size() && a[1] == a[0] + Word("2"); });
  add(18, "phi_d", "phi_d", {D::ones(5), D::all(9)}, 12, "(1^n, v), d(v) = n",
      "needs 2^{n+1}, rank 2n+2 <= 12",
      [](Args a) { return is_ones(a[0]) && twos(a[1]) == a[0].size(); });
  add(19, "phi_len", "phi_len", {D::ones(6), D::all(9)}, 12, "(1^n, v), #v = n",
      "needs 2^n, rank 2n <= 12",
      [](Args a) { return is_ones(a[0]) && a[1].size() == a[0].size(); });
  add(20, "phi_gt", "phi_gt", {D::ones(10), D::ones(10)}, 10, "(1^n, 1^m), n > m >= 1", qf,
      [](Args a) { return all_ones(a) && a[0].size() > a[1].size() && a[1].size() >= 1; });
  auto T = [](Args a) { return is_ones(a[0]) && is_ones(a[1]) && oracles::in_T(len(a[0]), len(a[1]), a[2]); };
  add(21, "phi_T", "phi_T", {D::ones(6), D::ones(6), D::all(10)}, 12, "(1^n, 1^m, w), w in T_{n,m}",
      "phi_len(1^n, .) needs rank 2n <= 12; phi_d(1^m, .) needs 2m+2", T);
  add(22, "phi_T1", "phi_T1", {D::ones(6), D::ones(6), D::all(10)}, 12, "(1^n, 1^m, w), w in T'_{n,m}",
      "as phi_T", [](Args a) {
        return is_ones(a[0]) && is_ones(a[1]) && oracles::in_T_prime(len(a[0]), len(a[1]), a[2]);
      });
  add(23, "phi_T2", "phi_T2", {D::ones(6), D::ones(6), D::all(10)}, 12, "(1^n, 1^m, 1^m 2 1^{n-m-1})",
      "as phi_T", [](Args a) {
        const std::size_t n = len(a[0]), m = len(a[1]);
        return all_ones(a.first(2)) && n > m && m >= 1 &&
               a[2] == Word::ones(m) + Word("2") + Word::ones(n - m - 1);
      });
  add(24, "phi_r", "phi_r", {D::all(10)}, 10, "words not starting with 1",
      "parents of u have rank rank(u) - 1",
      [](Args a) { return a[0].empty() || a[0][0] == '2'; });
  add(25, "phi_e1", "phi_e1", {D::all(5), D::all(5)}, 10, "v is u with some leading 1s removed",
      "phi_d(1^k, .) for k <= 2 needs rank 2k+2 <= 6",
      [](Args a) {
        const std::size_t k = a[0].size() - a[1].size();
        return a[0].size() >= a[1].size() && k <= ones_prefix_len(a[0]) && a[0].substr(k) == a[1];
      },
      Status::kFlagged, [](Args a) { return leq(a[1], a[0]) && twos(a[0]) == twos(a[1]); });
  add(26, "phi_e", "phi_e", {D::all(6), D::all(6)}, 10, "v is u with its maximal leading 1-run removed",
      "phi_d(1^k, .) for k <= 3 needs rank 2k+2 <= 8",
      [](Args a) { return a[1] == oracles::strip_ones_prefix(a[0]); });
  add(27, "phi_T3", "phi_T3", {D::ones(6), D::ones(6), D::all(10)}, 12, "(1^n, 1^m, 2 1^{n-m-1})",
      "as phi_T", [](Args a) {
        const std::size_t n = len(a[0]), m = len(a[1]);
        return all_ones(a.first(2)) && n > m && m >= 1 && a[2] == Word("2") + Word::ones(n - m - 1);
      });
  add(28, "phi_plus1", "phi_plus1", {D::ones(5), D::ones(5), D::ones(5)}, 12, "n = m + l, n > m >= 1",
      "phi_len(1^n, .) needs rank 2n <= 10; the T chain needs 2n+2 <= 12",
      [](Args a) {
        const std::size_t n = len(a[0]), m = len(a[1]), l = len(a[2]);
        return all_ones(a) && n == m + l && n > m && m >= 1;
      });
  add(29, "phi_plus", "phi_plus", {D::ones(5), D::ones(5), D::ones(5)}, 12, "n = m + l",
      "as phi_plus1", [](Args a) { return all_ones(a) && len(a[0]) == len(a[1]) + len(a[2]); });
  add(30, "phi_prefix_ex", "phi_prefix_ex", {D::ones(5), filtered(D::all(8), short6, "#v <= 6")}, 12,
      "(1^n, v): v = 1^n 2 v' or v = 1^n", "phi_len(., v) and phi_len(., e(v)) need rank 2#v <= 12",
      [](Args a) { return is_ones(a[0]) && ones_prefix_len(a[1]) == a[0].size(); });
  add(31, "phi_R1", "phi_R1", {D::ones(3), D::ones(3), D::all(7)}, 12, "(1^n, 1^m, w), w in R_{n,m}",
      "phi_prefix_ex on words of rank <= 7 needs phi_len(1^k, .) with k <= 5",
      [](Args a) { return all_ones(a.first(2)) && oracles::in_R(len(a[0]), len(a[1]), a[2]); });
  add(32, "phi_R2", "phi_R2", {D::ones(2), D::ones(2), filtered(D::all(8), short6, "#w <= 6")}, 12,
      "(1^n, 1^m, 1^n 2 1^{n-1} 2 ... 2 1^{n-m})",
      "phi_len on every R_{n,m} element; R_max(2,2) = 11212 has length 5 and #w <= 6 keeps 2#w <= 12",
      [](Args a) {
        const std::size_t n = len(a[0]), m = len(a[1]);
        return all_ones(a.first(2)) && n >= m && a[2] == oracles::R_max(n, m);
      });
  add(33, "phi_times1", "phi_times1", {D::ones(2), D::ones(2), D::ones(8)}, 12,
      "(1^n, 1^m, 1^{nm - (m^2-m)/2}), n >= m", "R_max(2,2) has length 5, phi_len(1^5, .) needs rank 10",
      [](Args a) {
        const std::size_t n = len(a[0]), m = len(a[1]);
        return all_ones(a) && n >= m && len(a[2]) == n * m - tri(m);
      });
  add(34, "phi_times2", "phi_times2", {D::ones(2), D::ones(8)}, 12, "(1^m, 1^{(m^2-m)/2})", "as phi_times1",
      [](Args a) { return all_ones(a) && len(a[1]) == tri(len(a[0])); });
  add(35, "phi_times3", "phi_times3", {D::ones(2), D::ones(2), D::ones(12)}, 12, "nm = l, n >= m",
      "as phi_times1", [](Args a) {
        return all_ones(a) && len(a[0]) >= len(a[1]) && len(a[2]) == len(a[0]) * len(a[1]);
      });
  add(36, "phi_times", "phi_times", {D::ones(2), D::ones(2), D::ones(12)}, 12, "nm = l", "as phi_times1",
      [](Args a) { return all_ones(a) && len(a[2]) == len(a[0]) * len(a[1]); });
  add(37, "psi_primexp", "phi_primexp", {D::ones(4), D::ones(4), D::ones(12)}, 12,
      "(1^n, 1^m, 1^l): p_n^m exactly divides l, m, l >= 1", "builtin",
      [](Args a) {
        if (!all_ones(a) || len(a[1]) < 1 || len(a[2]) < 1) return false;
        std::uint64_t l = len(a[2]);
        const std::uint64_t p = prime_at(len(a[0]));
        std::size_t e = 0;
        for (; l % p == 0; l /= p) ++e;
        return e == len(a[1]);
      });
  add(38, "phi_dplus", "phi_dplus", {D::ones(2), D::all(6), D::all(6)}, 12, "(1^n, v, w): w >= v, d(w) = d(v) + n",
      "phi_d(1^k, .) for k <= 3 needs rank 8", [](Args a) { return is_ones(a[0]) && dplus(len(a[0]), a[1], a[2]); });
  add(39, "phi_dplus1", "phi_dplus1", {D::ones(2), D::all(6), D::all(6)}, 12,
      "phi_dplus and e(v) = n + sum_{i=n}^{d(w)} e_i(w)", "as phi_dplus; phi_len(1^k, .) for k <= 6",
      [](Args a) {
        if (!is_ones(a[0])) return false;
        const std::size_t n = len(a[0]);
        if (!dplus(n, a[1], a[2])) return false;
        const Blocks e = blocks(a[2]);
        std::size_t sum = n;
        for (std::size_t i = n; i < e.size(); ++i) sum += e[i];
        return stats(a[1]).ones == sum;
      },
      Status::kFlagged, [](Args a) { return is_ones(a[0]) && dplus_longest(len(a[0]), a[1], a[2]); });
  add(40, "phi_E", "phi_E", {D::ones(6), D::all(6)}, 12, "(1^n, v): leading 1-run of v has length n",
      "phi_len(1^{#v}, .) needs rank 2#v <= 12",
      [](Args a) { return is_ones(a[0]) && ones_prefix_len(a[1]) == len(a[0]); });
  add(41, "phi_dplus2", "phi_dplus2", {D::ones(2), D::all(5), D::all(5)}, 12,
      "(1^n, 1^{n+e_n} 2 1^{e_{n+1}} ... 2 1^{e_d}, w), d(w) >= n", "as phi_dplus1; phi_E on #v <= 5",
      [](Args a) {
        if (!is_ones(a[0])) return false;
        const std::size_t n = len(a[0]);
        Blocks e = blocks(a[2]);
        if (e.size() < n + 1) return false;
        Blocks t = tail_blocks(e, n);
        t[0] += n;
        return a[1] == from_blocks(t);
      });
  auto exp_oracle = [](std::size_t n, const Word& v, const Word& w, int mode) {
    const Blocks e = blocks(w);
    const std::size_t d = e.size() - 1;
    if (mode == 0) return d >= n && v == Word::ones(e[n]);
    if (mode == 1) return d > n && v == Word::ones(e[n]);
    return d == n && v == Word::ones(e[d] + 1);
  };
  add(42, "phi_exp", "phi_exp", {D::ones(2), D::ones(4), D::all(6)}, 12, "(1^n, 1^{e_n}, w), d(w) >= n",
      "as phi_dplus2", [=](Args a) { return all_ones(a.first(2)) && exp_oracle(len(a[0]), a[1], a[2], 0); });
  add(43, "phi_exp1", "phi_exp1", {D::ones(2), D::ones(4), D::all(6)}, 12, "(1^n, 1^{e_n}, w), d(w) > n",
      "as phi_dplus2", [=](Args a) { return all_ones(a.first(2)) && exp_oracle(len(a[0]), a[1], a[2], 1); });
  add(44, "phi_exp2", "phi_exp2", {D::ones(2), D::ones(4), D::all(6)}, 12, "(1^n, 1^{e_d + 1}, w), d(w) = n",
      "as phi_dplus2", [=](Args a) { return all_ones(a.first(2)) && exp_oracle(len(a[0]), a[1], a[2], 2); });
  auto small_b = [](const Word& u) {
    auto b = b_of(u);
    return b && *b <= 12;
  };
  add(45, "phi_b1", "phi_b1", {D::ones(4), D::ones(12)}, 12, "(1^n, 1^{b(1^n)}), n >= 2",
      "b(1^n) = 2^{n-1} <= 8", [](Args a) { return is_ones(a[0]) && a[0].size() >= 2 && is_b_pair(a[0], a[1]); });
  add(46, "phi_b2", "phi_b2",
      {filtered(D::all(8), [=](const Word& u) { return small_b(u) && twos(u) >= 1; }, "b(u) <= 12, d(u) >= 1"),
       D::all(12)},
      12, "(u, 1^{b(u)}), d(u) >= 1", "1^{b(u)} fits when b(u) <= 12; the exp chain on d(u) <= 4",
      [](Args a) { return twos(a[0]) >= 1 && is_b_pair(a[0], a[1]); });
  add(47, "phi_b", "phi_b", {filtered(D::all(8), small_b, "b(u) <= 12"), D::all(12)}, 12, "(u, 1^{b(u)})",
      "as phi_b2", [](Args a) { return is_b_pair(a[0], a[1]); });
  return out;
}

}  // namespace

std::string_view to_string(Status s) { return s == Status::kFlagged ? "flagged" : "expect-pass"; }

std::vector<Word> Domain::words() const {
  std::vector<Word> out;
  if (kind == Kind::kOnes) {
    for (std::size_t k = 0; k <= rank; ++k) out.push_back(Word::ones(k));
  } else {
    for (std::size_t n = 0; n <= rank; ++n) {
      auto level = enumerate_rank(n);
      out.insert(out.end(), level.begin(), level.end());
    }
  }
  if (filter) std::erase_if(out, [&](const Word& w) { return !filter(w); });
  return out;
}

std::string Domain::describe() const {
  std::string s = (kind == Kind::kOnes ? "1^k, k <= " : "rank <= ") + std::to_string(rank);
  if (!note.empty()) s += ", " + note;
  return s;
}

std::size_t CorpusEntry::tuple_rank() const {
  std::size_t r = 0;
  for (const auto& d : domains) r = std::max(r, d.rank);
  return r;
}

const std::vector<CorpusEntry>& registry() {
  static const std::vector<CorpusEntry> entries = build_registry();
  return entries;
}

const CorpusEntry& find_entry(std::string_view name) {
  for (const auto& e : registry()) {
    if (e.name == name) return e;
  }
  throw std::out_of_range("no corpus entry named '" + std::string(name) + "'");
}

bool oracle_eval(const CorpusEntry& entry, std::span<const Word> tuple) {
  if (tuple.size() != entry.arity) {
    throw std::invalid_argument("entry '" + entry.name + "' takes " + std::to_string(entry.arity) + " arguments");
  }
  return entry.oracle(tuple);
}

}  // namespace yf::corpus
