#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <set>
#include <sstream>

#include "yf/bijection.hpp"
#include "yf/corpus.hpp"
#include "yf/dsl.hpp"
#include "yf/lattice.hpp"

using namespace yf;
using namespace yf::corpus;

namespace {

Word ones(std::size_t n) { return Word::ones(n); }

bool holds(const Universe& U, std::string_view name, std::vector<Word> args) {
  return fol::evaluate(U, corpus_definitions(), name, args).value;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Word> words_upto(std::size_t r) {
  std::vector<Word> out;
  for (std::size_t n = 0; n <= r; ++n) {
    auto lv = enumerate_rank(n);
    out.insert(out.end(), lv.begin(), lv.end());
  }
  return out;
}

}  // namespace

TEST_CASE("registry shape") {
  const auto& reg = registry();
  REQUIRE(reg.size() == 47);
  std::set<std::string> names;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    const auto& e = reg[i];
    CHECK(e.number == static_cast<int>(i) + 1);
    CHECK(names.insert(e.name).second);
    CHECK(e.arity == e.domains.size());
    CHECK(e.universe_rank >= e.tuple_rank());
    CHECK(!e.margin.empty());
    REQUIRE(corpus_definitions().find(e.definition));
    CHECK(corpus_definitions().find(e.definition)->params.size() == e.arity);
    CHECK(static_cast<bool>(e.oracle));
  }
  CHECK(find_entry("phi_o").arity == 3);
  CHECK(find_entry("phi_e1").status == Status::kFlagged);
  CHECK(find_entry("phi_dplus1").status == Status::kFlagged);
  CHECK(find_entry("phi_plus").status == Status::kExpectPass);
  CHECK_THROWS_AS(find_entry("nope"), std::out_of_range);
  CHECK(reg[0].name == "id_eps");
  CHECK(reg[36].name == "psi_primexp");
  CHECK(reg[46].name == "phi_b");
}

TEST_CASE("oracle_eval checks arity") {
  const auto& e = find_entry("phi_o");
  CHECK(oracle_eval(e, std::vector<Word>{Word("111"), Word("12"), Word("221")}));
  CHECK_THROWS_AS(oracle_eval(e, std::vector<Word>{Word("1")}), std::invalid_argument);
}

TEST_CASE("S_n oracle") {
  for (const char* w : {"21", "22", "212", "2112"}) CHECK(oracles::in_S(2, Word(w)));
  CHECK_FALSE(oracles::in_S(2, Word("11")));
  CHECK_FALSE(oracles::in_S(2, Word("12")));
  CHECK_FALSE(oracles::in_S(2, Word("222")));
  // S_n is the set of joins o(1^n, 1^m 2)
  for (std::size_t n = 2; n <= 5; ++n) {
    std::set<Word> joins;
    for (std::size_t m = 0; m <= 8; ++m) joins.insert(join(ones(n), ones(m) + Word("2")));
    for (const auto& v : words_upto(10)) {
      if (joins.count(v)) CHECK(oracles::in_S(n, v));
      if (oracles::in_S(n, v) && rank(v) <= 2 * n + 2) CHECK(joins.count(v) == 1);
    }
  }
}

TEST_CASE("T oracles") {
  std::set<Word> t42;
  for (const auto& w : words_upto(10))
    if (oracles::in_T(4, 2, w)) t42.insert(w);
  CHECK(t42 == std::set<Word>{Word("2121"), Word("1221")});
  CHECK(oracles::in_T_prime(4, 2, Word("1121")));
  CHECK(oracles::in_T_prime(4, 2, Word("2121")));
  CHECK(oracles::in_T_prime(4, 2, Word("1221")));
  CHECK_FALSE(oracles::in_T_prime(4, 2, Word("121")));
  CHECK_FALSE(oracles::in_T(2, 2, Word("12")));
}

TEST_CASE("R oracle") {
  CHECK_FALSE(oracles::in_R(2, 1, Word("111")));
  CHECK(oracles::in_R(3, 2, Word()));
  CHECK(oracles::in_R(2, 2, Word("11212")));
  CHECK(oracles::R_max(2, 2) == Word("11212"));
  CHECK(oracles::R_max(3, 1) == Word("111211"));
  CHECK(oracles::R_max(1, 0) == Word("1"));
  // the maximum is in R and is the longest member
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 0; m <= n; ++m) {
      const Word top = oracles::R_max(n, m);
      CHECK(oracles::in_R(n, m, top));
      for (const auto& w : words_upto(9))
        if (oracles::in_R(n, m, w)) CHECK(w.size() <= top.size());
    }
  }
  const auto down = oracles::down_closure(Word("21"));
  CHECK(std::set<Word>(down.begin(), down.end()) ==
        std::set<Word>{Word(), Word("1"), Word("2"), Word("11"), Word("21")});
}

TEST_CASE("strip_ones_prefix") {
  CHECK(oracles::strip_ones_prefix(Word("11212")) == Word("212"));
  CHECK(oracles::strip_ones_prefix(Word("111")).empty());
  CHECK(oracles::strip_ones_prefix(Word("21")) == Word("21"));
}

TEST_CASE("corpus file matches the golden pretty print") {
  const std::string golden = read_file(YF_SOURCE_DIR "/tests/golden/corpus.pretty");
  REQUIRE(!golden.empty());
  CHECK(fol::pretty(corpus_definitions()) == golden);
  CHECK(corpus_text().find("(def phi_b (u v)") != std::string_view::npos);
  CHECK(corpus_digest().size() == 16);
  CHECK(corpus_digest() == corpus_digest());
}

TEST_CASE("printed phi_len misses the empty pair") {
  const auto U = Universe::build(8);
  CHECK_FALSE(holds(U, "phi_len_printed", {Word(), Word()}));
  CHECK(holds(U, "phi_len", {Word(), Word()}));
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& v : words_upto(6)) {
      CHECK(holds(U, "phi_len_printed", {ones(n), v}) == holds(U, "phi_len", {ones(n), v}));
    }
  }
}

TEST_CASE("printed phi_r defines only eps and 2") {
  const auto U = Universe::build(8);
  std::set<Word> printed, fixed;
  for (const auto& w : U.words()) {
    if (holds(U, "phi_r_printed", {w})) printed.insert(w);
    if (holds(U, "phi_r", {w})) fixed.insert(w);
  }
  CHECK(printed == std::set<Word>{Word(), Word("2")});
  CHECK(fixed.size() == 1 + words_upto(6).size());  // eps and 2v for every v of rank <= 6
}

TEST_CASE("printed phi_b2 rejects zero interior exponents") {
  const auto U = Universe::build(12);
  const Word u("22");  // blocks (0, 0, 0)
  const Word v = ones(static_cast<std::size_t>(b_forward(u)));
  CHECK(b_forward(u) == 5);
  CHECK(holds(U, "phi_b2", {u, v}));
  CHECK_FALSE(holds(U, "phi_b2_printed", {u, v}));
  // with every interior exponent positive the two agree
  const Word w("12");
  const Word vw = ones(static_cast<std::size_t>(b_forward(w)));
  CHECK(holds(U, "phi_b2", {w, vw}));
  CHECK(holds(U, "phi_b2_printed", {w, vw}));
}

TEST_CASE("verify_entry: phi_o at r = 5, N = 10") {
  VerifyOptions o;
  o.universe_rank = 10;
  o.tuple_rank = 5;
  const auto r = verify_entry(find_entry("phi_o"), o);
  CHECK(r.checked == 20 * 20 * 20);
  CHECK(r.mismatches.empty());
  CHECK(r.outcome() == "pass");
}

TEST_CASE("verify_entry: phi_plus on 1-words with n <= 6 in U_14") {
  VerifyOptions o;
  o.universe_rank = 14;
  o.tuple_rank = 6;
  const auto r = verify_entry(find_entry("phi_plus"), o);
  CHECK(r.checked == 7 * 7 * 7);
  CHECK(r.mismatches.empty());
}

TEST_CASE("verify_entry: phi_e1 dual oracles") {
  VerifyOptions o;
  o.universe_rank = 10;
  o.tuple_rank = 5;
  const auto r = verify_entry(find_entry("phi_e1"), o);
  CHECK(r.outcome() == "flagged");
  CHECK(!r.mismatches.empty());
  CHECK(r.semantic_mismatches.empty());
  for (const auto& m : r.mismatches) {
    CHECK(m.formula);  // the formula is weaker than the claim, never stronger
    CHECK_FALSE(m.oracle);
  }
  std::set<std::vector<Word>> listed;
  for (const auto& m : r.mismatches) listed.insert(m.tuple);
  CHECK(listed.count({Word("21"), Word("2")}) == 1);
  CHECK(listed.count({Word("211"), Word("21")}) == 1);
  // (212, 12) differs in the number of twos, so the formula rejects it
  CHECK(listed.count({Word("212"), Word("12")}) == 0);
  CHECK_FALSE(holds(Universe::build(10), "phi_e1", {Word("212"), Word("12")}));
  CHECK(std::is_sorted(r.mismatches.begin(), r.mismatches.end(),
                       [](const Mismatch& a, const Mismatch& b) { return a.tuple < b.tuple; }));
}

TEST_CASE("verify_entry: tuple rank above universe rank is rejected") {
  VerifyOptions o;
  o.universe_rank = 4;
  o.tuple_rank = 5;
  CHECK_THROWS_AS(verify_entry(find_entry("phi_ones"), o), std::invalid_argument);
}

TEST_CASE("budget exhaustion is reported per tuple") {
  VerifyOptions o;
  o.budget.max_steps = 20;
  const auto r = verify_entry(find_entry("phi_d"), o);
  CHECK(r.exhausted > 0);
  CHECK(r.outcome() == "budget-exhausted");
  CHECK_FALSE(r.ok());
  CHECK(r.checked + r.exhausted == 6 * 143);
}

TEST_CASE("select") {
  std::vector<int> nums;
  for (const auto* e : select("phi_times")) nums.push_back(e->number);
  CHECK(nums == std::vector<int>{33, 34, 35, 36});
  CHECK(select("").size() == 47);
  CHECK(select("zzz").empty());
}

TEST_CASE("reports are identical across worker counts") {
  VerifyOptions a, b;
  a.workers = 1;
  b.workers = 8;
  const auto ra = verify_all("phi_S", a);
  const auto rb = verify_all("phi_S", b);
  CHECK(to_json(ra).dump() == to_json(rb).dump());
  CHECK(ra.entries.size() == 4);
}

TEST_CASE("report JSON schema") {
  VerifyOptions o;
  o.margin = true;
  const auto rep = verify_all("phi_e1", o);
  const auto j = to_json(rep, true);
  CHECK(j["schema"] == 1);
  CHECK(j["digest"] == corpus_digest());
  REQUIRE(j["entries"].size() == 1);
  const auto& e = j["entries"][0];
  for (const char* key : {"entry", "universe_rank", "tuple_rank", "checked", "mismatches", "duration_ms", "eval",
                          "status", "semantic_mismatches", "margin"}) {
    CHECK_MESSAGE(e.contains(key), key);
  }
  CHECK(e["eval"].contains("calls"));
  CHECK(e["eval"].contains("memo_hits"));
  CHECK(e["mismatches"][0]["tuple"].is_array());
  CHECK(e["mismatches"][0]["formula"].is_boolean());
  CHECK(j["universe_sizes"]["10"] == 232);
  CHECK(j["summary"]["flagged"] == 1);
  CHECK_FALSE(to_json(rep, false)["entries"][0].contains("duration_ms"));
}

TEST_CASE("addition laws through the formula") {
  const auto U = Universe::build(12);
  fol::Evaluator ev(U, corpus_definitions());
  const std::size_t plus = corpus_definitions().index_of("phi_plus");
  // sum(m, l) = n, read off the row of the first argument
  auto sum = [&](std::size_t m, std::size_t l) -> std::optional<std::size_t> {
    std::optional<std::size_t> out;
    for (std::size_t n = 0; n <= 5; ++n) {
      const Id ids[] = {U.id(ones(n)), U.id(ones(m)), U.id(ones(l))};
      if (ev.holds(plus, ids)) {
        CHECK_FALSE(out.has_value());
        out = n;
      }
    }
    return out;
  };
  for (std::size_t m = 0; m <= 5; ++m) {
    CHECK(sum(m, 0) == m);
    CHECK(sum(0, m) == m);
    for (std::size_t l = 0; m + l <= 5; ++l) {
      CHECK(sum(m, l) == m + l);
      CHECK(sum(m, l) == sum(l, m));
      for (std::size_t k = 0; m + l + k <= 5; ++k) CHECK(sum(*sum(m, l), k) == sum(m, *sum(l, k)));
    }
  }
}

TEST_CASE("multiplication distributes over addition for operands <= 2") {
  const auto U = Universe::build(12);
  fol::Evaluator ev(U, corpus_definitions());
  const std::size_t times = corpus_definitions().index_of("phi_times");
  const std::size_t plus = corpus_definitions().index_of("phi_plus");
  auto prod = [&](std::size_t a, std::size_t b) {
    std::optional<std::size_t> out;
    for (std::size_t l = 0; l <= 12; ++l) {
      const Id ids[] = {U.id(ones(a)), U.id(ones(b)), U.id(ones(l))};
      if (ev.holds(times, ids)) out = l;
    }
    return out;
  };
  for (std::size_t a = 0; a <= 2; ++a) {
    for (std::size_t b = 0; b <= 2; ++b) {
      CHECK(prod(a, b) == a * b);
      for (std::size_t c = 0; b + c <= 2; ++c) {
        const auto lhs = prod(a, b + c);
        REQUIRE(lhs.has_value());
        const Id ids[] = {U.id(ones(*lhs)), U.id(ones(*prod(a, b))), U.id(ones(*prod(a, c)))};
        CHECK(ev.holds(plus, ids));
      }
    }
  }
}

TEST_CASE("phi_b defines b on every word with b(u) <= 12") {
  const auto U = Universe::build(12);
  fol::Evaluator ev(U, corpus_definitions());
  const std::size_t def = corpus_definitions().index_of("phi_b");
  for (std::uint64_t k = 0; k <= 12; ++k) {
    const Word u = b_inverse(k);
    REQUIRE(rank(u) <= 8);
    const Id ids[] = {U.id(u), 0};
    const auto row = ev.extension(def, 1, ids);
    CHECK(row.count() == 1);
    CHECK(row.test(static_cast<std::size_t>(U.id(ones(k)))));
  }
}
