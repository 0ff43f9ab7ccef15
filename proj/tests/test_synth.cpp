#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "yf/dsl.hpp"
#include "yf/eval.hpp"
#include "yf/lattice.hpp"
#include "yf/synth.hpp"
#include "yf/universe.hpp"

using namespace yf;
using namespace yf::synth;

TEST_CASE("base cases") {
  CHECK(synth_id(Word()).root == "id_eps");
  CHECK(synth_id(Word("1")).root == "id_1");
  CHECK(synth_id(Word("11")).root == "id_11");
  const auto two = synth_id(Word("2"));
  CHECK(two.root == "id_2");
  CHECK(fol::same(*two.defs.find("id_2")->body, *fol::parse_formula("(eq u w\"2\")")));
  CHECK(two.text().empty());
}

TEST_CASE("id_21 is built from the parents 2 and 11") {
  const auto s = synth_id(Word("21"));
  CHECK(s.root == "id_w21");
  const auto* d = s.defs.find("id_w21");
  REQUIRE(d);
  CHECK(fol::same(*d->body, *fol::parse_formula("(forall w (iff (call r v w) (or (call id_2 w) (call id_11 w))))")));
}

TEST_CASE("sub-definitions are shared") {
  // down-closure of 2121 above rank 2: every word gets exactly one definition
  const auto s = synth_id(Word("2121"));
  std::size_t generated = s.defs.size() - base_definitions().size();
  std::set<Word> seen;
  std::vector<Word> todo{Word("2121")};
  while (!todo.empty()) {
    Word w = todo.back();
    todo.pop_back();
    if (rank(w) <= 2 || !seen.insert(w).second) continue;
    for (const auto& p : parents(w)) todo.push_back(p);
  }
  CHECK(generated == seen.size());
  CHECK_NOTHROW(s.defs.validate());
  CHECK(fol::parse_defs(s.text(), base_definitions()).size() == s.defs.size());
}

TEST_CASE("verify_id examples") {
  CHECK(verify_id(Word("11"), 3));
  CHECK(verify_id(Word("121"), 5));
  CHECK_THROWS_AS(verify_id(Word("121"), 4), std::invalid_argument);
  const auto U = Universe::build(3);
  const auto s = synth_id(Word("11"));
  CHECK_FALSE(fol::evaluate(U, s.defs, s.root, std::vector<Word>{Word("2")}).value);
}

TEST_CASE("every word of rank <= 5 is defined in U_7") {
  const auto U = Universe::build(7);
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& u : enumerate_rank(n)) CHECK_MESSAGE(verify_id(U, u), u.display());
}

TEST_CASE("distinct words of equal rank are separated") {
  const auto U = Universe::build(8);
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto level = enumerate_rank(n);
    for (const auto& u : level) {
      const auto s = synth_id(u);
      fol::Evaluator ev(U, s.defs);
      const std::size_t def = s.defs.index_of(s.root);
      for (const auto& v : level) {
        const Id ids[] = {U.id(v)};
        CHECK(ev.holds(def, ids) == (u == v));
      }
    }
  }
}

TEST_CASE("automorphism compatibility") {
  const auto U = Universe::build(8);
  const auto maps = automorphisms(Universe::build(6));
  REQUIRE(maps.size() == 2);
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& u : enumerate_rank(n)) {
      const auto s = synth_id(u);
      const Word au = automorphism(u);
      const bool holds = fol::evaluate(U, s.defs, s.root, std::vector<Word>{au}).value;
      CHECK(holds == (au == u));
    }
  }
}
