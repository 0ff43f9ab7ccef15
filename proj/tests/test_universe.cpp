#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <sstream>

#include "yf/errors.hpp"
#include "yf/lattice.hpp"
#include "yf/universe.hpp"

using yf::Id;
using yf::Universe;
using yf::Word;

namespace {

std::set<Word> members(const Universe& U, const yf::Bitset& b) {
  std::set<Word> out;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b.test(i)) out.insert(U.word(static_cast<Id>(i)));
  return out;
}

}  // namespace

TEST_CASE("sizes") {
  CHECK(Universe::build(0).size() == 1);
  CHECK(Universe::build(8).size() == 88);
  CHECK(Universe::build(12).size() == 609);
  for (std::size_t n = 0; n <= 16; ++n) CHECK(yf::universe_size(n) == yf::fibonacci(n + 3) - 1);
  const auto U = Universe::build(12);
  for (std::size_t n = 0; n <= 12; ++n) {
    CHECK(static_cast<std::size_t>(U.rank_end(n) - U.rank_begin(n)) == yf::fibonacci(n + 1));
    for (auto id = U.rank_begin(n); id < U.rank_end(n); ++id) CHECK(U.rank_of(id) == n);
  }
}

TEST_CASE("ceiling") {
  CHECK_THROWS_AS(Universe::build(19), yf::CapacityError);
  CHECK_THROWS_AS(Universe::build(6, 5), yf::CapacityError);
  try {
    (void)Universe::build(19);
  } catch (const yf::CapacityError& e) {
    CHECK(std::string(e.what()).find("17710") != std::string::npos);
  }
}

TEST_CASE("ids") {
  const auto U = Universe::build(6);
  for (std::size_t i = 0; i < U.size(); ++i) CHECK(U.id(U.word(static_cast<Id>(i))) == static_cast<Id>(i));
  CHECK_FALSE(U.find(Word("2222")).has_value());
  CHECK_THROWS(U.id(Word("2222")));
}

TEST_CASE("up and down sets") {
  const auto U = Universe::build(6);
  CHECK(members(U, U.down_set(U.id(Word()))) == std::set<Word>{Word()});
  CHECK(U.up_set(U.id(Word())).count() == U.size());
  CHECK(members(U, U.down_set(U.id(Word("21")))) ==
        std::set<Word>{Word(), Word("1"), Word("2"), Word("11"), Word("21")});
}

TEST_CASE("order matrix is the closure of the covers (N = 12)") {
  const auto U = Universe::build(12);
  const auto closure = yf::kernels::down_sets_by_closure([&] {
    std::vector<std::vector<Id>> dc(U.size());
    for (std::size_t i = 0; i < U.size(); ++i) {
      auto s = U.down_covers(static_cast<Id>(i));
      dc[i].assign(s.begin(), s.end());
    }
    return dc;
  }());
  for (std::size_t i = 0; i < U.size(); ++i) CHECK(closure[i] == U.down_set(static_cast<Id>(i)));
}

TEST_CASE("order matrix axioms and transpose") {
  const auto U = Universe::build(9);
  const std::size_t n = U.size();
  for (std::size_t x = 0; x < n; ++x) {
    CHECK(U.leq(static_cast<Id>(x), static_cast<Id>(x)));
    for (std::size_t y = 0; y < n; ++y) {
      const bool xy = U.leq(static_cast<Id>(x), static_cast<Id>(y));
      CHECK(xy == U.up_set(static_cast<Id>(x)).test(y));
      CHECK(xy == yf::leq(U.word(static_cast<Id>(x)), U.word(static_cast<Id>(y))));
      if (x != y && xy) CHECK_FALSE(U.leq(static_cast<Id>(y), static_cast<Id>(x)));
    }
  }
}

TEST_CASE("covers are one-differential below the top rank") {
  const auto U = Universe::build(11);
  for (std::size_t i = 0; i < U.size(); ++i) {
    const auto id = static_cast<Id>(i);
    if (U.rank_of(id) < 11) CHECK(U.up_covers(id).size() == U.down_covers(id).size() + 1);
  }
}

TEST_CASE("kernels agree") {
  const auto U = Universe::build(10);
  CHECK(yf::kernels::down_sets_by_leq(U.words()) == yf::kernels::down_sets_by_leq_serial(U.words()));
}

TEST_CASE("down sets are truncation-stable") {
  const auto small = Universe::build(7);
  const auto big = Universe::build(10);
  for (std::size_t i = 0; i < small.size(); ++i) {
    const auto& w = small.word(static_cast<Id>(i));
    CHECK(members(small, small.down_set(static_cast<Id>(i))) == members(big, big.down_set(big.id(w))));
  }
}

TEST_CASE("automorphisms") {
  CHECK(yf::automorphisms(Universe::build(1)).size() == 1);
  for (std::size_t n = 2; n <= 9; ++n) {
    const auto U = Universe::build(n);
    const auto maps = yf::automorphisms(U);
    REQUIRE(maps.size() == 2);
    for (std::size_t i = 0; i < U.size(); ++i) {
      CHECK(maps[0][i] == static_cast<Id>(i));
      CHECK(U.word(maps[1][i]) == yf::automorphism(U.word(static_cast<Id>(i))));
    }
  }
  const auto U2 = Universe::build(2);
  const auto m = yf::automorphisms(U2)[1];
  CHECK(U2.word(m[U2.id(Word("2"))]) == Word("11"));
}

TEST_CASE("edge list") {
  const auto U = Universe::build(2);
  std::istringstream in(U.edge_list());
  std::set<std::pair<std::string, std::string>> edges;
  std::string child, parent;
  while (in >> child >> parent) edges.insert({child, parent});
  CHECK(edges.size() == 3);
  CHECK(edges.count({"2", "1"}) == 1);
  CHECK(edges.count({"11", "1"}) == 1);
}
