#include <doctest.h>

#include "zs/copnum.hpp"
#include "zs/generators.hpp"

using namespace zs;

TEST_CASE("small decisions") {
  CHECK(copsWin(path(5), 1).cop_win);
  CHECK_FALSE(copsWin(cycle(5), 1).cop_win);
  CHECK(copsWin(cycle(5), 2).cop_win);
  CHECK(copsWin(cycle(3), 1).cop_win);
  CHECK(copsWin(cycle(5), 2).placement.has_value());
}

TEST_CASE("projective plane of order two needs three cops") {
  auto g = projectiveIncidence(2);
  CHECK_FALSE(copsWin(g, 2).cop_win);
  CHECK(copsWin(g, 3).cop_win);
  CHECK(copNumber(g) == 3);
}

TEST_CASE("cop number matches the registry where both exist") {
  std::vector<Graph> corpus;
  for (std::size_t n = 3; n <= 12; ++n) corpus.push_back(cycle(n));
  for (std::size_t d = 1; d <= 4; ++d) corpus.push_back(hypercube(d));
  for (std::size_t n = 2; n <= 4; ++n) corpus.push_back(grid(n));
  corpus.push_back(torus(4));
  corpus.push_back(leafyCycle(8));
  corpus.push_back(randomTree(15, 3));
  corpus.push_back(path(6));
  for (const auto& g : corpus) {
    auto known = knownCopNumber(g.family());
    REQUIRE(known.has_value());
    CHECK_MESSAGE(copNumber(g) == *known, g.name());
  }
}

TEST_CASE("winning is monotone in the number of cops") {
  for (const auto& g : {cycle(6), hypercube(3), grid(3), leafyCycle(7), projectiveIncidence(2)})
    for (std::size_t k = 1; k < 3; ++k)
      if (copsWin(g, k).cop_win) CHECK(copsWin(g, k + 1).cop_win);
}

TEST_CASE("registry values") {
  CHECK(knownCopNumber({"hypercube", {7}}) == 4);
  CHECK(knownCopNumber({"projective_incidence", {5}}) == 6);
  CHECK(knownCopNumber({"cycle", {3}}) == 1);
  CHECK_FALSE(knownCopNumber({"torus", {3}}).has_value());
  CHECK_FALSE(knownCopNumber({"custom", {}}).has_value());
}

TEST_CASE("budget") {
  CHECK_THROWS_AS(copsWin(cycle(40), 3, 1000), BudgetExceeded);
}
