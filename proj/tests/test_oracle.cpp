#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coveralg/graph.hpp"
#include "coveralg/oracle.hpp"

using namespace coveralg;

static const FieldSpec F{32003};

TEST_CASE("polarization of a squarefree ideal is itself") {
  MonomialIdeal J = cover_ideal(complete_graph(4));
  PolarizedIdeal P = polarize(J);
  CHECK(P.var_count == 4);
  CHECK(P.gen_supports.size() == 4);
  for (Int d : P.gen_degrees) CHECK(d == 3);
}

TEST_CASE("polarization spreads powers across slots") {
  auto r = std::make_shared<RingContext>(2);
  MonomialIdeal I = minimalize(r, {Monomial(r, {2, 0}), Monomial(r, {1, 2})});
  PolarizedIdeal P = polarize(I);
  CHECK(P.var_count == 4);  // x1 twice, x2 twice
  CHECK(P.slots.size() == 4);
  CHECK(P.gen_degrees == std::vector<Int>{2, 3});
}

TEST_CASE("reduced homology of basic complexes") {
  // vertices are bit indices of the nonface masks
  // two isolated points: H~_0 = 1
  CHECK(homology_rank({0, 1}, {0b11u}, 0, F) == 1);
  // hollow triangle: H~_1 = 1, H~_0 = 0
  CHECK(homology_rank({0, 1, 2}, {0b111u}, 1, F) == 1);
  CHECK(homology_rank({0, 1, 2}, {0b111u}, 0, F) == 0);
  // full simplex: all reduced homology vanishes
  CHECK(homology_rank({0, 1, 2}, {}, 0, F) == 0);
  CHECK(homology_rank({0, 1, 2}, {}, 1, F) == 0);
  CHECK(homology_rank({0, 1, 2}, {}, -1, F) == 0);
  // only the empty set is a face: H~_{-1} = 1
  CHECK(homology_rank({0}, {0b1u}, -1, F) == 1);
  // 4-cycle (nonfaces {0,2} and {1,3}): H~_1 = 1
  CHECK(homology_rank({0, 1, 2, 3}, {0b0101u, 0b1010u}, 1, F) == 1);
  CHECK(homology_rank({0, 1, 2, 3}, {0b0101u, 0b1010u}, 0, F) == 0);
}

TEST_CASE("hochster entries of a complete intersection") {
  // I = (x1x3, x2x4): Koszul complex gives beta_{1,2} = 2, beta_{2,4} = 1
  MonomialIdeal I = cover_ideal(cycle_graph(4));
  CHECK(hochster_entry(I, 1, 2, F) == 2);
  CHECK(hochster_entry(I, 2, 4, F) == 1);
  CHECK(hochster_entry(I, 1, 3, F) == 0);
  CHECK(hochster_entry(I, 2, 3, F) == 0);
  CHECK(hochster_entry(I, 3, 5, F) == 0);
}

TEST_CASE("oracle matches the known resolution of J(K_3)") {
  MonomialIdeal J = cover_ideal(complete_graph(3));
  CHECK(hochster_entry(J, 1, 2, F) == 3);
  CHECK(hochster_entry(J, 2, 3, F) == 2);
  CHECK(hochster_entry(J, 3, 4, F) == 0);
}

TEST_CASE("oracle handles non-squarefree input via polarization") {
  // (x^2, xy, y^2) = m^2 in 2 variables: beta(S/I) = 3, 2
  auto r = std::make_shared<RingContext>(2);
  MonomialIdeal I = minimalize(
      r, {Monomial(r, {2, 0}), Monomial(r, {1, 1}), Monomial(r, {0, 2})});
  CHECK(hochster_entry(I, 1, 2, F) == 3);
  CHECK(hochster_entry(I, 2, 3, F) == 2);
  CHECK(hochster_entry(I, 2, 4, F) == 0);
}

TEST_CASE("windowed table equals individual entries") {
  MonomialIdeal J = cover_ideal(complete_graph(4));
  std::vector<std::pair<Int, Int>> window;
  for (Int i = 1; i <= 4; ++i)
    for (Int j = 2; j <= 6; ++j) window.push_back({i, j});
  BettiTable t = betti_table_oracle(J, window, F);
  for (auto [i, j] : window) CHECK(t.at(i, j) == hochster_entry(J, i, j, F));
  // J(K_4) has the 3-linear resolution 4, 3
  CHECK(t.at(1, 3) == 4);
  CHECK(t.at(2, 4) == 3);
}

TEST_CASE("parallel sweep agrees with serial") {
  MonomialIdeal J2 = power(cover_ideal(complete_graph(3)), 2);
  for (Int i = 1; i <= 3; ++i)
    for (Int j = 2; j <= 8; ++j)
      CHECK(hochster_entry(J2, i, j, F, 3) == hochster_entry(J2, i, j, F, 1));
}

TEST_CASE("full sweep rejects oversized polarizations") {
  MonomialIdeal J = cover_ideal(complete_graph(4));
  CHECK_THROWS(betti_table_oracle_full(J, F, 1, /*var_cap=*/3));
}
