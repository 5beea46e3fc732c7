#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coveralg/formulas.hpp"

using namespace coveralg;
using namespace coveralg::formulas;

TEST_CASE("connected-graph Betti triple") {
  // triangle: 3 edges on 3 vertices -> (3, 3, 1)
  auto t = betti_connected_graph(3, 3);
  CHECK(t == std::array<Int, 3>{3, 3, 1});
  // tree on n vertices: r = n-1 -> (n-1, n-2, 0)
  for (Int n = 3; n <= 8; ++n)
    CHECK(betti_connected_graph(n - 1, n) == std::array<Int, 3>{n - 1, n - 2, 0});
}

TEST_CASE("planar form agrees via Euler's relation") {
  // connected planar with n vertices and m bounded regions has
  // r = n + m - 1 edges, so the two parameterizations must agree
  for (Int n = 3; n <= 8; ++n)
    for (Int m = 0; m <= 4 && n + m - 1 <= n * (n - 1) / 2; ++m)
      CHECK(betti_planar(n, m) == betti_connected_graph(n + m - 1, n));
}

TEST_CASE("complete-graph power Betti numbers") {
  // s = 1: J(K_n) has the linear resolution C(n-1,i) * C(n, n-1) / ... ->
  // beta_i = C(n-1, i) * (i+1 choose shape); spot values:
  CHECK(betti_complete_power(3, 1, 0) == 3);
  CHECK(betti_complete_power(3, 1, 1) == 2);
  CHECK(betti_complete_power(4, 1, 0) == 4);
  CHECK(betti_complete_power(4, 1, 1) == 3);  // wrong if formula misreads
  CHECK(betti_complete_power(4, 2, 0) == 10);
  CHECK(betti_complete_power(4, 4, 3) == 4);
  CHECK(betti_complete_power(5, 1, 4) == 0);
  // beta_0 = number of generators = C(n+s-1, s)
  for (Int n = 2; n <= 6; ++n)
    for (Int s = 1; s <= 5; ++s)
      CHECK(betti_complete_power(n, s, 0) == binom(n + s - 1, s));
}

TEST_CASE("tree-complement equals complete-graph formula one rank down") {
  for (Int n = 3; n <= 7; ++n)
    for (Int s = 1; s <= 4; ++s)
      for (Int i = 0; i <= n; ++i)
        CHECK(betti_tree_complement_power(n, s, i) ==
              betti_complete_power(n - 1, s, i));
}

TEST_CASE("multipartite regularity") {
  // unit weights w = (1,...,1): J(K_n); small-s branch s*n - (s+1)
  CHECK(reg_multipartite({1, 1, 1}, 1) == 1);
  CHECK(reg_multipartite({1, 1, 1, 1}, 2) == 5);
  // K_{1,3}: w = (1,3)
  CHECK(reg_multipartite({1, 3}, 1) == 4 * 1 - 1 * (1 - 2 + 1) - 2);
  // both branches agree at the seam s = n-1
  for (Int n = 2; n <= 5; ++n) {
    std::vector<Int> w(n);
    for (Int k = 0; k < n; ++k) w[k] = k + 1;
    Int sum = n * (n + 1) / 2;
    Int s = n - 1;
    CHECK(reg_multipartite(w, s) == s * sum - (s + 1));
    CHECK(reg_multipartite(w, s) == s * sum - w[0] * (s - n + 1) - n);
  }
  // weights must be sorted ascending
  CHECK_THROWS(reg_multipartite({3, 1}, 1));
  CHECK_THROWS(reg_multipartite({1, 0}, 1));
}

TEST_CASE("pdim of complete-graph powers") {
  CHECK(pdim_complete_power(4, 1) == 2);
  CHECK(pdim_complete_power(4, 2) == 3);
  CHECK(pdim_complete_power(4, 3) == 4);
  CHECK(pdim_complete_power(4, 9) == 4);  // stabilizes at n
  for (Int n = 2; n <= 8; ++n) CHECK(pdim_complete_power(n, n - 1) == n);
}

TEST_CASE("a_t formula and Chu-Vandermonde") {
  CHECK(a_t_formula(4, 2, 0) == 1);
  CHECK(a_t_formula(4, 2, 1) == 6);
  CHECK(a_t_formula(4, 2, 2) == 3);
  CHECK(a_t_formula(4, 2, 3) == 0);  // C(2,3) = 0
  // sum_t C(n-1,t) C(s,t) = C(n+s-1, s)
  for (Int n = 2; n <= 8; ++n)
    for (Int s = 1; s <= 8; ++s) {
      Int total = 0;
      for (Int t = 0; t <= n - 1; ++t) total += a_t_formula(n, s, t);
      CHECK(total == binom(n + s - 1, s));
    }
}
