#ifndef COVERALG_FORMULAS_HPP
#define COVERALG_FORMULAS_HPP

#include <array>
#include <vector>

#include "coveralg/monomial.hpp"

namespace coveralg {
namespace formulas {

// Betti numbers (beta_{0,2}, beta_{1,3}, beta_{2,4}) of a degree-(n-2)
// squarefree ideal whose graph is connected with r edges on n vertices:
// (r, 2r-n, r-n+1).
std::array<Int, 3> betti_connected_graph(Int r, Int n);

// Same triple for a connected planar graph with m bounded regions:
// (n+m-1, n+2m-2, m).
std::array<Int, 3> betti_planar(Int n, Int m);

// beta_i(J(K_n)^s) = C(n-1, i) * C(n-1-i+s, n-1)
Int betti_complete_power(Int n, Int s, Int i);

// beta_i(J(T^c)^s) for a tree T on n vertices = C(n-2,i) * C(n-2-i+s, n-2)
Int betti_tree_complement_power(Int n, Int s, Int i);

// reg(S/J(G)^s) for the complete multipartite graph with sorted part
// sizes w_1 <= ... <= w_n.
Int reg_multipartite(const std::vector<Int>& w, Int s);

// pdim(S/J(K_n)^s): s+1 when s < n-1, n otherwise.
Int pdim_complete_power(Int n, Int s);

// |A_t(J(K_n)^s)| = C(n-1, t) * C(s, t)
Int a_t_formula(Int n, Int s, Int t);

}  // namespace formulas
}  // namespace coveralg

#endif
