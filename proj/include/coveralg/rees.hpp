#ifndef COVERALG_REES_HPP
#define COVERALG_REES_HPP

#include <optional>
#include <string>
#include <vector>

#include "coveralg/graph.hpp"
#include "coveralg/monomial.hpp"

namespace coveralg {

// Non-decreasing sequence of generator indices (1-based) of length s.
using IndexMultiset = std::vector<int>;

struct ReesTerm {
  Monomial coef;
  IndexMultiset t_indices;
};

// left - right; both sides have the same T-degree.
struct ReesBinomial {
  ReesTerm left;
  ReesTerm right;
};

Monomial multiset_product(const MonomialIdeal& I, const IndexMultiset& alpha);

// T_{alpha,beta} = lcm(u_a,u_b)/u_b T_b - lcm(u_a,u_b)/u_a T_a
ReesBinomial taylor_relation(const MonomialIdeal& I, const IndexMultiset& alpha,
                             const IndexMultiset& beta);

// All C(r,2) degree-1 Taylor relations.
std::vector<ReesBinomial> k1_generators(const MonomialIdeal& I);

// beta_1(I) relations x_k T_j - (x_k u_j / u_l) T_l taken from a
// linear-quotient resolution; throws when no linear quotients exist.
std::vector<ReesBinomial> reduced_k1_generators(const MonomialIdeal& I);

// P_s: all pairs of distinct degree-s index multisets with equal products.
std::vector<ReesBinomial> binomial_coincidences(const MonomialIdeal& I, int s,
                                                long budget = 2000000);

struct DefiningIdealGenerators {
  std::vector<ReesBinomial> k1_reduced;
  std::vector<std::vector<ReesBinomial>> coincidences;  // index 0 <-> s=2
};

DefiningIdealGenerators defining_ideal_generators(const MonomialIdeal& J, int s_max);

enum class GraphVerdict { forest, odd_unicyclic, other };

struct LinearTypeReport {
  GraphVerdict graph_verdict = GraphVerdict::other;
  bool coincidence_found = false;
  int witness_degree = 0;  // s of the first coincidence, 0 if none
  std::optional<ReesBinomial> witness;
  int s_max = 0;
  bool consistent = false;
  bool linear_type_by_graph() const { return graph_verdict != GraphVerdict::other; }
};

// Hard error when the graph criterion and the search disagree.
LinearTypeReport linear_type(const MonomialIdeal& J, int s_max);

struct CiReport {
  Int mu_k = 0;              // reduced K_1 generator count
  Int expected_height = 0;   // dim R - dim R(J) = r - 1
  bool all_bidegree_1_1 = false;
  std::string verdict;       // "CI" or "ACI"
};

CiReport ci_report(const MonomialIdeal& J);

// Truncated bigraded Hilbert series coefficients c[d][s].
struct BigradedSeries {
  Int d_max = 0;
  Int s_max = 0;
  std::vector<std::vector<Int>> c;  // c[d][s]
};

// Series of R/K for a complete intersection of n-2 forms of bidegree
// (n-1, 1), with X-variables (1,0) and T-variables (n-2, 1):
//   (1 - z1^{n-1} z2)^{n-2} / ((1-z1)^n (1 - z1^{n-2} z2)^{n-1})
BigradedSeries rees_hilbert_ci(int n, Int d_max, Int s_max);

std::vector<Int> extract_power_series(const BigradedSeries& b, Int s);

}  // namespace coveralg

#endif
