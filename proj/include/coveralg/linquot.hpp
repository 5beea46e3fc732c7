#ifndef COVERALG_LINQUOT_HPP
#define COVERALG_LINQUOT_HPP

#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "coveralg/monomial.hpp"

namespace coveralg {

// Ordered generating sequence, degrees non-decreasing.
struct QuotientOrder {
  MonomialIdeal ideal;
  std::vector<Monomial> sequence;
};

// Per generator: set(u_j) as 1-based variable indices.
struct SetData {
  QuotientOrder order;
  std::vector<std::vector<int>> sets;
};

struct NotLinearQuotients {
  std::size_t position;  // 0-based index j where the colon fails
  Monomial witness;      // minimal colon generator of degree >= 2
};

struct BettiTable {
  // (i, j) -> multiplicity, for the ideal I (not S/I)
  std::map<std::pair<Int, Int>, Int> entries;
  bool weighted = false;

  bool empty() const { return entries.empty(); }
  Int at(Int i, Int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  bool operator==(const BettiTable& o) const { return entries == o.entries; }
};

// Generators sorted degree-ascending, ties broken revlex-descending
// (X_1 > ... > X_n).
QuotientOrder revlex_order(const MonomialIdeal& I);
QuotientOrder order_from_sequence(const MonomialIdeal& I, std::vector<Monomial> seq);

// Either the set data or the first failing colon witness.
std::variant<SetData, NotLinearQuotients> compute_set_data(const QuotientOrder& order);
SetData require_set_data(const QuotientOrder& order);

// Closed form for generators u = X^s / v of J(K_n)^s under revlex:
// set(u) = supp(v) restricted to [n-1].
std::vector<int> set_formula_complete_power(int n, int s, const Monomial& u);

// A_t = #generators with |set(u)| = t, t = 0..n-1.
std::vector<Int> a_t_census(const SetData& sd);

BettiTable betti_from_linear_quotients(const SetData& sd);
BettiTable weighted_betti(const SetData& sd, const std::vector<Int>& weights);

// max{j - i} resp. max{i} over the table support. Table is for I; the
// standard shift to S/I is reg - 1 resp. pdim + 1.
Int regularity(const BettiTable& t);
Int pdim(const BettiTable& t);

// Greedy search with backtracking for any valid linear-quotient order,
// bounded by node expansions.
struct LinearQuotientSearch {
  std::optional<QuotientOrder> order;
  bool budget_exhausted = false;  // distinguishes "none exists" from "gave up"
};

LinearQuotientSearch find_linear_quotient_order(const MonomialIdeal& I,
                                                long budget = 100000);

}  // namespace coveralg

#endif
