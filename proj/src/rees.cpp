#include "coveralg/rees.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "coveralg/linquot.hpp"

namespace coveralg {

Monomial multiset_product(const MonomialIdeal& I, const IndexMultiset& alpha) {
  if (alpha.empty()) throw std::invalid_argument("multiset_product: empty multiset");
  Monomial prod = Monomial::one(I.ring);
  for (int i : alpha) {
    if (i < 1 || i > static_cast<int>(I.gens.size()))
      throw std::invalid_argument("multiset_product: index out of range");
    prod = mul(prod, I.gens[i - 1]);
  }
  return prod;
}

ReesBinomial taylor_relation(const MonomialIdeal& I, const IndexMultiset& alpha,
                             const IndexMultiset& beta) {
  if (alpha.size() != beta.size())
    throw std::invalid_argument("taylor_relation: degree mismatch");
  if (alpha == beta) throw std::invalid_argument("taylor_relation: alpha == beta");
  Monomial ua = multiset_product(I, alpha);
  Monomial ub = multiset_product(I, beta);
  Monomial l = lcm(ua, ub);
  return ReesBinomial{{colon(l, ub), beta}, {colon(l, ua), alpha}};
}

std::vector<ReesBinomial> k1_generators(const MonomialIdeal& I) {
  std::vector<ReesBinomial> out;
  const int r = static_cast<int>(I.gens.size());
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) out.push_back(taylor_relation(I, {i}, {j}));
  return out;
}

static QuotientOrder some_linear_quotient_order(const MonomialIdeal& I) {
  auto rv = revlex_order(I);
  if (std::holds_alternative<SetData>(compute_set_data(rv))) return rv;
  // degree-(n-2) graph ideals: shelling order always works when connected
  try {
    SimpleGraph g = graph_from_ideal(I);
    auto edges = shelling_edge_order(g);
    std::vector<Monomial> seq;
    for (auto [a, b] : edges) {
      std::vector<int> e(g.n, 1);
      e[a - 1] = 0;
      e[b - 1] = 0;
      seq.push_back(Monomial(I.ring, std::move(e)));
    }
    auto ord = order_from_sequence(I, std::move(seq));
    if (std::holds_alternative<SetData>(compute_set_data(ord))) return ord;
  } catch (const std::invalid_argument&) {
  }
  auto found = find_linear_quotient_order(I);
  if (found.order) return *found.order;
  throw std::runtime_error("no linear-quotient order found");
}

std::vector<ReesBinomial> reduced_k1_generators(const MonomialIdeal& I) {
  QuotientOrder ord = some_linear_quotient_order(I);
  SetData sd = require_set_data(ord);
  // map order positions back to canonical generator indices
  std::vector<int> orig(ord.sequence.size());
  for (std::size_t j = 0; j < ord.sequence.size(); ++j) {
    auto it = std::find(I.gens.begin(), I.gens.end(), ord.sequence[j]);
    orig[j] = static_cast<int>(it - I.gens.begin()) + 1;
  }
  std::vector<ReesBinomial> out;
  for (std::size_t j = 0; j < ord.sequence.size(); ++j) {
    const Monomial& uj = ord.sequence[j];
    for (int k : sd.sets[j]) {
      Monomial xku = uj;
      ++xku.exps[k - 1];
      for (std::size_t l = 0; l < j; ++l) {
        if (ord.sequence[l].divides(xku)) {
          Monomial xk = Monomial::one(I.ring);
          ++xk.exps[k - 1];
          out.push_back(ReesBinomial{{xk, {orig[j]}}, {colon(xku, ord.sequence[l]), {orig[l]}}});
          break;
        }
      }
    }
  }
  return out;
}

namespace {

void enumerate_multisets(int r, int s, int start, IndexMultiset& cur,
                         const MonomialIdeal& I, Monomial& prod,
                         std::map<std::vector<int>, std::vector<IndexMultiset>>& groups) {
  if (static_cast<int>(cur.size()) == s) {
    groups[prod.exps].push_back(cur);
    return;
  }
  for (int i = start; i <= r; ++i) {
    cur.push_back(i);
    for (int v = 0; v < I.ring->n; ++v) prod.exps[v] += I.gens[i - 1].exps[v];
    enumerate_multisets(r, s, i, cur, I, prod, groups);
    for (int v = 0; v < I.ring->n; ++v) prod.exps[v] -= I.gens[i - 1].exps[v];
    cur.pop_back();
  }
}

}  // namespace

std::vector<ReesBinomial> binomial_coincidences(const MonomialIdeal& I, int s,
                                                long budget) {
  if (s < 2) throw std::invalid_argument("binomial_coincidences: s must be >= 2");
  const int r = static_cast<int>(I.gens.size());
  if (binom(r + s - 1, s) > budget)
    throw std::runtime_error("binomial_coincidences: combinatorial budget exceeded");
  std::map<std::vector<int>, std::vector<IndexMultiset>> groups;
  IndexMultiset cur;
  Monomial prod = Monomial::one(I.ring);
  enumerate_multisets(r, s, 1, cur, I, prod, groups);
  std::vector<ReesBinomial> out;
  Monomial one = Monomial::one(I.ring);
  for (const auto& [exps, members] : groups) {
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        out.push_back(ReesBinomial{{one, members[a]}, {one, members[b]}});
  }
  return out;
}

DefiningIdealGenerators defining_ideal_generators(const MonomialIdeal& J, int s_max) {
  graph_from_ideal(J);  // validates squarefree, degree n-2
  DefiningIdealGenerators d;
  d.k1_reduced = reduced_k1_generators(J);
  for (int s = 2; s <= s_max; ++s)
    d.coincidences.push_back(binomial_coincidences(J, s));
  return d;
}

LinearTypeReport linear_type(const MonomialIdeal& J, int s_max) {
  SimpleGraph g = graph_from_ideal(J);
  GraphStructure st = structure(g);
  LinearTypeReport rep;
  rep.s_max = s_max;
  if (st.is_forest)
    rep.graph_verdict = GraphVerdict::forest;
  else if (st.odd_unicyclic)
    rep.graph_verdict = GraphVerdict::odd_unicyclic;
  else
    rep.graph_verdict = GraphVerdict::other;
  for (int s = 2; s <= s_max && !rep.coincidence_found; ++s) {
    auto p = binomial_coincidences(J, s);
    if (!p.empty()) {
      rep.coincidence_found = true;
      rep.witness_degree = s;
      rep.witness = p.front();
    }
  }
  rep.consistent = !(rep.linear_type_by_graph() && rep.coincidence_found);
  if (!rep.consistent)
    throw std::logic_error("linear_type: coincidence found for a linear-type graph");
  return rep;
}

CiReport ci_report(const MonomialIdeal& J) {
  SimpleGraph g = graph_from_ideal(J);
  GraphStructure st = structure(g);
  bool tree = st.is_forest && st.is_connected;
  if (!tree && !st.odd_unicyclic)
    throw std::invalid_argument("ci_report: G_J must be a tree or odd-unicyclic");
  CiReport rep;
  auto k1 = reduced_k1_generators(J);
  rep.mu_k = static_cast<Int>(k1.size());
  rep.expected_height = static_cast<Int>(J.gens.size()) - 1;
  rep.all_bidegree_1_1 = true;
  for (const auto& b : k1) {
    if (b.left.coef.degree() != 1 || b.right.coef.degree() != 1 ||
        b.left.t_indices.size() != 1 || b.right.t_indices.size() != 1)
      rep.all_bidegree_1_1 = false;
  }
  if (rep.mu_k == rep.expected_height)
    rep.verdict = "CI";
  else if (rep.mu_k == rep.expected_height + 1)
    rep.verdict = "ACI";
  else
    rep.verdict = "inconsistent";
  return rep;
}

BigradedSeries rees_hilbert_ci(int n, Int d_max, Int s_max) {
  if (n < 3) throw std::invalid_argument("rees_hilbert_ci: n must be >= 3");
  BigradedSeries b;
  b.d_max = d_max;
  b.s_max = s_max;
  auto zero = std::vector<std::vector<Int>>(d_max + 1, std::vector<Int>(s_max + 1, 0));
  // start with 1/(1-z1)^n
  auto cur = zero;
  for (Int d = 0; d <= d_max; ++d) cur[d][0] = binom(d + n - 1, n - 1);
  // multiply by 1/(1 - z1^{n-2} z2)^{n-1}: coefficient C(k+n-2, n-2) at (k(n-2), k)
  auto acc = zero;
  for (Int k = 0; k <= s_max && k * (n - 2) <= d_max; ++k) {
    Int coef = binom(k + n - 2, n - 2);
    for (Int d = 0; d + k * (n - 2) <= d_max; ++d)
      for (Int s = 0; s + k <= s_max; ++s)
        acc[d + k * (n - 2)][s + k] += coef * cur[d][s];
  }
  cur = acc;
  // multiply by (1 - z1^{n-1} z2)^{n-2}
  acc = zero;
  for (Int a = 0; a <= n - 2 && a * (n - 1) <= d_max && a <= s_max; ++a) {
    Int coef = (a % 2 == 0 ? 1 : -1) * binom(n - 2, a);
    for (Int d = 0; d + a * (n - 1) <= d_max; ++d)
      for (Int s = 0; s + a <= s_max; ++s)
        acc[d + a * (n - 1)][s + a] += coef * cur[d][s];
  }
  b.c = std::move(acc);
  return b;
}

std::vector<Int> extract_power_series(const BigradedSeries& b, Int s) {
  if (s < 0 || s > b.s_max)
    throw std::invalid_argument("extract_power_series: s out of range");
  std::vector<Int> row(b.d_max + 1);
  for (Int d = 0; d <= b.d_max; ++d) row[d] = b.c[d][s];
  return row;
}

}  // namespace coveralg
