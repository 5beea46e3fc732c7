#include "coveralg/linquot.hpp"

#include <algorithm>
#include <stdexcept>

namespace coveralg {

static bool degree_then_revlex(const Monomial& u, const Monomial& v) {
  Int du = u.degree(), dv = v.degree();
  if (du != dv) return du < dv;
  return revlex_greater(u, v);
}

QuotientOrder revlex_order(const MonomialIdeal& I) {
  std::vector<Monomial> seq = I.gens;
  std::sort(seq.begin(), seq.end(), degree_then_revlex);
  return QuotientOrder{I, std::move(seq)};
}

QuotientOrder order_from_sequence(const MonomialIdeal& I, std::vector<Monomial> seq) {
  if (seq.size() != I.gens.size())
    throw std::invalid_argument("order_from_sequence: length mismatch");
  for (std::size_t j = 1; j < seq.size(); ++j)
    if (seq[j].degree() < seq[j - 1].degree())
      throw std::invalid_argument("order_from_sequence: degrees must be non-decreasing");
  for (const auto& u : seq)
    if (std::find(I.gens.begin(), I.gens.end(), u) == I.gens.end())
      throw std::invalid_argument("order_from_sequence: not a generator");
  return QuotientOrder{I, std::move(seq)};
}

// set(u_j) for a prefix: variables k with x_k * u_j in <prefix>.
static std::vector<int> set_against_prefix(const std::vector<Monomial>& seq,
                                           std::size_t j, const Monomial& u) {
  const int n = u.ring->n;
  std::vector<int> s;
  for (int k = 1; k <= n; ++k) {
    Monomial xku = u;
    ++xku.exps[k - 1];
    for (std::size_t l = 0; l < j; ++l) {
      if (seq[l].divides(xku)) {
        s.push_back(k);
        break;
      }
    }
  }
  return s;
}

// does every colon generator of <prefix> : u reduce to a variable in s?
static std::optional<Monomial> colon_failure(const std::vector<Monomial>& seq,
                                             std::size_t j, const Monomial& u,
                                             const std::vector<int>& s) {
  std::vector<Monomial> failing;
  for (std::size_t l = 0; l < j; ++l) {
    Monomial c = colon(seq[l], u);
    bool covered = false;
    for (int k : s)
      if (c.exps[k - 1] > 0) {
        covered = true;
        break;
      }
    if (!covered) failing.push_back(c);
  }
  if (failing.empty()) return std::nullopt;
  auto I = minimalize(u.ring, std::move(failing));
  return I.gens.front();
}

std::variant<SetData, NotLinearQuotients> compute_set_data(const QuotientOrder& order) {
  const auto& seq = order.sequence;
  SetData sd{order, {}};
  sd.sets.reserve(seq.size());
  for (std::size_t j = 0; j < seq.size(); ++j) {
    std::vector<int> s = set_against_prefix(seq, j, seq[j]);
    if (auto fail = colon_failure(seq, j, seq[j], s))
      return NotLinearQuotients{j, *fail};
    sd.sets.push_back(std::move(s));
  }
  return sd;
}

SetData require_set_data(const QuotientOrder& order) {
  auto r = compute_set_data(order);
  if (auto* fail = std::get_if<NotLinearQuotients>(&r))
    throw std::runtime_error("ideal does not have linear quotients in this order (position " +
                             std::to_string(fail->position) + ", witness " +
                             fail->witness.str() + ")");
  return std::get<SetData>(std::move(r));
}

std::vector<int> set_formula_complete_power(int n, int s, const Monomial& u) {
  if (u.ring->n != n) throw std::invalid_argument("set_formula: ring mismatch");
  Int expected = static_cast<Int>(n) * s - s;
  if (u.degree() != expected)
    throw std::invalid_argument("set_formula: generator not of the form X^s/v");
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (u.exps[i] > s)
      throw std::invalid_argument("set_formula: generator not of the form X^s/v");
    if (i < n - 1 && u.exps[i] < s) out.push_back(i + 1);  // v has x_{i+1}
  }
  return out;
}

std::vector<Int> a_t_census(const SetData& sd) {
  std::size_t tmax = 0;
  for (const auto& s : sd.sets) tmax = std::max(tmax, s.size());
  std::vector<Int> a(tmax + 1, 0);
  for (const auto& s : sd.sets) ++a[s.size()];
  return a;
}

BettiTable betti_from_linear_quotients(const SetData& sd) {
  BettiTable t;
  for (std::size_t j = 0; j < sd.sets.size(); ++j) {
    Int d = sd.order.sequence[j].degree();
    Int sz = static_cast<Int>(sd.sets[j].size());
    for (Int i = 0; i <= sz; ++i) t.entries[{i, d + i}] += binom(sz, i);
  }
  return t;
}

BettiTable weighted_betti(const SetData& sd, const std::vector<Int>& weights) {
  const int n = sd.order.ideal.ring->n;
  if (static_cast<int>(weights.size()) != n)
    throw std::invalid_argument("weighted_betti: weight count mismatch");
  BettiTable t;
  t.weighted = true;
  for (std::size_t j = 0; j < sd.sets.size(); ++j) {
    const auto& u = sd.order.sequence[j];
    Int dw = 0;
    for (int i = 0; i < n; ++i) dw += static_cast<Int>(u.exps[i]) * weights[i];
    const auto& s = sd.sets[j];
    const std::size_t m = s.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
      Int extra = 0;
      Int sz = 0;
      for (std::size_t b = 0; b < m; ++b)
        if (mask & (std::size_t{1} << b)) {
          extra += weights[s[b] - 1];
          ++sz;
        }
      t.entries[{sz, dw + extra}] += 1;
    }
  }
  return t;
}

Int regularity(const BettiTable& t) {
  if (t.empty()) throw std::invalid_argument("regularity: empty table");
  Int r = 0;
  bool first = true;
  for (const auto& [ij, mult] : t.entries) {
    if (mult == 0) continue;
    Int v = ij.second - ij.first;
    if (first || v > r) r = v;
    first = false;
  }
  return r;
}

Int pdim(const BettiTable& t) {
  if (t.empty()) throw std::invalid_argument("pdim: empty table");
  Int p = 0;
  for (const auto& [ij, mult] : t.entries)
    if (mult != 0) p = std::max(p, ij.first);
  return p;
}

namespace {

bool lq_search(const MonomialIdeal& I, std::vector<Monomial>& chosen,
               std::vector<char>& used, long& budget, bool& exhausted) {
  if (chosen.size() == I.gens.size()) return true;
  // degrees must be non-decreasing, so only minimal remaining degree qualifies
  Int dmin = -1;
  for (std::size_t g = 0; g < I.gens.size(); ++g)
    if (!used[g] && (dmin < 0 || I.gens[g].degree() < dmin)) dmin = I.gens[g].degree();
  for (std::size_t g = 0; g < I.gens.size(); ++g) {
    if (used[g] || I.gens[g].degree() != dmin) continue;
    if (--budget < 0) {
      exhausted = true;
      return false;
    }
    auto s = set_against_prefix(chosen, chosen.size(), I.gens[g]);
    if (colon_failure(chosen, chosen.size(), I.gens[g], s)) continue;
    chosen.push_back(I.gens[g]);
    used[g] = 1;
    if (lq_search(I, chosen, used, budget, exhausted)) return true;
    if (exhausted) return false;
    chosen.pop_back();
    used[g] = 0;
  }
  return false;
}

}  // namespace

LinearQuotientSearch find_linear_quotient_order(const MonomialIdeal& I, long budget) {
  LinearQuotientSearch res;
  if (I.gens.empty()) return res;
  std::vector<Monomial> chosen;
  std::vector<char> used(I.gens.size(), 0);
  bool exhausted = false;
  if (lq_search(I, chosen, used, budget, exhausted))
    res.order = QuotientOrder{I, std::move(chosen)};
  res.budget_exhausted = exhausted;
  return res;
}

}  // namespace coveralg
