#include "coveralg/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace coveralg {

Int binom(Int n, Int k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (Int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
  }
  return static_cast<Int>(acc);
}

Monomial Monomial::from_vars(RingPtr r, const std::vector<int>& vars) {
  std::vector<int> e(r->n, 0);
  for (int v : vars) {
    if (v < 1 || v > r->n) throw std::invalid_argument("from_vars: index out of range");
    ++e[v - 1];
  }
  return Monomial(std::move(r), std::move(e));
}

Int Monomial::degree() const {
  return std::accumulate(exps.begin(), exps.end(), Int{0});
}

Int Monomial::weighted_degree() const {
  Int d = 0;
  for (int i = 0; i < ring->n; ++i) d += static_cast<Int>(exps[i]) * ring->weights[i];
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](int a) { return a == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps.begin(), exps.end(), [](int a) { return a <= 1; });
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < ring->n; ++i)
    if (exps[i] > 0) s.push_back(i + 1);
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < ring->n; ++i)
    if (exps[i] > other.exps[i]) return false;
  return true;
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::string out;
  for (int i = 0; i < ring->n; ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
  }
  return out;
}

void require_same_ring(const Monomial& u, const Monomial& v) {
  if (!(*u.ring == *v.ring))
    throw std::invalid_argument("monomials from different rings");
}

Monomial lcm(const Monomial& u, const Monomial& v) {
  require_same_ring(u, v);
  std::vector<int> e(u.ring->n);
  for (int i = 0; i < u.ring->n; ++i) e[i] = std::max(u.exps[i], v.exps[i]);
  return Monomial(u.ring, std::move(e));
}

Monomial gcd(const Monomial& u, const Monomial& v) {
  require_same_ring(u, v);
  std::vector<int> e(u.ring->n);
  for (int i = 0; i < u.ring->n; ++i) e[i] = std::min(u.exps[i], v.exps[i]);
  return Monomial(u.ring, std::move(e));
}

Monomial mul(const Monomial& u, const Monomial& v) {
  require_same_ring(u, v);
  std::vector<int> e(u.ring->n);
  for (int i = 0; i < u.ring->n; ++i) e[i] = u.exps[i] + v.exps[i];
  return Monomial(u.ring, std::move(e));
}

Monomial colon(const Monomial& u, const Monomial& v) {
  require_same_ring(u, v);
  std::vector<int> e(u.ring->n);
  for (int i = 0; i < u.ring->n; ++i) e[i] = std::max(u.exps[i] - v.exps[i], 0);
  return Monomial(u.ring, std::move(e));
}

Monomial complement_monomial(const Monomial& u) {
  if (!u.is_squarefree())
    throw std::invalid_argument("complement_monomial: input not squarefree");
  std::vector<int> e(u.ring->n);
  for (int i = 0; i < u.ring->n; ++i) e[i] = 1 - u.exps[i];
  return Monomial(u.ring, std::move(e));
}

bool revlex_greater(const Monomial& u, const Monomial& v) {
  Int du = u.degree(), dv = v.degree();
  if (du != dv) return du > dv;
  for (int i = u.ring->n - 1; i >= 0; --i) {
    int d = u.exps[i] - v.exps[i];
    if (d != 0) return d < 0;
  }
  return false;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : gens)
    if (g.divides(m)) return true;
  return false;
}

// degree ascending, then revlex descending
static bool canonical_before(const Monomial& u, const Monomial& v) {
  Int du = u.degree(), dv = v.degree();
  if (du != dv) return du < dv;
  return revlex_greater(u, v);
}

MonomialIdeal minimalize(RingPtr ring, std::vector<Monomial> gens) {
  if (gens.empty()) throw std::invalid_argument("minimalize: empty generating set");
  for (const auto& g : gens)
    if (!(*g.ring == *ring)) throw std::invalid_argument("minimalize: ring mismatch");
  std::sort(gens.begin(), gens.end(), canonical_before);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> keep;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& k : keep) {
      if (k.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) keep.push_back(g);
  }
  return MonomialIdeal{std::move(ring), std::move(keep)};
}

MonomialIdeal power(const MonomialIdeal& I, int s) {
  if (s < 1) throw std::invalid_argument("power: s must be >= 1");
  if (I.is_zero()) return I;
  MonomialIdeal P = minimalize(I.ring, I.gens);
  for (int k = 2; k <= s; ++k) {
    std::vector<Monomial> prods;
    prods.reserve(P.gens.size() * I.gens.size());
    for (const auto& a : P.gens)
      for (const auto& b : I.gens) prods.push_back(mul(a, b));
    P = minimalize(I.ring, std::move(prods));
  }
  return P;
}

// inclusion-exclusion over generator subsets, pruned on lcm degree
static void incl_excl(const std::vector<Monomial>& gens, std::size_t idx,
                      std::vector<int>& cur, int sign, bool nonempty, Int d_max,
                      std::vector<Int>& coef) {
  if (idx == gens.size()) {
    if (nonempty) {
      Int d = std::accumulate(cur.begin(), cur.end(), Int{0});
      coef[static_cast<std::size_t>(d)] += sign;
    }
    return;
  }
  incl_excl(gens, idx + 1, cur, sign, nonempty, d_max, coef);
  std::vector<int> saved = cur;
  Int d = 0;
  const auto& e = gens[idx].exps;
  for (std::size_t i = 0; i < cur.size(); ++i) {
    cur[i] = std::max(cur[i], e[i]);
    d += cur[i];
  }
  if (d <= d_max) incl_excl(gens, idx + 1, cur, -sign, true, d_max, coef);
  cur = saved;
}

// direct enumeration of exponent vectors, filtering candidate divisors
static void enumerate_count(const std::vector<Monomial>& gens, int n, int var,
                            Int deg, Int d_max, std::vector<std::size_t> cand,
                            std::vector<int>& e, std::vector<Int>& in_count) {
  if (var == n) {
    if (!cand.empty()) in_count[static_cast<std::size_t>(deg)] += 1;
    return;
  }
  for (Int a = 0; deg + a <= d_max; ++a) {
    e[var] = static_cast<int>(a);
    std::vector<std::size_t> next;
    for (std::size_t gi : cand)
      if (gens[gi].exps[var] <= a) next.push_back(gi);
    // subtree holds no multiples of any generator
    if (next.empty()) continue;
    enumerate_count(gens, n, var + 1, deg + a, d_max, std::move(next), e, in_count);
  }
  e[var] = 0;
}

std::vector<Int> hilbert_vector(const MonomialIdeal& I, Int d_max, HilbertMode mode) {
  const int n = I.ring->n;
  std::vector<Int> in_count(static_cast<std::size_t>(d_max) + 1, 0);
  if (!I.is_zero()) {
    if (I.gens.size() <= 20) {
      std::vector<Int> coef(static_cast<std::size_t>(d_max) + 1, 0);
      std::vector<int> cur(n, 0);
      // sign starts at -1 so a singleton subset contributes +1
      incl_excl(I.gens, 0, cur, -1, false, d_max, coef);
      for (Int d = 0; d <= d_max; ++d) {
        Int v = 0;
        for (Int dd = 0; dd <= d; ++dd)
          if (coef[static_cast<std::size_t>(dd)] != 0)
            v += coef[static_cast<std::size_t>(dd)] * binom(d - dd + n - 1, n - 1);
        in_count[static_cast<std::size_t>(d)] = v;
      }
    } else {
      std::vector<std::size_t> cand(I.gens.size());
      std::iota(cand.begin(), cand.end(), std::size_t{0});
      std::vector<int> e(n, 0);
      enumerate_count(I.gens, n, 0, 0, d_max, std::move(cand), e, in_count);
    }
  }
  if (mode == HilbertMode::ideal) return in_count;
  std::vector<Int> q(static_cast<std::size_t>(d_max) + 1, 0);
  for (Int d = 0; d <= d_max; ++d)
    q[static_cast<std::size_t>(d)] = binom(d + n - 1, n - 1) - in_count[static_cast<std::size_t>(d)];
  return q;
}

Int hilbert_function(const MonomialIdeal& I, Int d, HilbertMode mode) {
  if (d < 0) throw std::invalid_argument("hilbert_function: negative degree");
  return hilbert_vector(I, d, mode).back();
}

}  // namespace coveralg
