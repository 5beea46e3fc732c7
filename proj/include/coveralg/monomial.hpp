#ifndef COVERALG_MONOMIAL_HPP
#define COVERALG_MONOMIAL_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace coveralg {

using Int = long long;

// C(n, k) in exact 64-bit arithmetic; 0 outside the triangle.
Int binom(Int n, Int k);

// Ambient polynomial ring: number of variables and per-variable weights.
struct RingContext {
  int n;
  std::vector<Int> weights;

  explicit RingContext(int n_) : n(n_), weights(n_, 1) {
    if (n_ < 1) throw std::invalid_argument("RingContext: n must be >= 1");
  }
  RingContext(int n_, std::vector<Int> w) : n(n_), weights(std::move(w)) {
    if (n_ < 1) throw std::invalid_argument("RingContext: n must be >= 1");
    if (static_cast<int>(weights.size()) != n_)
      throw std::invalid_argument("RingContext: weight count mismatch");
    for (Int wi : weights)
      if (wi < 1) throw std::invalid_argument("RingContext: weights must be >= 1");
  }
  bool operator==(const RingContext& o) const {
    return n == o.n && weights == o.weights;
  }
};

using RingPtr = std::shared_ptr<const RingContext>;

struct Monomial {
  RingPtr ring;
  std::vector<int> exps;

  Monomial(RingPtr r, std::vector<int> e) : ring(std::move(r)), exps(std::move(e)) {
    if (static_cast<int>(exps.size()) != ring->n)
      throw std::invalid_argument("Monomial: exponent count mismatch");
    for (int a : exps)
      if (a < 0) throw std::invalid_argument("Monomial: negative exponent");
  }
  static Monomial one(RingPtr r) {
    std::vector<int> e(r->n, 0);
    return Monomial(std::move(r), std::move(e));
  }
  // x_{i1} * x_{i2} * ... with 1-based indices (repeats allowed)
  static Monomial from_vars(RingPtr r, const std::vector<int>& vars);

  Int degree() const;
  Int weighted_degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  std::vector<int> support() const;  // 1-based variable indices
  bool divides(const Monomial& other) const;
  bool operator==(const Monomial& o) const { return exps == o.exps; }
  std::string str() const;
};

void require_same_ring(const Monomial& u, const Monomial& v);

Monomial lcm(const Monomial& u, const Monomial& v);
Monomial gcd(const Monomial& u, const Monomial& v);
Monomial mul(const Monomial& u, const Monomial& v);
// u : v = u / gcd(u, v)
Monomial colon(const Monomial& u, const Monomial& v);
// X / u for squarefree u
Monomial complement_monomial(const Monomial& u);

// true iff u > v: degree-major, then graded revlex with X_1 > ... > X_n
// (last nonzero entry of exps(u) - exps(v) negative).
bool revlex_greater(const Monomial& u, const Monomial& v);

struct MonomialIdeal {
  RingPtr ring;
  std::vector<Monomial> gens;  // divisibility antichain, canonical order

  static MonomialIdeal zero(RingPtr r) { return MonomialIdeal{std::move(r), {}}; }
  bool is_zero() const { return gens.empty(); }
  bool is_unit() const { return gens.size() == 1 && gens[0].is_one(); }
  bool contains(const Monomial& m) const;
  bool operator==(const MonomialIdeal& o) const { return gens == o.gens; }
};

// Strips strict multiples, sorts canonically (degree ascending, then
// revlex descending).
MonomialIdeal minimalize(RingPtr ring, std::vector<Monomial> gens);

MonomialIdeal power(const MonomialIdeal& I, int s);

enum class HilbertMode { ideal, quotient };

// Number of degree-d monomials in I resp. S/I (unit weights).
Int hilbert_function(const MonomialIdeal& I, Int d, HilbertMode mode);
// All degrees 0..d_max at once.
std::vector<Int> hilbert_vector(const MonomialIdeal& I, Int d_max, HilbertMode mode);

}  // namespace coveralg

#endif
