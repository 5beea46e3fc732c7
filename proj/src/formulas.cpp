#include "coveralg/formulas.hpp"

#include <stdexcept>

namespace coveralg {
namespace formulas {

std::array<Int, 3> betti_connected_graph(Int r, Int n) {
  if (n < 3) throw std::invalid_argument("betti_connected_graph: n must be >= 3");
  if (r < n - 1 || r > n * (n - 1) / 2)
    throw std::invalid_argument("betti_connected_graph: edge count out of range");
  return {r, 2 * r - n, r - n + 1};
}

std::array<Int, 3> betti_planar(Int n, Int m) {
  if (n < 3) throw std::invalid_argument("betti_planar: n must be >= 3");
  if (m < 0) throw std::invalid_argument("betti_planar: negative region count");
  return betti_connected_graph(n + m - 1, n);
}

Int betti_complete_power(Int n, Int s, Int i) {
  if (n < 2 || s < 1 || i < 0)
    throw std::invalid_argument("betti_complete_power: parameter out of range");
  return binom(n - 1, i) * binom(n - 1 - i + s, n - 1);
}

Int betti_tree_complement_power(Int n, Int s, Int i) {
  if (n < 3) throw std::invalid_argument("betti_tree_complement_power: n must be >= 3");
  return betti_complete_power(n - 1, s, i);
}

Int reg_multipartite(const std::vector<Int>& w, Int s) {
  const Int n = static_cast<Int>(w.size());
  if (n < 2 || s < 1) throw std::invalid_argument("reg_multipartite: parameter out of range");
  Int total = 0;
  for (std::size_t l = 0; l < w.size(); ++l) {
    if (l > 0 && w[l] < w[l - 1])
      throw std::invalid_argument("reg_multipartite: weights must be sorted ascending");
    total += w[l];
  }
  if (s < n - 1) return s * total - (s + 1);
  return s * total - w[0] * (s - n + 1) - n;
}

Int pdim_complete_power(Int n, Int s) {
  if (n < 2 || s < 1)
    throw std::invalid_argument("pdim_complete_power: parameter out of range");
  return s < n - 1 ? s + 1 : n;
}

Int a_t_formula(Int n, Int s, Int t) {
  return binom(n - 1, t) * binom(s, t);
}

}  // namespace formulas
}  // namespace coveralg
