#include "coveralg/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "coveralg/gfp.hpp"

namespace coveralg {

PolarizedIdeal polarize(const MonomialIdeal& I) {
  const int n = I.ring->n;
  std::vector<int> cap(n, 0);
  for (const auto& g : I.gens)
    for (int i = 0; i < n; ++i) cap[i] = std::max(cap[i], g.exps[i]);
  PolarizedIdeal P;
  P.original_ring = I.ring;
  std::vector<int> base(n, 0);
  for (int i = 0; i < n; ++i) {
    base[i] = P.var_count;
    for (int e = 1; e <= cap[i]; ++e) P.slots.push_back({i + 1, e});
    P.var_count += cap[i];
  }
  if (P.var_count > 32)
    throw std::invalid_argument("polarize: more than 32 polarized variables");
  for (const auto& g : I.gens) {
    uint32_t m = 0;
    for (int i = 0; i < n; ++i)
      for (int e = 0; e < g.exps[i]; ++e) m |= uint32_t{1} << (base[i] + e);
    P.gen_supports.push_back(m);
    P.gen_degrees.push_back(g.degree());
  }
  return P;
}

namespace {

bool is_face(uint32_t mask, const std::vector<uint32_t>& nonfaces) {
  for (uint32_t s : nonfaces)
    if ((s & mask) == s) return false;
  return true;
}

// all size-k subsets of verts (as global bitmasks) that are faces
std::vector<uint32_t> faces_of_size(const std::vector<int>& verts, int k,
                                    const std::vector<uint32_t>& nonfaces) {
  std::vector<uint32_t> out;
  const int m = static_cast<int>(verts.size());
  if (k < 0 || k > m) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    uint32_t mask = 0;
    for (int i : idx) mask |= uint32_t{1} << verts[i];
    if (is_face(mask, nonfaces)) out.push_back(mask);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int t = i + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
  return out;
}

// rank of the boundary map from size-k faces to size-(k-1) faces
std::size_t boundary_rank(const std::vector<uint32_t>& from,
                          const std::vector<uint32_t>& to, uint32_t p) {
  if (from.empty() || to.empty()) return 0;
  std::unordered_map<uint32_t, std::size_t> row_of;
  row_of.reserve(to.size() * 2);
  for (std::size_t r = 0; r < to.size(); ++r) row_of[to[r]] = r;
  // rows = columns of the boundary map; rank is transpose-invariant and
  // elimination favors the shorter dimension
  gfp::DenseMat m(from.size(), to.size());
  for (std::size_t c = 0; c < from.size(); ++c) {
    uint32_t f = from[c];
    int sign = 0;
    for (uint32_t rest = f; rest;) {
      int v = __builtin_ctzll(rest);
      rest &= rest - 1;
      uint32_t facet = f & ~(uint32_t{1} << v);
      auto it = row_of.find(facet);
      if (it == row_of.end())
        throw std::logic_error("boundary_rank: facet missing from complex");
      m.row(c)[it->second] = (sign % 2 == 0) ? 1 : p - 1;
      ++sign;
    }
  }
  return gfp::rank(m, p);
}

Int reduced_homology_dim(const std::vector<int>& verts,
                         const std::vector<uint32_t>& nonfaces, Int d, uint32_t p) {
  const int m = static_cast<int>(verts.size());
  if (d < -1 || d + 1 > m) return 0;
  const int k = static_cast<int>(d) + 1;  // face size carrying H~_d
  auto mid = faces_of_size(verts, k, nonfaces);
  if (mid.empty()) return 0;
  auto lower = faces_of_size(verts, k - 1, nonfaces);
  auto upper = faces_of_size(verts, k + 1, nonfaces);
  std::size_t r_down = (k == 0) ? 0 : boundary_rank(mid, lower, p);
  std::size_t r_up = boundary_rank(upper, mid, p);
  return static_cast<Int>(mid.size()) - static_cast<Int>(r_down) - static_cast<Int>(r_up);
}

}  // namespace

Int homology_rank(const std::vector<int>& vertices,
                  const std::vector<uint32_t>& nonfaces, Int d, FieldSpec F) {
  if (!gfp::is_prime(F.p)) throw std::invalid_argument("homology_rank: p not prime");
  return reduced_homology_dim(vertices, nonfaces, d, F.p);
}

Int hochster_entry(const PolarizedIdeal& P, Int i, Int j, FieldSpec F, int jobs) {
  if (!gfp::is_prime(F.p)) throw std::invalid_argument("hochster_entry: p not prime");
  if (i < 0 || j < 0) return 0;
  if (P.gen_supports.empty()) return (i == 0 && j == 0) ? 1 : 0;
  if (i == 0) return j == 0 ? 1 : 0;
  if (j > P.var_count) return 0;
  const Int d = j - i - 1;
  if (d < -1) return 0;

  // only subsets containing some generator support can contribute
  std::vector<std::vector<int>> sigmas;
  const int N = P.var_count;
  const int k = static_cast<int>(j);
  std::vector<int> idx(k);
  for (int t = 0; t < k; ++t) idx[t] = t;
  while (k > 0) {
    uint32_t mask = 0;
    for (int t : idx) mask |= uint32_t{1} << t;
    bool hit = false;
    for (uint32_t s : P.gen_supports)
      if ((s & mask) == s) {
        hit = true;
        break;
      }
    if (hit) sigmas.push_back(idx);
    int t = k - 1;
    while (t >= 0 && idx[t] == N - k + t) --t;
    if (t < 0) break;
    ++idx[t];
    for (int q = t + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
  const uint32_t p = F.p;
  std::atomic<std::size_t> next{0};
  std::vector<Int> partial(std::max(jobs, 1), 0);
  auto worker = [&](int w) {
    Int acc = 0;
    while (true) {
      std::size_t t = next.fetch_add(1);
      if (t >= sigmas.size()) break;
      acc += reduced_homology_dim(sigmas[t], P.gen_supports, d, p);
    }
    partial[w] = acc;
  };
  if (jobs <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
  }
  Int total = 0;
  for (Int v : partial) total += v;
  return total;
}

Int hochster_entry(const MonomialIdeal& I, Int i, Int j, FieldSpec F, int jobs) {
  return hochster_entry(polarize(I), i, j, F, jobs);
}

BettiTable betti_table_oracle(const MonomialIdeal& I,
                              const std::vector<std::pair<Int, Int>>& window,
                              FieldSpec F, int jobs, int var_cap) {
  PolarizedIdeal P = polarize(I);
  if (P.var_count > var_cap)
    throw std::invalid_argument("betti_table_oracle: polarized variable cap exceeded");
  BettiTable t;
  for (auto [i, j] : window) {
    Int v = hochster_entry(P, i, j, F, jobs);
    if (v != 0) t.entries[{i, j}] = v;
  }
  return t;
}

BettiTable betti_table_oracle_full(const MonomialIdeal& I, FieldSpec F, int jobs,
                                   int var_cap) {
  PolarizedIdeal P = polarize(I);
  if (P.var_count > var_cap)
    throw std::invalid_argument("betti_table_oracle: polarized variable cap exceeded");
  std::vector<std::pair<Int, Int>> window;
  for (Int i = 1; i <= P.var_count + 1; ++i)
    for (Int j = i; j <= P.var_count; ++j) window.push_back({i, j});
  return betti_table_oracle(I, window, F, jobs, var_cap);
}

}  // namespace coveralg
