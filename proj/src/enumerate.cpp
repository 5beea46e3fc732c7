#include "coveralg/enumerate.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>

namespace coveralg {

namespace {

int pair_index(int n, int i, int j) {  // 1-based i < j
  // edges ordered (1,2),(1,3),...,(1,n),(2,3),...
  return (i - 1) * n - (i - 1) * i / 2 + (j - i) - 1;
}

}  // namespace

uint32_t edge_mask(const SimpleGraph& g) {
  uint32_t m = 0;
  for (auto [i, j] : g.edges) m |= uint32_t{1} << pair_index(g.n, i, j);
  return m;
}

SimpleGraph graph_from_mask(int n, uint32_t mask) {
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (mask & (uint32_t{1} << pair_index(n, i, j))) e.push_back({i, j});
  return SimpleGraph(n, std::move(e));
}

uint32_t canonical_mask(int n, uint32_t mask) {
  if (n > 8) throw std::invalid_argument("canonical_mask: n too large");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  uint32_t best = mask;
  do {
    uint32_t pm = 0;
    for (int idx = 0, i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j, ++idx) {
        if (!(mask & (uint32_t{1} << idx))) continue;
        int a = perm[i - 1], b = perm[j - 1];
        if (a > b) std::swap(a, b);
        pm |= uint32_t{1} << pair_index(n, a, b);
      }
    if (pm < best) best = pm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<SimpleGraph> labeled_trees(int n) {
  std::vector<SimpleGraph> out;
  if (n == 1) {
    out.push_back(SimpleGraph(1, {}));
    return out;
  }
  if (n == 2) {
    out.push_back(SimpleGraph(2, {{1, 2}}));
    return out;
  }
  // iterate all Pruefer sequences of length n-2 over [n]
  std::vector<int> seq(n - 2, 1);
  while (true) {
    std::vector<int> deg(n + 1, 1);
    for (int v : seq) ++deg[v];
    std::vector<Edge> edges;
    std::vector<int> s = seq;
    std::set<int> leaves;
    for (int v = 1; v <= n; ++v)
      if (deg[v] == 1) leaves.insert(v);
    for (int v : s) {
      int leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      edges.push_back({std::min(leaf, v), std::max(leaf, v)});
      if (--deg[v] == 1) leaves.insert(v);
    }
    int a = *leaves.begin(), b = *std::next(leaves.begin());
    edges.push_back({std::min(a, b), std::max(a, b)});
    out.push_back(SimpleGraph(n, std::move(edges)));
    int i = n - 3;
    while (i >= 0 && seq[i] == n) {
      seq[i] = 1;
      --i;
    }
    if (i < 0) break;
    ++seq[i];
  }
  return out;
}

std::vector<SimpleGraph> trees_up_to_iso(int n) {
  std::vector<SimpleGraph> out;
  std::set<uint32_t> seen;
  for (const auto& t : labeled_trees(n)) {
    uint32_t c = canonical_mask(n, edge_mask(t));
    if (seen.insert(c).second) out.push_back(graph_from_mask(n, c));
  }
  return out;
}

std::vector<SimpleGraph> connected_graphs_up_to_iso(int n) {
  if (n > 8) throw std::invalid_argument("connected_graphs_up_to_iso: n too large");
  // all graphs up to iso by augmentation, then filter connected
  std::vector<std::vector<uint32_t>> reps(n + 1);
  reps[1] = {0};
  for (int k = 1; k < n; ++k) {
    std::set<uint32_t> next;
    for (uint32_t base : reps[k]) {
      SimpleGraph g = graph_from_mask(k, base);
      for (uint32_t nb = 0; nb < (uint32_t{1} << k); ++nb) {
        std::vector<Edge> e = g.edges;
        for (int v = 1; v <= k; ++v)
          if (nb & (uint32_t{1} << (v - 1))) e.push_back({v, k + 1});
        SimpleGraph h(k + 1, std::move(e));
        next.insert(canonical_mask(k + 1, edge_mask(h)));
      }
    }
    reps[k + 1].assign(next.begin(), next.end());
  }
  std::vector<SimpleGraph> out;
  for (uint32_t m : reps[n]) {
    SimpleGraph g = graph_from_mask(n, m);
    if (structure(g).is_connected) out.push_back(std::move(g));
  }
  return out;
}

std::vector<SimpleGraph> connected_labeled_graphs(int n) {
  const int npairs = n * (n - 1) / 2;
  if (npairs > 24) throw std::invalid_argument("connected_labeled_graphs: n too large");
  std::vector<SimpleGraph> out;
  for (uint32_t m = 0; m < (uint32_t{1} << npairs); ++m) {
    SimpleGraph g = graph_from_mask(n, m);
    if (structure(g).is_connected) out.push_back(std::move(g));
  }
  return out;
}

std::vector<SimpleGraph> random_connected_graphs(int n, int count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int npairs = n * (n - 1) / 2;
  std::uniform_int_distribution<uint32_t> dist(0, (uint32_t{1} << npairs) - 1);
  std::vector<SimpleGraph> out;
  while (static_cast<int>(out.size()) < count) {
    SimpleGraph g = graph_from_mask(n, dist(rng));
    if (structure(g).is_connected) out.push_back(std::move(g));
  }
  return out;
}

namespace {

bool cycle_dfs(const SimpleGraph& g, const std::vector<std::vector<int>>& adj,
               std::vector<int>& path, std::vector<char>& on_path, int len) {
  int v = path.back();
  if (static_cast<int>(path.size()) == len)
    return g.has_edge(v, path.front());
  for (int u : adj[v]) {
    if (on_path[u]) continue;
    if (u < path.front()) continue;  // canonical start: smallest vertex first
    path.push_back(u);
    on_path[u] = 1;
    if (cycle_dfs(g, adj, path, on_path, len)) return true;
    on_path[u] = 0;
    path.pop_back();
  }
  return false;
}

}  // namespace

bool has_cycle_of_length(const SimpleGraph& g, int len) {
  if (len < 3 || len > g.n) return false;
  auto adj = g.adjacency();
  std::vector<char> on_path(g.n + 1, 0);
  for (int s = 1; s <= g.n; ++s) {
    std::vector<int> path{s};
    on_path.assign(g.n + 1, 0);
    on_path[s] = 1;
    if (cycle_dfs(g, adj, path, on_path, len)) return true;
  }
  return false;
}

int shortest_even_cycle(const SimpleGraph& g) {
  for (int len = 4; len <= g.n; len += 2)
    if (has_cycle_of_length(g, len)) return len;
  return 0;
}

}  // namespace coveralg
