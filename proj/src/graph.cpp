#include "coveralg/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace coveralg {

SimpleGraph::SimpleGraph(int n_, std::vector<Edge> e) : n(n_) {
  if (n_ < 0) throw std::invalid_argument("SimpleGraph: negative vertex count");
  std::set<Edge> canon;
  for (auto [i, j] : e) {
    if (i == j) throw std::invalid_argument("SimpleGraph: loop edge");
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n) throw std::invalid_argument("SimpleGraph: vertex out of range");
    canon.insert({i, j});
  }
  edges.assign(canon.begin(), canon.end());
}

bool SimpleGraph::has_edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges.begin(), edges.end(), Edge{i, j});
}

std::vector<std::vector<int>> SimpleGraph::adjacency() const {
  std::vector<std::vector<int>> adj(n + 1);
  for (auto [i, j] : edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  return adj;
}

SimpleGraph complement(const SimpleGraph& g) {
  std::vector<Edge> e;
  for (int i = 1; i <= g.n; ++i)
    for (int j = i + 1; j <= g.n; ++j)
      if (!g.has_edge(i, j)) e.push_back({i, j});
  return SimpleGraph(g.n, std::move(e));
}

SimpleGraph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.push_back({i, j});
  return SimpleGraph(n, std::move(e));
}

SimpleGraph cycle_graph(int len) {
  if (len < 3) throw std::invalid_argument("cycle_graph: length must be >= 3");
  std::vector<Edge> e;
  for (int i = 1; i < len; ++i) e.push_back({i, i + 1});
  e.push_back({1, len});
  return SimpleGraph(len, std::move(e));
}

SimpleGraph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path_graph: n must be >= 1");
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
  return SimpleGraph(n, std::move(e));
}

SimpleGraph star_graph(int n) {
  if (n < 1) throw std::invalid_argument("star_graph: n must be >= 1");
  std::vector<Edge> e;
  for (int i = 2; i <= n; ++i) e.push_back({1, i});
  return SimpleGraph(n, std::move(e));
}

SimpleGraph complete_multipartite(const std::vector<int>& parts) {
  if (parts.empty()) throw std::invalid_argument("complete_multipartite: no parts");
  for (int w : parts)
    if (w < 1) throw std::invalid_argument("complete_multipartite: part size must be >= 1");
  int n = 0;
  std::vector<int> part_of;
  part_of.push_back(0);  // 1-based
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (int k = 0; k < parts[p]; ++k) {
      ++n;
      part_of.push_back(static_cast<int>(p));
    }
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (part_of[i] != part_of[j]) e.push_back({i, j});
  return SimpleGraph(n, std::move(e));
}

// Bron-Kerbosch with pivoting over independent sets (cliques of the
// complement), vertices as bitmasks. n <= 63.
namespace {

void bron_kerbosch(uint64_t R, uint64_t P, uint64_t X,
                   const std::vector<uint64_t>& nonadj,
                   std::vector<uint64_t>& out) {
  if (P == 0 && X == 0) {
    out.push_back(R);
    return;
  }
  uint64_t PX = P | X;
  int pivot = -1;
  int best = -1;
  for (uint64_t m = PX; m;) {
    int v = __builtin_ctzll(m);
    m &= m - 1;
    int cnt = __builtin_popcountll(P & nonadj[v]);
    if (cnt > best) {
      best = cnt;
      pivot = v;
    }
  }
  uint64_t cand = P & ~nonadj[pivot];
  for (uint64_t m = cand; m;) {
    int v = __builtin_ctzll(m);
    m &= m - 1;
    uint64_t vb = uint64_t{1} << v;
    bron_kerbosch(R | vb, P & nonadj[v], X & nonadj[v], nonadj, out);
    P &= ~vb;
    X |= vb;
  }
}

}  // namespace

std::vector<std::vector<int>> minimal_vertex_covers(const SimpleGraph& g) {
  if (g.n > 63) throw std::invalid_argument("minimal_vertex_covers: graph too large");
  std::vector<uint64_t> nonadj(g.n, 0);
  for (int v = 0; v < g.n; ++v) {
    for (int u = 0; u < g.n; ++u)
      if (u != v && !g.has_edge(u + 1, v + 1)) nonadj[v] |= uint64_t{1} << u;
  }
  std::vector<uint64_t> indep;
  uint64_t all = g.n == 64 ? ~uint64_t{0} : (uint64_t{1} << g.n) - 1;
  bron_kerbosch(0, all, 0, nonadj, indep);
  std::vector<std::vector<int>> covers;
  covers.reserve(indep.size());
  for (uint64_t s : indep) {
    std::vector<int> c;
    for (int v = 0; v < g.n; ++v)
      if (!(s & (uint64_t{1} << v))) c.push_back(v + 1);
    covers.push_back(std::move(c));
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

MonomialIdeal cover_ideal(const SimpleGraph& g, RingPtr ring) {
  if (ring->n != g.n) throw std::invalid_argument("cover_ideal: ring size mismatch");
  auto covers = minimal_vertex_covers(g);
  std::vector<Monomial> gens;
  gens.reserve(covers.size());
  for (const auto& c : covers) gens.push_back(Monomial::from_vars(ring, c));
  return minimalize(std::move(ring), std::move(gens));
}

MonomialIdeal cover_ideal(const SimpleGraph& g) {
  return cover_ideal(g, std::make_shared<RingContext>(g.n));
}

MonomialIdeal edge_ideal(const SimpleGraph& g) {
  auto ring = std::make_shared<RingContext>(g.n);
  if (g.edges.empty()) return MonomialIdeal::zero(std::move(ring));
  std::vector<Monomial> gens;
  for (auto [i, j] : g.edges) gens.push_back(Monomial::from_vars(ring, {i, j}));
  return minimalize(std::move(ring), std::move(gens));
}

SimpleGraph graph_from_ideal(const MonomialIdeal& J) {
  const int n = J.ring->n;
  std::vector<Edge> e;
  for (const auto& u : J.gens) {
    if (!u.is_squarefree())
      throw std::invalid_argument("graph_from_ideal: generator not squarefree");
    if (u.degree() != n - 2)
      throw std::invalid_argument("graph_from_ideal: generator degree is not n-2");
    std::vector<int> missing;
    for (int i = 0; i < n; ++i)
      if (u.exps[i] == 0) missing.push_back(i + 1);
    e.push_back({missing[0], missing[1]});
  }
  return SimpleGraph(n, std::move(e));
}

MonomialIdeal ideal_from_graph(const SimpleGraph& g, RingPtr ring) {
  if (g.n < 3) throw std::invalid_argument("ideal_from_graph: need n >= 3");
  if (g.edges.empty()) throw std::invalid_argument("ideal_from_graph: need an edge");
  if (ring->n != g.n) throw std::invalid_argument("ideal_from_graph: ring size mismatch");
  std::vector<Monomial> gens;
  for (auto [i, j] : g.edges) {
    std::vector<int> e(g.n, 1);
    e[i - 1] = 0;
    e[j - 1] = 0;
    gens.push_back(Monomial(ring, std::move(e)));
  }
  return minimalize(std::move(ring), std::move(gens));
}

MonomialIdeal ideal_from_graph(const SimpleGraph& g) {
  return ideal_from_graph(g, std::make_shared<RingContext>(g.n));
}

GraphStructure structure(const SimpleGraph& g) {
  GraphStructure st;
  auto adj = g.adjacency();
  std::vector<int> comp(g.n + 1, -1);
  int ncomp = 0;
  for (int s = 1; s <= g.n; ++s) {
    if (comp[s] != -1) continue;
    std::queue<int> q;
    q.push(s);
    comp[s] = ncomp;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : adj[v])
        if (comp[u] == -1) {
          comp[u] = ncomp;
          q.push(u);
        }
    }
    ++ncomp;
  }
  st.is_connected = (ncomp <= 1);
  st.cyclomatic_number = static_cast<int>(g.edges.size()) - g.n + ncomp;
  st.is_forest = (st.cyclomatic_number == 0);
  if (st.cyclomatic_number == 1) {
    // strip leaves; what remains is the unique cycle
    std::vector<int> deg(g.n + 1, 0);
    for (auto [i, j] : g.edges) {
      ++deg[i];
      ++deg[j];
    }
    std::vector<char> removed(g.n + 1, 0);
    std::queue<int> leaves;
    for (int v = 1; v <= g.n; ++v)
      if (deg[v] == 1) leaves.push(v);
    while (!leaves.empty()) {
      int v = leaves.front();
      leaves.pop();
      removed[v] = 1;
      for (int u : adj[v])
        if (!removed[u] && --deg[u] == 1) leaves.push(u);
    }
    int cyc_len = 0;
    for (int v = 1; v <= g.n; ++v)
      if (!removed[v] && deg[v] >= 2) ++cyc_len;
    st.unique_cycle_length = cyc_len;
    st.odd_unicyclic = st.is_connected && (cyc_len % 2 == 1);
  }
  return st;
}

std::vector<Edge> shelling_edge_order(const SimpleGraph& g) {
  auto st = structure(g);
  if (!st.is_connected || g.n < 2)
    throw std::invalid_argument("shelling_edge_order: graph must be connected");
  auto adj = g.adjacency();
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<char> seen(g.n + 1, 0);
  std::vector<Edge> order;
  std::set<Edge> used;
  std::queue<int> q;
  q.push(1);
  seen[1] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : adj[v])
      if (!seen[u]) {
        seen[u] = 1;
        Edge e{std::min(u, v), std::max(u, v)};
        order.push_back(e);
        used.insert(e);
        q.push(u);
      }
  }
  for (const auto& e : g.edges)
    if (!used.count(e)) order.push_back(e);
  return order;
}

}  // namespace coveralg
