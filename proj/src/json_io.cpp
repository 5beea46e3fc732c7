#include "coveralg/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace coveralg {

json to_json(const Monomial& m) { return json(m.exps); }

json to_json(const MonomialIdeal& I) {
  json j;
  j["n"] = I.ring->n;
  if (!std::all_of(I.ring->weights.begin(), I.ring->weights.end(),
                   [](Int w) { return w == 1; }))
    j["weights"] = I.ring->weights;
  json gens = json::array();
  for (const auto& g : I.gens) gens.push_back(to_json(g));
  j["generators"] = gens;
  return j;
}

json to_json(const SimpleGraph& g) {
  json j;
  j["n"] = g.n;
  json e = json::array();
  for (auto [a, b] : g.edges) e.push_back(json::array({a, b}));
  j["edges"] = e;
  return j;
}

json to_json(const BettiTable& t) {
  json entries = json::array();
  for (const auto& [ij, mult] : t.entries)
    if (mult != 0) entries.push_back(json::array({ij.first, ij.second, mult}));
  json j;
  j["entries"] = entries;
  if (t.weighted) j["weighted"] = true;
  return j;
}

json to_json(const ReesBinomial& b) {
  json j;
  j["left"] = {{"coef", b.left.coef.exps}, {"T", b.left.t_indices}};
  j["right"] = {{"coef", b.right.coef.exps}, {"T", b.right.t_indices}};
  return j;
}

json to_json(const LinearTypeReport& r) {
  json j;
  switch (r.graph_verdict) {
    case GraphVerdict::forest: j["graph_verdict"] = "forest"; break;
    case GraphVerdict::odd_unicyclic: j["graph_verdict"] = "odd-unicyclic"; break;
    default: j["graph_verdict"] = "other"; break;
  }
  j["linear_type_by_graph"] = r.linear_type_by_graph();
  j["s_max"] = r.s_max;
  j["coincidence_found"] = r.coincidence_found;
  if (r.coincidence_found) {
    j["witness_degree"] = r.witness_degree;
    j["witness"] = to_json(*r.witness);
  }
  j["consistent"] = r.consistent;
  return j;
}

json to_json(const CiReport& r) {
  json j;
  j["mu_k"] = r.mu_k;
  j["expected_height"] = r.expected_height;
  j["all_bidegree_1_1"] = r.all_bidegree_1_1;
  j["verdict"] = r.verdict;
  return j;
}

Monomial monomial_from_json(const json& j, RingPtr ring) {
  return Monomial(std::move(ring), j.get<std::vector<int>>());
}

MonomialIdeal ideal_from_json(const json& j) {
  int n = j.at("n").get<int>();
  RingPtr ring;
  if (j.contains("weights"))
    ring = std::make_shared<RingContext>(n, j.at("weights").get<std::vector<Int>>());
  else
    ring = std::make_shared<RingContext>(n);
  std::vector<Monomial> gens;
  for (const auto& g : j.at("generators")) gens.push_back(monomial_from_json(g, ring));
  if (gens.empty()) return MonomialIdeal::zero(ring);
  return minimalize(ring, std::move(gens));
}

SimpleGraph graph_from_json(const json& j) {
  int n = j.at("n").get<int>();
  std::vector<Edge> e;
  for (const auto& edge : j.at("edges"))
    e.push_back({edge.at(0).get<int>(), edge.at(1).get<int>()});
  return SimpleGraph(n, std::move(e));
}

std::string betti_csv(const BettiTable& t) {
  std::ostringstream out;
  out << "i,j,beta\n";
  for (const auto& [ij, mult] : t.entries)
    if (mult != 0) out << ij.first << "," << ij.second << "," << mult << "\n";
  return out.str();
}

}  // namespace coveralg
