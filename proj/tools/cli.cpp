// coveralg command-line front end.
//
// Subcommands: ideal, graph, betti, rees, reg, hilbert, formula, verify.
// Exit codes: 0 success, 2 input error, 3 precondition failure,
// 4 verification mismatch.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "coveralg/enumerate.hpp"
#include "coveralg/formulas.hpp"
#include "coveralg/gfp.hpp"
#include "coveralg/json_io.hpp"
#include "coveralg/oracle.hpp"
#include "coveralg/rees.hpp"
#include "coveralg/verify.hpp"

namespace {

using namespace coveralg;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitMismatch = 4;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOpts {
  bool as_json = false;
  uint32_t field = 32003;
  int jobs = 0;  // 0 -> hardware concurrency
  uint64_t seed = 20240817;

  FieldSpec field_spec() const {
    if (!gfp::is_prime(field)) throw InputError("--field must be prime");
    return FieldSpec{field};
  }
  int resolved_jobs() const {
    if (jobs > 0) return jobs;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
  }
};

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (...) {
      throw InputError("bad integer list: " + s);
    }
  }
  if (out.empty()) throw InputError("empty integer list");
  return out;
}

SimpleGraph build_graph(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw InputError("graph builder must look like name:args, got " + spec);
  std::string name = spec.substr(0, colon);
  std::string args = spec.substr(colon + 1);
  if (name == "multipartite") {
    auto parts = parse_int_list(args);
    return complete_multipartite(std::vector<int>(parts.begin(), parts.end()));
  }
  int n;
  try {
    n = std::stoi(args);
  } catch (...) {
    throw InputError("bad builder argument: " + args);
  }
  if (name == "complete") return complete_graph(n);
  if (name == "cycle") return cycle_graph(n);
  if (name == "path" || name == "tree") return path_graph(n);
  if (name == "star") return star_graph(n);
  throw InputError("unknown graph builder: " + name);
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InputError(std::string("bad JSON in ") + path + ": " + e.what());
  }
  return j;
}

// Shared ideal-source options: a graph builder / file plus transforms, or a
// raw ideal JSON file.
struct IdealSource {
  std::string graph_spec;
  std::string graph_file;
  std::string ideal_file;
  bool take_complement = false;
  bool cover = false;
  bool gj = false;  // degree-(n-2) ideal with generators X_{[n] \ e}
  bool edge = false;
  int power_s = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--graph", graph_spec,
                    "builder name:args (complete:n, cycle:n, path:n, tree:n, "
                    "star:n, multipartite:a,b,...)");
    cmd->add_option("--graph-file", graph_file, "graph JSON file {n, edges}");
    cmd->add_option("--ideal-file", ideal_file, "ideal JSON file");
    cmd->add_flag("--complement", take_complement, "replace graph by its complement");
    cmd->add_flag("--cover", cover, "take the vertex cover ideal");
    cmd->add_flag("--gj", gj, "take the degree-(n-2) ideal over the edges");
    cmd->add_flag("--edge", edge, "take the edge ideal");
    cmd->add_option("--power", power_s, "power s of the ideal")->default_val(1);
  }

  bool has_graph() const { return !graph_spec.empty() || !graph_file.empty(); }

  SimpleGraph graph() const {
    if (!graph_spec.empty() && !graph_file.empty())
      throw InputError("--graph and --graph-file are mutually exclusive");
    SimpleGraph g;
    if (!graph_spec.empty())
      g = build_graph(graph_spec);
    else if (!graph_file.empty())
      g = graph_from_json(load_json_file(graph_file));
    else
      throw InputError("no graph given (--graph or --graph-file)");
    if (take_complement) g = complement(g);
    return g;
  }

  MonomialIdeal ideal() const {
    if (!ideal_file.empty()) {
      if (has_graph() || cover || gj || edge)
        throw InputError("--ideal-file excludes the graph options");
      MonomialIdeal I = ideal_from_json(load_json_file(ideal_file));
      return power_s == 1 ? I : power(I, power_s);
    }
    SimpleGraph g = graph();
    int picked = int(cover) + int(gj) + int(edge);
    if (picked != 1)
      throw InputError("pick exactly one of --cover, --gj, --edge");
    MonomialIdeal I = cover ? cover_ideal(g)
                    : gj    ? ideal_from_graph(g)
                            : edge_ideal(g);
    if (power_s < 1) throw InputError("--power must be >= 1");
    return power_s == 1 ? I : power(I, power_s);
  }
};

void print_ideal(const MonomialIdeal& I, bool as_json) {
  if (as_json) {
    std::cout << to_json(I).dump(2) << "\n";
    return;
  }
  std::cout << "n = " << I.ring->n << ", " << I.gens.size() << " generators\n";
  for (const auto& g : I.gens) std::cout << "  " << g.str() << "\n";
}

void print_betti(const BettiTable& t, bool as_json) {
  if (as_json)
    std::cout << to_json(t).dump(2) << "\n";
  else
    std::cout << betti_csv(t);
}

// ---- subcommand bodies ----------------------------------------------------

int cmd_ideal(const GlobalOpts& g, const IdealSource& src) {
  print_ideal(src.ideal(), g.as_json);
  return kExitOk;
}

int cmd_graph(const GlobalOpts& g, const IdealSource& src, bool covers) {
  SimpleGraph gr = src.graph();
  GraphStructure st = structure(gr);
  if (g.as_json) {
    json j;
    j["graph"] = to_json(gr);
    j["structure"] = {{"is_forest", st.is_forest},
                      {"is_connected", st.is_connected},
                      {"cyclomatic_number", st.cyclomatic_number},
                      {"odd_unicyclic", st.odd_unicyclic},
                      {"unique_cycle_length", st.unique_cycle_length}};
    if (covers) j["minimal_vertex_covers"] = minimal_vertex_covers(gr);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "n = " << gr.n << ", edges:";
    for (auto [a, b] : gr.edges) std::cout << " {" << a << "," << b << "}";
    std::cout << "\nconnected: " << (st.is_connected ? "yes" : "no")
              << ", forest: " << (st.is_forest ? "yes" : "no")
              << ", cyclomatic: " << st.cyclomatic_number
              << ", odd-unicyclic: " << (st.odd_unicyclic ? "yes" : "no");
    if (st.unique_cycle_length)
      std::cout << ", unique cycle length: " << st.unique_cycle_length;
    std::cout << "\n";
    if (covers) {
      std::cout << "minimal vertex covers:\n";
      for (const auto& c : minimal_vertex_covers(gr)) {
        std::cout << " ";
        for (int v : c) std::cout << " " << v;
        std::cout << "\n";
      }
    }
  }
  return kExitOk;
}

BettiTable betti_by_method(const MonomialIdeal& I, const std::string& method,
                           const GlobalOpts& g) {
  if (method == "lq") {
    auto res = compute_set_data(revlex_order(I));
    if (auto* sd = std::get_if<SetData>(&res))
      return betti_from_linear_quotients(*sd);
    auto search = find_linear_quotient_order(I);
    if (!search.order)
      throw PreconditionError(
          search.budget_exhausted
              ? "linear quotient search budget exhausted"
              : "ideal has no linear quotients");
    return betti_from_linear_quotients(require_set_data(*search.order));
  }
  if (method == "oracle") {
    // Oracle computes beta(S/I); shift down one homological index to the
    // I-table convention used everywhere else.
    BettiTable quotient = betti_table_oracle_full(I, g.field_spec(), g.resolved_jobs());
    BettiTable t;
    for (const auto& [ij, mult] : quotient.entries)
      if (ij.first >= 1) t.entries[{ij.first - 1, ij.second}] = mult;
    return t;
  }
  if (method == "formula") {
    SimpleGraph gr = graph_from_ideal(I);  // throws unless degree n-2
    GraphStructure st = structure(gr);
    if (!st.is_connected)
      throw PreconditionError("formula method needs a connected graph");
    Int n = gr.n, r = static_cast<Int>(gr.edges.size());
    auto triple = formulas::betti_connected_graph(r, n);
    BettiTable t;
    for (int i = 0; i < 3; ++i)
      if (triple[i] != 0) t.entries[{i, n - 2 + i}] = triple[i];
    return t;
  }
  throw InputError("unknown method: " + method);
}

int cmd_betti(const GlobalOpts& g, const IdealSource& src,
              const std::string& method, const std::string& check,
              const std::string& entry, const std::string& counterexample) {
  MonomialIdeal I = [&] {
    if (!counterexample.empty()) {
      SimpleGraph gr = counterexample == "G"   ? counterexample_graph_g()
                       : counterexample == "H" ? counterexample_graph_h()
                                               : throw InputError(
                                                     "--counterexample takes G or H");
      return power(cover_ideal(gr), 3);
    }
    return src.ideal();
  }();

  if (!entry.empty()) {
    auto ij = parse_int_list(entry);
    if (ij.size() != 2) throw InputError("--entry takes i,j");
    Int value;
    if (method == "oracle") {
      value = hochster_entry(I, ij[0], ij[1], g.field_spec(), g.resolved_jobs());
    } else {
      BettiTable t = betti_by_method(I, method, g);
      // Entry requests follow the S/I convention used in the source
      // material for the counterexample; shift from the I-table.
      value = t.at(ij[0] - 1, ij[1]);
    }
    if (g.as_json)
      std::cout << json{{"i", ij[0]}, {"j", ij[1]}, {"beta", value}}.dump() << "\n";
    else
      std::cout << value << "\n";
    return kExitOk;
  }

  BettiTable t = betti_by_method(I, method, g);
  if (!check.empty()) {
    BettiTable other = betti_by_method(I, check, g);
    if (!(t == other)) {
      std::cerr << "mismatch between " << method << " and " << check << "\n";
      print_betti(t, g.as_json);
      print_betti(other, g.as_json);
      return kExitMismatch;
    }
    if (!g.as_json) std::cout << "methods agree\n";
  }
  print_betti(t, g.as_json);
  return kExitOk;
}

int cmd_rees(const GlobalOpts& g, const IdealSource& src, int s_max) {
  MonomialIdeal J = src.ideal();
  // the Rees analysis applies to the degree-(n-2) squarefree case
  SimpleGraph gj = [&] {
    try {
      return graph_from_ideal(J);
    } catch (const std::exception& e) {
      throw PreconditionError(e.what());
    }
  }();
  LinearTypeReport lt = linear_type(J, s_max);
  json out;
  out["graph"] = to_json(gj);
  out["k1_count"] = k1_generators(J).size();
  out["linear_type"] = to_json(lt);
  if (lt.graph_verdict != GraphVerdict::other) {
    CiReport ci = ci_report(J);
    out["ci"] = to_json(ci);
    out["reduced_k1_count"] = ci.mu_k;
  }
  if (g.as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "G_J: " << out["linear_type"]["graph_verdict"].get<std::string>()
              << ", linear type: "
              << (lt.linear_type_by_graph() ? "yes" : "no / unknown") << "\n";
    if (lt.coincidence_found)
      std::cout << "coincidence witness at s = " << lt.witness_degree << "\n";
    else
      std::cout << "no binomial coincidence up to s = " << s_max << "\n";
    if (out.contains("ci"))
      std::cout << "verdict: " << out["ci"]["verdict"].get<std::string>()
                << " (mu = " << out["ci"]["mu_k"].get<Int>()
                << ", expected height = " << out["ci"]["expected_height"].get<Int>()
                << ")\n";
  }
  return kExitOk;
}

int cmd_reg(const GlobalOpts& g, const IdealSource& src, bool quotient) {
  MonomialIdeal I = src.ideal();
  auto res = compute_set_data(revlex_order(I));
  SetData sd = [&] {
    if (auto* p = std::get_if<SetData>(&res)) return *p;
    auto search = find_linear_quotient_order(I);
    if (!search.order) throw PreconditionError("no linear quotient order found");
    return require_set_data(*search.order);
  }();
  bool weighted = false;
  for (Int w : I.ring->weights)
    if (w != 1) weighted = true;
  BettiTable t = weighted ? weighted_betti(sd, I.ring->weights)
                          : betti_from_linear_quotients(sd);
  Int reg_i = regularity(t), pd_i = pdim(t);
  Int reg = quotient ? reg_i - 1 : reg_i;
  Int pd = quotient ? pd_i + 1 : pd_i;
  if (g.as_json)
    std::cout << json{{"module", quotient ? "S/I" : "I"},
                      {"reg", reg},
                      {"pdim", pd}}
                     .dump()
              << "\n";
  else
    std::cout << "reg(" << (quotient ? "S/I" : "I") << ") = " << reg
              << ", pdim = " << pd << "\n";
  return kExitOk;
}

int cmd_hilbert(const GlobalOpts& g, const IdealSource& src, Int d_max,
                const std::string& mode_name, int ci_n) {
  if (ci_n > 0) {
    BigradedSeries b = rees_hilbert_ci(ci_n, d_max, 3);
    json out;
    out["n"] = ci_n;
    out["d_max"] = d_max;
    out["c"] = b.c;
    std::cout << (g.as_json ? out.dump(2) : out.dump(2)) << "\n";
    return kExitOk;
  }
  HilbertMode mode;
  if (mode_name == "ideal")
    mode = HilbertMode::ideal;
  else if (mode_name == "quotient")
    mode = HilbertMode::quotient;
  else
    throw InputError("--mode takes ideal or quotient");
  MonomialIdeal I = src.ideal();
  auto v = hilbert_vector(I, d_max, mode);
  if (g.as_json) {
    std::cout << json{{"mode", mode_name}, {"values", v}}.dump() << "\n";
  } else {
    for (Int d = 0; d <= d_max; ++d)
      std::cout << d << " " << v[d] << "\n";
  }
  return kExitOk;
}

int cmd_formula(const GlobalOpts& g, const std::string& id, Int n, Int s, Int i,
                Int t, Int r, Int m, const std::string& parts) {
  json out;
  out["id"] = id;
  if (id == "betti-complete-power") {
    out["value"] = formulas::betti_complete_power(n, s, i);
  } else if (id == "betti-tree-complement-power") {
    out["value"] = formulas::betti_tree_complement_power(n, s, i);
  } else if (id == "betti-connected-graph") {
    auto tr = formulas::betti_connected_graph(r, n);
    out["value"] = {tr[0], tr[1], tr[2]};
  } else if (id == "betti-planar") {
    auto tr = formulas::betti_planar(n, m);
    out["value"] = {tr[0], tr[1], tr[2]};
  } else if (id == "reg-multipartite") {
    if (parts.empty()) throw InputError("reg-multipartite needs --parts");
    auto pv = parse_int_list(parts);
    std::vector<Int> w(pv.begin(), pv.end());
    out["value"] = formulas::reg_multipartite(w, s);
  } else if (id == "pdim-complete-power") {
    out["value"] = formulas::pdim_complete_power(n, s);
  } else if (id == "a-t") {
    out["value"] = formulas::a_t_formula(n, s, t);
  } else {
    throw InputError("unknown formula id: " + id);
  }
  if (g.as_json)
    std::cout << out.dump() << "\n";
  else
    std::cout << out["value"].dump() << "\n";
  return kExitOk;
}

int cmd_verify(const GlobalOpts& g, const std::string& which) {
  std::vector<VerifyResult> results;
  if (which == "all") {
    results = run_all_experiments(g.field_spec(), g.resolved_jobs());
  } else if (which == "list") {
    for (const auto& id : experiment_ids()) std::cout << id << "\n";
    return kExitOk;
  } else {
    results.push_back(run_experiment(which, g.field_spec(), g.resolved_jobs()));
  }
  bool all_ok = true;
  json out = json::array();
  for (const auto& res : results) {
    all_ok = all_ok && res.passed;
    out.push_back({{"id", res.id}, {"passed", res.passed}, {"detail", res.detail}});
    std::cout << (res.passed ? "PASS" : "FAIL") << " " << res.id << " — "
              << res.detail << "\n";
  }
  if (g.as_json) std::cout << out.dump(2) << "\n";
  return all_ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cover-ideal toolkit: Betti tables, linear quotients, "
               "Rees algebras, Hilbert functions"};
  app.require_subcommand(1);
  app.fallthrough();  // let global flags appear after the subcommand

  GlobalOpts g;
  app.add_flag("--json", g.as_json, "machine-readable JSON output");
  app.add_option("--field", g.field, "prime field characteristic for the oracle")
      ->default_val(32003u);
  app.add_option("--jobs", g.jobs, "parallel tasks (0 = auto)")->default_val(0);
  app.add_option("--seed", g.seed, "seed for randomized graph sweeps");

  IdealSource src_ideal, src_graph, src_betti, src_rees, src_reg, src_hilbert;

  auto* c_ideal = app.add_subcommand("ideal", "build and print a monomial ideal");
  src_ideal.attach(c_ideal);

  auto* c_graph = app.add_subcommand("graph", "inspect a graph");
  src_graph.attach(c_graph);
  bool covers = false;
  c_graph->add_flag("--covers", covers, "list minimal vertex covers");

  auto* c_betti = app.add_subcommand("betti", "graded Betti table of an ideal");
  src_betti.attach(c_betti);
  std::string method = "lq", check, entry, counterexample;
  c_betti->add_option("--method", method, "lq | oracle | formula")->default_val("lq");
  c_betti->add_option("--check", check, "second method to diff against");
  c_betti->add_option("--entry", entry, "single entry i,j (S/I convention)");
  c_betti->add_option("--counterexample", counterexample,
                      "built-in 7-vertex graph G or H, cube of its cover ideal");

  auto* c_rees = app.add_subcommand("rees", "Rees algebra relations and verdicts");
  src_rees.attach(c_rees);
  c_rees->add_option("--graph-gj", src_rees.graph_spec,
                     "builder for G_J (alias of --graph with --gj)");
  int s_max = 4;
  c_rees->add_option("--smax", s_max, "max T-degree for coincidence search")
      ->default_val(4);

  auto* c_reg = app.add_subcommand("reg", "regularity and projective dimension");
  src_reg.attach(c_reg);
  bool quotient = true;
  c_reg->add_flag("!--ideal-convention", quotient,
                  "report for I instead of S/I");

  auto* c_hilbert = app.add_subcommand("hilbert", "Hilbert function values");
  src_hilbert.attach(c_hilbert);
  Int d_max = 20;
  std::string mode_name = "ideal";
  int ci_n = 0;
  c_hilbert->add_option("--dmax", d_max, "top degree")->default_val(20);
  c_hilbert->add_option("--mode", mode_name, "ideal | quotient")->default_val("ideal");
  c_hilbert->add_option("--ci-series", ci_n,
                        "print the bigraded CI series for this n instead");

  auto* c_formula = app.add_subcommand("formula", "evaluate a closed formula");
  std::string fid, parts;
  Int fn = 0, fs = 0, fi = 0, ft = 0, fr = 0, fm = 0;
  c_formula->add_option("--id", fid, "formula id")->required();
  c_formula->add_option("--n", fn);
  c_formula->add_option("--s", fs);
  c_formula->add_option("--i", fi);
  c_formula->add_option("--t", ft);
  c_formula->add_option("--r", fr);
  c_formula->add_option("--m", fm);
  c_formula->add_option("--parts", parts, "comma-separated part sizes");

  auto* c_verify = app.add_subcommand("verify", "run named experiments");
  std::string which = "all";
  c_verify->add_option("id", which, "experiment id, 'all', or 'list'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (c_ideal->parsed()) return cmd_ideal(g, src_ideal);
    if (c_graph->parsed()) return cmd_graph(g, src_graph, covers);
    if (c_betti->parsed())
      return cmd_betti(g, src_betti, method, check, entry, counterexample);
    if (c_rees->parsed()) {
      if (!src_rees.graph_spec.empty() && !src_rees.cover && !src_rees.edge)
        src_rees.gj = true;
      return cmd_rees(g, src_rees, s_max);
    }
    if (c_reg->parsed()) return cmd_reg(g, src_reg, quotient);
    if (c_hilbert->parsed())
      return cmd_hilbert(g, src_hilbert, d_max, mode_name, ci_n);
    if (c_formula->parsed())
      return cmd_formula(g, fid, fn, fs, fi, ft, fr, fm, parts);
    if (c_verify->parsed()) return cmd_verify(g, which);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitInput;
}
