#ifndef COVERALG_VERIFY_HPP
#define COVERALG_VERIFY_HPP

#include <string>
#include <vector>

#include "coveralg/graph.hpp"
#include "coveralg/oracle.hpp"

namespace coveralg {

struct VerifyResult {
  std::string id;
  bool passed = false;
  std::string detail;
};

VerifyResult verify_counterexample(FieldSpec F, int jobs);
VerifyResult verify_mapping_cone_vs_oracle(int jobs);
VerifyResult verify_formula_checks(int jobs);
VerifyResult verify_regularity();
VerifyResult verify_linear_type();
VerifyResult verify_tree_hilbert_invariance();
VerifyResult verify_ci_structure();
VerifyResult verify_set_formula();
VerifyResult verify_chu_vandermonde();

std::vector<std::string> experiment_ids();
VerifyResult run_experiment(const std::string& id, FieldSpec F, int jobs);
std::vector<VerifyResult> run_all_experiments(FieldSpec F, int jobs);

// The two 7-vertex graphs whose cover-ideal cubes split the Betti tie.
SimpleGraph counterexample_graph_g();
SimpleGraph counterexample_graph_h();

}  // namespace coveralg

#endif
