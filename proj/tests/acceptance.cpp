// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <cstdlib>
#include <iostream>
#include <thread>

#include "coveralg/verify.hpp"

int main() {
  using namespace coveralg;
  FieldSpec F{32003};
  unsigned hc = std::thread::hardware_concurrency();
  int jobs = hc ? static_cast<int>(hc) : 1;

  bool ok = true;
  for (const auto& id : experiment_ids()) {
    VerifyResult res = run_experiment(id, F, jobs);
    ok = ok && res.passed;
    std::cout << (res.passed ? "PASS" : "FAIL") << " " << res.id << " — "
              << res.detail << std::endl;
  }
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
