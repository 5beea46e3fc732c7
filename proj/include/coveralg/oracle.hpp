#ifndef COVERALG_ORACLE_HPP
#define COVERALG_ORACLE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "coveralg/linquot.hpp"
#include "coveralg/monomial.hpp"

namespace coveralg {

struct FieldSpec {
  uint32_t p = 32003;  // prime characteristic
};

// Squarefree image of an ideal with the same graded Betti numbers.
struct PolarizedIdeal {
  RingPtr original_ring;
  int var_count = 0;                          // polarized variables
  std::vector<std::pair<int, int>> slots;     // polarized index -> (variable, occurrence), 1-based
  std::vector<uint32_t> gen_supports;         // one bitmask per generator
  std::vector<Int> gen_degrees;
};

PolarizedIdeal polarize(const MonomialIdeal& I);

// dim of reduced homology H~_d of the complex on the given vertices whose
// minimal nonfaces are the listed supports, over GF(p). d = -1 allowed.
// Vertices are bit indices into the nonface masks (vertex v <-> bit v).
Int homology_rank(const std::vector<int>& vertices,
                  const std::vector<uint32_t>& nonfaces, Int d, FieldSpec F);

// beta_{i,j}(S/I) by Hochster's formula on the polarization.
Int hochster_entry(const MonomialIdeal& I, Int i, Int j, FieldSpec F, int jobs = 1);
Int hochster_entry(const PolarizedIdeal& P, Int i, Int j, FieldSpec F, int jobs = 1);

// Table of beta_{i,j}(S/I) over an explicit list of bidegrees.
BettiTable betti_table_oracle(const MonomialIdeal& I,
                              const std::vector<std::pair<Int, Int>>& window,
                              FieldSpec F, int jobs = 1, int var_cap = 22);

// Window covering a full sweep: all (i,j) with 1 <= i <= polarized vars + 1
// and j <= polarized var count.
BettiTable betti_table_oracle_full(const MonomialIdeal& I, FieldSpec F,
                                   int jobs = 1, int var_cap = 22);

}  // namespace coveralg

#endif
