#ifndef COVERALG_GFP_HPP
#define COVERALG_GFP_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace coveralg::gfp {

// Prime field GF(p). Kernels operate on rows of uint32_t values < p.
// The hot loop of the homology oracle is row elimination, so the axpy
// kernel has a scalar reference implementation and an AVX2 variant
// chosen at runtime. Both must agree bit for bit.

inline bool is_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// dst[k] = (dst[k] + f * src[k]) mod p
using AxpyFn = void (*)(uint32_t* dst, const uint32_t* src, std::size_t len,
                        uint32_t f, uint32_t p);

void axpy_scalar(uint32_t* dst, const uint32_t* src, std::size_t len,
                 uint32_t f, uint32_t p);

#if defined(__x86_64__)
// Valid for p <= 46340 (so a + f*b < 2^31 fits a 32-bit lane).
void axpy_avx2(uint32_t* dst, const uint32_t* src, std::size_t len,
               uint32_t f, uint32_t p);
#endif

// Runtime selection: AVX2 when the CPU has it and p is small enough,
// scalar otherwise.
AxpyFn select_axpy(uint32_t p);
const char* selected_kernel_name(uint32_t p);

uint32_t inv_mod(uint32_t a, uint32_t p);

// Dense row-major matrix over GF(p).
struct DenseMat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<uint32_t> a;

  DenseMat() = default;
  DenseMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  uint32_t* row(std::size_t i) { return a.data() + i * cols; }
  const uint32_t* row(std::size_t i) const { return a.data() + i * cols; }
};

// Destructive row-echelon rank.
std::size_t rank(DenseMat& m, uint32_t p);

}  // namespace coveralg::gfp

#endif
