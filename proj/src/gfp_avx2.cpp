#include "coveralg/gfp.hpp"

#if defined(__x86_64__)
#include <immintrin.h>

#include <bit>

namespace coveralg::gfp {

// Barrett reduction of 8 lanes x < 2^31 modulo p.
// magic = floor(2^shift / p) with shift = 30 + bit_width(p), so the
// quotient estimate is off by at most 2; two conditional subtracts fix it.
static inline __m256i reduce8(__m256i x, __m256i magic, __m256i pv,
                              __m256i pm1, int shift) {
  const __m256i lo32 = _mm256_set1_epi64x(0xffffffffll);
  __m256i xe = _mm256_and_si256(x, lo32);
  __m256i xo = _mm256_srli_epi64(x, 32);
  __m256i qe = _mm256_srli_epi64(_mm256_mul_epu32(xe, magic), shift);
  __m256i qo = _mm256_srli_epi64(_mm256_mul_epu32(xo, magic), shift);
  __m256i re = _mm256_sub_epi64(xe, _mm256_mul_epu32(qe, pv));
  __m256i ro = _mm256_sub_epi64(xo, _mm256_mul_epu32(qo, pv));
  __m256i r = _mm256_or_si256(_mm256_and_si256(re, lo32), _mm256_slli_epi64(ro, 32));
  __m256i p32 = _mm256_or_si256(pv, _mm256_slli_epi64(pv, 32));
  for (int it = 0; it < 2; ++it) {
    __m256i ge = _mm256_cmpgt_epi32(r, pm1);
    r = _mm256_sub_epi32(r, _mm256_and_si256(ge, p32));
  }
  return r;
}

void axpy_avx2(uint32_t* dst, const uint32_t* src, std::size_t len,
               uint32_t f, uint32_t p) {
  const int shift = 30 + std::bit_width(p);
  const uint64_t magic = (uint64_t{1} << shift) / p;
  const __m256i mv = _mm256_set1_epi64x(static_cast<long long>(magic));
  const __m256i pv = _mm256_set1_epi64x(p);
  const __m256i pm1 = _mm256_set1_epi32(static_cast<int>(p - 1));
  const __m256i fv = _mm256_set1_epi32(static_cast<int>(f));
  std::size_t k = 0;
  for (; k + 8 <= len; k += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k));
    __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, fv));
    x = reduce8(x, mv, pv, pm1, shift);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), x);
  }
  if (k < len) axpy_scalar(dst + k, src + k, len - k, f, p);
}

}  // namespace coveralg::gfp
#endif

namespace coveralg::gfp {

AxpyFn select_axpy(uint32_t p) {
#if defined(__x86_64__)
  if (p <= 46340 && __builtin_cpu_supports("avx2")) return axpy_avx2;
#endif
  return axpy_scalar;
}

const char* selected_kernel_name(uint32_t p) {
#if defined(__x86_64__)
  if (p <= 46340 && __builtin_cpu_supports("avx2")) return "avx2";
#endif
  return "scalar";
}

}  // namespace coveralg::gfp
