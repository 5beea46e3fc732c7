#include "coveralg/gfp.hpp"

#include <stdexcept>

namespace coveralg::gfp {

void axpy_scalar(uint32_t* dst, const uint32_t* src, std::size_t len,
                 uint32_t f, uint32_t p) {
  for (std::size_t k = 0; k < len; ++k) {
    dst[k] = static_cast<uint32_t>((dst[k] + static_cast<uint64_t>(f) * src[k]) % p);
  }
}

uint32_t inv_mod(uint32_t a, uint32_t p) {
  // Fermat
  uint64_t base = a % p, acc = 1;
  uint32_t e = p - 2;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(acc);
}

std::size_t rank(DenseMat& m, uint32_t p) {
  if (p < 2) throw std::invalid_argument("rank: p must be >= 2");
  AxpyFn axpy = select_axpy(p);
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols && r < m.rows; ++col) {
    std::size_t piv = r;
    while (piv < m.rows && m.row(piv)[col] == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r) {
      uint32_t* a = m.row(piv);
      uint32_t* b = m.row(r);
      for (std::size_t k = col; k < m.cols; ++k) std::swap(a[k], b[k]);
    }
    uint32_t* prow = m.row(r);
    uint32_t inv = inv_mod(prow[col], p);
    if (inv != 1) {
      for (std::size_t k = col; k < m.cols; ++k)
        prow[k] = static_cast<uint32_t>(static_cast<uint64_t>(prow[k]) * inv % p);
    }
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      uint32_t v = m.row(i)[col];
      if (v == 0) continue;
      // f = -v mod p
      axpy(m.row(i) + col, prow + col, m.cols - col, p - v, p);
    }
    ++r;
  }
  return r;
}

}  // namespace coveralg::gfp
