#include "cyclo/fp_kernels.hpp"

#if CYCLO_HAVE_AVX2_KERNELS

#include <immintrin.h>

#include <cassert>

namespace cyclo::kernels {
namespace {

// Reduce eight non-negative lanes x < 2^31 modulo p using a double-precision
// quotient estimate. The estimate is off by at most one, fixed below.
__attribute__((target("avx2,fma"))) inline __m256i reduce8(__m256i x, __m256d pd, __m256d inv_p, __m256i pv) {
  const __m128i lo = _mm256_castsi256_si128(x);
  const __m128i hi = _mm256_extracti128_si256(x, 1);
  const __m256d xlo = _mm256_cvtepi32_pd(lo);
  const __m256d xhi = _mm256_cvtepi32_pd(hi);
  const __m256d qlo = _mm256_floor_pd(_mm256_mul_pd(xlo, inv_p));
  const __m256d qhi = _mm256_floor_pd(_mm256_mul_pd(xhi, inv_p));
  const __m256d rlo = _mm256_fnmadd_pd(qlo, pd, xlo);
  const __m256d rhi = _mm256_fnmadd_pd(qhi, pd, xhi);
  __m256i r = _mm256_set_m128i(_mm256_cvtpd_epi32(rhi), _mm256_cvtpd_epi32(rlo));
  // r in [-p, 2p): fold into [0, p).
  const __m256i neg = _mm256_cmpgt_epi32(_mm256_setzero_si256(), r);
  r = _mm256_add_epi32(r, _mm256_and_si256(neg, pv));
  const __m256i big = _mm256_cmpgt_epi32(r, _mm256_sub_epi32(pv, _mm256_set1_epi32(1)));
  r = _mm256_sub_epi32(r, _mm256_and_si256(big, pv));
  return r;
}

}  // namespace

__attribute__((target("avx2,fma"))) void axpy_mod_avx2(std::span<Residue> dst, std::span<const Residue> src,
                                                        Residue c, Residue p) {
  assert(dst.size() == src.size());
  assert(p <= kSimdMaxModulus);
  if (c == 0) return;
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d inv_p = _mm256_set1_pd(1.0 / static_cast<double>(p));
  std::size_t i = 0;
  const std::size_t n = dst.size();
  for (; i + 8 <= n; i += 8) {
    auto* d = reinterpret_cast<__m256i*>(dst.data() + i);
    const auto* s = reinterpret_cast<const __m256i*>(src.data() + i);
    __m256i x = _mm256_add_epi32(_mm256_loadu_si256(d), _mm256_mullo_epi32(cv, _mm256_loadu_si256(s)));
    _mm256_storeu_si256(d, reduce8(x, pd, inv_p, pv));
  }
  for (; i < n; ++i) {
    dst[i] = (dst[i] + c * src[i]) % p;
  }
}

__attribute__((target("avx2,fma"))) void scale_mod_avx2(std::span<Residue> dst, Residue c, Residue p) {
  assert(p <= kSimdMaxModulus);
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d inv_p = _mm256_set1_pd(1.0 / static_cast<double>(p));
  std::size_t i = 0;
  const std::size_t n = dst.size();
  for (; i + 8 <= n; i += 8) {
    auto* d = reinterpret_cast<__m256i*>(dst.data() + i);
    __m256i x = _mm256_mullo_epi32(cv, _mm256_loadu_si256(d));
    _mm256_storeu_si256(d, reduce8(x, pd, inv_p, pv));
  }
  for (; i < n; ++i) {
    dst[i] = c * dst[i] % p;
  }
}

}  // namespace cyclo::kernels

#endif
