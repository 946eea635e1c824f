#include "cyclo/fp_kernels.hpp"

#include <cassert>
#include <cstdlib>

namespace cyclo::kernels {

std::string_view to_string(Path path) {
  switch (path) {
    case Path::Scalar: return "scalar";
    case Path::Avx2: return "avx2";
  }
  return "unknown";
}

Path detect_path() {
#if CYCLO_HAVE_AVX2_KERNELS
  static const Path detected = [] {
    // CYCLO_FORCE_SCALAR pins the reference path, mostly for benchmarking.
    if (std::getenv("CYCLO_FORCE_SCALAR") != nullptr) return Path::Scalar;
    __builtin_cpu_init();
    return (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) ? Path::Avx2 : Path::Scalar;
  }();
  return detected;
#else
  return Path::Scalar;
#endif
}

Path select_path(Residue p) {
  if (p > kSimdMaxModulus) return Path::Scalar;
  return detect_path();
}

void axpy_mod_scalar(std::span<Residue> dst, std::span<const Residue> src, Residue c, Residue p) {
  assert(dst.size() == src.size());
  if (c == 0) return;
  const std::uint64_t cc = c;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = static_cast<Residue>((dst[i] + cc * src[i]) % p);
  }
}

void scale_mod_scalar(std::span<Residue> dst, Residue c, Residue p) {
  const std::uint64_t cc = c;
  for (auto& x : dst) x = static_cast<Residue>(cc * x % p);
}

void axpy_mod(std::span<Residue> dst, std::span<const Residue> src, Residue c, Residue p) {
#if CYCLO_HAVE_AVX2_KERNELS
  if (select_path(p) == Path::Avx2) {
    axpy_mod_avx2(dst, src, c, p);
    return;
  }
#endif
  axpy_mod_scalar(dst, src, c, p);
}

void scale_mod(std::span<Residue> dst, Residue c, Residue p) {
#if CYCLO_HAVE_AVX2_KERNELS
  if (select_path(p) == Path::Avx2) {
    scale_mod_avx2(dst, c, p);
    return;
  }
#endif
  scale_mod_scalar(dst, c, p);
}

}  // namespace cyclo::kernels
