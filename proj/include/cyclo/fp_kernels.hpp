#pragma once

// Row kernels for dense arithmetic mod a prime p < 2^31.
//
// Every kernel has a portable scalar reference version. An AVX2 version is
// compiled on x86-64 and picked at runtime when the CPU supports it and the
// modulus fits the vector path (p <= kSimdMaxModulus). Results are
// bit-identical across paths.

#include <cstdint>
#include <span>
#include <string_view>

namespace cyclo::kernels {

using Residue = std::uint32_t;

/// Products c*x + y must fit in 31 bits for the vector path.
inline constexpr Residue kSimdMaxModulus = 1u << 15;

enum class Path { Scalar, Avx2 };

std::string_view to_string(Path path);

/// Best path the running CPU supports (ignores the modulus).
Path detect_path();

/// Path actually used for modulus p.
Path select_path(Residue p);

// dst[i] = (dst[i] + c * src[i]) mod p. Entries of dst, src and c lie in [0, p).
void axpy_mod_scalar(std::span<Residue> dst, std::span<const Residue> src, Residue c, Residue p);
// dst[i] = c * dst[i] mod p.
void scale_mod_scalar(std::span<Residue> dst, Residue c, Residue p);

#if defined(__x86_64__) || defined(_M_X64)
#define CYCLO_HAVE_AVX2_KERNELS 1
void axpy_mod_avx2(std::span<Residue> dst, std::span<const Residue> src, Residue c, Residue p);
void scale_mod_avx2(std::span<Residue> dst, Residue c, Residue p);
#else
#define CYCLO_HAVE_AVX2_KERNELS 0
#endif

/// Dispatching entry points.
void axpy_mod(std::span<Residue> dst, std::span<const Residue> src, Residue c, Residue p);
void scale_mod(std::span<Residue> dst, Residue c, Residue p);

}  // namespace cyclo::kernels
