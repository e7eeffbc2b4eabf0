#pragma once

// Data-parallel inner loops over sampled complex values.
//
// Every kernel has a scalar reference implementation and vectorized variants
// (AVX2+FMA on x86-64, NEON on aarch64). The variant is picked once at
// runtime from CPU features; force_backend() pins one for equivalence tests.
// Complex arrays are std::complex<double> (interleaved re, im).

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace degext::kernels {

using cplx = std::complex<double>;

enum class Backend { Scalar, Avx2, Neon };

std::string_view to_string(Backend backend);

bool backend_supported(Backend backend);

/// Best backend available on this CPU.
Backend detect_backend();

Backend active_backend();

/// Pins the backend used by the dispatching entry points. Throws
/// degext::Error(InvalidInput) if the CPU or the build lacks it.
void force_backend(Backend backend);

struct ModulusRange {
  double min = 0.0;
  double max = 0.0;
};

/// min and max of |v_k|. Empty input yields {0, 0}.
ModulusRange modulus_range(std::span<const cplx> values);

/// out[k] = v[(k+1) mod n] * conj(v[k]). Its argument is the principal
/// increment of arg v between consecutive samples of a closed loop.
void turning_products(std::span<const cplx> values, std::span<cplx> out);

/// sum_k a[k] * b[k].
cplx complex_dot(std::span<const cplx> a, std::span<const cplx> b);

/// acc[k] += |(1 - lambda) f[k] + lambda g[k]|^2.
void blend_sqnorm_accumulate(std::span<const cplx> f, std::span<const cplx> g,
                             double lambda, std::span<double> acc);

/// Per-backend entry points, used by the dispatcher and the equivalence tests.
namespace scalar {
ModulusRange modulus_range(std::span<const cplx> values);
void turning_products(std::span<const cplx> values, std::span<cplx> out);
cplx complex_dot(std::span<const cplx> a, std::span<const cplx> b);
void blend_sqnorm_accumulate(std::span<const cplx> f, std::span<const cplx> g,
                             double lambda, std::span<double> acc);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define DEGEXT_HAVE_AVX2_KERNELS 1
namespace avx2 {
ModulusRange modulus_range(std::span<const cplx> values);
void turning_products(std::span<const cplx> values, std::span<cplx> out);
cplx complex_dot(std::span<const cplx> a, std::span<const cplx> b);
void blend_sqnorm_accumulate(std::span<const cplx> f, std::span<const cplx> g,
                             double lambda, std::span<double> acc);
}  // namespace avx2
#endif

#if defined(__aarch64__)
#define DEGEXT_HAVE_NEON_KERNELS 1
namespace neon {
ModulusRange modulus_range(std::span<const cplx> values);
void turning_products(std::span<const cplx> values, std::span<cplx> out);
cplx complex_dot(std::span<const cplx> a, std::span<const cplx> b);
void blend_sqnorm_accumulate(std::span<const cplx> f, std::span<const cplx> g,
                             double lambda, std::span<double> acc);
}  // namespace neon
#endif

}  // namespace degext::kernels
