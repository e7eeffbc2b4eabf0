#include <atomic>
#include <string>

#include "degext/errors.hpp"
#include "degext/kernels.hpp"

namespace degext::kernels {

std::string_view to_string(Backend backend) {
  switch (backend) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "unknown";
}

bool backend_supported(Backend backend) {
  switch (backend) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if defined(DEGEXT_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Backend::Neon:
#if defined(DEGEXT_HAVE_NEON_KERNELS)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Backend detect_backend() {
  if (backend_supported(Backend::Avx2)) return Backend::Avx2;
  if (backend_supported(Backend::Neon)) return Backend::Neon;
  return Backend::Scalar;
}

namespace {

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{detect_backend()};
  return backend;
}

}  // namespace

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void force_backend(Backend backend) {
  if (!backend_supported(backend)) {
    fail(ErrorKind::InvalidInput,
         "kernel backend not supported here: " + std::string(to_string(backend)));
  }
  current().store(backend, std::memory_order_relaxed);
}

#if defined(DEGEXT_HAVE_AVX2_KERNELS)
#define DEGEXT_AVX2_CASE(call) \
  case Backend::Avx2:          \
    return avx2::call;
#else
#define DEGEXT_AVX2_CASE(call)
#endif

#if defined(DEGEXT_HAVE_NEON_KERNELS)
#define DEGEXT_NEON_CASE(call) \
  case Backend::Neon:          \
    return neon::call;
#else
#define DEGEXT_NEON_CASE(call)
#endif

#define DEGEXT_DISPATCH(call)    \
  switch (active_backend()) {    \
    DEGEXT_AVX2_CASE(call)       \
    DEGEXT_NEON_CASE(call)       \
    default:                     \
      return scalar::call;       \
  }

ModulusRange modulus_range(std::span<const cplx> values) {
  DEGEXT_DISPATCH(modulus_range(values))
}

void turning_products(std::span<const cplx> values, std::span<cplx> out) {
  DEGEXT_DISPATCH(turning_products(values, out))
}

cplx complex_dot(std::span<const cplx> a, std::span<const cplx> b) {
  DEGEXT_DISPATCH(complex_dot(a, b))
}

void blend_sqnorm_accumulate(std::span<const cplx> f, std::span<const cplx> g,
                             double lambda, std::span<double> acc) {
  DEGEXT_DISPATCH(blend_sqnorm_accumulate(f, g, lambda, acc))
}

}  // namespace degext::kernels
