#include <algorithm>
#include <cmath>
#include <limits>

#include "degext/kernels.hpp"

namespace degext::kernels::scalar {

ModulusRange modulus_range(std::span<const cplx> values) {
  if (values.empty()) return {};
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const cplx& v : values) {
    const double sq = v.real() * v.real() + v.imag() * v.imag();
    lo = std::min(lo, sq);
    hi = std::max(hi, sq);
  }
  return {std::sqrt(lo), std::sqrt(hi)};
}

void turning_products(std::span<const cplx> values, std::span<cplx> out) {
  const std::size_t n = values.size();
  for (std::size_t k = 0; k < n; ++k) {
    const cplx& a = values[k];
    const cplx& b = values[k + 1 == n ? 0 : k + 1];
    // b * conj(a)
    out[k] = {b.real() * a.real() + b.imag() * a.imag(),
              b.imag() * a.real() - b.real() * a.imag()};
  }
}

cplx complex_dot(std::span<const cplx> a, std::span<const cplx> b) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    re += a[k].real() * b[k].real() - a[k].imag() * b[k].imag();
    im += a[k].real() * b[k].imag() + a[k].imag() * b[k].real();
  }
  return {re, im};
}

void blend_sqnorm_accumulate(std::span<const cplx> f, std::span<const cplx> g,
                             double lambda, std::span<double> acc) {
  const double mu = 1.0 - lambda;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double re = mu * f[k].real() + lambda * g[k].real();
    const double im = mu * f[k].imag() + lambda * g[k].imag();
    acc[k] += re * re + im * im;
  }
}

}  // namespace degext::kernels::scalar
