#include <arm_neon.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "degext/kernels.hpp"

namespace degext::kernels::neon {

namespace {

inline float64x2_t load1(const cplx* p) {
  return vld1q_f64(reinterpret_cast<const double*>(p));
}

}  // namespace

ModulusRange modulus_range(std::span<const cplx> values) {
  if (values.empty()) return {};
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const cplx& c : values) {
    const float64x2_t v = load1(&c);
    const double sq = vaddvq_f64(vmulq_f64(v, v));
    lo = std::min(lo, sq);
    hi = std::max(hi, sq);
  }
  return {std::sqrt(lo), std::sqrt(hi)};
}

void turning_products(std::span<const cplx> values, std::span<cplx> out) {
  const std::size_t n = values.size();
  const float64x2_t sign = {1.0, -1.0};
  for (std::size_t k = 0; k < n; ++k) {
    const float64x2_t a = load1(&values[k]);
    const float64x2_t b = load1(&values[k + 1 == n ? 0 : k + 1]);
    const float64x2_t ar = vdupq_laneq_f64(a, 0);
    const float64x2_t ai = vdupq_laneq_f64(a, 1);
    const float64x2_t bswap = vextq_f64(b, b, 1);  // [bi, br]
    const float64x2_t r =
        vfmaq_f64(vmulq_f64(b, ar), vmulq_f64(bswap, ai), sign);
    vst1q_f64(reinterpret_cast<double*>(&out[k]), r);
  }
}

cplx complex_dot(std::span<const cplx> a, std::span<const cplx> b) {
  float64x2_t acc_re = vdupq_n_f64(0.0);
  float64x2_t acc_im = vdupq_n_f64(0.0);
  for (std::size_t k = 0; k < a.size(); ++k) {
    const float64x2_t x = load1(&a[k]);
    const float64x2_t y = load1(&b[k]);
    acc_re = vfmaq_f64(acc_re, x, y);
    acc_im = vfmaq_f64(acc_im, x, vextq_f64(y, y, 1));
  }
  return {vgetq_lane_f64(acc_re, 0) - vgetq_lane_f64(acc_re, 1),
          vaddvq_f64(acc_im)};
}

void blend_sqnorm_accumulate(std::span<const cplx> f, std::span<const cplx> g,
                             double lambda, std::span<double> acc) {
  const float64x2_t mu = vdupq_n_f64(1.0 - lambda);
  const float64x2_t la = vdupq_n_f64(lambda);
  for (std::size_t k = 0; k < f.size(); ++k) {
    const float64x2_t v =
        vfmaq_f64(vmulq_f64(mu, load1(&f[k])), la, load1(&g[k]));
    acc[k] += vaddvq_f64(vmulq_f64(v, v));
  }
}

}  // namespace degext::kernels::neon
