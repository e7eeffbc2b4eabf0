// Compiled with -mavx2 -mfma; only called after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "degext/kernels.hpp"

namespace degext::kernels::avx2 {

namespace {

// Two complex numbers per register: [re0, im0, re1, im1].
inline __m256d load2(const cplx* p) {
  return _mm256_loadu_pd(reinterpret_cast<const double*>(p));
}

inline void store2(cplx* p, __m256d v) {
  _mm256_storeu_pd(reinterpret_cast<double*>(p), v);
}

// |v|^2 duplicated into both lanes of each complex slot.
inline __m256d sqnorm2(__m256d v) {
  const __m256d sq = _mm256_mul_pd(v, v);
  return _mm256_hadd_pd(sq, sq);  // [s0, s0, s1, s1]
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

ModulusRange modulus_range(std::span<const cplx> values) {
  const std::size_t n = values.size();
  if (n == 0) return {};
  __m256d lo = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  __m256d hi = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d sq = sqnorm2(load2(values.data() + k));
    lo = _mm256_min_pd(lo, sq);
    hi = _mm256_max_pd(hi, sq);
  }
  alignas(32) double lo_lanes[4];
  alignas(32) double hi_lanes[4];
  _mm256_store_pd(lo_lanes, lo);
  _mm256_store_pd(hi_lanes, hi);
  double mn = *std::min_element(lo_lanes, lo_lanes + 4);
  double mx = *std::max_element(hi_lanes, hi_lanes + 4);
  for (; k < n; ++k) {
    const double sq = std::norm(values[k]);
    mn = std::min(mn, sq);
    mx = std::max(mx, sq);
  }
  return {std::sqrt(mn), std::sqrt(mx)};
}

void turning_products(std::span<const cplx> values, std::span<cplx> out) {
  const std::size_t n = values.size();
  if (n == 0) return;
  std::size_t k = 0;
  // out[k] = b * conj(a) with a = v[k], b = v[k+1]:
  //   re = br*ar + bi*ai, im = bi*ar - br*ai
  for (; k + 3 <= n; k += 2) {
    const __m256d a = load2(values.data() + k);
    const __m256d b = load2(values.data() + k + 1);
    const __m256d ar = _mm256_movedup_pd(a);       // [ar, ar, ...]
    const __m256d ai = _mm256_permute_pd(a, 0xF);  // [ai, ai, ...]
    const __m256d bswap = _mm256_permute_pd(b, 0x5);  // [bi, br, ...]
    // b*ar = [br*ar, bi*ar]; bswap*ai = [bi*ai, br*ai]
    const __m256d t = _mm256_mul_pd(bswap, ai);
    // want [br*ar + bi*ai, bi*ar - br*ai] = b*ar + [+t0, -t1]
    const __m256d sign = _mm256_set_pd(-1.0, 1.0, -1.0, 1.0);
    store2(out.data() + k, _mm256_fmadd_pd(t, sign, _mm256_mul_pd(b, ar)));
  }
  for (; k < n; ++k) {
    const cplx& a = values[k];
    const cplx& b = values[k + 1 == n ? 0 : k + 1];
    out[k] = {b.real() * a.real() + b.imag() * a.imag(),
              b.imag() * a.real() - b.real() * a.imag()};
  }
}

cplx complex_dot(std::span<const cplx> a, std::span<const cplx> b) {
  const std::size_t n = a.size();
  __m256d acc_re = _mm256_setzero_pd();  // lanes hold x*y products
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d x = load2(a.data() + k);
    const __m256d y = load2(b.data() + k);
    // x*y = [xr*yr, xi*yi] -> real part xr*yr - xi*yi
    acc_re = _mm256_fmadd_pd(x, y, acc_re);
    // x*swap(y) = [xr*yi, xi*yr] -> imag part sum
    acc_im = _mm256_fmadd_pd(x, _mm256_permute_pd(y, 0x5), acc_im);
  }
  alignas(32) double r[4];
  alignas(32) double i[4];
  _mm256_store_pd(r, acc_re);
  _mm256_store_pd(i, acc_im);
  double re = (r[0] - r[1]) + (r[2] - r[3]);
  double im = (i[0] + i[1]) + (i[2] + i[3]);
  for (; k < n; ++k) {
    re += a[k].real() * b[k].real() - a[k].imag() * b[k].imag();
    im += a[k].real() * b[k].imag() + a[k].imag() * b[k].real();
  }
  return {re, im};
}

void blend_sqnorm_accumulate(std::span<const cplx> f, std::span<const cplx> g,
                             double lambda, std::span<double> acc) {
  const std::size_t n = f.size();
  const __m256d mu = _mm256_set1_pd(1.0 - lambda);
  const __m256d la = _mm256_set1_pd(lambda);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d b0 = _mm256_fmadd_pd(la, load2(g.data() + k),
                                       _mm256_mul_pd(mu, load2(f.data() + k)));
    const __m256d b1 =
        _mm256_fmadd_pd(la, load2(g.data() + k + 2),
                        _mm256_mul_pd(mu, load2(f.data() + k + 2)));
    // hadd of squares: [s0, s2, s1, s3] for (b0, b1)
    const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(b0, b0),
                                     _mm256_mul_pd(b1, b1));
    const __m256d ordered = _mm256_permute4x64_pd(h, 0xD8);  // [s0,s1,s2,s3]
    _mm256_storeu_pd(acc.data() + k,
                     _mm256_add_pd(_mm256_loadu_pd(acc.data() + k), ordered));
  }
  const double m = 1.0 - lambda;
  for (; k < n; ++k) {
    const double re = m * f[k].real() + lambda * g[k].real();
    const double im = m * f[k].imag() + lambda * g[k].imag();
    acc[k] += re * re + im * im;
  }
}

}  // namespace degext::kernels::avx2
