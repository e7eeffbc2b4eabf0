#include "degext/winding.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <vector>

#include "degext/errors.hpp"
#include "degext/kernels.hpp"

namespace degext {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kQuarterTurn = std::numbers::pi / 2.0;

struct Increments {
  bool certified = false;
  double total = 0.0;
  double max_step = 0.0;
};

Increments sum_increments(std::span<const cplx> values) {
  std::vector<cplx> prod(values.size());
  kernels::turning_products(values, prod);
  Increments inc;
  inc.certified = true;
  for (const cplx& p : prod) {
    // |principal arg| < pi/2 exactly when the real part is positive.
    if (!(p.real() > 0.0)) inc.certified = false;
    const double step = std::atan2(p.imag(), p.real());
    inc.total += step;
    inc.max_step = std::max(inc.max_step, std::abs(step));
  }
  return inc;
}

WindingResult finish(const Increments& inc, double min_modulus, std::size_t n) {
  const double turns = inc.total / kTwoPi;
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) >= 0.01) {
    fail(ErrorKind::NoConvergence, "argument change is not an integer multiple of 2 pi");
  }
  return {static_cast<int>(rounded), min_modulus, inc.max_step, n};
}

void check_zero(const kernels::ModulusRange& range, double scale) {
  if (!(range.min > scale * range.max) || !std::isfinite(range.max)) {
    fail(ErrorKind::ZeroOnBoundary,
         "loop vanishes (or is non-finite) at a sample: min |f| = " +
             sci(range.min));
  }
}

}  // namespace

LoopFunction on_circle(std::function<cplx(cplx)> f, cplx center, double radius) {
  return [f = std::move(f), center, radius](double theta) {
    return f(center + radius * std::polar(1.0, theta));
  };
}

WindingResult winding_number(const LoopFunction& f, const WindingOptions& options) {
  std::size_t n = std::max<std::size_t>(options.initial_samples, 8);
  std::vector<cplx> values(n);
  for (std::size_t k = 0; k < n; ++k) {
    values[k] = f(kTwoPi * static_cast<double>(k) / static_cast<double>(n));
  }
  while (true) {
    const kernels::ModulusRange range = kernels::modulus_range(values);
    check_zero(range, options.zero_tol_scale);
    const Increments inc = sum_increments(values);
    if (inc.certified) return finish(inc, range.min, n);
    if (2 * n > options.max_samples) {
      fail(ErrorKind::NoConvergence,
           "winding not certified at " + std::to_string(n) + " samples");
    }
    std::vector<cplx> refined(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
      refined[2 * k] = values[k];
      refined[2 * k + 1] =
          f(kTwoPi * static_cast<double>(2 * k + 1) / static_cast<double>(2 * n));
    }
    values = std::move(refined);
    n *= 2;
  }
}

WindingResult winding_number(const SampledLoop& loop, double zero_tol_scale) {
  const kernels::ModulusRange range = kernels::modulus_range(loop.values);
  check_zero(range, zero_tol_scale);
  const Increments inc = sum_increments(loop.values);
  if (!inc.certified) {
    fail(ErrorKind::NoConvergence,
         "sampled loop too coarse: an argument increment reaches pi/2");
  }
  return finish(inc, range.min, loop.size());
}

FourierCoefficients fourier_coefficients(const LoopFunction& f, int kmin, int kmax,
                                         std::size_t samples) {
  if (kmin > kmax) fail(ErrorKind::InvalidInput, "empty frequency range");
  std::size_t n = samples;
  if (n == 0) {
    const auto reach = static_cast<std::size_t>(std::max(std::abs(kmin), std::abs(kmax)));
    n = 64;
    while (n < 8 * (reach + 1)) n *= 2;
  }
  std::vector<cplx> values(n);
  for (std::size_t j = 0; j < n; ++j) {
    values[j] = f(kTwoPi * static_cast<double>(j) / static_cast<double>(n));
  }
  return fourier_coefficients(SampledLoop::uniform(std::move(values)), kmin, kmax);
}

FourierCoefficients fourier_coefficients(const SampledLoop& loop, int kmin, int kmax) {
  if (kmin > kmax) fail(ErrorKind::InvalidInput, "empty frequency range");
  const std::size_t n = loop.size();
  std::vector<double> weight(n);
  if (loop.is_uniform()) {
    std::fill(weight.begin(), weight.end(), 1.0 / static_cast<double>(n));
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      const double prev = j == 0 ? loop.theta[n - 1] - kTwoPi : loop.theta[j - 1];
      const double next = j + 1 == n ? loop.theta[0] + kTwoPi : loop.theta[j + 1];
      weight[j] = 0.5 * (next - prev) / kTwoPi;
    }
  }
  FourierCoefficients out;
  std::vector<cplx> twiddle(n);
  for (int k = kmin; k <= kmax; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      twiddle[j] = weight[j] * std::polar(1.0, -static_cast<double>(k) * loop.theta[j]);
    }
    out[k] = kernels::complex_dot(loop.values, twiddle);
  }
  return out;
}

void write_loop_csv(std::ostream& out, const SampledLoop& loop) {
  out << "theta,re,im\n";
  out.precision(17);
  for (std::size_t k = 0; k < loop.size(); ++k) {
    out << loop.theta[k] << ',' << loop.values[k].real() << ',' << loop.values[k].imag()
        << '\n';
  }
}

}  // namespace degext
