#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>

#include "degext/boundary_maps.hpp"

namespace degext {

/// Degree of a circle map into C \ {0}.
struct WindingResult {
  int winding = 0;
  double min_modulus = 0.0;
  /// Largest |arg(v_{k+1} / v_k)| over consecutive samples; < pi/2 when
  /// certified.
  double max_angular_step = 0.0;
  std::size_t samples_used = 0;
};

/// A loop given as theta -> value on [0, 2 pi).
using LoopFunction = std::function<cplx(double theta)>;

/// theta -> f(center + radius e^{i theta}).
LoopFunction on_circle(std::function<cplx(cplx)> f, cplx center, double radius);

struct WindingOptions {
  std::size_t initial_samples = 64;
  std::size_t max_samples = std::size_t{1} << 20;
  /// Samples with |f| below this multiple of max |f| count as boundary zeros.
  double zero_tol_scale = 1e-9;
};

/// Change of argument / 2 pi. The sample count doubles until every
/// consecutive principal-argument increment is below pi/2.
/// Throws ZeroOnBoundary or NoConvergence.
WindingResult winding_number(const LoopFunction& f, const WindingOptions& options = {});

/// Winding of fixed samples; NoConvergence if they are too coarse to certify.
WindingResult winding_number(const SampledLoop& loop, double zero_tol_scale = 1e-9);

using FourierCoefficients = std::map<int, cplx>;

/// c_k with f = sum c_k e^{ik theta}, for kmin <= k <= kmax. Uses `samples`
/// uniform points, or 8 (max |k| + 1) rounded up to a power of two (>= 64)
/// when samples == 0.
FourierCoefficients fourier_coefficients(const LoopFunction& f, int kmin, int kmax,
                                         std::size_t samples = 0);

/// Periodic trapezoid rule on the loop's own angles.
FourierCoefficients fourier_coefficients(const SampledLoop& loop, int kmin, int kmax);

/// Writes "theta,re,im" rows with a header line.
void write_loop_csv(std::ostream& out, const SampledLoop& loop);

}  // namespace degext
