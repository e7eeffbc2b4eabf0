#pragma once

#include <cstdint>
#include <vector>

#include "degext/boundary_maps.hpp"
#include "degext/degree_oracle.hpp"
#include "degext/domains.hpp"
#include "degext/extension.hpp"

namespace degext {

/// One-variable witness on a disc: g = -q - b makes u + g wind negatively.
struct Witness1D {
  CircleSplit split;
  HoloPoly g;
  cplx b;
  /// Grid point zeta_0 - a that produced b = conj(s(zeta_0 - a)).
  cplx grid_offset;
  int winding = 0;
  /// min |conj(s(zeta - a)) - b| on the circle.
  double margin = 0.0;
};

/// Throws DataExtends when s is constant, NoValidB when the 9 x 9 grid
/// search finds no admissible b. `skip` passes over that many admissible
/// grid points first, for callers that need a perturbed b.
Witness1D witness_1d(const UnivariateMixed& u, cplx center, double radius, int skip = 0);

/// Winding of zeta -> u(zeta) + g(zeta) on |zeta - center| = radius.
int witness_winding(const UnivariateMixed& u, cplx center, double radius, const HoloPoly& g);

/// P_1(z) = g(w_1) where w = frame.to_frame(z); a holomorphic polynomial.
MixedPolynomial lift_to_ambient(const HoloPoly& g, const Frame& frame);

struct WitnessOptions {
  std::uint64_t seed = 0;
  std::size_t line_count = 200;
  std::size_t boundary_samples = 4096;
  std::size_t slice_samples = 256;
  std::size_t lambda_steps = 33;
  double fourier_tol_scale = kFourierTolScale;
  double zero_tol_scale = 1e-9;
  double t_cap = 1099511627776.0;  // 2^40
  /// When the zero count meets an irregular zero, b moves to the next
  /// admissible grid point, at most this many times.
  int regularity_retries = 6;
  OracleOptions oracle;
};

struct TChoice {
  double T = 1.0;
  /// min |frame map|, min |coupled map|, sampled homotopy minimum, and the
  /// homotopy minimum after local refinement on bD x [0, 1].
  std::vector<double> margins;
};

/// Doubles T from `start` until the coupled map
///   z -> (Phi_c + P_1, w_2 + Phi_2 / T, ..., w_N + Phi_N / T)
/// is certified homotopic to the frame map z -> (Phi_c + P_1, w_2, ..., w_N)
/// through nonvanishing maps on sampled bD. w is the frame of `line`; the
/// remaining components of Phi keep their order. Throws SliceBoundaryZero or
/// TCapExceeded.
TChoice choose_T(const MixedMap& phi, const MixedPolynomial& p1, const Domain& domain,
                 const ComplexLine& line, int component, const WitnessOptions& options,
                 double start = 1.0);

struct WitnessReport {
  MixedMap P;
  ComplexLine line;
  int component = 0;
  DiscSlice slice;
  Witness1D one_dim;
  double T = 1.0;
  int slice_winding = 0;
  /// Zero-count oracle on Phi + P.
  DegreeCertificate ambient_degree;
  /// Slice winding of the frame map, carried to Phi + P by the homotopies.
  DegreeCertificate structured_degree;
  std::vector<double> homotopy_margins;
  /// min |Phi + P| on the boundary samples.
  double final_margin = 0.0;
};

/// Builds a holomorphic polynomial P with deg(Phi + P | bD) < 0, verified by
/// slice winding and by the zero-count oracle. Throws DataExtends when no
/// sampled line shows a non-extending component, OracleDisagreement when the
/// two degree computations differ.
WitnessReport assemble_witness(const MixedMap& phi, const Domain& domain,
                               const WitnessOptions& options = {});

struct LinearWitnessReport {
  /// Realification of a complex-linear map.
  RealLinearMap H;
  CMatrix H_complex;
  cplx alpha;
  cplx beta;
  double T = 1.0;
  int sign = 0;
  int component = 0;
  CVector direction;
};

/// For a real-linear A that is not complex linear, a complex-linear H with
/// A + H invertible and orientation reversing. Throws IsComplexLinear,
/// TCapExceeded.
LinearWitnessReport linear_witness(const RealLinearMap& A, double t_cap = 1099511627776.0);

}  // namespace degext
