#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "degext/boundary_maps.hpp"
#include "degext/degree_oracle.hpp"
#include "degext/domains.hpp"
#include "degext/winding.hpp"

namespace degext {

/// Whether boundary data extends holomorphically, with the evidence.
struct ExtensionVerdict {
  bool extends = true;
  /// Largest |c_k|, k < 0, seen on the reported slice.
  double defect = 0.0;
  double tolerance = 0.0;
  std::optional<ComplexLine> witness_line;
  std::optional<DiscSlice> witness_slice;
  /// Failing component (0-based) on the witness line.
  std::optional<int> component;
  /// k -> |c_k| for k < 0 on the reported slice.
  std::map<int, double> coefficient_table;
  std::size_t lines_tested = 0;
  /// True when the verdict rests on a finite family of sampled lines.
  bool sampled = false;
};

inline constexpr double kFourierTolScale = 1e-8;

/// Extends through the disc iff every negative Fourier coefficient of u on
/// the boundary circle is below tol_scale * (1 + max |u|).
ExtensionVerdict disc_extension_test(const UnivariateMixed& u, cplx center, double radius,
                                     double tol_scale = kFourierTolScale);

/// Same test on fixed samples; frequencies down to -(n/2 - 1) are checked.
ExtensionVerdict disc_extension_test(const SampledLoop& loop,
                                     double tol_scale = kFourierTolScale);

struct LineFamilyOptions {
  std::size_t line_count = 200;
  std::uint64_t seed = 0;
  /// Test the coordinate axes through the domain center before random lines.
  bool include_axes = true;
  double fourier_tol_scale = kFourierTolScale;
  /// Restrict the test to one component.
  std::optional<int> only_component;
};

/// Axes through the center (optional), then lines with base uniform in the
/// concentric half-size domain and direction uniform on the unit sphere.
std::vector<ComplexLine> sample_lines(const Domain& domain, std::size_t count,
                                      std::uint64_t seed, bool include_axes);

/// Runs disc_extension_test on every component restricted to every sampled
/// line; stops at the first failing line.
ExtensionVerdict line_family_extension_test(const MixedMap& phi, const Domain& domain,
                                            const LineFamilyOptions& options = {});

using ScalarFunction = std::function<cplx(std::span<const cplx>)>;

/// z -> (phi(z), w_2, ..., w_N) where w = U (z - Z) is the canonical frame of
/// the line.
MapOracle structured_map(ScalarFunction phi, const ComplexLine& line);

/// Degree of structured_map(phi, line) on bD, computed as the winding of
/// zeta -> phi(Z + zeta W) on the slice circle. Throws NonTransverseLine or
/// ZeroOnSliceBoundary.
DegreeCertificate structured_degree(const ScalarFunction& phi, const Domain& domain,
                                    const ComplexLine& line,
                                    const WindingOptions& options = {});
DegreeCertificate structured_degree(const MixedPolynomial& phi, const Domain& domain,
                                    const ComplexLine& line,
                                    const WindingOptions& options = {});

/// If the map is (phi, c_2 z_2, ..., c_N z_N) with nonzero constants c_j,
/// returns phi.
std::optional<MixedPolynomial> structured_component(const MixedMap& map);

struct ScaledDegreeResult {
  int before = 0;
  int after = 0;
  DegreeMethod method_before = DegreeMethod::ZeroCount;
  DegreeMethod method_after = DegreeMethod::ZeroCount;
  /// Linear homotopy between the map and its scaling on sampled bD.
  HomotopyResult homotopy;

  bool equal() const { return before == after; }
};

/// Degrees of Phi and (t_1 Phi_1, ..., t_N Phi_N), t_j > 0. Uses the slice
/// winding when the map is structured along the z_1-axis, else the zero
/// count.
ScaledDegreeResult scaled_degree_check(const MixedMap& phi, const Domain& domain,
                                       std::span<const double> t,
                                       const OracleOptions& options = {});

/// Oracle-only variant for arbitrary maps.
ScaledDegreeResult scaled_degree_check(const MapOracle& phi, const Domain& domain,
                                       std::span<const double> t,
                                       const OracleOptions& options = {});

}  // namespace degext
