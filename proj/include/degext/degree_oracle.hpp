#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "degext/boundary_maps.hpp"
#include "degext/domains.hpp"
#include "degext/kernels.hpp"
#include "degext/winding.hpp"

namespace degext {

/// A map C^N -> C^N evaluated into a caller-provided buffer.
class MapOracle {
 public:
  using Fn = std::function<void(std::span<const cplx>, std::span<cplx>)>;

  MapOracle(int dim, Fn fn);
  static MapOracle from(MixedMap map);

  int dim() const { return dim_; }
  void operator()(std::span<const cplx> z, std::span<cplx> out) const { fn_(z, out); }
  CVector operator()(const CVector& z) const;

 private:
  int dim_;
  Fn fn_;
};

/// Real 2N x 2N matrix acting on C^N = R^{2N} with coordinates ordered
/// (x_1, y_1, ..., x_N, y_N).
class RealLinearMap {
 public:
  explicit RealLinearMap(Eigen::MatrixXd matrix);

  /// Realification of a complex N x N matrix.
  static RealLinearMap realify(const CMatrix& m);
  /// Realification of z -> conj(B z) style maps: z -> B conj(z).
  static RealLinearMap realify_antilinear(const CMatrix& b);
  /// J, multiplication by i.
  static RealLinearMap multiplication_by_i(int n);

  const Eigen::MatrixXd& matrix() const { return m_; }
  int complex_dim() const { return static_cast<int>(m_.rows() / 2); }
  CVector apply(const CVector& z) const;

  RealLinearMap operator+(const RealLinearMap& other) const;

 private:
  Eigen::MatrixXd m_;
};

Eigen::VectorXd to_real(std::span<const cplx> z);
CVector to_complex(const Eigen::VectorXd& x);

/// +1 or -1; SingularMap when |det| <= 1e-12.
int orientation_sign(const RealLinearMap& m);

/// ||M J - J M||_inf < 1e-10.
bool is_complex_linear(const RealLinearMap& m);

struct OracleZero {
  Eigen::VectorXd location;  // R^{2N}
  int jacobian_sign = 0;
  double residual_norm = 0.0;
  double jacobian_det = 0.0;
};

enum class DegreeMethod { ZeroCount, SliceWinding };

/// An integer degree plus the evidence for it.
struct DegreeCertificate {
  int degree = 0;
  DegreeMethod method = DegreeMethod::ZeroCount;
  std::vector<OracleZero> zeros;
  /// min |G| over the sampled boundary (or slice circle).
  double boundary_margin = 0.0;
  std::optional<DiscSlice> slice;
  std::optional<WindingResult> winding;
  int grid_density = 0;
  std::size_t starts = 0;
};

struct OracleOptions {
  int grid_density = 4;
  std::size_t random_starts = 32;
  std::uint64_t seed = 0;
  std::size_t boundary_samples = 2048;
  double zero_tol_scale = 1e-9;
  double dedup_radius_scale = 1e-6;
  /// Re-run at twice the grid density and require the same zero set.
  bool check_doubling = true;
};

/// Signed count of regular zeros of G in D. Throws ZeroOnBoundary,
/// IrregularZero, SuspectMissedZeros. Dimension is capped at N <= 3.
DegreeCertificate zero_count_degree(const MapOracle& g, const Domain& domain,
                                    const OracleOptions& options = {});

struct HomotopyResult {
  bool ok = false;
  double min_modulus = 0.0;
  double lambda_at_min = 0.0;
  std::size_t point_at_min = 0;
};

/// Checks |(1 - lambda) F + lambda G| > zero tolerance on the boundary
/// samples for lambda on a uniform grid of `lambda_steps` (>= 33) values.
HomotopyResult homotopy_nonvanishing(const MapOracle& f, const MapOracle& g,
                                     std::span<const CVector> boundary,
                                     std::size_t lambda_steps = 33,
                                     double zero_tol_scale = 1e-9);

/// Process-wide counters over zero_count_degree calls.
struct OracleStats {
  std::size_t runs = 0;
  std::size_t doubling_checks = 0;
  /// Calls that returned a certificate, and those among them that passed
  /// the grid-doubling comparison.
  std::size_t verdicts = 0;
  std::size_t checked_verdicts = 0;
  std::size_t suspect_missed_zeros = 0;
  std::size_t irregular_zeros = 0;
};

OracleStats oracle_stats();
void reset_oracle_stats();

/// min_k |G(z_k)| and max_k |G(z_k)|.
kernels::ModulusRange boundary_modulus(const MapOracle& g, std::span<const CVector> boundary);

}  // namespace degext
