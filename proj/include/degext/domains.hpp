#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace degext {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// A point z = (z_1, ..., z_N) of C^N with finite coordinates.
class ComplexPoint {
 public:
  explicit ComplexPoint(CVector coords);
  ComplexPoint(std::initializer_list<cplx> coords);

  static ComplexPoint zero(int dim);

  int dim() const { return static_cast<int>(coords_.size()); }
  const CVector& coords() const { return coords_; }
  cplx operator[](int j) const { return coords_[j]; }
  std::span<const cplx> span() const { return {coords_.data(), static_cast<std::size_t>(coords_.size())}; }

 private:
  CVector coords_;
};

/// Open Euclidean ball.
struct Ball {
  Ball(ComplexPoint center, double radius);

  ComplexPoint center;
  double radius;
};

/// {z : (z - c)^* Q (z - c) < 1} for a positive-definite Hermitian Q.
struct HermitianEllipsoid {
  HermitianEllipsoid(ComplexPoint center, CMatrix form);

  ComplexPoint center;
  CMatrix form;
  /// Q^{-1/2}; maps the unit sphere onto the boundary (after translation).
  CMatrix inverse_sqrt;
  /// Largest semi-axis, 1/sqrt(lambda_min(Q)).
  double max_semi_axis;
};

/// Affine complex line {Z + zeta W}, ||W|| = 1.
class ComplexLine {
 public:
  /// Validates ||direction|| = 1 within 1e-12.
  ComplexLine(ComplexPoint base, ComplexPoint direction);

  /// Normalizes the direction first; rejects a zero direction.
  static ComplexLine through(ComplexPoint base, const CVector& direction);

  /// The z_j-axis translated to pass through base.
  static ComplexLine axis(const ComplexPoint& base, int j);

  const ComplexPoint& base() const { return base_; }
  const ComplexPoint& direction() const { return direction_; }
  int dim() const { return base_.dim(); }

  /// Z + zeta W.
  CVector at(cplx zeta) const;

 private:
  ComplexPoint base_;
  ComplexPoint direction_;
};

/// The disc Delta(a, r) = {zeta : Z + zeta W in D} cut from a domain by a line.
struct DiscSlice {
  cplx center;
  double radius;
  ComplexLine line;

  cplx boundary_point(double theta) const;
};

/// Balls and Hermitian ellipsoids, the domain family whose line slices are
/// discs in closed form.
class Domain {
 public:
  Domain(Ball ball);  // NOLINT(google-explicit-constructor)
  Domain(HermitianEllipsoid ellipsoid);  // NOLINT(google-explicit-constructor)

  int dim() const;
  const ComplexPoint& center() const;
  /// Length scale: ball radius or the largest semi-axis.
  double radius_scale() const;
  double diameter() const { return 2.0 * radius_scale(); }

  /// Defining function, negative inside, zero on bD.
  double defining_function(std::span<const cplx> z) const;
  bool contains(std::span<const cplx> z) const {
    return defining_function(z) < 0.0;
  }

  std::optional<DiscSlice> slice(const ComplexLine& line) const;

  /// Maps a point u of the closed unit ball onto the closed domain
  /// (unit sphere onto bD).
  CVector from_unit_ball(const CVector& u) const;
  /// Inverse of from_unit_ball.
  CVector to_unit_ball(const CVector& z) const;

  const Ball* as_ball() const { return std::get_if<Ball>(&shape_); }
  const HermitianEllipsoid* as_ellipsoid() const {
    return std::get_if<HermitianEllipsoid>(&shape_);
  }

 private:
  std::variant<Ball, HermitianEllipsoid> shape_;
};

/// Slices with radius at or below this fraction of the domain scale count as
/// tangent and are reported empty.
inline constexpr double kTransversalityThreshold = 1e-6;

std::optional<DiscSlice> slice_ball(const Ball& ball, const ComplexLine& line);
std::optional<DiscSlice> slice_ellipsoid(const HermitianEllipsoid& ell,
                                         const ComplexLine& line);

/// Affine unitary change of coordinates w = U (z - translation) taking the
/// line onto the w_1-axis: U W = e_1 and the line base goes to 0.
struct Frame {
  CMatrix unitary;
  CVector translation;

  CVector to_frame(const CVector& z) const;
  CVector from_frame(const CVector& w) const;
};

Frame canonical_frame(const ComplexLine& line);

struct CirclePoint {
  cplx zeta;
  CVector ambient;
};

/// zeta_k = a + r exp(2 pi i k / n) with the ambient points Z + zeta_k W.
std::vector<CirclePoint> boundary_circle_points(const DiscSlice& slice,
                                                std::size_t n);

/// Deterministic pseudo-random points of bD, drawn from `seed`.
std::vector<CVector> sample_boundary(const Domain& domain, std::size_t count,
                                     std::uint64_t seed);

}  // namespace degext
