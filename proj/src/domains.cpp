#include "degext/domains.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "degext/errors.hpp"
#include "degext/random.hpp"

namespace degext {

namespace {

bool all_finite(const CVector& v) {
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    if (!std::isfinite(v[j].real()) || !std::isfinite(v[j].imag())) return false;
  }
  return true;
}

void require_dim(int a, int b, const char* what) {
  if (a != b) {
    fail(ErrorKind::DimensionMismatch,
         std::string(what) + ": dimension " + std::to_string(a) + " vs " +
             std::to_string(b));
  }
}

}  // namespace

ComplexPoint::ComplexPoint(CVector coords) : coords_(std::move(coords)) {
  if (coords_.size() < 1) fail(ErrorKind::InvalidInput, "point needs N >= 1");
  if (!all_finite(coords_)) fail(ErrorKind::InvalidInput, "non-finite coordinate");
}

ComplexPoint::ComplexPoint(std::initializer_list<cplx> coords)
    : ComplexPoint([&] {
        CVector v(static_cast<Eigen::Index>(coords.size()));
        Eigen::Index j = 0;
        for (const cplx& c : coords) v[j++] = c;
        return v;
      }()) {}

ComplexPoint ComplexPoint::zero(int dim) { return ComplexPoint(CVector::Zero(dim)); }

Ball::Ball(ComplexPoint c, double r) : center(std::move(c)), radius(r) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    fail(ErrorKind::InvalidInput, "ball radius must be positive");
  }
}

HermitianEllipsoid::HermitianEllipsoid(ComplexPoint c, CMatrix q)
    : center(std::move(c)), form(std::move(q)) {
  const int n = center.dim();
  if (form.rows() != n || form.cols() != n) {
    fail(ErrorKind::DimensionMismatch, "ellipsoid form must be N x N");
  }
  const double herm_err = (form - form.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err > 1e-12) fail(ErrorKind::InvalidInput, "ellipsoid form is not Hermitian");
  const CMatrix sym = 0.5 * (form + form.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(sym);
  const Eigen::VectorXd& lam = eig.eigenvalues();
  if (!(lam.minCoeff() > 0.0)) {
    fail(ErrorKind::InvalidInput, "ellipsoid form is not positive definite");
  }
  inverse_sqrt = eig.eigenvectors() *
                 lam.cwiseSqrt().cwiseInverse().cast<cplx>().asDiagonal() *
                 eig.eigenvectors().adjoint();
  max_semi_axis = 1.0 / std::sqrt(lam.minCoeff());
}

ComplexLine::ComplexLine(ComplexPoint base, ComplexPoint direction)
    : base_(std::move(base)), direction_(std::move(direction)) {
  require_dim(base_.dim(), direction_.dim(), "line");
  if (std::abs(direction_.coords().norm() - 1.0) > 1e-12) {
    fail(ErrorKind::InvalidInput, "line direction must have unit norm");
  }
}

ComplexLine ComplexLine::through(ComplexPoint base, const CVector& direction) {
  const double len = direction.norm();
  if (!(len > 0.0)) fail(ErrorKind::InvalidInput, "zero line direction");
  return ComplexLine(std::move(base), ComplexPoint(direction / len));
}

ComplexLine ComplexLine::axis(const ComplexPoint& base, int j) {
  CVector e = CVector::Zero(base.dim());
  e[j] = 1.0;
  return ComplexLine(base, ComplexPoint(e));
}

CVector ComplexLine::at(cplx zeta) const {
  return base_.coords() + zeta * direction_.coords();
}

cplx DiscSlice::boundary_point(double theta) const {
  return center + radius * std::polar(1.0, theta);
}

std::optional<DiscSlice> slice_ball(const Ball& ball, const ComplexLine& line) {
  require_dim(ball.center.dim(), line.dim(), "slice_ball");
  const CVector v = line.base().coords() - ball.center.coords();
  const cplx proj = line.direction().coords().dot(v);  // W^* v
  const double perp_sq = std::max(0.0, v.squaredNorm() - std::norm(proj));
  const double r_sq = ball.radius * ball.radius - perp_sq;
  if (r_sq <= 0.0) return std::nullopt;
  const double r = std::sqrt(r_sq);
  if (r <= kTransversalityThreshold * ball.radius) return std::nullopt;
  return DiscSlice{-proj, r, line};
}

std::optional<DiscSlice> slice_ellipsoid(const HermitianEllipsoid& ell,
                                         const ComplexLine& line) {
  require_dim(ell.center.dim(), line.dim(), "slice_ellipsoid");
  // (v + zeta W)^* Q (v + zeta W) = w |zeta - a|^2 + v^*Qv - |W^*Qv|^2 / w
  const CVector v = line.base().coords() - ell.center.coords();
  const CVector& dir = line.direction().coords();
  const CVector qv = ell.form * v;
  const double w = std::real(dir.dot(ell.form * dir));
  const cplx cross = dir.dot(qv);
  const double vqv = std::real(v.dot(qv));
  const double r_sq = (1.0 - vqv + std::norm(cross) / w) / w;
  if (r_sq <= 0.0) return std::nullopt;
  const double r = std::sqrt(r_sq);
  if (r <= kTransversalityThreshold * ell.max_semi_axis) return std::nullopt;
  return DiscSlice{-cross / w, r, line};
}

Domain::Domain(Ball ball) : shape_(std::move(ball)) {}
Domain::Domain(HermitianEllipsoid ellipsoid) : shape_(std::move(ellipsoid)) {}

int Domain::dim() const { return center().dim(); }

const ComplexPoint& Domain::center() const {
  return std::visit([](const auto& s) -> const ComplexPoint& { return s.center; },
                    shape_);
}

double Domain::radius_scale() const {
  if (const Ball* b = as_ball()) return b->radius;
  return as_ellipsoid()->max_semi_axis;
}

double Domain::defining_function(std::span<const cplx> z) const {
  const Eigen::Map<const CVector> zv(z.data(), static_cast<Eigen::Index>(z.size()));
  if (const Ball* b = as_ball()) {
    return (zv - b->center.coords()).squaredNorm() / (b->radius * b->radius) - 1.0;
  }
  const HermitianEllipsoid& e = *as_ellipsoid();
  const CVector v = zv - e.center.coords();
  return std::real(v.dot(e.form * v)) - 1.0;
}

std::optional<DiscSlice> Domain::slice(const ComplexLine& line) const {
  if (const Ball* b = as_ball()) return slice_ball(*b, line);
  return slice_ellipsoid(*as_ellipsoid(), line);
}

CVector Domain::from_unit_ball(const CVector& u) const {
  if (const Ball* b = as_ball()) return b->center.coords() + b->radius * u;
  const HermitianEllipsoid& e = *as_ellipsoid();
  return e.center.coords() + e.inverse_sqrt * u;
}

CVector Domain::to_unit_ball(const CVector& z) const {
  if (const Ball* b = as_ball()) return (z - b->center.coords()) / b->radius;
  const HermitianEllipsoid& e = *as_ellipsoid();
  return e.inverse_sqrt.partialPivLu().solve(z - e.center.coords());
}

CVector Frame::to_frame(const CVector& z) const { return unitary * (z - translation); }

CVector Frame::from_frame(const CVector& w) const {
  return translation + unitary.adjoint() * w;
}

Frame canonical_frame(const ComplexLine& line) {
  const int n = line.dim();
  // Columns of V: W first, then coordinate vectors chosen greedily by largest
  // residual after projecting out the accepted columns. U = V^*.
  CMatrix basis(n, n);
  basis.col(0) = line.direction().coords();
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int col = 1; col < n; ++col) {
    int best = -1;
    double best_norm = -1.0;
    CVector best_vec;
    for (int k = 0; k < n; ++k) {
      if (used[static_cast<std::size_t>(k)]) continue;
      CVector e = CVector::Zero(n);
      e[k] = 1.0;
      for (int pass = 0; pass < 2; ++pass) {
        for (int c = 0; c < col; ++c) e -= basis.col(c) * basis.col(c).dot(e);
      }
      const double nrm = e.norm();
      if (nrm > best_norm + 1e-14) {
        best = k;
        best_norm = nrm;
        best_vec = e;
      }
    }
    used[static_cast<std::size_t>(best)] = true;
    basis.col(col) = best_vec / best_norm;
  }
  return Frame{basis.adjoint(), line.base().coords()};
}

std::vector<CirclePoint> boundary_circle_points(const DiscSlice& slice,
                                                std::size_t n) {
  if (!(slice.radius > 0.0)) fail(ErrorKind::DegenerateDisc, "slice radius is zero");
  if (n < 1) fail(ErrorKind::InvalidInput, "need at least one circle point");
  std::vector<CirclePoint> pts;
  pts.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(n);
    const cplx zeta = slice.boundary_point(theta);
    pts.push_back({zeta, slice.line.at(zeta)});
  }
  return pts;
}

std::vector<CVector> sample_boundary(const Domain& domain, std::size_t count,
                                     std::uint64_t seed) {
  auto rng = random::stream(seed, 0xb0d0);
  std::vector<CVector> pts;
  pts.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    pts.push_back(domain.from_unit_ball(random::unit_sphere(rng, domain.dim())));
  }
  return pts;
}

}  // namespace degext
