#include "degext/degree_oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "degext/errors.hpp"
#include "degext/kernels.hpp"
#include "degext/random.hpp"

namespace degext {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

constexpr int kMaxDim = 3;
constexpr int kMaxReal = 2 * kMaxDim;

using RVec = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxReal, 1>;
using RMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxReal, kMaxReal>;

std::atomic<std::size_t> g_runs{0};
std::atomic<std::size_t> g_doubling_checks{0};
std::atomic<std::size_t> g_verdicts{0};
std::atomic<std::size_t> g_checked_verdicts{0};
std::atomic<std::size_t> g_suspect{0};
std::atomic<std::size_t> g_irregular{0};

constexpr int kNewtonIterations = 60;
constexpr double kPolishTarget = 1e-11;
constexpr double kAcceptResidual = 1e-9;
constexpr double kRegularDet = 1e-8;

/// Evaluates G on R^{2N} without heap traffic.
class RealMap {
 public:
  RealMap(const MapOracle& g) : g_(g), n_(g.dim()) {}  // NOLINT

  int real_dim() const { return 2 * n_; }

  RVec operator()(const RVec& x) const {
    std::array<cplx, kMaxDim> z{};
    std::array<cplx, kMaxDim> out{};
    for (int j = 0; j < n_; ++j) z[static_cast<std::size_t>(j)] = {x[2 * j], x[2 * j + 1]};
    g_(std::span<const cplx>(z.data(), static_cast<std::size_t>(n_)),
       std::span<cplx>(out.data(), static_cast<std::size_t>(n_)));
    RVec f(2 * n_);
    for (int j = 0; j < n_; ++j) {
      f[2 * j] = out[static_cast<std::size_t>(j)].real();
      f[2 * j + 1] = out[static_cast<std::size_t>(j)].imag();
    }
    return f;
  }

  /// Central differences.
  RMat jacobian(const RVec& x, double h) const {
    const int m = real_dim();
    RMat jac(m, m);
    RVec xp = x;
    for (int c = 0; c < m; ++c) {
      xp[c] = x[c] + h;
      const RVec fp = (*this)(xp);
      xp[c] = x[c] - h;
      const RVec fm = (*this)(xp);
      xp[c] = x[c];
      jac.col(c) = (fp - fm) / (2.0 * h);
    }
    return jac;
  }

 private:
  const MapOracle& g_;
  int n_;
};

struct Candidate {
  RVec x;
  double residual;
};

/// Damped Newton with Armijo backtracking. Returns nothing when the start
/// stagnates, diverges or leaves a neighbourhood of the domain.
std::optional<Candidate> polish(const RealMap& g, RVec x, double h,
                                const RVec& center, double escape_radius) {
  RVec f = g(x);
  double fn = f.norm();
  for (int it = 0; it < kNewtonIterations && fn >= kPolishTarget; ++it) {
    const RMat jac = g.jacobian(x, h);
    Eigen::PartialPivLU<RMat> lu(jac);
    const RVec dx = lu.solve(-f);
    if (!dx.allFinite()) return std::nullopt;
    double step = 1.0;
    bool accepted = false;
    while (step > 1e-6) {
      const RVec xn = x + step * dx;
      const RVec fnew = g(xn);
      const double nn = fnew.norm();
      if (std::isfinite(nn) && nn <= (1.0 - 1e-4 * step) * fn) {
        x = xn;
        f = fnew;
        fn = nn;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    if ((x - center).norm() > escape_radius) return std::nullopt;
  }
  if (!(fn < kAcceptResidual)) return std::nullopt;
  return Candidate{x, fn};
}

std::vector<RVec> grid_starts(const Domain& domain, int density) {
  const int n = domain.dim();
  const int m = 2 * n;
  const double scale = domain.radius_scale();
  const Eigen::VectorXd c = to_real(domain.center().span());
  std::vector<RVec> starts;
  std::vector<int> idx(static_cast<std::size_t>(m), 0);
  while (true) {
    RVec x(m);
    for (int k = 0; k < m; ++k) {
      x[k] = c[k] + scale * (-1.0 + (2.0 * idx[static_cast<std::size_t>(k)] + 1.0) / density);
    }
    const CVector z = to_complex(x);
    if (domain.contains({z.data(), static_cast<std::size_t>(n)})) starts.push_back(x);
    int k = 0;
    while (k < m && ++idx[static_cast<std::size_t>(k)] == density) {
      idx[static_cast<std::size_t>(k)] = 0;
      ++k;
    }
    if (k == m) break;
  }
  return starts;
}

struct ZeroSearch {
  std::vector<Candidate> zeros;
  std::size_t starts = 0;
};

ZeroSearch find_zeros(const RealMap& g, const Domain& domain, int density,
                      const OracleOptions& options) {
  const int n = domain.dim();
  const double diam = domain.diameter();
  const double h = 1e-5 * diam;
  const double dedup = options.dedup_radius_scale * diam;
  const RVec center = to_real(domain.center().span());

  std::vector<RVec> starts = grid_starts(domain, density);
  auto rng = random::stream(options.seed, 0x0ac1e);
  for (std::size_t k = 0; k < options.random_starts; ++k) {
    const CVector z = domain.from_unit_ball(random::in_ball(rng, n, 1.0));
    starts.push_back(to_real({z.data(), static_cast<std::size_t>(n)}));
  }

  ZeroSearch out;
  out.starts = starts.size();
  for (const RVec& s : starts) {
    std::optional<Candidate> c = polish(g, s, h, center, 1.5 * diam);
    if (!c) continue;
    const CVector z = to_complex(c->x);
    if (!domain.contains({z.data(), static_cast<std::size_t>(n)})) continue;
    auto dup = std::find_if(out.zeros.begin(), out.zeros.end(), [&](const Candidate& o) {
      return (o.x - c->x).norm() <= dedup;
    });
    if (dup == out.zeros.end()) {
      out.zeros.push_back(*c);
    } else if (c->residual < dup->residual) {
      *dup = *c;
    }
  }
  return out;
}

bool same_zero_sets(const std::vector<Candidate>& a, const std::vector<Candidate>& b,
                    double radius) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(), [&](const Candidate& x) {
    return std::any_of(b.begin(), b.end(),
                       [&](const Candidate& y) { return (x.x - y.x).norm() <= radius; });
  });
}

}  // namespace

MapOracle::MapOracle(int dim, Fn fn) : dim_(dim), fn_(std::move(fn)) {
  if (dim_ < 1) fail(ErrorKind::InvalidInput, "map dimension must be >= 1");
}

MapOracle MapOracle::from(MixedMap map) {
  const int n = map.dim();
  return MapOracle(n, [m = std::move(map)](std::span<const cplx> z, std::span<cplx> out) {
    m.evaluate(z, out);
  });
}

CVector MapOracle::operator()(const CVector& z) const {
  CVector out(dim_);
  fn_({z.data(), static_cast<std::size_t>(z.size())},
      {out.data(), static_cast<std::size_t>(out.size())});
  return out;
}

RealLinearMap::RealLinearMap(Eigen::MatrixXd matrix) : m_(std::move(matrix)) {
  if (m_.rows() != m_.cols() || m_.rows() % 2 != 0 || m_.rows() == 0) {
    fail(ErrorKind::InvalidInput, "real linear map must be 2N x 2N");
  }
  if (!m_.allFinite()) fail(ErrorKind::InvalidInput, "non-finite matrix entry");
}

RealLinearMap RealLinearMap::realify(const CMatrix& m) {
  const Eigen::Index n = m.rows();
  Eigen::MatrixXd r(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const cplx a = m(i, j);
      r.block<2, 2>(2 * i, 2 * j) << a.real(), -a.imag(), a.imag(), a.real();
    }
  }
  return RealLinearMap(std::move(r));
}

RealLinearMap RealLinearMap::realify_antilinear(const CMatrix& b) {
  const Eigen::Index n = b.rows();
  Eigen::MatrixXd r(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const cplx c = b(i, j);
      // c conj(x + iy) = (c_r x + c_i y) + i (c_i x - c_r y)
      r.block<2, 2>(2 * i, 2 * j) << c.real(), c.imag(), c.imag(), -c.real();
    }
  }
  return RealLinearMap(std::move(r));
}

RealLinearMap RealLinearMap::multiplication_by_i(int n) {
  return realify(cplx{0.0, 1.0} * CMatrix::Identity(n, n));
}

CVector RealLinearMap::apply(const CVector& z) const {
  return to_complex(m_ * to_real({z.data(), static_cast<std::size_t>(z.size())}));
}

RealLinearMap RealLinearMap::operator+(const RealLinearMap& other) const {
  if (other.m_.rows() != m_.rows()) fail(ErrorKind::DimensionMismatch, "map sum");
  return RealLinearMap(m_ + other.m_);
}

Eigen::VectorXd to_real(std::span<const cplx> z) {
  Eigen::VectorXd x(2 * static_cast<Eigen::Index>(z.size()));
  for (std::size_t j = 0; j < z.size(); ++j) {
    x[2 * static_cast<Eigen::Index>(j)] = z[j].real();
    x[2 * static_cast<Eigen::Index>(j) + 1] = z[j].imag();
  }
  return x;
}

CVector to_complex(const Eigen::VectorXd& x) {
  CVector z(x.size() / 2);
  for (Eigen::Index j = 0; j < z.size(); ++j) z[j] = {x[2 * j], x[2 * j + 1]};
  return z;
}

int orientation_sign(const RealLinearMap& m) {
  const double det = m.matrix().partialPivLu().determinant();
  if (!(std::abs(det) > 1e-12)) {
    fail(ErrorKind::SingularMap, "map is singular: det = " + sci(det));
  }
  return det > 0.0 ? 1 : -1;
}

bool is_complex_linear(const RealLinearMap& m) {
  const Eigen::MatrixXd& a = m.matrix();
  const Eigen::MatrixXd j = RealLinearMap::multiplication_by_i(m.complex_dim()).matrix();
  return (a * j - j * a).cwiseAbs().maxCoeff() < 1e-10;
}

kernels::ModulusRange boundary_modulus(const MapOracle& g,
                                       std::span<const CVector> boundary) {
  const std::size_t count = boundary.size();
  const auto n = static_cast<std::size_t>(g.dim());
  std::vector<std::vector<cplx>> comp(n, std::vector<cplx>(count));
  std::vector<cplx> buf(n);
  for (std::size_t k = 0; k < count; ++k) {
    g({boundary[k].data(), n}, buf);
    for (std::size_t j = 0; j < n; ++j) comp[j][k] = buf[j];
  }
  std::vector<double> acc(count, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    kernels::blend_sqnorm_accumulate(comp[j], comp[j], 0.0, acc);
  }
  if (acc.empty()) return {};
  const auto [lo, hi] = std::minmax_element(acc.begin(), acc.end());
  return {std::sqrt(*lo), std::sqrt(*hi)};
}

DegreeCertificate zero_count_degree(const MapOracle& g, const Domain& domain,
                                    const OracleOptions& options) {
  if (g.dim() != domain.dim()) {
    fail(ErrorKind::DimensionMismatch, "map and domain dimensions differ");
  }
  if (domain.dim() > kMaxDim) {
    fail(ErrorKind::InvalidInput, "zero-count oracle supports N <= 3");
  }
  if (options.grid_density < 1) fail(ErrorKind::InvalidInput, "grid density must be >= 1");

  const std::vector<CVector> boundary =
      sample_boundary(domain, options.boundary_samples, options.seed);
  const kernels::ModulusRange range = boundary_modulus(g, boundary);
  if (!(range.min > options.zero_tol_scale * range.max)) {
    fail(ErrorKind::ZeroOnBoundary,
         "map (nearly) vanishes on the sampled boundary: margin " +
             sci(range.min));
  }

  const RealMap real(g);
  const double diam = domain.diameter();
  g_runs.fetch_add(1, std::memory_order_relaxed);
  ZeroSearch base = find_zeros(real, domain, options.grid_density, options);
  // Regularity first: a degenerate zero also scatters candidates, which the
  // doubling comparison would misreport as missed zeros.
  auto jacobian_det = [&](const Candidate& c) {
    const double det = real.jacobian(c.x, 1e-5 * diam).determinant();
    if (!(std::abs(det) > kRegularDet)) {
      g_irregular.fetch_add(1, std::memory_order_relaxed);
      fail(ErrorKind::IrregularZero,
           "zero with |det DG| = " + sci(std::abs(det)) +
               "; perturb the map slightly");
    }
    return det;
  };
  std::vector<double> dets;
  for (const Candidate& c : base.zeros) dets.push_back(jacobian_det(c));
  if (options.check_doubling) {
    const ZeroSearch fine = find_zeros(real, domain, 2 * options.grid_density, options);
    for (const Candidate& c : fine.zeros) jacobian_det(c);
    g_doubling_checks.fetch_add(1, std::memory_order_relaxed);
    if (!same_zero_sets(base.zeros, fine.zeros, 1e3 * options.dedup_radius_scale * diam)) {
      g_suspect.fetch_add(1, std::memory_order_relaxed);
      fail(ErrorKind::SuspectMissedZeros,
           "zero sets differ under grid doubling: " + std::to_string(base.zeros.size()) +
               " vs " + std::to_string(fine.zeros.size()));
    }
  }

  DegreeCertificate cert;
  cert.method = DegreeMethod::ZeroCount;
  cert.boundary_margin = range.min;
  cert.grid_density = options.grid_density;
  cert.starts = base.starts;
  for (std::size_t k = 0; k < base.zeros.size(); ++k) {
    const Candidate& c = base.zeros[k];
    OracleZero z;
    z.location = c.x;
    z.jacobian_sign = dets[k] > 0.0 ? 1 : -1;
    z.residual_norm = c.residual;
    z.jacobian_det = dets[k];
    cert.degree += z.jacobian_sign;
    cert.zeros.push_back(std::move(z));
  }
  g_verdicts.fetch_add(1, std::memory_order_relaxed);
  if (options.check_doubling) g_checked_verdicts.fetch_add(1, std::memory_order_relaxed);
  return cert;
}

HomotopyResult homotopy_nonvanishing(const MapOracle& f, const MapOracle& g,
                                     std::span<const CVector> boundary,
                                     std::size_t lambda_steps, double zero_tol_scale) {
  if (f.dim() != g.dim()) fail(ErrorKind::DimensionMismatch, "homotopy end maps");
  lambda_steps = std::max<std::size_t>(lambda_steps, 33);
  const std::size_t count = boundary.size();
  const auto n = static_cast<std::size_t>(f.dim());
  std::vector<std::vector<cplx>> fv(n, std::vector<cplx>(count));
  std::vector<std::vector<cplx>> gv(n, std::vector<cplx>(count));
  std::vector<cplx> buf(n);
  for (std::size_t k = 0; k < count; ++k) {
    f({boundary[k].data(), n}, buf);
    for (std::size_t j = 0; j < n; ++j) fv[j][k] = buf[j];
    g({boundary[k].data(), n}, buf);
    for (std::size_t j = 0; j < n; ++j) gv[j][k] = buf[j];
  }
  HomotopyResult res;
  res.min_modulus = std::numeric_limits<double>::infinity();
  double scale = 0.0;
  std::vector<double> acc(count);
  for (std::size_t step = 0; step < lambda_steps; ++step) {
    const double lambda = static_cast<double>(step) / static_cast<double>(lambda_steps - 1);
    std::fill(acc.begin(), acc.end(), 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      kernels::blend_sqnorm_accumulate(fv[j], gv[j], lambda, acc);
    }
    for (std::size_t k = 0; k < count; ++k) {
      const double m = std::sqrt(acc[k]);
      if (step == 0 || step + 1 == lambda_steps) scale = std::max(scale, m);
      if (m < res.min_modulus) {
        res.min_modulus = m;
        res.lambda_at_min = lambda;
        res.point_at_min = k;
      }
    }
  }
  res.ok = count > 0 && res.min_modulus > zero_tol_scale * scale;
  return res;
}

OracleStats oracle_stats() {
  return {g_runs.load(),           g_doubling_checks.load(), g_verdicts.load(),
          g_checked_verdicts.load(), g_suspect.load(),         g_irregular.load()};
}

void reset_oracle_stats() {
  g_runs = 0;
  g_doubling_checks = 0;
  g_verdicts = 0;
  g_checked_verdicts = 0;
  g_suspect = 0;
  g_irregular = 0;
}

}  // namespace degext
