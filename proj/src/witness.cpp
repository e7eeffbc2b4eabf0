#include "degext/witness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>

#include "degext/errors.hpp"
#include "degext/random.hpp"

namespace degext {

namespace {

constexpr int kGridSide = 9;
constexpr double kGridScale = 0.9;
constexpr double kBMarginScale = 1e-6;
/// Worst sampled (point, lambda) pairs of the homotopy that get refined by
/// local descent.
constexpr std::size_t kRefinedStarts = 16;

/// Sum_{k>=1} |s_k| r^k: a bound for |s(w) - s(0)| on the closed disc.
double circle_norm(const HoloPoly& s, double radius) {
  double n = 0.0;
  for (int k = 1; k <= s.degree(); ++k) n += std::abs(s.coefficient(k)) * std::pow(radius, k);
  return n;
}

struct GridPoint {
  int i;
  int j;
};

/// Interior points of the 9 x 9 grid, nearest the center first, ties broken
/// by angle.
std::vector<GridPoint> grid_order() {
  std::vector<GridPoint> pts;
  const int half = kGridSide / 2;
  for (int i = -half; i <= half; ++i) {
    for (int j = -half; j <= half; ++j) {
      if (kGridScale * kGridScale * (i * i + j * j) < half * half) {
        pts.push_back({i, j});
      }
    }
  }
  auto angle = [](const GridPoint& p) {
    const double a = std::atan2(static_cast<double>(p.j), static_cast<double>(p.i));
    return a < 0.0 ? a + 2.0 * std::numbers::pi : a;
  };
  std::stable_sort(pts.begin(), pts.end(), [&](const GridPoint& a, const GridPoint& b) {
    const int ra = a.i * a.i + a.j * a.j;
    const int rb = b.i * b.i + b.j * b.j;
    if (ra != rb) return ra < rb;
    return angle(a) < angle(b);
  });
  return pts;
}

MixedPolynomial frame_coordinate(const Frame& frame, int k) {
  const int n = static_cast<int>(frame.translation.size());
  MixedPolynomial p(n);
  cplx offset{0.0, 0.0};
  for (int l = 0; l < n; ++l) {
    const cplx u = frame.unitary(k, l);
    p = p + MixedPolynomial::variable(n, l) * u;
    offset -= u * frame.translation[l];
  }
  return p + MixedPolynomial::constant(n, offset);
}

/// Local minimum of |H(z, lambda)| over bD x [0, 1] near (start, lambda0).
/// Projected gradient descent on |H|, boundary point in from_unit_ball
/// coordinates, then damped Gauss-Newton on the square system
/// H(z, lambda) = 0, |u|^2 = 1 so that a genuine crossing is located to
/// full precision instead of stalling just above the tolerance.
double boundary_local_min(const Domain& domain,
                          const std::function<CVector(const CVector&, double)>& H,
                          const CVector& start, double lambda0) {
  const int n = domain.dim();
  const Eigen::Index m = 2 * n;
  const CVector w = domain.to_unit_ball(start);
  Eigen::VectorXd x(m + 1);
  x.head(m) = to_real(std::span<const cplx>(w.data(), static_cast<std::size_t>(n)));
  x.head(m).normalize();
  x[m] = lambda0;
  auto blend = [&](const Eigen::VectorXd& y) { return H(domain.from_unit_ball(to_complex(y.head(m))), y[m]); };
  auto value = [&](const Eigen::VectorXd& y) { return blend(y).norm(); };
  auto project = [&](Eigen::VectorXd& y) {
    y.head(m).normalize();
    y[m] = std::clamp(y[m], 0.0, 1.0);
  };
  double fx = value(x);
  double step = 0.05;
  constexpr double h = 1e-7;
  for (int it = 0; it < 80 && step > 1e-9; ++it) {
    Eigen::VectorXd g(m + 1);
    for (Eigen::Index k = 0; k <= m; ++k) {
      Eigen::VectorXd a = x;
      Eigen::VectorXd b = x;
      a[k] += h;
      b[k] -= h;
      g[k] = (value(a) - value(b)) / (2.0 * h);
    }
    g.head(m) -= g.head(m).dot(x.head(m)) * x.head(m);
    const double gn = g.norm();
    if (!(gn > 0.0)) break;
    for (;;) {
      Eigen::VectorXd next = x - step * g / gn;
      project(next);
      const double fn = value(next);
      if (fn < fx) {
        x = next;
        fx = fn;
        step *= 1.5;
        break;
      }
      step *= 0.5;
      if (step <= 1e-9) break;
    }
  }

  auto residual = [&](const Eigen::VectorXd& y) {
    const CVector v = blend(y);
    Eigen::VectorXd r(m + 1);
    r.head(m) = to_real(std::span<const cplx>(v.data(), static_cast<std::size_t>(n)));
    r[m] = y.head(m).squaredNorm() - 1.0;
    return r;
  };
  Eigen::VectorXd r = residual(x);
  for (int it = 0; it < 40; ++it) {
    Eigen::MatrixXd J(m + 1, m + 1);
    for (Eigen::Index k = 0; k <= m; ++k) {
      Eigen::VectorXd a = x;
      Eigen::VectorXd b = x;
      a[k] += h;
      b[k] -= h;
      J.col(k) = (residual(a) - residual(b)) / (2.0 * h);
    }
    const Eigen::VectorXd dx = J.colPivHouseholderQr().solve(-r);
    if (!dx.allFinite()) break;
    bool moved = false;
    for (double t = 1.0; t > 1e-4; t *= 0.5) {
      Eigen::VectorXd next = x + t * dx;
      next[m] = std::clamp(next[m], 0.0, 1.0);
      const Eigen::VectorXd rn = residual(next);
      if (rn.norm() < r.norm()) {
        x = next;
        r = rn;
        moved = true;
        break;
      }
    }
    if (!moved) break;
    Eigen::VectorXd feasible = x;
    project(feasible);
    fx = std::min(fx, value(feasible));
    if (r.norm() < 1e-15) break;
  }
  return fx;
}

std::vector<int> other_components(int n, int component) {
  std::vector<int> rest;
  for (int j = 0; j < n; ++j) {
    if (j != component) rest.push_back(j);
  }
  return rest;
}

std::vector<CVector> witness_boundary(const Domain& domain, const DiscSlice& slice,
                                      const WitnessOptions& options) {
  std::vector<CVector> pts = sample_boundary(domain, options.boundary_samples, options.seed);
  for (const CirclePoint& c : boundary_circle_points(slice, options.slice_samples)) {
    pts.push_back(c.ambient);
  }
  return pts;
}

/// The frame map, the coupled map and the final scaled map, all in permuted target order
/// (component first). weight = 0 gives the frame map; weight = 1/T the coupled map.
MapOracle staged_map(const MixedMap& phi, const MixedPolynomial& p1, const Frame& frame,
                     int component, double rest_weight, double frame_weight) {
  const int n = phi.dim();
  const std::vector<int> rest = other_components(n, component);
  return MapOracle(n, [&phi, p1, frame, component, rest, rest_weight, frame_weight, n](
                          std::span<const cplx> z, std::span<cplx> out) {
    out[0] = phi[component].evaluate(z) + p1.evaluate(z);
    if (n == 1) return;
    const Eigen::Map<const CVector> zv(z.data(), n);
    const CVector w = frame.unitary * (zv - frame.translation);
    for (std::size_t k = 0; k < rest.size(); ++k) {
      out[k + 1] = frame_weight * w[static_cast<Eigen::Index>(k + 1)] +
                   rest_weight * phi[rest[k]].evaluate(z);
    }
  });
}

}  // namespace

int witness_winding(const UnivariateMixed& u, cplx center, double radius, const HoloPoly& g) {
  return winding_number(on_circle([&](cplx zeta) { return u.evaluate(zeta) + g(zeta); },
                                  center, radius))
      .winding;
}

Witness1D witness_1d(const UnivariateMixed& u, cplx center, double radius, int skip) {
  Witness1D out;
  out.split = split_on_circle(u, center, radius);
  const HoloPoly& q = out.split.q;
  const HoloPoly& s = out.split.s;
  if (s.is_constant()) {
    fail(ErrorKind::DataExtends, "antiholomorphic part is constant; the data extends");
  }
  const double snorm = circle_norm(s, radius);
  const HoloPoly ds = s.derivative();
  const double step = kGridScale * radius / (kGridSide / 2);

  std::vector<cplx> circle(256);
  for (std::size_t k = 0; k < circle.size(); ++k) {
    circle[k] = radius * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) /
                                             static_cast<double>(circle.size()));
  }
  for (const GridPoint& p : grid_order()) {
    const cplx w0 = step * cplx(p.i, p.j);
    if (!(std::abs(ds.evaluate_shifted(w0)) > kBMarginScale * snorm / radius)) continue;
    const cplx s0 = s.evaluate_shifted(w0);
    double margin = std::numeric_limits<double>::infinity();
    for (const cplx& w : circle) margin = std::min(margin, std::abs(s.evaluate_shifted(w) - s0));
    if (!(margin > kBMarginScale * snorm)) continue;
    const cplx b = std::conj(s0);
    const HoloPoly g = -q + (-b);
    int winding = 0;
    try {
      winding = witness_winding(u, center, radius, g);
    } catch (const Error&) {
      continue;
    }
    if (winding >= 0) continue;
    if (skip-- > 0) continue;
    out.g = HoloPoly(center, g.coefficients());
    out.b = b;
    out.grid_offset = w0;
    out.winding = winding;
    out.margin = margin;
    return out;
  }
  fail(ErrorKind::NoValidB, "no admissible b on the 9 x 9 grid; enlarge the grid");
}

MixedPolynomial lift_to_ambient(const HoloPoly& g, const Frame& frame) {
  const int n = static_cast<int>(frame.translation.size());
  // w_1(z) - a, then Horner in it.
  const MixedPolynomial shifted =
      frame_coordinate(frame, 0) + MixedPolynomial::constant(n, -g.basepoint());
  MixedPolynomial p(n);
  const std::vector<cplx>& c = g.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    p = p * shifted + MixedPolynomial::constant(n, *it);
  }
  return p;
}

TChoice choose_T(const MixedMap& phi, const MixedPolynomial& p1, const Domain& domain,
                 const ComplexLine& line, int component, const WitnessOptions& options,
                 double start) {
  const int n = phi.dim();
  if (component < 0 || component >= n) fail(ErrorKind::InvalidInput, "component out of range");
  const std::optional<DiscSlice> slice = domain.slice(line);
  if (!slice) fail(ErrorKind::NonTransverseLine, "witness line does not cut the domain");

  // Precondition: Phi_c + P_1 nonvanishing on the slice circle.
  {
    std::vector<cplx> vals;
    for (const CirclePoint& c : boundary_circle_points(*slice, options.slice_samples)) {
      const std::span<const cplx> z(c.ambient.data(), static_cast<std::size_t>(n));
      vals.push_back(phi[component].evaluate(z) + p1.evaluate(z));
    }
    const kernels::ModulusRange r = kernels::modulus_range(vals);
    if (!(r.min > options.zero_tol_scale * r.max)) {
      fail(ErrorKind::SliceBoundaryZero, "Phi_c + P_1 vanishes on the slice circle");
    }
  }

  const Frame frame = canonical_frame(line);
  const std::vector<CVector> boundary = witness_boundary(domain, *slice, options);
  const MapOracle frame_map = staged_map(phi, p1, frame, component, 0.0, 1.0);
  std::vector<double> frame_norm(boundary.size());
  for (std::size_t k = 0; k < boundary.size(); ++k) frame_norm[k] = frame_map(boundary[k]).norm();
  const double frame_min = *std::min_element(frame_norm.begin(), frame_norm.end());
  const double frame_max = *std::max_element(frame_norm.begin(), frame_norm.end());

  for (double T = start; T <= options.t_cap; T *= 2.0) {
    const MapOracle coupled_map = staged_map(phi, p1, frame, component, 1.0 / T, 1.0);
    const kernels::ModulusRange coupled = boundary_modulus(coupled_map, boundary);
    if (!(coupled.min > options.zero_tol_scale * coupled.max)) continue;
    const HomotopyResult h = homotopy_nonvanishing(frame_map, coupled_map, boundary, options.lambda_steps,
                                                   options.zero_tol_scale);
    if (!h.ok) continue;

    // The sampled check can miss a zero that crosses bD between samples.
    // Refine |(1 - lambda) frame map + lambda coupled map| locally from the
    // worst sampled (point, lambda) pairs.
    const double tol = options.zero_tol_scale * std::max(frame_max, coupled.max);
    const std::size_t steps = std::max<std::size_t>(options.lambda_steps, 33);
    std::vector<std::pair<double, std::pair<std::size_t, double>>> worst;
    for (std::size_t k = 0; k < boundary.size(); ++k) {
      const CVector a = frame_map(boundary[k]);
      const CVector b = coupled_map(boundary[k]);
      double best = std::numeric_limits<double>::infinity();
      double best_lambda = 0.0;
      for (std::size_t i = 0; i < steps; ++i) {
        const double lambda = static_cast<double>(i) / static_cast<double>(steps - 1);
        const double v = ((1.0 - lambda) * a + lambda * b).norm();
        if (v < best) {
          best = v;
          best_lambda = lambda;
        }
      }
      worst.push_back({best, {k, best_lambda}});
    }
    const std::size_t refine = std::min(kRefinedStarts, worst.size());
    std::partial_sort(worst.begin(), worst.begin() + static_cast<std::ptrdiff_t>(refine), worst.end());
    const auto blend = [&](const CVector& z, double lambda) -> CVector {
      return (1.0 - lambda) * frame_map(z) + lambda * coupled_map(z);
    };
    double refined = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < refine; ++k) {
      refined = std::min(refined, boundary_local_min(domain, blend, boundary[worst[k].second.first],
                                                     worst[k].second.second));
    }
    if (!(refined > tol)) continue;
    return {T, {frame_min, coupled.min, h.min_modulus, refined}};
  }
  fail(ErrorKind::TCapExceeded, "no admissible T below the cap");
}

WitnessReport assemble_witness(const MixedMap& phi, const Domain& domain,
                               const WitnessOptions& options) {
  const int n = phi.dim();
  if (n != domain.dim()) fail(ErrorKind::DimensionMismatch, "map vs domain");

  // Lowest-index component that fails to extend on some sampled line.
  std::optional<ExtensionVerdict> verdict;
  for (int c = 0; c < n && !verdict; ++c) {
    LineFamilyOptions lf;
    lf.line_count = options.line_count;
    lf.seed = options.seed;
    lf.fourier_tol_scale = options.fourier_tol_scale;
    lf.only_component = c;
    ExtensionVerdict v = line_family_extension_test(phi, domain, lf);
    if (!v.extends) verdict = std::move(v);
  }
  if (!verdict) fail(ErrorKind::DataExtends, "no sampled line shows a non-extending component");

  const int component = *verdict->component;
  const ComplexLine line = *verdict->witness_line;
  const DiscSlice slice = *verdict->witness_slice;

  const UnivariateMixed u = restrict_to_line(phi[component], line);
  const Frame frame = canonical_frame(line);
  const std::vector<int> rest = other_components(n, component);
  const std::vector<CVector> boundary = witness_boundary(domain, slice, options);

  std::optional<Error> irregular;
  for (int attempt = 0;; ++attempt) {
    std::optional<Witness1D> found;
    try {
      found = witness_1d(u, slice.center, slice.radius, attempt);
    } catch (const Error& e) {
      if (irregular && e.kind() == ErrorKind::NoValidB) throw *irregular;
      throw;
    }
    Witness1D one = std::move(*found);
    const MixedPolynomial p1 = lift_to_ambient(one.g, frame);

    // Route 1: slice winding of the frame map.
    DegreeCertificate structured = structured_degree(phi[component] + p1, domain, line);
    if (structured.degree != one.winding) {
      fail(ErrorKind::OracleDisagreement, "lifted witness changed the slice winding");
    }
    // Route 2: zero count on Phi + P. A disagreement with route 1 means the
    // sampled homotopy check missed a zero crossing bD, so T is raised. An
    // irregular zero calls for a slightly perturbed witness, here the next
    // admissible b.
    std::optional<TChoice> chosen;
    std::optional<MixedMap> P;
    DegreeCertificate ambient;
    bool perturb = false;
    for (double start = 1.0;;) {
      const TChoice t = choose_T(phi, p1, domain, line, component, options, start);
      std::vector<MixedPolynomial> comps(static_cast<std::size_t>(n), MixedPolynomial(n));
      comps[static_cast<std::size_t>(component)] = p1;
      for (std::size_t k = 0; k < rest.size(); ++k) {
        comps[static_cast<std::size_t>(rest[k])] =
            frame_coordinate(frame, static_cast<int>(k + 1)) * cplx{t.T, 0.0};
      }
      MixedMap candidate(std::move(comps));
      try {
        OracleOptions oracle = options.oracle;
        oracle.seed = options.seed;
        ambient = zero_count_degree(MapOracle::from(phi + candidate), domain, oracle);
      } catch (const Error& e) {
        const bool retry = (e.kind() == ErrorKind::IrregularZero ||
                            e.kind() == ErrorKind::SuspectMissedZeros) &&
                           attempt < options.regularity_retries;
        if (!retry) throw;
        irregular = e;
        perturb = true;
        break;
      }
      if (ambient.degree == structured.degree) {
        chosen = t;
        P = std::move(candidate);
        break;
      }
      if (!(2.0 * t.T <= options.t_cap)) {
        fail(ErrorKind::OracleDisagreement,
             "slice winding " + std::to_string(structured.degree) + " but zero count " +
                 std::to_string(ambient.degree));
      }
      start = 2.0 * t.T;
    }
    if (perturb) continue;
    const TChoice& t = *chosen;
    const MixedMap total = phi + *P;

    // Scaling homotopy from coupled map to the final map in permuted order.
    const MapOracle coupled_map = staged_map(phi, p1, frame, component, 1.0 / t.T, 1.0);
    const MapOracle final_map = staged_map(phi, p1, frame, component, 1.0, t.T);
    const HomotopyResult scaling =
        homotopy_nonvanishing(coupled_map, final_map, boundary, options.lambda_steps,
                              options.zero_tol_scale);
    if (!scaling.ok) {
      fail(ErrorKind::OracleDisagreement, "scaling homotopy met a boundary zero");
    }
    const kernels::ModulusRange fr = boundary_modulus(MapOracle::from(total), boundary);

    WitnessReport report{std::move(*P), line, component, slice, std::move(one), t.T,
                         structured.degree, std::move(ambient), std::move(structured),
                         t.margins, fr.min};
    report.homotopy_margins.push_back(scaling.min_modulus);
    return report;
  }
}

LinearWitnessReport linear_witness(const RealLinearMap& A, double t_cap) {
  if (is_complex_linear(A)) fail(ErrorKind::IsComplexLinear, "map is complex linear");
  const int n = A.complex_dim();
  const Eigen::MatrixXd J = RealLinearMap::multiplication_by_i(n).matrix();
  const Eigen::MatrixXd anti = 0.5 * (A.matrix() + J * A.matrix() * J);
  const Eigen::MatrixXd lin = A.matrix() - anti;
  // A(z) = alpha z + beta conj(z), read off the 2 x 2 blocks.
  CMatrix alpha(n, n);
  CMatrix beta(n, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Eigen::Matrix2d l = lin.block<2, 2>(2 * i, 2 * k);
      const Eigen::Matrix2d a = anti.block<2, 2>(2 * i, 2 * k);
      alpha(i, k) = {l(0, 0), l(1, 0)};
      beta(i, k) = {a(0, 0), a(1, 0)};
    }
  }

  int row = -1;
  CVector dir;
  for (int i = 0; i < n && row < 0; ++i) {
    for (int k = 0; k < n; ++k) {
      if (std::abs(beta(i, k)) > 1e-10) {
        row = i;
        dir = CVector::Zero(n);
        dir[k] = 1.0;
        break;
      }
    }
  }
  if (row < 0) {
    auto rng = random::stream(0, 0x1a1e);
    for (int attempt = 0; attempt < 64 && row < 0; ++attempt) {
      const CVector w = random::unit_sphere(rng, n);
      for (int i = 0; i < n; ++i) {
        if (std::abs(beta.row(i).dot(w.conjugate().transpose().adjoint())) > 1e-10) {
          row = i;
          dir = w;
          break;
        }
      }
    }
  }
  if (row < 0) fail(ErrorKind::IsComplexLinear, "antilinear part below 1e-10");

  const Frame frame = canonical_frame(ComplexLine(ComplexPoint::zero(n), ComplexPoint(dir)));
  const CMatrix& U = frame.unitary;
  CMatrix perm = CMatrix::Zero(n, n);
  perm(0, row) = 1.0;
  {
    int slot = 1;
    for (int j = 0; j < n; ++j) {
      if (j != row) perm(slot++, j) = 1.0;
    }
  }
  // Frame coordinates: A'(w) = alpha' w + beta' conj(w).
  const CMatrix alpha_f = perm * alpha * U.adjoint();
  const CMatrix beta_f = perm * beta * U.adjoint().conjugate();
  const cplx a = alpha_f(0, 0);
  const cplx b = beta_f(0, 0);
  if (!(std::abs(b) > 1e-10)) fail(ErrorKind::IsComplexLinear, "beta vanishes on the line");

  for (double T = 1.0; T <= t_cap; T *= 2.0) {
    // A sign change of det between grid points means the family went
    // singular in between, so the sign must also stay that of t = 0.
    bool invertible = true;
    int sign0 = 0;
    for (int step = 0; step <= 32 && invertible; ++step) {
      const double t = step / 32.0;
      CMatrix al = t * alpha_f;
      CMatrix be = t * beta_f;
      al(0, 0) = 0.0;
      be(0, 0) = b;
      for (int k = 1; k < n; ++k) al(k, k) += T;
      const Eigen::MatrixXd m = RealLinearMap::realify(al).matrix() +
                                RealLinearMap::realify_antilinear(be).matrix();
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
      invertible = svd.singularValues().minCoeff() > 1e-8;
      const int sign = m.determinant() > 0.0 ? 1 : -1;
      if (step == 0) sign0 = sign;
      invertible = invertible && sign == sign0;
    }
    if (!invertible) continue;
    CMatrix diag = CMatrix::Zero(n, n);
    diag(0, 0) = -a;
    for (int k = 1; k < n; ++k) diag(k, k) = T;
    const CMatrix h = perm.transpose() * diag * U;
    RealLinearMap H = RealLinearMap::realify(h);
    const int sign = orientation_sign(A + H);
    if (sign != -1) continue;
    return {std::move(H), h, a, b, T, sign, row, dir};
  }
  fail(ErrorKind::TCapExceeded, "no T below the cap keeps the family invertible");
}

}  // namespace degext
