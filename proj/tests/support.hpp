#pragma once

// Generators and reference computations shared by the unit tests. The
// references deliberately avoid library code paths: windings unwrap
// std::arg on a fine grid, polynomials are evaluated term by term with
// std::pow, and determinants come straight from Eigen.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "degext/boundary_maps.hpp"
#include "degext/domains.hpp"

namespace testing {

using degext::cplx;
using degext::CVector;
using degext::CMatrix;
using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline cplx gaussian(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  return {re, n(rng)};
}

inline CVector unit_vector(Rng& rng, int n) {
  CVector v(n);
  for (int j = 0; j < n; ++j) v[j] = gaussian(rng);
  return v / v.norm();
}

inline CMatrix random_matrix(Rng& rng, int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = gaussian(rng);
  return m;
}

inline cplx in_disc(Rng& rng, double r) {
  return std::polar(r * std::sqrt(uniform(rng, 0.0, 1.0)), uniform(rng, 0.0, 2.0 * std::numbers::pi));
}

/// Change of argument / 2 pi of theta -> f(theta) by unwrapping std::arg on
/// `n` uniform samples. Exact when n is fine enough for the loop.
template <class F>
double reference_winding(const F& f, std::size_t n = std::size_t{1} << 16) {
  const double two_pi = 2.0 * std::numbers::pi;
  double total = 0.0;
  double prev = std::arg(f(0.0));
  for (std::size_t k = 1; k <= n; ++k) {
    const double a = std::arg(f(two_pi * static_cast<double>(k % n) / static_cast<double>(n)));
    double d = a - prev;
    while (d > std::numbers::pi) d -= two_pi;
    while (d < -std::numbers::pi) d += two_pi;
    total += d;
    prev = a;
  }
  return total / two_pi;
}

struct RefTerm {
  cplx c;
  std::vector<int> z;
  std::vector<int> zbar;
};

/// Term-by-term evaluation of sum c z^z conj(z)^zbar.
inline cplx reference_eval(const std::vector<RefTerm>& terms, const CVector& z) {
  cplx acc = 0.0;
  for (const RefTerm& t : terms) {
    cplx v = t.c;
    for (int j = 0; j < z.size(); ++j) {
      v *= std::pow(z[j], t.z[static_cast<std::size_t>(j)]) *
           std::pow(std::conj(z[j]), t.zbar[static_cast<std::size_t>(j)]);
    }
    acc += v;
  }
  return acc;
}

/// Random mixed polynomial together with its term list for reference_eval.
/// Exponents are drawn per term with total degree <= max_degree; repeated
/// exponents are merged on both sides.
struct RandomPolynomial {
  degext::MixedPolynomial p;
  std::vector<RefTerm> terms;
};

inline RandomPolynomial random_polynomial(Rng& rng, int n, int max_degree, int count,
                                          bool holomorphic = false) {
  RandomPolynomial out{degext::MixedPolynomial(n), {}};
  const int slots = holomorphic ? n : 2 * n;
  for (int t = 0; t < count; ++t) {
    const int d = uniform_int(rng, 0, max_degree);
    std::vector<int> z(static_cast<std::size_t>(n), 0);
    std::vector<int> zbar(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < d; ++k) {
      const int s = uniform_int(rng, 0, slots - 1);
      if (s < n) ++z[static_cast<std::size_t>(s)];
      else ++zbar[static_cast<std::size_t>(s - n)];
    }
    const cplx c = gaussian(rng);
    out.p.add_term(c, {z, zbar});
    out.terms.push_back({c, z, zbar});
  }
  return out;
}

/// Random univariate mixed polynomial of degree <= max_degree.
inline degext::UnivariateMixed random_univariate(Rng& rng, int max_degree, int count) {
  degext::UnivariateMixed u;
  for (int t = 0; t < count; ++t) {
    const int i = uniform_int(rng, 0, max_degree);
    const int j = uniform_int(rng, 0, max_degree - i);
    u.add_term(gaussian(rng), i, j);
  }
  return u;
}

/// Direct evaluation of sum c_ij zeta^i conj(zeta)^j.
inline cplx reference_eval(const degext::UnivariateMixed& u, cplx zeta) {
  cplx acc = 0.0;
  for (const auto& [e, c] : u.terms()) {
    acc += c * std::pow(zeta, e.first) * std::pow(std::conj(zeta), e.second);
  }
  return acc;
}

inline degext::MixedPolynomial monomial(int n, cplx c, std::vector<int> z, std::vector<int> zbar) {
  degext::MixedPolynomial p(n);
  p.add_term(c, {std::move(z), std::move(zbar)});
  return p;
}

inline degext::MixedPolynomial z(int n, int j) { return degext::MixedPolynomial::variable(n, j); }
inline degext::MixedPolynomial zbar(int n, int j) {
  return degext::MixedPolynomial::variable(n, j, true);
}

inline degext::Domain unit_ball(int n) {
  return degext::Ball(degext::ComplexPoint::zero(n), 1.0);
}

/// Determinant of the realification of a complex matrix, computed on the
/// real 2N x 2N matrix directly.
inline double realified_det(const CMatrix& m) {
  const Eigen::Index n = m.rows();
  Eigen::MatrixXd r(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const cplx c = m(i, j);
      r(2 * i, 2 * j) = c.real();
      r(2 * i, 2 * j + 1) = -c.imag();
      r(2 * i + 1, 2 * j) = c.imag();
      r(2 * i + 1, 2 * j + 1) = c.real();
    }
  }
  return r.determinant();
}

}  // namespace testing
