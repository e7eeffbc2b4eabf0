#pragma once

// All randomness in the toolkit comes from std::mt19937_64 streams derived
// from one user seed. stream(seed, tag) mixes the seed and a purpose tag with
// splitmix64 so that independent consumers never share a sequence.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace degext::random {

using Engine = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline Engine stream(std::uint64_t seed, std::uint64_t tag) {
  return Engine(splitmix64(seed ^ splitmix64(tag)));
}

inline double uniform(Engine& rng, double lo = 0.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::complex<double> complex_normal(Engine& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

/// Uniform point of the unit sphere of C^n.
inline Eigen::VectorXcd unit_sphere(Engine& rng, int n) {
  Eigen::VectorXcd v(n);
  do {
    for (int j = 0; j < n; ++j) v[j] = complex_normal(rng);
  } while (v.norm() < 1e-12);
  return v / v.norm();
}

/// Uniform point of the ball of radius `radius` in C^n = R^{2n}.
inline Eigen::VectorXcd in_ball(Engine& rng, int n, double radius) {
  const double t = std::pow(uniform(rng), 1.0 / (2.0 * n));
  return radius * t * unit_sphere(rng, n);
}

}  // namespace degext::random
