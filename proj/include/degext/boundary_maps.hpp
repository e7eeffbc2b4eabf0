#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "degext/domains.hpp"

namespace degext {

/// Exponent pair (alpha, beta) of the monomial z^alpha * conj(z)^beta.
struct MixedExponent {
  std::vector<int> z;
  std::vector<int> zbar;

  int total_degree() const;
  auto operator<=>(const MixedExponent&) const = default;
};

struct MixedTerm {
  cplx coefficient;
  MixedExponent exponent;
};

/// Polynomial in z_1..z_n and their conjugates with complex coefficients.
/// Terms are kept sorted by exponent with no duplicates.
class MixedPolynomial {
 public:
  explicit MixedPolynomial(int n);
  /// Rejects duplicate exponents and exponent vectors of the wrong length.
  MixedPolynomial(int n, std::vector<MixedTerm> terms,
                  std::optional<int> degree_bound = std::nullopt);

  static MixedPolynomial constant(int n, cplx c);
  /// z_j (conjugate = false) or conj(z_j).
  static MixedPolynomial variable(int n, int j, bool conjugate = false);

  int n() const { return n_; }
  const std::vector<MixedTerm>& terms() const { return terms_; }
  int degree() const;
  std::optional<int> degree_bound() const { return degree_bound_; }
  bool is_holomorphic() const;
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * z^alpha conj(z)^beta, merging with an existing term.
  void add_term(cplx c, MixedExponent exponent);

  cplx evaluate(std::span<const cplx> z) const;
  cplx evaluate(const ComplexPoint& z) const { return evaluate(z.span()); }

  MixedPolynomial operator+(const MixedPolynomial& other) const;
  MixedPolynomial operator-(const MixedPolynomial& other) const;
  MixedPolynomial operator*(const MixedPolynomial& other) const;
  MixedPolynomial operator*(cplx scale) const;
  MixedPolynomial pow(int k) const;

  /// Drops terms with |c| <= tol.
  MixedPolynomial pruned(double tol) const;

 private:
  void check_exponent(const MixedExponent& e) const;

  int n_;
  std::vector<MixedTerm> terms_;
  std::optional<int> degree_bound_;
};

/// Phi = (Phi_1, ..., Phi_N), every component in N variables.
class MixedMap {
 public:
  explicit MixedMap(std::vector<MixedPolynomial> components);

  int dim() const { return static_cast<int>(components_.size()); }
  const MixedPolynomial& operator[](int j) const {
    return components_[static_cast<std::size_t>(j)];
  }
  const std::vector<MixedPolynomial>& components() const { return components_; }
  int degree() const;
  bool is_holomorphic() const;

  void evaluate(std::span<const cplx> z, std::span<cplx> out) const;
  CVector evaluate(const CVector& z) const;

  MixedMap operator+(const MixedMap& other) const;

 private:
  std::vector<MixedPolynomial> components_;
};

/// Polynomial in zeta and conj(zeta): sum c_ij zeta^i conj(zeta)^j.
class UnivariateMixed {
 public:
  UnivariateMixed() = default;

  void add_term(cplx c, int i, int j);
  const std::map<std::pair<int, int>, cplx>& terms() const { return terms_; }
  int degree() const;
  bool is_zero() const { return terms_.empty(); }

  cplx evaluate(cplx zeta) const;

  UnivariateMixed operator*(const UnivariateMixed& other) const;
  UnivariateMixed operator+(const UnivariateMixed& other) const;
  UnivariateMixed operator*(cplx scale) const;

 private:
  std::map<std::pair<int, int>, cplx> terms_;
};

/// Holomorphic polynomial sum_k c_k (zeta - a)^k about a stored basepoint a.
/// Trailing zero coefficients are trimmed, so the zero polynomial has none.
class HoloPoly {
 public:
  HoloPoly() = default;
  HoloPoly(cplx basepoint, std::vector<cplx> coefficients);

  cplx basepoint() const { return basepoint_; }
  const std::vector<cplx>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }
  cplx coefficient(int k) const;

  /// Value at zeta.
  cplx operator()(cplx zeta) const { return evaluate_shifted(zeta - basepoint_); }
  /// Value at zeta = a + w.
  cplx evaluate_shifted(cplx w) const;
  HoloPoly derivative() const;

  HoloPoly operator-() const;
  HoloPoly operator+(cplx c) const;

 private:
  cplx basepoint_{0.0, 0.0};
  std::vector<cplx> coeffs_;
};

/// Values of a loop at strictly increasing angles covering [0, 2 pi).
struct SampledLoop {
  SampledLoop(std::vector<double> theta, std::vector<cplx> values);
  /// Uniform angles 2 pi k / n.
  static SampledLoop uniform(std::vector<cplx> values);

  std::vector<double> theta;
  std::vector<cplx> values;

  std::size_t size() const { return values.size(); }
  bool is_uniform() const;
};

/// Loops need at least this many samples.
inline constexpr std::size_t kMinLoopSamples = 4;

cplx evaluate(const MixedPolynomial& p, const ComplexPoint& z);

/// p(Z + zeta W) expanded in zeta, conj(zeta).
UnivariateMixed restrict_to_line(const MixedPolynomial& p, const ComplexLine& line);

struct CircleSplit {
  HoloPoly q;
  HoloPoly s;
};

/// q, s with u(zeta) = q(zeta - a) + conj(s(zeta - a)) on |zeta - a| = r.
/// Coefficients below 1e-12 of the largest one are dropped.
CircleSplit split_on_circle(const UnivariateMixed& u, cplx center, double radius);

SampledLoop sample_component(const UnivariateMixed& u, cplx center, double radius,
                             std::size_t n);

}  // namespace degext
