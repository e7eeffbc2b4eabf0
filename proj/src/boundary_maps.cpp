#include "degext/boundary_maps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "degext/errors.hpp"

namespace degext {

namespace {

cplx ipow(cplx base, int k) {
  cplx r{1.0, 0.0};
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / i;
  return r;
}

bool same_shape(const MixedExponent& e, int n) {
  return static_cast<int>(e.z.size()) == n && static_cast<int>(e.zbar.size()) == n;
}

}  // namespace

int MixedExponent::total_degree() const {
  int d = 0;
  for (int a : z) d += a;
  for (int b : zbar) d += b;
  return d;
}

MixedPolynomial::MixedPolynomial(int n) : n_(n) {
  if (n < 1) fail(ErrorKind::InvalidInput, "polynomial needs n >= 1 variables");
}

MixedPolynomial::MixedPolynomial(int n, std::vector<MixedTerm> terms,
                                 std::optional<int> degree_bound)
    : MixedPolynomial(n) {
  degree_bound_ = degree_bound;
  for (const MixedTerm& t : terms) check_exponent(t.exponent);
  std::sort(terms.begin(), terms.end(),
            [](const MixedTerm& a, const MixedTerm& b) { return a.exponent < b.exponent; });
  for (std::size_t k = 1; k < terms.size(); ++k) {
    if (terms[k].exponent == terms[k - 1].exponent) {
      fail(ErrorKind::InvalidInput, "duplicate exponent pair in polynomial");
    }
  }
  for (MixedTerm& t : terms) {
    if (t.coefficient != cplx{0.0, 0.0}) terms_.push_back(std::move(t));
  }
  if (degree_bound_ && degree() > *degree_bound_) {
    fail(ErrorKind::InvalidInput, "polynomial degree exceeds declared bound");
  }
}

void MixedPolynomial::check_exponent(const MixedExponent& e) const {
  if (!same_shape(e, n_)) {
    fail(ErrorKind::DimensionMismatch,
         "exponent vectors must have length " + std::to_string(n_));
  }
  for (int a : e.z) {
    if (a < 0) fail(ErrorKind::InvalidInput, "negative exponent");
  }
  for (int b : e.zbar) {
    if (b < 0) fail(ErrorKind::InvalidInput, "negative exponent");
  }
}

MixedPolynomial MixedPolynomial::constant(int n, cplx c) {
  MixedPolynomial p(n);
  p.add_term(c, {std::vector<int>(static_cast<std::size_t>(n), 0),
                 std::vector<int>(static_cast<std::size_t>(n), 0)});
  return p;
}

MixedPolynomial MixedPolynomial::variable(int n, int j, bool conjugate) {
  if (j < 0 || j >= n) fail(ErrorKind::InvalidInput, "variable index out of range");
  MixedExponent e{std::vector<int>(static_cast<std::size_t>(n), 0),
                  std::vector<int>(static_cast<std::size_t>(n), 0)};
  (conjugate ? e.zbar : e.z)[static_cast<std::size_t>(j)] = 1;
  MixedPolynomial p(n);
  p.add_term(1.0, std::move(e));
  return p;
}

int MixedPolynomial::degree() const {
  int d = 0;
  for (const MixedTerm& t : terms_) d = std::max(d, t.exponent.total_degree());
  return d;
}

bool MixedPolynomial::is_holomorphic() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const MixedTerm& t) {
    return std::all_of(t.exponent.zbar.begin(), t.exponent.zbar.end(),
                       [](int b) { return b == 0; });
  });
}

void MixedPolynomial::add_term(cplx c, MixedExponent exponent) {
  check_exponent(exponent);
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exponent,
      [](const MixedTerm& t, const MixedExponent& e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == exponent) {
    it->coefficient += c;
    if (it->coefficient == cplx{0.0, 0.0}) terms_.erase(it);
  } else if (c != cplx{0.0, 0.0}) {
    terms_.insert(it, MixedTerm{c, std::move(exponent)});
  }
}

cplx MixedPolynomial::evaluate(std::span<const cplx> z) const {
  if (static_cast<int>(z.size()) != n_) {
    fail(ErrorKind::DimensionMismatch, "point dimension does not match polynomial");
  }
  cplx sum{0.0, 0.0};
  for (const MixedTerm& t : terms_) {
    cplx m = t.coefficient;
    for (int j = 0; j < n_; ++j) {
      const auto sj = static_cast<std::size_t>(j);
      const int a = t.exponent.z[sj];
      const int b = t.exponent.zbar[sj];
      if (a) m *= ipow(z[sj], a);
      if (b) m *= ipow(std::conj(z[sj]), b);
    }
    sum += m;
  }
  return sum;
}

MixedPolynomial MixedPolynomial::operator+(const MixedPolynomial& other) const {
  if (other.n_ != n_) fail(ErrorKind::DimensionMismatch, "polynomial sum");
  MixedPolynomial r = *this;
  r.degree_bound_.reset();
  for (const MixedTerm& t : other.terms_) r.add_term(t.coefficient, t.exponent);
  return r;
}

MixedPolynomial MixedPolynomial::operator-(const MixedPolynomial& other) const {
  return *this + other * cplx{-1.0, 0.0};
}

MixedPolynomial MixedPolynomial::operator*(const MixedPolynomial& other) const {
  if (other.n_ != n_) fail(ErrorKind::DimensionMismatch, "polynomial product");
  MixedPolynomial r(n_);
  for (const MixedTerm& a : terms_) {
    for (const MixedTerm& b : other.terms_) {
      MixedExponent e = a.exponent;
      for (std::size_t j = 0; j < e.z.size(); ++j) {
        e.z[j] += b.exponent.z[j];
        e.zbar[j] += b.exponent.zbar[j];
      }
      r.add_term(a.coefficient * b.coefficient, std::move(e));
    }
  }
  return r;
}

MixedPolynomial MixedPolynomial::operator*(cplx scale) const {
  MixedPolynomial r(n_);
  for (const MixedTerm& t : terms_) r.add_term(t.coefficient * scale, t.exponent);
  return r;
}

MixedPolynomial MixedPolynomial::pow(int k) const {
  MixedPolynomial r = constant(n_, 1.0);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

MixedPolynomial MixedPolynomial::pruned(double tol) const {
  MixedPolynomial r(n_);
  for (const MixedTerm& t : terms_) {
    if (std::abs(t.coefficient) > tol) r.add_term(t.coefficient, t.exponent);
  }
  return r;
}

MixedMap::MixedMap(std::vector<MixedPolynomial> components)
    : components_(std::move(components)) {
  if (components_.empty()) fail(ErrorKind::InvalidInput, "map needs components");
  const int n = static_cast<int>(components_.size());
  for (const MixedPolynomial& p : components_) {
    if (p.n() != n) {
      fail(ErrorKind::DimensionMismatch,
           "map components must all have n = number of components");
    }
  }
}

int MixedMap::degree() const {
  int d = 0;
  for (const MixedPolynomial& p : components_) d = std::max(d, p.degree());
  return d;
}

bool MixedMap::is_holomorphic() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const MixedPolynomial& p) { return p.is_holomorphic(); });
}

void MixedMap::evaluate(std::span<const cplx> z, std::span<cplx> out) const {
  for (std::size_t j = 0; j < components_.size(); ++j) {
    out[j] = components_[j].evaluate(z);
  }
}

CVector MixedMap::evaluate(const CVector& z) const {
  CVector out(dim());
  evaluate({z.data(), static_cast<std::size_t>(z.size())},
           {out.data(), static_cast<std::size_t>(out.size())});
  return out;
}

MixedMap MixedMap::operator+(const MixedMap& other) const {
  if (other.dim() != dim()) fail(ErrorKind::DimensionMismatch, "map sum");
  std::vector<MixedPolynomial> comps;
  for (int j = 0; j < dim(); ++j) comps.push_back((*this)[j] + other[j]);
  return MixedMap(std::move(comps));
}

void UnivariateMixed::add_term(cplx c, int i, int j) {
  if (i < 0 || j < 0) fail(ErrorKind::InvalidInput, "negative exponent");
  if (c == cplx{0.0, 0.0}) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == cplx{0.0, 0.0}) terms_.erase(it);
  }
}

int UnivariateMixed::degree() const {
  int d = 0;
  for (const auto& [ij, c] : terms_) d = std::max(d, ij.first + ij.second);
  return d;
}

cplx UnivariateMixed::evaluate(cplx zeta) const {
  cplx sum{0.0, 0.0};
  const cplx zc = std::conj(zeta);
  for (const auto& [ij, c] : terms_) sum += c * ipow(zeta, ij.first) * ipow(zc, ij.second);
  return sum;
}

UnivariateMixed UnivariateMixed::operator*(const UnivariateMixed& other) const {
  UnivariateMixed r;
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : other.terms_) {
      r.add_term(ca * cb, a.first + b.first, a.second + b.second);
    }
  }
  return r;
}

UnivariateMixed UnivariateMixed::operator+(const UnivariateMixed& other) const {
  UnivariateMixed r = *this;
  for (const auto& [ij, c] : other.terms_) r.add_term(c, ij.first, ij.second);
  return r;
}

UnivariateMixed UnivariateMixed::operator*(cplx scale) const {
  UnivariateMixed r;
  for (const auto& [ij, c] : terms_) r.add_term(c * scale, ij.first, ij.second);
  return r;
}

HoloPoly::HoloPoly(cplx basepoint, std::vector<cplx> coefficients)
    : basepoint_(basepoint), coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == cplx{0.0, 0.0}) coeffs_.pop_back();
}

cplx HoloPoly::coefficient(int k) const {
  return k >= 0 && k < static_cast<int>(coeffs_.size())
             ? coeffs_[static_cast<std::size_t>(k)]
             : cplx{0.0, 0.0};
}

cplx HoloPoly::evaluate_shifted(cplx w) const {
  cplx r{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * w + *it;
  return r;
}

HoloPoly HoloPoly::derivative() const {
  std::vector<cplx> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d.push_back(static_cast<double>(k) * coeffs_[k]);
  }
  return HoloPoly(basepoint_, std::move(d));
}

HoloPoly HoloPoly::operator-() const {
  std::vector<cplx> c = coeffs_;
  for (cplx& x : c) x = -x;
  return HoloPoly(basepoint_, std::move(c));
}

HoloPoly HoloPoly::operator+(cplx c) const {
  std::vector<cplx> r = coeffs_;
  if (r.empty()) r.push_back(0.0);
  r[0] += c;
  return HoloPoly(basepoint_, std::move(r));
}

SampledLoop::SampledLoop(std::vector<double> th, std::vector<cplx> vals)
    : theta(std::move(th)), values(std::move(vals)) {
  if (theta.size() != values.size()) {
    fail(ErrorKind::InvalidInput, "loop angles and values differ in length");
  }
  if (values.size() < kMinLoopSamples) {
    fail(ErrorKind::InvalidInput, "loop needs at least 4 samples");
  }
  for (std::size_t k = 0; k < theta.size(); ++k) {
    if (!std::isfinite(theta[k]) || !std::isfinite(values[k].real()) ||
        !std::isfinite(values[k].imag())) {
      fail(ErrorKind::InvalidInput, "non-finite loop sample");
    }
    if (k > 0 && !(theta[k] > theta[k - 1])) {
      fail(ErrorKind::InvalidInput, "loop angles must be strictly increasing");
    }
  }
  if (theta.front() < 0.0 || theta.back() >= theta.front() + 2.0 * std::numbers::pi) {
    fail(ErrorKind::InvalidInput, "loop angles must lie in one period [0, 2 pi)");
  }
}

SampledLoop SampledLoop::uniform(std::vector<cplx> values) {
  std::vector<double> th(values.size());
  for (std::size_t k = 0; k < th.size(); ++k) {
    th[k] = 2.0 * std::numbers::pi * static_cast<double>(k) /
            static_cast<double>(th.size());
  }
  return SampledLoop(std::move(th), std::move(values));
}

bool SampledLoop::is_uniform() const {
  const double step = 2.0 * std::numbers::pi / static_cast<double>(size());
  for (std::size_t k = 0; k < size(); ++k) {
    if (std::abs(theta[k] - theta[0] - step * static_cast<double>(k)) > 1e-9) {
      return false;
    }
  }
  return true;
}

cplx evaluate(const MixedPolynomial& p, const ComplexPoint& z) {
  return p.evaluate(z);
}

UnivariateMixed restrict_to_line(const MixedPolynomial& p, const ComplexLine& line) {
  if (line.dim() != p.n()) {
    fail(ErrorKind::DimensionMismatch, "line dimension does not match polynomial");
  }
  const int n = p.n();
  std::vector<UnivariateMixed> var(static_cast<std::size_t>(n));
  std::vector<UnivariateMixed> cvar(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const auto sj = static_cast<std::size_t>(j);
    var[sj].add_term(line.base()[j], 0, 0);
    var[sj].add_term(line.direction()[j], 1, 0);
    cvar[sj].add_term(std::conj(line.base()[j]), 0, 0);
    cvar[sj].add_term(std::conj(line.direction()[j]), 0, 1);
  }
  // Cache powers per variable as they are requested.
  std::vector<std::vector<UnivariateMixed>> pw(static_cast<std::size_t>(n));
  std::vector<std::vector<UnivariateMixed>> cpw(static_cast<std::size_t>(n));
  auto power = [](std::vector<UnivariateMixed>& cache, const UnivariateMixed& base,
                  int k) -> const UnivariateMixed& {
    if (cache.empty()) {
      UnivariateMixed one;
      one.add_term(1.0, 0, 0);
      cache.push_back(one);
    }
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * base);
    return cache[static_cast<std::size_t>(k)];
  };

  UnivariateMixed result;
  for (const MixedTerm& t : p.terms()) {
    UnivariateMixed m;
    m.add_term(t.coefficient, 0, 0);
    for (int j = 0; j < n; ++j) {
      const auto sj = static_cast<std::size_t>(j);
      if (t.exponent.z[sj]) m = m * power(pw[sj], var[sj], t.exponent.z[sj]);
      if (t.exponent.zbar[sj]) m = m * power(cpw[sj], cvar[sj], t.exponent.zbar[sj]);
    }
    result = result + m;
  }
  return result;
}

CircleSplit split_on_circle(const UnivariateMixed& u, cplx center, double radius) {
  if (!(radius > 0.0)) fail(ErrorKind::DegenerateDisc, "split needs radius > 0");
  const int m = u.degree();
  const auto dim = static_cast<std::size_t>(m + 1);
  // d[k][l]: coefficient of w^k conj(w)^l with w = zeta - a.
  std::vector<std::vector<cplx>> d(dim, std::vector<cplx>(dim, 0.0));
  const cplx ac = std::conj(center);
  for (const auto& [ij, c] : u.terms()) {
    const auto [i, j] = ij;
    for (int k = 0; k <= i; ++k) {
      const cplx ck = c * binomial(i, k) * ipow(center, i - k);
      for (int l = 0; l <= j; ++l) {
        d[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] +=
            ck * binomial(j, l) * ipow(ac, j - l);
      }
    }
  }
  // On the circle conj(w) = r^2 / w.
  const double r2 = radius * radius;
  std::vector<cplx> q(dim, 0.0);
  std::vector<cplx> s(dim, 0.0);
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t l = 0; l < dim; ++l) {
      const cplx c = d[k][l];
      if (c == cplx{0.0, 0.0}) continue;
      if (k >= l) {
        q[k - l] += c * std::pow(r2, static_cast<double>(l));
      } else {
        s[l - k] += std::conj(c) * std::pow(r2, static_cast<double>(k));
      }
    }
  }
  // Cleanup relative to the largest circle-scaled magnitude |c_k| r^k.
  double largest = 0.0;
  for (std::size_t k = 0; k < dim; ++k) {
    const double rk = std::pow(radius, static_cast<double>(k));
    largest = std::max({largest, std::abs(q[k]) * rk, std::abs(s[k]) * rk});
  }
  for (std::size_t k = 0; k < dim; ++k) {
    const double rk = std::pow(radius, static_cast<double>(k));
    if (std::abs(q[k]) * rk < 1e-12 * largest) q[k] = 0.0;
    if (std::abs(s[k]) * rk < 1e-12 * largest) s[k] = 0.0;
  }
  return {HoloPoly(center, std::move(q)), HoloPoly(center, std::move(s))};
}

SampledLoop sample_component(const UnivariateMixed& u, cplx center, double radius,
                             std::size_t n) {
  if (n < kMinLoopSamples) fail(ErrorKind::InvalidInput, "need at least 4 samples");
  std::vector<cplx> vals(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(n);
    vals[k] = u.evaluate(center + radius * std::polar(1.0, theta));
  }
  return SampledLoop::uniform(std::move(vals));
}

}  // namespace degext
