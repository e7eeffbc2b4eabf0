#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "degext/boundary_maps.hpp"
#include "degext/errors.hpp"
#include "support.hpp"

using namespace degext;
using namespace testing;

namespace {

double max_abs_on_circle(const UnivariateMixed& u, cplx a, double r, int n) {
  double m = 0.0;
  for (int k = 0; k < n; ++k) {
    m = std::max(m, std::abs(reference_eval(u, a + std::polar(r, 2.0 * std::numbers::pi * k / n))));
  }
  return m;
}

}  // namespace

TEST_SUITE("boundary_maps") {

TEST_CASE("evaluate on hand-checked points") {
  CHECK(std::abs(zbar(2, 0).evaluate(ComplexPoint({cplx(0, 1), 0})) - cplx(0, -1)) < 1e-15);
  const MixedPolynomial p = monomial(2, 1.0, {1, 0}, {0, 1});
  // 2 * conj(1 + i) = 2 - 2i
  CHECK(std::abs(p.evaluate(ComplexPoint({2, cplx(1, 1)})) - cplx(2, -2)) < 1e-15);
  CHECK(MixedPolynomial(2).evaluate(ComplexPoint({cplx(3, 1), cplx(-2, 5)})) == cplx(0, 0));
}

TEST_CASE("evaluate matches term-by-term evaluation") {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = uniform_int(rng, 1, 3);
    const RandomPolynomial rp = random_polynomial(rng, n, 5, uniform_int(rng, 1, 6));
    CVector z(n);
    for (int j = 0; j < n; ++j) z[j] = gaussian(rng);
    const cplx expected = reference_eval(rp.terms, z);
    CHECK(std::abs(rp.p.evaluate(ComplexPoint(z)) - expected) <= 1e-12 * (1.0 + std::abs(expected)));
  }
}

TEST_CASE("polynomial invariants") {
  CHECK_THROWS_AS(MixedPolynomial(2, {{1.0, {{1, 0}, {0, 0}}}, {2.0, {{1, 0}, {0, 0}}}}), Error);
  CHECK_THROWS_AS(MixedPolynomial(2, {{1.0, {{2, 0}, {0, 1}}}}, 2), Error);
  CHECK_NOTHROW(MixedPolynomial(2, {{1.0, {{2, 0}, {0, 1}}}}, 3));
  CHECK_THROWS_AS(MixedPolynomial(2, {{1.0, {{1}, {0}}}}), Error);
  const MixedPolynomial p = monomial(2, 1.0, {2, 1}, {0, 3});
  CHECK(p.degree() == 6);
  CHECK_FALSE(p.is_holomorphic());
  CHECK(monomial(2, 1.0, {2, 1}, {0, 0}).is_holomorphic());
  CHECK_THROWS_AS(p.evaluate(ComplexPoint({1.0})), Error);
  CHECK_THROWS_AS(MixedMap({z(2, 0), z(3, 0)}), Error);
}

TEST_CASE("arithmetic agrees with pointwise arithmetic") {
  Rng rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const RandomPolynomial a = random_polynomial(rng, 2, 3, 4);
    const RandomPolynomial b = random_polynomial(rng, 2, 3, 4);
    const ComplexPoint z({gaussian(rng), gaussian(rng)});
    const cplx va = a.p.evaluate(z);
    const cplx vb = b.p.evaluate(z);
    const double scale = 1.0 + std::abs(va) * std::abs(vb) + std::abs(va) + std::abs(vb);
    CHECK(std::abs((a.p + b.p).evaluate(z) - (va + vb)) < 1e-12 * scale);
    CHECK(std::abs((a.p - b.p).evaluate(z) - (va - vb)) < 1e-12 * scale);
    CHECK(std::abs((a.p * b.p).evaluate(z) - va * vb) < 1e-12 * scale);
    CHECK(std::abs(a.p.pow(3).evaluate(z) - va * va * va) < 1e-11 * (1.0 + std::pow(std::abs(va), 3)));
  }
}

TEST_CASE("restriction of conj(z1) z2 to the diagonal") {
  const MixedPolynomial p = monomial(2, 1.0, {0, 1}, {1, 0});
  const double h = 1.0 / std::sqrt(2.0);
  const ComplexLine line(ComplexPoint::zero(2), ComplexPoint({h, h}));
  const UnivariateMixed u = restrict_to_line(p, line);
  REQUIRE(u.terms().size() == 1);
  CHECK(std::abs(u.terms().at({1, 1}) - 0.5) < 1e-15);
  Rng rng(23);
  for (int k = 0; k < 20; ++k) {
    const cplx zeta = gaussian(rng);
    CHECK(std::abs(u.evaluate(zeta) - 0.5 * std::norm(zeta)) < 1e-12 * (1.0 + std::norm(zeta)));
  }
}

TEST_CASE("restriction of z1^2 to a shifted axis") {
  const UnivariateMixed u =
      restrict_to_line(monomial(2, 1.0, {2, 0}, {0, 0}), ComplexLine(ComplexPoint({1, 0}), ComplexPoint({1, 0})));
  CHECK(u.terms().size() == 3);
  CHECK(std::abs(u.terms().at({0, 0}) - 1.0) < 1e-15);
  CHECK(std::abs(u.terms().at({1, 0}) - 2.0) < 1e-15);
  CHECK(std::abs(u.terms().at({2, 0}) - 1.0) < 1e-15);
}

TEST_CASE("restriction of a constant is that constant") {
  const UnivariateMixed u = restrict_to_line(MixedPolynomial::constant(3, cplx(2, -1)),
                                             ComplexLine(ComplexPoint({1, 2, 3}), ComplexPoint({0, 0, 1})));
  REQUIRE(u.terms().size() == 1);
  CHECK(u.terms().at({0, 0}) == cplx(2, -1));
}

TEST_CASE("restriction commutes with evaluation and keeps the degree") {
  Rng rng(24);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = uniform_int(rng, 1, 3);
    const RandomPolynomial rp = random_polynomial(rng, n, 4, uniform_int(rng, 1, 6));
    CVector base(n);
    for (int j = 0; j < n; ++j) base[j] = gaussian(rng);
    const CVector w = unit_vector(rng, n);
    const UnivariateMixed u = restrict_to_line(rp.p, ComplexLine(ComplexPoint(base), ComplexPoint(w)));
    CHECK(u.degree() <= rp.p.degree());
    for (int k = 0; k < 50; ++k) {
      const cplx zeta = gaussian(rng);
      const cplx expected = reference_eval(rp.terms, base + zeta * w);
      CHECK(std::abs(u.evaluate(zeta) - expected) <= 1e-10 * (1.0 + std::abs(expected)));
    }
  }
}

TEST_CASE("split of conj(zeta) on the unit circle") {
  UnivariateMixed u;
  u.add_term(1.0, 0, 1);
  const CircleSplit sp = split_on_circle(u, 0.0, 1.0);
  CHECK(sp.q.degree() <= 0);
  CHECK(std::abs(sp.q.coefficient(0)) < 1e-15);
  REQUIRE(sp.s.degree() == 1);
  CHECK(std::abs(sp.s.coefficient(1) - 1.0) < 1e-15);
  CHECK(std::abs(sp.s.coefficient(0)) < 1e-15);
}

TEST_CASE("split of |zeta|^2 is the constant r^2") {
  UnivariateMixed u;
  u.add_term(1.0, 1, 1);
  for (double r : {0.5, 1.0, 3.0}) {
    const CircleSplit sp = split_on_circle(u, 0.0, r);
    CHECK(sp.q.degree() == 0);
    CHECK(std::abs(sp.q.coefficient(0) - r * r) < 1e-14 * r * r);
    CHECK(sp.s.degree() <= 0);
    CHECK(std::abs(sp.s.coefficient(0)) < 1e-15);
  }
}

TEST_CASE("split of zeta^2 conj(zeta) has net power one") {
  UnivariateMixed u;
  u.add_term(1.0, 2, 1);
  const CircleSplit sp = split_on_circle(u, 0.0, 1.0);
  REQUIRE(sp.q.degree() == 1);
  CHECK(std::abs(sp.q.coefficient(1) - 1.0) < 1e-15);
  CHECK(std::abs(sp.q.coefficient(0)) < 1e-15);
  CHECK(std::abs(sp.s.coefficient(0)) < 1e-15);
  CHECK(sp.s.degree() <= 0);
}

TEST_CASE("split reconstructs u on the circle") {
  Rng rng(25);
  for (int trial = 0; trial < 200; ++trial) {
    const UnivariateMixed u = random_univariate(rng, 6, uniform_int(rng, 1, 8));
    const cplx a = 2.0 * gaussian(rng);
    const double r = uniform(rng, 0.1, 3.0);
    const CircleSplit sp = split_on_circle(u, a, r);
    CHECK(sp.q.basepoint() == a);
    CHECK(sp.s.basepoint() == a);
    CHECK(sp.q.degree() <= u.degree());
    CHECK(sp.s.degree() <= u.degree());
    const double scale = 1.0 + max_abs_on_circle(u, a, r, 256);
    double worst = 0.0;
    for (int k = 0; k < 256; ++k) {
      const cplx zeta = a + std::polar(r, 2.0 * std::numbers::pi * k / 256.0);
      worst = std::max(worst, std::abs(sp.q(zeta) + std::conj(sp.s(zeta)) - reference_eval(u, zeta)));
    }
    CHECK(worst < 1e-9 * scale);
  }
}

TEST_CASE("split rejects a degenerate circle") {
  UnivariateMixed u;
  u.add_term(1.0, 0, 1);
  CHECK_THROWS_AS(split_on_circle(u, 0.0, 0.0), Error);
}

TEST_CASE("sampled components") {
  UnivariateMixed zeta;
  zeta.add_term(1.0, 1, 0);
  const SampledLoop loop = sample_component(zeta, 0.0, 1.0, 4);
  const cplx expected[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (int k = 0; k < 4; ++k) CHECK(std::abs(loop.values[k] - expected[k]) < 1e-15);

  const SampledLoop zero = sample_component(UnivariateMixed(), 0.5, 2.0, 16);
  for (const cplx& v : zero.values) CHECK(v == cplx(0, 0));

  Rng rng(26);
  const UnivariateMixed u = random_univariate(rng, 5, 6);
  const CircleSplit sp = split_on_circle(u, cplx(0.3, -0.2), 1.7);
  const SampledLoop lu = sample_component(u, cplx(0.3, -0.2), 1.7, 64);
  for (std::size_t k = 0; k < lu.size(); ++k) {
    const cplx zeta = cplx(0.3, -0.2) + std::polar(1.7, lu.theta[k]);
    CHECK(std::abs(sp.q(zeta) + std::conj(sp.s(zeta)) - lu.values[k]) < 1e-10 * (1.0 + std::abs(lu.values[k])));
  }
}

TEST_CASE("loop invariants") {
  CHECK_THROWS_AS(SampledLoop({0.0, 1.0, 2.0}, {1.0, 1.0, 1.0}), Error);
  CHECK_THROWS_AS(SampledLoop({0.0, 2.0, 1.0, 3.0}, {1.0, 1.0, 1.0, 1.0}), Error);
  CHECK_THROWS_AS(SampledLoop({0.0, 1.0, 2.0, 7.0}, {1.0, 1.0, 1.0, 1.0}), Error);
  CHECK_THROWS_AS(SampledLoop({0.0, 1.0, 2.0, 3.0}, {1.0, 1.0, 1.0}), Error);
  CHECK(SampledLoop::uniform(std::vector<cplx>(8, 1.0)).is_uniform());
}

TEST_CASE("holomorphic polynomials about a basepoint") {
  const HoloPoly p(cplx(1, 1), {1.0, 2.0, 0.0, 0.0});
  CHECK(p.degree() == 1);
  CHECK(std::abs(p(cplx(2, 1)) - 3.0) < 1e-15);
  CHECK(HoloPoly(0.0, {0.0, 0.0}).degree() == -1);
  const HoloPoly d = HoloPoly(0.0, {1.0, 2.0, 3.0}).derivative();
  CHECK(std::abs(d(2.0) - 14.0) < 1e-15);
}

}  // TEST_SUITE
