#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "degext/errors.hpp"
#include "degext/winding.hpp"
#include "support.hpp"

using namespace degext;
using namespace testing;

namespace {

/// c * prod (zeta - r_k) * prod (conj(zeta) - s_k); roots kept away from
/// the unit circle. Its winding is #{|r_k| < 1} - #{|s_k| < 1}.
struct RootLoop {
  cplx c;
  std::vector<cplx> holo;
  std::vector<cplx> anti;

  cplx operator()(cplx zeta) const {
    cplx v = c;
    for (cplx r : holo) v *= zeta - r;
    for (cplx s : anti) v *= std::conj(zeta) - s;
    return v;
  }
  int expected() const {
    int w = 0;
    for (cplx r : holo) w += std::abs(r) < 1.0 ? 1 : 0;
    for (cplx s : anti) w -= std::abs(s) < 1.0 ? 1 : 0;
    return w;
  }
};

cplx root_off_circle(Rng& rng) {
  const double radius = uniform(rng, 0.0, 1.0) < 0.5 ? uniform(rng, 0.0, 0.8) : uniform(rng, 1.25, 2.5);
  return std::polar(radius, uniform(rng, 0.0, 2.0 * std::numbers::pi));
}

RootLoop random_root_loop(Rng& rng) {
  RootLoop l{gaussian(rng), {}, {}};
  const int a = uniform_int(rng, 0, 4);
  const int b = uniform_int(rng, 0, 4);
  for (int k = 0; k < a; ++k) l.holo.push_back(root_off_circle(rng));
  for (int k = 0; k < b; ++k) l.anti.push_back(root_off_circle(rng));
  return l;
}

int wind(const std::function<cplx(cplx)>& f) {
  return winding_number(on_circle(f, 0.0, 1.0)).winding;
}

}  // namespace

TEST_SUITE("winding") {

TEST_CASE("monomials") {
  CHECK(wind([](cplx z) { return z * z * z; }) == 3);
  CHECK(wind([](cplx z) { return std::conj(z); }) == -1);
  for (int k = -8; k <= 8; ++k) {
    CHECK(wind([k](cplx z) { return std::pow(z, k); }) == k);
    CHECK(wind([k](cplx z) { return std::pow(std::conj(z), k); }) == -k);
  }
}

TEST_CASE("mixed product with one root of each kind inside") {
  auto f = [](cplx z) { return (z - 0.5) * (std::conj(z) - 0.25); };
  CHECK(wind(f) == 0);
  CHECK(std::round(reference_winding([&](double t) { return f(std::polar(1.0, t)); })) == 0.0);
}

TEST_CASE("certification invariants of the result") {
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const RootLoop l = random_root_loop(rng);
    const WindingResult r = winding_number(on_circle(l, 0.0, 1.0));
    CHECK(r.max_angular_step < std::numbers::pi / 2);
    CHECK(r.min_modulus > 0.0);
    CHECK(r.samples_used >= 64);
    CHECK(r.winding == l.expected());
  }
}

TEST_CASE("agrees with unwrapped arguments on random root loops") {
  Rng rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const RootLoop l = random_root_loop(rng);
    const double ref = reference_winding([&](double t) { return l(std::polar(1.0, t)); });
    CHECK(std::abs(ref - std::round(ref)) < 1e-6);
    CHECK(wind(l) == static_cast<int>(std::round(ref)));
  }
}

TEST_CASE("product rule") {
  Rng rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    const RootLoop f = random_root_loop(rng);
    const RootLoop g = random_root_loop(rng);
    CHECK(wind([&](cplx z) { return f(z) * g(z); }) == wind(f) + wind(g));
  }
}

TEST_CASE("positive scaling leaves the winding unchanged") {
  Rng rng(34);
  for (int trial = 0; trial < 30; ++trial) {
    const RootLoop f = random_root_loop(rng);
    const double t = std::exp(uniform(rng, -5.0, 5.0));
    CHECK(wind([&](cplx z) { return t * f(z); }) == wind(f));
  }
}

TEST_CASE("small perturbations leave the winding unchanged") {
  Rng rng(35);
  for (int trial = 0; trial < 30; ++trial) {
    const RootLoop f = random_root_loop(rng);
    const WindingResult base = winding_number(on_circle(f, 0.0, 1.0));
    // A trigonometric perturbation with sup norm at most 0.49 * min |f|.
    const int k = uniform_int(rng, -6, 6);
    const cplx c = std::polar(0.49 * base.min_modulus, uniform(rng, 0.0, 6.0));
    const int w = winding_number([&](double t) {
                    return f(std::polar(1.0, t)) + c * std::polar(1.0, k * t);
                  }).winding;
    CHECK(w == base.winding);
  }
}

TEST_CASE("off-center circles") {
  auto f = [](cplx z) { return (z - cplx(2, 0)) * (z - cplx(2.5, 0.2)) * std::conj(z - cplx(5, 0)); };
  CHECK(winding_number(on_circle(f, cplx(2, 0), 1.0)).winding == 2);
  CHECK(winding_number(on_circle(f, cplx(5, 0), 0.5)).winding == -1);
}

TEST_CASE("boundary zeros are reported") {
  CHECK_THROWS_AS(winding_number(on_circle([](cplx z) { return z - 1.0; }, 0.0, 1.0)), Error);
  try {
    winding_number(on_circle([](cplx z) { return (z - 1.0) * z; }, 0.0, 1.0));
    FAIL("expected ZeroOnBoundary");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroOnBoundary);
  }
}

TEST_CASE("sampled loops") {
  std::vector<cplx> v;
  for (int k = 0; k < 32; ++k) v.push_back(std::polar(1.0, -2.0 * 2.0 * std::numbers::pi * k / 32.0));
  CHECK(winding_number(SampledLoop::uniform(v)).winding == -2);
  // Four samples of zeta^3 turn by 3 pi / 2 per step: too coarse to certify.
  std::vector<cplx> coarse;
  for (int k = 0; k < 4; ++k) coarse.push_back(std::polar(1.0, 3.0 * 2.0 * std::numbers::pi * k / 4.0));
  try {
    winding_number(SampledLoop::uniform(coarse));
    FAIL("expected NoConvergence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoConvergence);
  }
}

TEST_CASE("fourier coefficients of simple loops") {
  const FourierCoefficients c = fourier_coefficients(
      on_circle([](cplx z) { return std::conj(z); }, 0.0, 1.0), -4, 4);
  for (const auto& [k, v] : c) CHECK(std::abs(v - (k == -1 ? 1.0 : 0.0)) < 1e-12);
  const FourierCoefficients d = fourier_coefficients(
      on_circle([](cplx z) { return z * z + 3.0; }, 0.0, 1.0), -4, 4);
  for (const auto& [k, v] : d) {
    const double expected = k == 2 ? 1.0 : (k == 0 ? 3.0 : 0.0);
    CHECK(std::abs(v - expected) < 1e-12);
  }
}

TEST_CASE("fourier coefficients match the circle split") {
  Rng rng(36);
  for (int trial = 0; trial < 40; ++trial) {
    const UnivariateMixed u = random_univariate(rng, 6, 7);
    const cplx a = gaussian(rng);
    const double r = uniform(rng, 0.2, 2.0);
    const CircleSplit sp = split_on_circle(u, a, r);
    const FourierCoefficients c =
        fourier_coefficients(on_circle([&](cplx z) { return u.evaluate(z); }, a, r), -8, 8);
    // u(a + r e^{it}) = sum q_k r^k e^{ikt} + sum conj(s_k) r^k e^{-ikt}
    for (int k = -8; k <= 8; ++k) {
      cplx expected = 0.0;
      if (k >= 0) expected += sp.q.coefficient(k) * std::pow(r, k);
      if (k <= 0) expected += std::conj(sp.s.coefficient(-k)) * std::pow(r, -k);
      CHECK(std::abs(c.at(k) - expected) < 1e-9 * (1.0 + std::abs(expected)));
    }
  }
}

TEST_CASE("csv export") {
  const SampledLoop loop = SampledLoop::uniform({1.0, cplx(0, 1), -1.0, cplx(0, -1)});
  std::ostringstream out;
  write_loop_csv(out, loop);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "theta,re,im");
  int rows = 0;
  while (std::getline(in, line)) {
    double t = 0, re = 0, im = 0;
    char c1 = 0, c2 = 0;
    std::istringstream row(line);
    row >> t >> c1 >> re >> c2 >> im;
    CHECK(c1 == ',');
    CHECK(c2 == ',');
    CHECK(std::abs(t - loop.theta[rows]) < 1e-15);
    CHECK(std::abs(cplx(re, im) - loop.values[rows]) < 1e-15);
    ++rows;
  }
  CHECK(rows == 4);
}

}  // TEST_SUITE
