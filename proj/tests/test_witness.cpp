#include <doctest.h>

#include <cmath>
#include <numbers>

#include "degext/errors.hpp"
#include "degext/json_io.hpp"
#include "degext/witness.hpp"
#include "support.hpp"

using namespace degext;
using namespace testing;

namespace {

UnivariateMixed uni(std::initializer_list<std::tuple<cplx, int, int>> terms) {
  UnivariateMixed u;
  for (const auto& [c, i, j] : terms) u.add_term(c, i, j);
  return u;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidInput;
}

int circle_winding(const std::function<cplx(cplx)>& f, cplx a, double r) {
  return static_cast<int>(std::round(reference_winding([&](double t) { return f(a + std::polar(r, t)); })));
}

/// Random map with degree <= 3 whose first component carries conj(z_j)^d.
MixedMap non_extendable(Rng& rng) {
  MixedPolynomial a = random_polynomial(rng, 2, 3, uniform_int(rng, 2, 4)).p;
  MixedPolynomial b = random_polynomial(rng, 2, 3, uniform_int(rng, 2, 4)).p;
  const int j = uniform_int(rng, 0, 1);
  const int d = uniform_int(rng, 1, 3);
  a = a + zbar(2, j).pow(d) * gaussian(rng);
  a = a + MixedPolynomial::constant(2, 0.3 * gaussian(rng)) + z(2, 0) * (0.3 * gaussian(rng));
  b = b + z(2, 1) * (0.3 * gaussian(rng)) + zbar(2, 0) * (0.3 * gaussian(rng));
  return MixedMap({a, b});
}

void check_report(const MixedMap& phi, const Domain& domain, const WitnessReport& r) {
  CHECK(r.slice_winding < 0);
  CHECK(r.ambient_degree.degree == r.slice_winding);
  CHECK(r.structured_degree.degree == r.slice_winding);
  CHECK(r.ambient_degree.method == DegreeMethod::ZeroCount);
  for (double m : r.homotopy_margins) CHECK(m > 0.0);
  CHECK(r.final_margin > 0.0);
  CHECK(r.P.is_holomorphic());
  CHECK(r.P.degree() <= std::max(phi.degree(), 1));
  CHECK(r.T > 0.0);

  // Phi + P on 4096 fresh boundary samples.
  const MixedMap total = phi + r.P;
  double lo = 1e300;
  for (const CVector& z : sample_boundary(domain, 4096, 12345)) lo = std::min(lo, total.evaluate(z).norm());
  CHECK(lo > 0.0);

  // The witnessing component winds like the report says on the slice circle.
  const int c = r.component;
  const int w = circle_winding(
      [&](cplx zeta) {
        const CVector p = r.line.at(zeta);
        return phi[c].evaluate({p.data(), 2}) + r.P[c].evaluate({p.data(), 2});
      },
      r.slice.center, r.slice.radius);
  CHECK(w == r.slice_winding);
}

}  // namespace

TEST_SUITE("witness") {

TEST_CASE("one-dimensional witness for conj(zeta)") {
  const Witness1D w = witness_1d(uni({{1.0, 0, 1}}), 0.0, 1.0);
  CHECK(w.split.q.degree() <= 0);
  REQUIRE(w.split.s.degree() == 1);
  CHECK(std::abs(w.split.s.coefficient(1) - 1.0) < 1e-15);
  CHECK(std::abs(w.b) < 1e-15);
  CHECK(w.g.degree() == -1);
  CHECK(w.winding == -1);
}

TEST_CASE("one-dimensional witness for zeta + conj(zeta)^2") {
  const UnivariateMixed u = uni({{1.0, 1, 0}, {1.0, 0, 2}});
  const Witness1D w = witness_1d(u, 0.0, 1.0);
  // s(w) = w^2 has s'(0) = 0, so the grid center is skipped.
  CHECK(std::abs(w.grid_offset) > 0.0);
  CHECK(std::abs(w.b - std::conj(w.grid_offset * w.grid_offset)) < 1e-15);
  CHECK(w.winding == -2);
  CHECK(circle_winding([&](cplx z) { return u.evaluate(z) + w.g(z); }, 0.0, 1.0) == -2);
  // g = -q - b.
  CHECK(std::abs(w.g(0.3) - (-0.3 - w.b)) < 1e-15);

  // b = 0.25 from zeta_0 = 0.5 works as well: two preimages +-0.5 of 0.25.
  const HoloPoly g(0.0, {-0.25, -1.0});
  CHECK(witness_winding(u, 0.0, 1.0, g) == -2);
  CHECK(circle_winding([&](cplx z) { return u.evaluate(z) + g(z); }, 0.0, 1.0) == -2);
}

TEST_CASE("holomorphic data has no one-dimensional witness") {
  CHECK(kind_of([] { witness_1d(uni({{1.0, 3, 0}}), 0.0, 1.0); }) == ErrorKind::DataExtends);
  CHECK(kind_of([] { witness_1d(uni({{1.0, 3, 0}, {2.0, 1, 1}}), 0.0, 1.0); }) == ErrorKind::DataExtends);
}

TEST_CASE("one-dimensional witnesses on random discs") {
  Rng rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    UnivariateMixed u = random_univariate(rng, 5, 5);
    u.add_term(gaussian(rng), 0, uniform_int(rng, 1, 3));
    const cplx a = gaussian(rng);
    const double r = uniform(rng, 0.3, 2.0);
    const Witness1D w = witness_1d(u, a, r);
    CHECK(w.winding < 0);
    CHECK(w.g.basepoint() == a);
    CHECK(w.margin > 0.0);
    CHECK(circle_winding([&](cplx z) { return u.evaluate(z) + w.g(z); }, a, r) == w.winding);
    // b is a value of conj(s) inside the disc.
    CHECK(std::abs(w.grid_offset) < r);
    CHECK(std::abs(std::conj(w.split.s(a + w.grid_offset)) - w.b) < 1e-12 * (1.0 + std::abs(w.b)));
  }
}

TEST_CASE("lifting to the ambient space") {
  const HoloPoly g(0.0, {-0.25, -1.0});
  const MixedPolynomial p = lift_to_ambient(g, canonical_frame(ComplexLine::axis(ComplexPoint::zero(2), 0)));
  CHECK(p.is_holomorphic());
  const MixedPolynomial expected = z(2, 0) * -1.0 - MixedPolynomial::constant(2, 0.25);
  Rng rng(62);
  for (int k = 0; k < 10; ++k) {
    const ComplexPoint x({gaussian(rng), gaussian(rng)});
    CHECK(std::abs(p.evaluate(x) - expected.evaluate(x)) < 1e-14);
  }
  const MixedPolynomial c = lift_to_ambient(HoloPoly(0.0, {cplx(1, 2)}), canonical_frame(ComplexLine::axis(ComplexPoint::zero(2), 1)));
  CHECK(c.degree() == 0);
  CHECK(std::abs(c.evaluate(ComplexPoint({3, 4})) - cplx(1, 2)) < 1e-15);
}

TEST_CASE("lifts restrict to g on the line") {
  Rng rng(63);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = uniform_int(rng, 1, 3);
    CVector base(n);
    for (int j = 0; j < n; ++j) base[j] = gaussian(rng);
    const ComplexLine line(ComplexPoint(base), ComplexPoint(unit_vector(rng, n)));
    std::vector<cplx> coeffs;
    for (int k = 0; k < uniform_int(rng, 1, 5); ++k) coeffs.push_back(gaussian(rng));
    const HoloPoly g(gaussian(rng), coeffs);
    const MixedPolynomial p = lift_to_ambient(g, canonical_frame(line));
    CHECK(p.is_holomorphic());
    CHECK(p.degree() <= std::max(g.degree(), 0));
    for (int k = 0; k < 20; ++k) {
      const cplx zeta = gaussian(rng);
      const CVector x = line.at(zeta);
      CHECK(std::abs(p.evaluate({x.data(), static_cast<std::size_t>(n)}) - g(zeta)) <
            1e-10 * (1.0 + std::abs(g(zeta))));
    }
  }
}

TEST_CASE("choose_T on the canonical map") {
  const MixedMap phi({zbar(2, 0), z(2, 1)});
  const ComplexLine axis = ComplexLine::axis(ComplexPoint::zero(2), 0);
  const TChoice t = choose_T(phi, MixedPolynomial(2), unit_ball(2), axis, 0, {});
  CHECK(t.T == 1.0);
  for (double m : t.margins) CHECK(m > 0.0);
}

TEST_CASE("choose_T with a large second component") {
  // (conj z1, w2 + lambda 100 z1 / T) only vanishes at z = 0, so every T
  // certifies and the first one is taken.
  const MixedMap phi({zbar(2, 0), z(2, 0) * 100.0});
  const ComplexLine axis = ComplexLine::axis(ComplexPoint::zero(2), 0);
  const Domain ball = unit_ball(2);
  const TChoice t = choose_T(phi, MixedPolynomial(2), ball, axis, 0, {});
  CHECK(t.T == 1.0);
  const MixedMap map42({zbar(2, 0), z(2, 1) + z(2, 0) * (100.0 / t.T)});
  const MixedMap map41({zbar(2, 0), z(2, 1)});
  const auto boundary = sample_boundary(ball, 4096, 777);
  const HomotopyResult h = homotopy_nonvanishing(MapOracle::from(map41), MapOracle::from(map42), boundary);
  CHECK(h.ok);
  CHECK(zero_count_degree(MapOracle::from(map42), ball).degree == -1);
}

TEST_CASE("choose_T raises T when the homotopy would cross a zero") {
  // With Phi_2 = -4 z2 the blend (conj z1, (1 - 4 lambda / T) z2) vanishes on
  // bD at lambda = T / 4, so T = 1, 2, 4 are refused.
  const MixedMap phi({zbar(2, 0), z(2, 1) * -4.0});
  const ComplexLine axis = ComplexLine::axis(ComplexPoint::zero(2), 0);
  const TChoice t = choose_T(phi, MixedPolynomial(2), unit_ball(2), axis, 0, {});
  CHECK(t.T == 8.0);
}

TEST_CASE("choose_T errors") {
  const MixedMap phi({zbar(2, 0), z(2, 1)});
  const ComplexLine axis = ComplexLine::axis(ComplexPoint::zero(2), 0);
  // conj(zeta) - zeta vanishes at zeta = +-1.
  CHECK(kind_of([&] { choose_T(phi, z(2, 0) * -1.0, unit_ball(2), axis, 0, {}); }) ==
        ErrorKind::SliceBoundaryZero);
  WitnessOptions capped;
  capped.t_cap = 4.0;
  const MixedMap hard({zbar(2, 0), z(2, 1) * -100.0});
  CHECK(kind_of([&] { choose_T(hard, MixedPolynomial(2), unit_ball(2), axis, 0, capped); }) ==
        ErrorKind::TCapExceeded);
}

TEST_CASE("witness for the canonical map") {
  const MixedMap phi({zbar(2, 0), z(2, 1)});
  const Domain ball = unit_ball(2);
  const WitnessReport r = assemble_witness(phi, ball);
  CHECK(r.component == 0);
  CHECK(r.slice_winding == -1);
  CHECK(r.ambient_degree.degree == -1);
  REQUIRE(r.ambient_degree.zeros.size() == 1);
  CHECK(r.ambient_degree.zeros[0].location.norm() < 1e-9);
  CHECK(r.ambient_degree.zeros[0].jacobian_sign == -1);
  CHECK(r.T == 1.0);
  // P = (0, T z2).
  CHECK(r.P[0].is_zero());
  Rng rng(64);
  for (int k = 0; k < 10; ++k) {
    const ComplexPoint x({gaussian(rng), gaussian(rng)});
    CHECK(std::abs(r.P[1].evaluate(x) - r.T * x[1]) < 1e-14);
  }
  check_report(phi, ball, r);
}

TEST_CASE("witness for conj(z1)^2, conj(z2)") {
  const MixedMap phi({zbar(2, 0) * zbar(2, 0), zbar(2, 1)});
  const WitnessReport r = assemble_witness(phi, unit_ball(2));
  CHECK(r.slice_winding == -2);
  check_report(phi, unit_ball(2), r);
}

TEST_CASE("holomorphic maps have no witness") {
  CHECK(kind_of([] { assemble_witness(MixedMap({z(2, 0), z(2, 1)}), unit_ball(2)); }) ==
        ErrorKind::DataExtends);
  Rng rng(65);
  for (int trial = 0; trial < 20; ++trial) {
    const MixedMap phi({random_polynomial(rng, 2, 3, 4, true).p, random_polynomial(rng, 2, 3, 4, true).p});
    WitnessOptions o;
    o.line_count = 40;
    CHECK(kind_of([&] { assemble_witness(phi, unit_ball(2), o); }) == ErrorKind::DataExtends);
  }
}

TEST_CASE("witnesses for random non-extendable maps") {
  Rng rng(66);
  const Domain ball = unit_ball(2);
  for (int trial = 0; trial < 20; ++trial) {
    const MixedMap phi = non_extendable(rng);
    WitnessOptions o;
    o.seed = static_cast<std::uint64_t>(trial);
    const WitnessReport r = assemble_witness(phi, ball, o);
    check_report(phi, ball, r);
  }
}

TEST_CASE("witnesses on an ellipsoid") {
  CMatrix q = CMatrix::Identity(2, 2);
  q(0, 0) = 2.0;
  q(0, 1) = cplx(0.3, 0.2);
  q(1, 0) = cplx(0.3, -0.2);
  const Domain ell = HermitianEllipsoid(ComplexPoint({0.1, cplx(0, -0.2)}), q);
  const MixedMap phi({zbar(2, 1) + z(2, 0) * 0.2, z(2, 0) - MixedPolynomial::constant(2, 0.1)});
  const WitnessReport r = assemble_witness(phi, ell);
  check_report(phi, ell, r);
}

TEST_CASE("witness reports are reproducible") {
  const MixedMap phi({zbar(2, 0) * z(2, 1) + zbar(2, 1) * zbar(2, 1), z(2, 1) + zbar(2, 0) * 0.3});
  WitnessOptions o;
  o.seed = 4;
  const std::string a = io::to_json(assemble_witness(phi, unit_ball(2), o)).dump();
  const std::string b = io::to_json(assemble_witness(phi, unit_ball(2), o)).dump();
  CHECK(a == b);
}

TEST_CASE("linear witness for conjugation of the first coordinate") {
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(4, 4);
  a(1, 1) = -1.0;
  const LinearWitnessReport r = linear_witness(RealLinearMap(a));
  CHECK(std::abs(r.alpha) < 1e-15);
  CHECK(std::abs(r.beta - 1.0) < 1e-15);
  CHECK(r.T == 1.0);
  CHECK(r.sign == -1);
  CMatrix h = CMatrix::Zero(2, 2);
  h(1, 1) = 1.0;
  CHECK((r.H_complex - h).norm() < 1e-15);
  // A + H = diag(1, -1, 2, 2).
  CHECK(std::abs((a + r.H.matrix()).determinant() + 4.0) < 1e-12);
}

TEST_CASE("linear witness rejects complex-linear maps") {
  Rng rng(67);
  for (int trial = 0; trial < 10; ++trial) {
    const RealLinearMap m = RealLinearMap::realify(random_matrix(rng, uniform_int(rng, 1, 3)));
    CHECK(kind_of([&] { linear_witness(m); }) == ErrorKind::IsComplexLinear);
  }
}

TEST_CASE("linear witness with the antilinear part off the first axis") {
  CMatrix alpha = CMatrix::Identity(2, 2);
  CMatrix beta = CMatrix::Zero(2, 2);
  beta(0, 1) = 0.1;
  const RealLinearMap a = RealLinearMap::realify(alpha) + RealLinearMap::realify_antilinear(beta);
  const LinearWitnessReport r = linear_witness(a);
  CHECK(std::abs(std::abs(r.beta) - 0.1) < 1e-12);
  CHECK(r.sign == -1);
  CHECK(is_complex_linear(r.H));
  CHECK((a.matrix() + r.H.matrix()).determinant() < 0.0);
}

TEST_CASE("linear witnesses for random real-linear maps") {
  Rng rng(68);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = uniform_int(rng, 1, 3);
    CMatrix beta = random_matrix(rng, n);
    if (trial % 3 == 0 && n > 1) beta.col(0).setZero();
    const RealLinearMap a = RealLinearMap::realify(random_matrix(rng, n)) + RealLinearMap::realify_antilinear(beta);
    const LinearWitnessReport r = linear_witness(a);
    CHECK(is_complex_linear(r.H));
    CHECK((RealLinearMap::realify(r.H_complex).matrix() - r.H.matrix()).norm() < 1e-12);
    CHECK(std::abs(r.beta) > 1e-10);
    CHECK(r.sign == -1);
    CHECK((a.matrix() + r.H.matrix()).determinant() < 0.0);
    CHECK(r.T >= 1.0);
  }
}

}  // TEST_SUITE
