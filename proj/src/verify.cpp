#include "degext/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "degext/degree_oracle.hpp"
#include "degext/errors.hpp"
#include "degext/extension.hpp"
#include "degext/random.hpp"
#include "degext/winding.hpp"
#include "degext/witness.hpp"

namespace degext {

namespace {

using random::Engine;

constexpr int kN = 2;

Domain unit_ball() { return Ball(ComplexPoint::zero(kN), 1.0); }

MixedPolynomial var(int j, bool conj = false) { return MixedPolynomial::variable(kN, j, conj); }
MixedPolynomial cst(cplx c) { return MixedPolynomial::constant(kN, c); }

/// `terms` monomials of total degree <= max_degree with normal coefficients.
/// `generic` adds small constant and linear terms in every variable, so that
/// sparse draws do not force degenerate zeros.
MixedPolynomial random_polynomial(Engine& rng, int max_degree, int terms, bool holomorphic,
                                  bool generic = false) {
  MixedPolynomial p(kN);
  if (generic) {
    p = p + cst(0.3 * random::complex_normal(rng));
    for (int j = 0; j < kN; ++j) {
      p = p + var(j) * (0.3 * random::complex_normal(rng));
      if (!holomorphic) p = p + var(j, true) * (0.3 * random::complex_normal(rng));
    }
  }
  const int slots = holomorphic ? kN : 2 * kN;
  for (int t = 0; t < terms; ++t) {
    const int d = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
    MixedExponent e{std::vector<int>(kN, 0), std::vector<int>(kN, 0)};
    for (int k = 0; k < d; ++k) {
      const int slot = static_cast<int>(rng() % static_cast<std::uint64_t>(slots));
      if (slot < kN) {
        ++e.z[static_cast<std::size_t>(slot)];
      } else {
        ++e.zbar[static_cast<std::size_t>(slot - kN)];
      }
    }
    p.add_term(random::complex_normal(rng), e);
  }
  return p;
}

double circle_margin(const std::function<cplx(cplx)>& f, std::size_t n = 1024) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    const double th = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    m = std::min(m, std::abs(f(std::polar(1.0, th))));
  }
  return m;
}

double sphere_margin(const MixedMap& map, std::uint64_t seed) {
  const std::vector<CVector> pts = sample_boundary(unit_ball(), 4096, seed);
  double m = std::numeric_limits<double>::infinity();
  for (const CVector& z : pts) m = std::min(m, map.evaluate(z).norm());
  return m;
}

/// q(x) by Horner where x is a linear polynomial.
MixedPolynomial compose(const std::vector<cplx>& coeffs, const MixedPolynomial& x) {
  MixedPolynomial p(kN);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) p = p * x + cst(*it);
  return p;
}

std::vector<cplx> from_roots(const std::vector<cplx>& roots) {
  std::vector<cplx> c{1.0};
  for (const cplx& r : roots) {
    std::vector<cplx> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return c;
}

cplx horner(const std::vector<cplx>& c, cplx x) {
  cplx v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

CMatrix random_unitary(Engine& rng) {
  CMatrix m(kN, kN);
  for (int i = 0; i < kN; ++i) {
    for (int j = 0; j < kN; ++j) m(i, j) = random::complex_normal(rng);
  }
  Eigen::HouseholderQR<CMatrix> qr(m);
  return qr.householderQ() * CMatrix::Identity(kN, kN);
}

/// Holomorphic map (p(x_1), x_2 - h(x_1)) with x = U z; its zeros are
/// U^* (r, h(r)) for the prescribed roots r of p.
struct TriangularMap {
  MixedMap map;
  int zeros_inside = 0;
};

std::optional<TriangularMap> random_triangular(Engine& rng) {
  const int degree = 1 + static_cast<int>(rng() % 3);
  std::vector<cplx> roots;
  for (int k = 0; k < degree; ++k) roots.push_back(random::in_ball(rng, 1, 1.3)[0]);
  std::vector<cplx> h(1 + rng() % 3);
  for (cplx& c : h) c = 0.4 * random::complex_normal(rng);
  int inside = 0;
  for (std::size_t a = 0; a < roots.size(); ++a) {
    const double rho = std::norm(roots[a]) + std::norm(horner(h, roots[a]));
    if (std::abs(rho - 1.0) < 0.05) return std::nullopt;
    for (std::size_t b = 0; b < a; ++b) {
      if (std::abs(roots[a] - roots[b]) < 0.05) return std::nullopt;
    }
    if (rho < 1.0) ++inside;
  }
  const CMatrix U = random_unitary(rng);
  std::vector<MixedPolynomial> x;
  for (int k = 0; k < kN; ++k) x.push_back(var(0) * U(k, 0) + var(1) * U(k, 1));
  MixedMap map({compose(from_roots(roots), x[0]), x[1] - compose(h, x[0])});
  return TriangularMap{std::move(map), inside};
}

template <class F>
std::optional<typename std::invoke_result_t<F>::value_type> draw(F&& f, int tries = 200) {
  for (int k = 0; k < tries; ++k) {
    if (auto v = f()) return v;
  }
  return std::nullopt;
}

struct Outcome {
  bool pass = true;
  std::ostringstream observed;
};

std::string describe(const Error& e) {
  return std::string(to_string(e.kind())) + ": " + e.what();
}

Outcome criterion_winding(std::uint64_t seed) {
  Outcome out;
  int exact = 0;
  for (int k = -8; k <= 8; ++k) {
    const int a = winding_number([k](double th) { return std::polar(1.0, k * th); }).winding;
    const int b = winding_number([k](double th) { return std::polar(1.0, -k * th); }).winding;
    if (a == k && b == -k) ++exact;
  }
  out.pass = exact == 17;
  Engine rng = random::stream(seed, 0x01);
  auto factor = [&]() {
    // c * prod (zeta - r_i) * prod (conj zeta - s_j) with |r|, |s| away from 1.
    std::vector<cplx> r, s;
    const int nr = static_cast<int>(rng() % 4);
    const int ns = static_cast<int>(rng() % 3);
    int expected = 0;
    auto away = [&]() {
      for (;;) {
        const cplx c = random::in_ball(rng, 1, 2.0)[0];
        if (std::abs(std::abs(c) - 1.0) > 0.05) return c;
      }
    };
    for (int k = 0; k < nr; ++k) {
      r.push_back(away());
      if (std::abs(r.back()) < 1.0) ++expected;
    }
    for (int k = 0; k < ns; ++k) {
      s.push_back(away());
      if (std::abs(s.back()) < 1.0) --expected;
    }
    const cplx c = random::complex_normal(rng);
    auto f = [c, r, s](double th) {
      const cplx z = std::polar(1.0, th);
      cplx v = c;
      for (const cplx& x : r) v *= z - x;
      for (const cplx& x : s) v *= std::conj(z) - x;
      return v;
    };
    return std::make_pair(LoopFunction(f), expected);
  };
  int product_ok = 0;
  for (int t = 0; t < 50; ++t) {
    auto [f, ef] = factor();
    auto [g, eg] = factor();
    const int wf = winding_number(f).winding;
    const int wg = winding_number(g).winding;
    const int wfg = winding_number([&](double th) { return f(th) * g(th); }).winding;
    if (wfg == wf + wg && wf == ef && wg == eg) ++product_ok;
  }
  out.pass = out.pass && product_ok == 50;
  out.observed << exact << "/17 monomial pairs exact; product rule " << product_ok << "/50";
  return out;
}

Outcome criterion_structured(std::uint64_t seed) {
  Outcome out;
  Engine rng = random::stream(seed, 0x02);
  const Domain ball = unit_ball();
  const ComplexLine axis = ComplexLine::axis(ComplexPoint::zero(kN), 0);
  int agree = 0;
  int cases = 0;
  std::ostringstream fails;
  for (int t = 0; t < 25; ++t) {
    auto phi = draw([&]() -> std::optional<MixedPolynomial> {
      MixedPolynomial p = random_polynomial(rng, 3, 2 + static_cast<int>(rng() % 4), false, true);
      const double m = circle_margin([&](cplx z) { return p.evaluate(std::vector<cplx>{z, 0.0}); });
      if (m > 1e-3) return p;
      return std::nullopt;
    });
    if (!phi) break;
    ++cases;
    try {
      const int s = structured_degree(*phi, ball, axis).degree;
      OracleOptions opts;
      opts.seed = seed;
      const int z = zero_count_degree(MapOracle::from(MixedMap({*phi, var(1)})), ball, opts).degree;
      if (s == z) {
        ++agree;
      } else {
        fails << " case " << t << ": slice " << s << " vs zeros " << z << ";";
      }
    } catch (const Error& e) {
      fails << " case " << t << ": " << describe(e) << ";";
    }
  }
  out.pass = cases == 25 && agree == 25;
  out.observed << agree << "/" << cases << " exact agreements" << fails.str();
  return out;
}

Outcome criterion_scaling(std::uint64_t seed) {
  Outcome out;
  Engine rng = random::stream(seed, 0x03);
  const Domain ball = unit_ball();
  int equal = 0;
  int cases = 0;
  std::ostringstream fails;
  for (int t = 0; t < 25; ++t) {
    // Even cases are structured (slice winding path), odd cases general
    // mixed maps (zero-count path).
    const bool structured = t % 2 == 0;
    auto phi = draw([&]() -> std::optional<MixedMap> {
      if (structured) {
        MixedPolynomial p = random_polynomial(rng, 3, 2 + static_cast<int>(rng() % 4), false, true);
        const double m = circle_margin([&](cplx z) { return p.evaluate(std::vector<cplx>{z, 0.0}); });
        if (!(m > 1e-3)) return std::nullopt;
        return MixedMap({p, var(1) * random::uniform(rng, 0.5, 2.0)});
      }
      MixedMap m({random_polynomial(rng, 2, 3, false, true), random_polynomial(rng, 2, 3, false, true)});
      if (!(sphere_margin(m, seed) > 1e-2)) return std::nullopt;
      return m;
    });
    if (!phi) break;
    ++cases;
    std::vector<double> scales;
    for (int j = 0; j < kN; ++j) scales.push_back(std::exp(random::uniform(rng, std::log(0.1), std::log(10.0))));
    try {
      OracleOptions opts;
      opts.seed = seed;
      const ScaledDegreeResult r = scaled_degree_check(*phi, ball, scales, opts);
      if (r.equal() && r.homotopy.ok) {
        ++equal;
      } else {
        fails << " case " << t << ": " << r.before << " vs " << r.after << ";";
      }
    } catch (const Error& e) {
      fails << " case " << t << ": " << describe(e) << ";";
    }
  }
  out.pass = cases == 25 && equal == 25;
  out.observed << equal << "/" << cases << " equal before/after scaling" << fails.str();
  return out;
}

Outcome criterion_holomorphic(std::uint64_t seed) {
  Outcome out;
  Engine rng = random::stream(seed, 0x04);
  const Domain ball = unit_ball();
  int ok = 0;
  int cases = 0;
  std::ostringstream fails;
  for (int t = 0; t < 25; ++t) {
    auto tri = draw([&]() { return random_triangular(rng); });
    if (!tri) break;
    ++cases;
    try {
      OracleOptions opts;
      opts.seed = seed;
      const DegreeCertificate c = zero_count_degree(MapOracle::from(tri->map), ball, opts);
      const bool signs = std::all_of(c.zeros.begin(), c.zeros.end(),
                                     [](const OracleZero& z) { return z.jacobian_sign == 1; });
      if (c.degree >= 0 && c.degree == tri->zeros_inside && signs) {
        ++ok;
      } else {
        fails << " case " << t << ": degree " << c.degree << " vs " << tri->zeros_inside << " roots;";
      }
    } catch (const Error& e) {
      fails << " case " << t << ": " << describe(e) << ";";
    }
  }
  out.pass = cases == 25 && ok == 25;
  out.observed << ok << "/" << cases << " nonnegative and equal to the root count" << fails.str();
  return out;
}

Outcome criterion_only_if(std::uint64_t seed) {
  Outcome out;
  Engine rng = random::stream(seed, 0x05);
  const Domain ball = unit_ball();
  // (|z|^2 - 1): vanishes on the sphere, so H + (|z|^2 - 1) Q has the boundary
  // values of the holomorphic H while being genuinely mixed inside.
  const MixedPolynomial rho = var(0) * var(0, true) + var(1) * var(1, true) + cst(-1.0);
  int nonnegative = 0;
  int total = 0;
  int extends = 0;
  int min_degree = std::numeric_limits<int>::max();
  std::ostringstream fails;
  for (int base = 0; base < 10; ++base) {
    MixedMap h({random_polynomial(rng, 2, 3, true, true), random_polynomial(rng, 2, 3, true, true)});
    MixedMap phi({h[0] + rho * random_polynomial(rng, 1, 2, false),
                  h[1] + rho * random_polynomial(rng, 1, 2, false)});
    try {
      WitnessOptions wopts;
      wopts.seed = seed;
      assemble_witness(phi, ball, wopts);
      fails << " base " << base << ": witness built for extendable data;";
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::DataExtends) {
        ++extends;
      } else {
        fails << " base " << base << ": " << describe(e) << ";";
      }
    }
    for (int k = 0; k < 20; ++k) {
      auto p = draw([&]() -> std::optional<MixedMap> {
        MixedMap pert({random_polynomial(rng, 2, 3, true, true) * cplx(0.5),
                       random_polynomial(rng, 2, 3, true, true) * cplx(0.5)});
        if (!(sphere_margin(phi + pert, seed) > 1e-2)) return std::nullopt;
        return pert;
      });
      if (!p) continue;
      ++total;
      try {
        OracleOptions opts;
        opts.seed = seed;
        const int mixed = zero_count_degree(MapOracle::from(phi + *p), ball, opts).degree;
        const int holo = zero_count_degree(MapOracle::from(h + *p), ball, opts).degree;
        min_degree = std::min(min_degree, mixed);
        if (mixed >= 0 && mixed == holo) {
          ++nonnegative;
        } else {
          fails << " base " << base << " pert " << k << ": " << mixed << " vs " << holo << ";";
        }
      } catch (const Error& e) {
        fails << " base " << base << " pert " << k << ": " << describe(e) << ";";
      }
    }
  }
  out.pass = total == 200 && nonnegative == 200 && extends == 10;
  out.observed << nonnegative << "/" << total << " perturbed degrees >= 0 (min " << min_degree
               << "), " << extends << "/10 bases report DataExtends" << fails.str();
  return out;
}

bool check_witness(const WitnessReport& r, int map_degree) {
  return r.slice_winding < 0 && r.ambient_degree.degree == r.slice_winding &&
         r.structured_degree.degree == r.slice_winding && r.P.is_holomorphic() &&
         r.P.degree() <= std::max(map_degree, 1) && r.final_margin > 0.0 &&
         std::all_of(r.homotopy_margins.begin(), r.homotopy_margins.end(),
                     [](double m) { return m > 0.0; });
}

Outcome criterion_witness(std::uint64_t seed) {
  Outcome out;
  Engine rng = random::stream(seed, 0x06);
  const Domain ball = unit_ball();
  WitnessOptions wopts;
  wopts.seed = seed;
  int canonical = 0;
  try {
    const WitnessReport r = assemble_witness(MixedMap({var(0, true), var(1)}), ball, wopts);
    if (check_witness(r, 1)) canonical = r.ambient_degree.degree;
  } catch (const Error& e) {
    out.observed << "canonical: " << describe(e) << "; ";
  }
  int ok = 0;
  std::ostringstream fails;
  for (int t = 0; t < 20; ++t) {
    // At least one conjugated monomial so s is nonconstant on some slice.
    MixedPolynomial a = random_polynomial(rng, 3, 2 + static_cast<int>(rng() % 3), false, true);
    MixedPolynomial b = random_polynomial(rng, 3, 2 + static_cast<int>(rng() % 3), false, true);
    const int j = static_cast<int>(rng() % kN);
    const int d = 1 + static_cast<int>(rng() % 3);
    a = a + var(j, true).pow(d) * random::complex_normal(rng);
    MixedMap phi({a, b});
    try {
      const WitnessReport r = assemble_witness(phi, ball, wopts);
      if (check_witness(r, phi.degree())) {
        ++ok;
      } else {
        fails << " case " << t << ": slice " << r.slice_winding << " zeros "
              << r.ambient_degree.degree << " degP " << r.P.degree() << ";";
      }
    } catch (const Error& e) {
      fails << " case " << t << ": " << describe(e) << ";";
    }
  }
  out.pass = canonical == -1 && ok == 20;
  out.observed << "canonical degree " << canonical << "; " << ok
               << "/20 witnesses certified by slice winding and zero count" << fails.str();
  return out;
}

Outcome criterion_linear(std::uint64_t seed) {
  Outcome out;
  Engine rng = random::stream(seed, 0x07);
  auto random_complex = [&]() {
    CMatrix m(kN, kN);
    for (int i = 0; i < kN; ++i) {
      for (int k = 0; k < kN; ++k) m(i, k) = random::complex_normal(rng);
    }
    return m;
  };
  std::vector<RealLinearMap> maps;
  {
    Eigen::MatrixXd conj1 = Eigen::MatrixXd::Identity(2 * kN, 2 * kN);
    conj1(1, 1) = -1.0;
    maps.emplace_back(conj1);
  }
  for (int t = 1; t < 10; ++t) {
    CMatrix beta = random_complex();
    if (t % 3 == 0) {
      // Antilinear part only in the second column.
      beta.col(0).setZero();
    }
    maps.push_back(RealLinearMap::realify(random_complex()) + RealLinearMap::realify_antilinear(beta));
  }
  int ok = 0;
  std::ostringstream fails;
  for (std::size_t t = 0; t < maps.size(); ++t) {
    try {
      const LinearWitnessReport r = linear_witness(maps[t]);
      const double det = (maps[t].matrix() + r.H.matrix()).determinant();
      if (is_complex_linear(r.H) && r.sign == -1 && det < 0.0 && std::abs(r.beta) > 1e-10) {
        ++ok;
      } else {
        fails << " map " << t << ": det " << det << ";";
      }
    } catch (const Error& e) {
      fails << " map " << t << ": " << describe(e) << ";";
    }
  }
  int rejected = 0;
  for (int t = 0; t < 10; ++t) {
    try {
      linear_witness(RealLinearMap::realify(random_complex()));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::IsComplexLinear) ++rejected;
    }
  }
  out.pass = ok == 10 && rejected == 10;
  out.observed << ok << "/10 orientation-reversing witnesses; " << rejected
               << "/10 complex-linear maps rejected" << fails.str();
  return out;
}

Outcome criterion_split(std::uint64_t seed) {
  Outcome out;
  Engine rng = random::stream(seed, 0x08);
  int ok = 0;
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    UnivariateMixed u;
    const int terms = 1 + static_cast<int>(rng() % 8);
    for (int k = 0; k < terms; ++k) {
      const int i = static_cast<int>(rng() % 7);
      const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(7 - i));
      u.add_term(random::complex_normal(rng), i, j);
    }
    const cplx a = random::complex_normal(rng);
    const double r = random::uniform(rng, 0.2, 3.0);
    const CircleSplit sp = split_on_circle(u, a, r);
    double err = 0.0;
    double umax = 0.0;
    for (int k = 0; k < 256; ++k) {
      const cplx w = r * std::polar(1.0, 2.0 * std::numbers::pi * k / 256.0);
      const cplx direct = u.evaluate(a + w);
      umax = std::max(umax, std::abs(direct));
      err = std::max(err, std::abs(sp.q.evaluate_shifted(w) + std::conj(sp.s.evaluate_shifted(w)) - direct));
    }
    const double rel = err / (1.0 + umax);
    worst = std::max(worst, rel);
    if (rel < 1e-9 && sp.q.degree() <= u.degree() && sp.s.degree() <= u.degree()) ++ok;
  }
  out.pass = ok == 200;
  out.observed << ok << "/200 reconstructions within 1e-9 relative (worst " << worst << ")";
  return out;
}

struct Experiment {
  int criterion;
  const char* name;
  const char* expected;
  double budget;
  std::function<Outcome(std::uint64_t)> run;
};

const std::vector<Experiment>& experiments() {
  static const std::vector<Experiment> list = {
      {1, "winding correctness", "exact monomial windings for |k| <= 8; product rule on 50 loops", 5.0,
       criterion_winding},
      {2, "slice winding equals zero count", "25/25 exact agreements on (phi, z2)", 120.0,
       criterion_structured},
      {3, "positive diagonal scaling invariance", "25/25 equal degrees, t_j in [0.1, 10]", 120.0,
       criterion_scaling},
      {4, "holomorphic maps have nonnegative degree",
       "25/25 degrees >= 0 and equal to the root count", 120.0, criterion_holomorphic},
      {5, "extendable data stays nonnegative under holomorphic perturbation",
       "200/200 degrees >= 0; 10/10 bases report DataExtends", 180.0, criterion_only_if},
      {6, "negative-degree witnesses for non-extendable data",
       "canonical degree -1; 20/20 witnesses certified twice", 300.0, criterion_witness},
      {7, "linear witnesses", "10/10 orientation reversing; 10/10 complex-linear rejected", 10.0,
       criterion_linear},
      {8, "circle split identity", "200/200 within 1e-9 relative", 10.0, criterion_split},
  };
  return list;
}

}  // namespace

bool VerifyReport::pass() const {
  return std::all_of(records.begin(), records.end(), [](const ExperimentRecord& r) { return r.pass; });
}

VerifyReport run_verify(const VerifyOptions& options) {
  for (int c : options.criteria) {
    if (c < 1 || c > kCriterionCount) fail(ErrorKind::InvalidInput, "criteria are numbered 1-9");
  }
  auto wanted = [&](int c) {
    return options.criteria.empty() ||
           std::find(options.criteria.begin(), options.criteria.end(), c) != options.criteria.end();
  };
  VerifyReport report;
  report.seed = options.seed;
  reset_oracle_stats();
  const auto suite_start = std::chrono::steady_clock::now();
  for (const Experiment& e : experiments()) {
    if (!wanted(e.criterion)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    ExperimentRecord rec{e.criterion, e.name, e.expected, "", false, 0.0, e.budget};
    try {
      Outcome o = e.run(options.seed);
      rec.observed = o.observed.str();
      rec.pass = o.pass;
    } catch (const Error& err) {
      rec.observed = "unexpected " + describe(err);
    }
    rec.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (rec.runtime_seconds >= rec.budget_seconds) {
      rec.pass = false;
      rec.observed += " (over the runtime budget)";
    }
    report.records.push_back(std::move(rec));
  }
  if (wanted(9)) {
    const OracleStats s = oracle_stats();
    ExperimentRecord rec{9, "oracle stable under grid doubling",
                         "every zero count unchanged at twice the grid density", "", false, 0.0, 0.0};
    std::ostringstream obs;
    obs << s.checked_verdicts << "/" << s.verdicts << " degree verdicts unchanged under doubling ("
        << s.runs << " zero counts), " << s.suspect_missed_zeros << " SuspectMissedZeros, "
        << s.irregular_zeros << " IrregularZero";
    rec.observed = obs.str();
    rec.pass = s.verdicts > 0 && s.checked_verdicts == s.verdicts && s.suspect_missed_zeros == 0;
    rec.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start).count();
    report.records.push_back(std::move(rec));
  }
  return report;
}

io::Json to_json(const VerifyReport& report, bool include_runtimes) {
  io::Json records = io::Json::array();
  for (const ExperimentRecord& r : report.records) {
    io::Json j = {{"criterion", r.criterion},
                  {"name", r.name},
                  {"expected", r.expected},
                  {"observed", r.observed},
                  {"pass", r.pass}};
    if (include_runtimes) {
      j["runtimeSeconds"] = r.runtime_seconds;
      if (r.budget_seconds > 0.0) j["budgetSeconds"] = r.budget_seconds;
    }
    records.push_back(std::move(j));
  }
  return {{"seed", report.seed}, {"pass", report.pass()}, {"records", std::move(records)}};
}

}  // namespace degext
