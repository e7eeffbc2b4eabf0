#include "degext/extension.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "degext/errors.hpp"
#include "degext/random.hpp"

namespace degext {

namespace {

ExtensionVerdict verdict_from(const FourierCoefficients& coeffs, double max_modulus,
                              double tol_scale) {
  ExtensionVerdict v;
  v.tolerance = tol_scale * (1.0 + max_modulus);
  for (const auto& [k, c] : coeffs) {
    if (k >= 0) continue;
    const double mag = std::abs(c);
    v.coefficient_table[k] = mag;
    v.defect = std::max(v.defect, mag);
  }
  v.extends = v.defect <= v.tolerance;
  return v;
}

double max_modulus(std::span<const cplx> values) {
  double m = 0.0;
  for (const cplx& v : values) m = std::max(m, std::abs(v));
  return m;
}

MixedMap scaled(const MixedMap& phi, std::span<const double> t) {
  std::vector<MixedPolynomial> comps;
  for (int j = 0; j < phi.dim(); ++j) {
    comps.push_back(phi[j] * cplx{t[static_cast<std::size_t>(j)], 0.0});
  }
  return MixedMap(std::move(comps));
}

void check_scales(std::span<const double> t, int dim) {
  if (static_cast<int>(t.size()) != dim) {
    fail(ErrorKind::DimensionMismatch, "need one scale per component");
  }
  for (double x : t) {
    if (!(x > 0.0) || !std::isfinite(x)) fail(ErrorKind::InvalidInput, "scales must be > 0");
  }
}

}  // namespace

ExtensionVerdict disc_extension_test(const UnivariateMixed& u, cplx center, double radius,
                                     double tol_scale) {
  if (!(radius > 0.0)) fail(ErrorKind::DegenerateDisc, "disc radius must be > 0");
  const int m = std::max(u.degree(), 1);
  std::size_t n = 64;
  while (n < 8 * static_cast<std::size_t>(m + 1)) n *= 2;
  const SampledLoop loop = sample_component(u, center, radius, n);
  return verdict_from(fourier_coefficients(loop, -m, -1), max_modulus(loop.values),
                      tol_scale);
}

ExtensionVerdict disc_extension_test(const SampledLoop& loop, double tol_scale) {
  const int kmax = std::max(1, static_cast<int>(loop.size() / 2) - 1);
  return verdict_from(fourier_coefficients(loop, -kmax, -1), max_modulus(loop.values),
                      tol_scale);
}

std::vector<ComplexLine> sample_lines(const Domain& domain, std::size_t count,
                                      std::uint64_t seed, bool include_axes) {
  const int n = domain.dim();
  std::vector<ComplexLine> lines;
  lines.reserve(count + static_cast<std::size_t>(n));
  if (include_axes) {
    for (int j = 0; j < n; ++j) lines.push_back(ComplexLine::axis(domain.center(), j));
  }
  auto rng = random::stream(seed, 0x11e5);
  for (std::size_t k = 0; k < count; ++k) {
    const CVector base = domain.from_unit_ball(random::in_ball(rng, n, 0.5));
    const CVector dir = random::unit_sphere(rng, n);
    lines.push_back(ComplexLine::through(ComplexPoint(base), dir));
  }
  return lines;
}

ExtensionVerdict line_family_extension_test(const MixedMap& phi, const Domain& domain,
                                            const LineFamilyOptions& options) {
  if (phi.dim() != domain.dim()) fail(ErrorKind::DimensionMismatch, "map vs domain");
  if (options.only_component &&
      (*options.only_component < 0 || *options.only_component >= phi.dim())) {
    fail(ErrorKind::InvalidInput, "component index out of range");
  }
  const std::vector<ComplexLine> lines =
      sample_lines(domain, options.line_count, options.seed, options.include_axes);
  ExtensionVerdict worst;
  worst.sampled = true;
  for (const ComplexLine& line : lines) {
    const std::optional<DiscSlice> slice = domain.slice(line);
    ++worst.lines_tested;
    if (!slice) continue;
    for (int j = 0; j < phi.dim(); ++j) {
      if (options.only_component && j != *options.only_component) continue;
      const UnivariateMixed u = restrict_to_line(phi[j], line);
      ExtensionVerdict v =
          disc_extension_test(u, slice->center, slice->radius, options.fourier_tol_scale);
      if (!v.extends) {
        v.witness_line = line;
        v.witness_slice = slice;
        v.component = j;
        v.lines_tested = worst.lines_tested;
        v.sampled = true;
        return v;
      }
      if (v.defect >= worst.defect) {
        worst.defect = v.defect;
        worst.tolerance = v.tolerance;
        worst.coefficient_table = std::move(v.coefficient_table);
      }
    }
  }
  worst.extends = true;
  return worst;
}

MapOracle structured_map(ScalarFunction phi, const ComplexLine& line) {
  const Frame frame = canonical_frame(line);
  const int n = line.dim();
  return MapOracle(n, [phi = std::move(phi), frame, n](std::span<const cplx> z,
                                                      std::span<cplx> out) {
    out[0] = phi(z);
    if (n == 1) return;
    const Eigen::Map<const CVector> zv(z.data(), n);
    const CVector w = frame.unitary * (zv - frame.translation);
    for (int j = 1; j < n; ++j) out[static_cast<std::size_t>(j)] = w[j];
  });
}

DegreeCertificate structured_degree(const ScalarFunction& phi, const Domain& domain,
                                    const ComplexLine& line, const WindingOptions& options) {
  if (line.dim() != domain.dim()) fail(ErrorKind::DimensionMismatch, "line vs domain");
  const std::optional<DiscSlice> slice = domain.slice(line);
  if (!slice) {
    fail(ErrorKind::NonTransverseLine, "line misses the domain or is tangent to it");
  }
  const LoopFunction loop = on_circle(
      [&phi, &line](cplx zeta) {
        const CVector z = line.at(zeta);
        return phi({z.data(), static_cast<std::size_t>(z.size())});
      },
      slice->center, slice->radius);
  WindingResult w;
  try {
    w = winding_number(loop, options);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ZeroOnBoundary) {
      fail(ErrorKind::ZeroOnSliceBoundary, e.what());
    }
    throw;
  }
  DegreeCertificate cert;
  cert.degree = w.winding;
  cert.method = DegreeMethod::SliceWinding;
  cert.boundary_margin = w.min_modulus;
  cert.slice = slice;
  cert.winding = w;
  return cert;
}

DegreeCertificate structured_degree(const MixedPolynomial& phi, const Domain& domain,
                                    const ComplexLine& line, const WindingOptions& options) {
  if (phi.n() != domain.dim()) fail(ErrorKind::DimensionMismatch, "phi vs domain");
  return structured_degree(
      [&phi](std::span<const cplx> z) { return phi.evaluate(z); }, domain, line, options);
}

std::optional<MixedPolynomial> structured_component(const MixedMap& map) {
  const int n = map.dim();
  for (int j = 1; j < n; ++j) {
    const auto& terms = map[j].terms();
    if (terms.size() != 1) return std::nullopt;
    const MixedTerm& t = terms.front();
    for (int k = 0; k < n; ++k) {
      const auto sk = static_cast<std::size_t>(k);
      if (t.exponent.zbar[sk] != 0 || t.exponent.z[sk] != (k == j ? 1 : 0)) {
        return std::nullopt;
      }
    }
  }
  return map[0];
}

namespace {

struct DegreeWithMethod {
  int degree;
  DegreeMethod method;
};

DegreeWithMethod degree_of(const MixedMap& map, const Domain& domain,
                           const OracleOptions& options) {
  if (const std::optional<MixedPolynomial> phi = structured_component(map)) {
    // Target scaling diag(1, c_2, ..., c_N) is complex linear and invertible,
    // hence orientation preserving.
    const ComplexLine z1_axis = ComplexLine::axis(ComplexPoint::zero(map.dim()), 0);
    if (domain.slice(z1_axis)) {
      return {structured_degree(*phi, domain, z1_axis).degree, DegreeMethod::SliceWinding};
    }
  }
  return {zero_count_degree(MapOracle::from(map), domain, options).degree,
          DegreeMethod::ZeroCount};
}

}  // namespace

ScaledDegreeResult scaled_degree_check(const MixedMap& phi, const Domain& domain,
                                       std::span<const double> t,
                                       const OracleOptions& options) {
  check_scales(t, phi.dim());
  const MixedMap psi = scaled(phi, t);
  ScaledDegreeResult r;
  const DegreeWithMethod before = degree_of(phi, domain, options);
  const DegreeWithMethod after = degree_of(psi, domain, options);
  r.before = before.degree;
  r.after = after.degree;
  r.method_before = before.method;
  r.method_after = after.method;
  const std::vector<CVector> boundary =
      sample_boundary(domain, options.boundary_samples, options.seed);
  r.homotopy = homotopy_nonvanishing(MapOracle::from(phi), MapOracle::from(psi), boundary);
  return r;
}

ScaledDegreeResult scaled_degree_check(const MapOracle& phi, const Domain& domain,
                                       std::span<const double> t,
                                       const OracleOptions& options) {
  check_scales(t, phi.dim());
  const std::vector<double> scales(t.begin(), t.end());
  const MapOracle psi(phi.dim(), [&phi, scales](std::span<const cplx> z, std::span<cplx> out) {
    phi(z, out);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] *= scales[j];
  });
  ScaledDegreeResult r;
  r.before = zero_count_degree(phi, domain, options).degree;
  r.after = zero_count_degree(psi, domain, options).degree;
  const std::vector<CVector> boundary =
      sample_boundary(domain, options.boundary_samples, options.seed);
  r.homotopy = homotopy_nonvanishing(phi, psi, boundary);
  return r;
}

}  // namespace degext
