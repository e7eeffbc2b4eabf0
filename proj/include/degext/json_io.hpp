#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "degext/boundary_maps.hpp"
#include "degext/degree_oracle.hpp"
#include "degext/domains.hpp"
#include "degext/errors.hpp"
#include "degext/extension.hpp"
#include "degext/winding.hpp"
#include "degext/witness.hpp"

namespace degext::io {

/// Output JSON keeps insertion order so documents read top-down.
using Json = nlohmann::ordered_json;

/// Parses text; malformed JSON becomes InvalidInput.
Json parse(const std::string& text);
Json read_file(const std::string& path);

// Inputs. Every parser throws InvalidInput (or DimensionMismatch) on bad
// shapes, never a JSON library exception.
cplx parse_complex(const Json& j);
ComplexPoint parse_point(const Json& j);
CMatrix parse_complex_matrix(const Json& j);
Domain parse_domain(const Json& j);
ComplexLine parse_line(const Json& j);
MixedPolynomial parse_polynomial(const Json& j);
/// Array of polynomials, or {"components": [...]}.
MixedMap parse_map(const Json& j);
UnivariateMixed parse_univariate(const Json& j);
/// {"theta": [...], "values": [[re, im], ...]}; theta may be omitted for
/// uniform angles.
SampledLoop parse_loop(const Json& j);
/// A 2N x 2N array, or {"matrix": [...]}.
RealLinearMap parse_real_linear(const Json& j);

struct RunConfig {
  std::uint64_t seed = 0;
  double zero_tol_scale = 1e-9;
  double fourier_tol_scale = 1e-8;
  double dedup_radius_scale = 1e-6;
  std::size_t boundary_samples = 2048;
  std::size_t line_count = 200;
  std::size_t lambda_steps = 33;
  std::optional<std::string> output_path;

  void validate() const;
};

inline constexpr std::size_t kMaxBoundarySamples = std::size_t{1} << 20;
inline constexpr std::size_t kMaxLineCount = 100000;
inline constexpr std::size_t kMaxLambdaSteps = std::size_t{1} << 16;

/// Missing keys keep their defaults; unknown keys are rejected.
RunConfig parse_run_config(const Json& j, RunConfig base = {});

// Outputs.
Json to_json(cplx c);
Json to_json(const CVector& v);
Json to_json(const CMatrix& m);
Json to_json(const Eigen::MatrixXd& m);
Json to_json(const ComplexLine& line);
Json to_json(const DiscSlice& slice);
Json to_json(const Domain& domain);
Json to_json(const MixedPolynomial& p);
Json to_json(const MixedMap& map);
Json to_json(const UnivariateMixed& u);
Json to_json(const HoloPoly& p);
Json to_json(const WindingResult& w);
Json to_json(const DegreeCertificate& c);
Json to_json(const HomotopyResult& h);
Json to_json(const ScaledDegreeResult& r);
Json to_json(const ExtensionVerdict& v);
Json to_json(const Witness1D& w);
Json to_json(const WitnessReport& r);
Json to_json(const LinearWitnessReport& r);
Json to_json(const RunConfig& c);
Json to_json(const Error& e);

}  // namespace degext::io
