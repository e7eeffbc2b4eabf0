#include "degext/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "degext/json_io.hpp"
#include "degext/verify.hpp"

namespace degext {

namespace {

using io::Json;

constexpr int kExitNegative = 1;

struct Common {
  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
};

struct Inputs {
  std::string domain;
  std::string map;
  std::string poly;
  std::string loop;
  std::string line;
  std::string matrix;
  std::string csv;
  std::vector<double> center{0.0, 0.0};
  double radius = 1.0;
  std::size_t lines = 0;
  int grid_density = 4;
  std::size_t random_starts = 32;
  std::optional<double> zero_tol;
  std::vector<int> criteria;
  bool no_runtimes = false;
};

cplx center_of(const Inputs& in) { return {in.center[0], in.center[1]}; }

void write_csv(const std::string& path, const SampledLoop& loop) {
  std::ofstream f(path);
  if (!f) fail(ErrorKind::InvalidInput, "cannot write " + path);
  write_loop_csv(f, loop);
}

OracleOptions oracle_options(const io::RunConfig& cfg, const Inputs& in) {
  OracleOptions o;
  o.seed = cfg.seed;
  o.grid_density = in.grid_density;
  o.random_starts = in.random_starts;
  o.boundary_samples = cfg.boundary_samples;
  o.zero_tol_scale = in.zero_tol.value_or(cfg.zero_tol_scale);
  o.dedup_radius_scale = cfg.dedup_radius_scale;
  return o;
}

struct Result {
  Json body;
  int code = 0;
};

Result cmd_wind(const io::RunConfig& cfg, const Inputs& in) {
  if (!in.loop.empty()) {
    const SampledLoop loop = io::parse_loop(io::read_file(in.loop));
    if (!in.csv.empty()) write_csv(in.csv, loop);
    return {io::to_json(winding_number(loop, cfg.zero_tol_scale))};
  }
  if (in.poly.empty()) fail(ErrorKind::InvalidInput, "wind needs --loop or --poly");
  const UnivariateMixed u = io::parse_univariate(io::read_file(in.poly));
  const cplx a = center_of(in);
  WindingOptions opts;
  opts.zero_tol_scale = cfg.zero_tol_scale;
  const WindingResult w =
      winding_number(on_circle([&u](cplx z) { return u.evaluate(z); }, a, in.radius), opts);
  if (!in.csv.empty()) write_csv(in.csv, sample_component(u, a, in.radius, w.samples_used));
  return {io::to_json(w)};
}

Result cmd_slice(const Inputs& in) {
  const Domain domain = io::parse_domain(io::read_file(in.domain));
  const ComplexLine line = io::parse_line(io::read_file(in.line));
  if (line.dim() != domain.dim()) fail(ErrorKind::DimensionMismatch, "line vs domain");
  const std::optional<DiscSlice> s = domain.slice(line);
  if (!s) return {Json{{"empty", true}}};
  Json body = io::to_json(*s);
  body["empty"] = false;
  return {body};
}

Result cmd_split(const Inputs& in) {
  const UnivariateMixed u = io::parse_univariate(io::read_file(in.poly));
  const CircleSplit sp = split_on_circle(u, center_of(in), in.radius);
  if (!in.csv.empty()) write_csv(in.csv, sample_component(u, center_of(in), in.radius, 256));
  return {Json{{"q", io::to_json(sp.q)}, {"s", io::to_json(sp.s)}, {"sConstant", sp.s.is_constant()}}};
}

Result cmd_extend_test(const io::RunConfig& cfg, const Inputs& in) {
  ExtensionVerdict v;
  if (!in.loop.empty()) {
    v = disc_extension_test(io::parse_loop(io::read_file(in.loop)), cfg.fourier_tol_scale);
  } else if (!in.poly.empty()) {
    v = disc_extension_test(io::parse_univariate(io::read_file(in.poly)), center_of(in), in.radius,
                            cfg.fourier_tol_scale);
  } else {
    const Domain domain = io::parse_domain(io::read_file(in.domain));
    const MixedMap phi = io::parse_map(io::read_file(in.map));
    LineFamilyOptions lf;
    lf.line_count = in.lines > 0 ? in.lines : cfg.line_count;
    lf.seed = cfg.seed;
    lf.fourier_tol_scale = cfg.fourier_tol_scale;
    v = line_family_extension_test(phi, domain, lf);
  }
  return {io::to_json(v), v.extends ? 0 : kExitNegative};
}

Result cmd_degree_oracle(const io::RunConfig& cfg, const Inputs& in) {
  const Domain domain = io::parse_domain(io::read_file(in.domain));
  const MixedMap phi = io::parse_map(io::read_file(in.map));
  return {io::to_json(zero_count_degree(MapOracle::from(phi), domain, oracle_options(cfg, in)))};
}

Result cmd_structured_degree(const io::RunConfig& cfg, const Inputs& in) {
  const Domain domain = io::parse_domain(io::read_file(in.domain));
  const MixedPolynomial phi = io::parse_polynomial(io::read_file(in.poly));
  const ComplexLine line = io::parse_line(io::read_file(in.line));
  WindingOptions opts;
  opts.zero_tol_scale = in.zero_tol.value_or(cfg.zero_tol_scale);
  return {io::to_json(structured_degree(phi, domain, line, opts))};
}

Result cmd_witness(const io::RunConfig& cfg, const Inputs& in) {
  const Domain domain = io::parse_domain(io::read_file(in.domain));
  const MixedMap phi = io::parse_map(io::read_file(in.map));
  WitnessOptions w;
  w.seed = cfg.seed;
  w.line_count = in.lines > 0 ? in.lines : cfg.line_count;
  w.lambda_steps = cfg.lambda_steps;
  w.fourier_tol_scale = cfg.fourier_tol_scale;
  w.zero_tol_scale = cfg.zero_tol_scale;
  w.oracle = oracle_options(cfg, in);
  return {io::to_json(assemble_witness(phi, domain, w))};
}

Result cmd_linear_witness(const Inputs& in) {
  const RealLinearMap a = io::parse_real_linear(io::read_file(in.matrix));
  return {io::to_json(linear_witness(a))};
}

Result cmd_verify(const io::RunConfig& cfg, const Inputs& in) {
  VerifyOptions v;
  v.seed = cfg.seed;
  v.criteria = in.criteria;
  const VerifyReport report = run_verify(v);
  return {to_json(report, !in.no_runtimes), report.pass() ? 0 : kExitNegative};
}

void emit(const Json& body, const std::string& path, std::ostream& out) {
  const std::string text = body.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::InvalidInput, "cannot write " + path);
  f << text;
}

Json usage_error(const std::string& message) {
  return {{"error", {{"kind", "UsageError"}, {"message", message}, {"exitCode", 2}}}};
}

}  // namespace

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degrees of boundary maps, holomorphic extension tests and negative-degree witnesses",
               "degext"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");
  Common common;
  Inputs in;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", common.config_path, "RunConfig JSON file");
    sub->add_option("--out", common.out_path, "Write the JSON result here instead of stdout");
    sub->add_option("--seed", common.seed, "Seed for every random stream");
  };
  auto add_disc = [&](CLI::App* sub) {
    sub->add_option("--center", in.center, "Disc center as RE IM")->expected(2);
    sub->add_option("--radius", in.radius, "Disc radius")->check(CLI::PositiveNumber);
  };
  auto add_oracle = [&](CLI::App* sub) {
    sub->add_option("--grid-density", in.grid_density, "Grid points per real axis")
        ->check(CLI::Range(1, 64));
    sub->add_option("--random-starts", in.random_starts, "Seeded random Newton starts");
    sub->add_option("--zero-tol", in.zero_tol, "Zero tolerance scale (overrides config)")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* wind = app.add_subcommand("wind", "Winding number of a loop");
  add_common(wind);
  add_disc(wind);
  wind->add_option("--loop", in.loop, "Loop JSON {theta, values}");
  wind->add_option("--poly", in.poly, "UnivariateMixed JSON, evaluated on the circle");
  wind->add_option("--csv", in.csv, "Export the loop as theta,re,im");

  CLI::App* slice = app.add_subcommand("slice", "Disc cut from a domain by a complex line");
  add_common(slice);
  slice->add_option("--domain", in.domain, "Domain JSON")->required();
  slice->add_option("--line", in.line, "Line JSON {base, direction}")->required();

  CLI::App* split = app.add_subcommand("split", "Split u = q + conj(s) on a circle");
  add_common(split);
  add_disc(split);
  split->add_option("--poly", in.poly, "UnivariateMixed JSON")->required();
  split->add_option("--csv", in.csv, "Export u on the circle as theta,re,im");

  CLI::App* extend = app.add_subcommand("extend-test", "Holomorphic extendibility test");
  add_common(extend);
  add_disc(extend);
  extend->add_option("--domain", in.domain, "Domain JSON");
  extend->add_option("--map", in.map, "MixedMap JSON");
  extend->add_option("--poly", in.poly, "UnivariateMixed JSON (disc test)");
  extend->add_option("--loop", in.loop, "Loop JSON (disc test on samples)");
  extend->add_option("--lines", in.lines, "Number of sampled lines");

  CLI::App* oracle = app.add_subcommand("degree-oracle", "Degree as a signed zero count");
  add_common(oracle);
  add_oracle(oracle);
  oracle->add_option("--domain", in.domain, "Domain JSON")->required();
  oracle->add_option("--map", in.map, "MixedMap JSON")->required();

  CLI::App* structured = app.add_subcommand("structured-degree", "Degree of (phi, w_2, ..., w_N) by slice winding");
  add_common(structured);
  structured->add_option("--domain", in.domain, "Domain JSON")->required();
  structured->add_option("--poly", in.poly, "MixedPolynomial JSON for phi")->required();
  structured->add_option("--line", in.line, "Line JSON")->required();
  structured->add_option("--zero-tol", in.zero_tol, "Zero tolerance scale")->check(CLI::PositiveNumber);

  CLI::App* witness = app.add_subcommand("witness", "Negative-degree polynomial witness");
  add_common(witness);
  add_oracle(witness);
  witness->add_option("--domain", in.domain, "Domain JSON")->required();
  witness->add_option("--map", in.map, "MixedMap JSON")->required();
  witness->add_option("--lines", in.lines, "Number of sampled lines");

  CLI::App* linear = app.add_subcommand("linear-witness", "Complex-linear H with det(A + H) < 0");
  add_common(linear);
  linear->add_option("--matrix", in.matrix, "2N x 2N real matrix JSON")->required();

  CLI::App* verify = app.add_subcommand("verify", "Run the acceptance experiments");
  add_common(verify);
  verify->add_option("--criterion", in.criteria, "Run only these criteria (1-9)");
  verify->add_flag("--no-runtimes", in.no_runtimes, "Omit runtimes for byte-comparable reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    out << usage_error(e.what()).dump(2) << "\n";
    return 2;
  }

  std::string out_path = common.out_path;
  try {
    io::RunConfig cfg;
    if (!common.config_path.empty()) cfg = io::parse_run_config(io::read_file(common.config_path));
    if (common.seed) cfg.seed = *common.seed;
    if (out_path.empty() && cfg.output_path) out_path = *cfg.output_path;

    Result r;
    if (wind->parsed()) {
      r = cmd_wind(cfg, in);
    } else if (slice->parsed()) {
      r = cmd_slice(in);
    } else if (split->parsed()) {
      r = cmd_split(in);
    } else if (extend->parsed()) {
      r = cmd_extend_test(cfg, in);
    } else if (oracle->parsed()) {
      r = cmd_degree_oracle(cfg, in);
    } else if (structured->parsed()) {
      r = cmd_structured_degree(cfg, in);
    } else if (witness->parsed()) {
      r = cmd_witness(cfg, in);
    } else if (linear->parsed()) {
      r = cmd_linear_witness(in);
    } else {
      r = cmd_verify(cfg, in);
    }
    emit(r.body, out_path, out);
    return r.code;
  } catch (const Error& e) {
    const Json body = io::to_json(e);
    try {
      emit(body, out_path, out);
    } catch (const Error&) {
      out << body.dump(2) << "\n";
    }
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    out << Json{{"error", {{"kind", "InternalError"}, {"message", e.what()}, {"exitCode", 3}}}}.dump(2)
        << "\n";
    return 3;
  }
}

}  // namespace degext
