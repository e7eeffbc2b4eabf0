#include "degext/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace degext::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with key \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing key \"") + key + "\"");
  return *it;
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) bad(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) bad(std::string(what) + " must be finite");
  return v;
}

int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::size_t count(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) bad(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  return j;
}

std::vector<int> exponents(const Json& j, int n, const char* what) {
  array(j, what);
  if (static_cast<int>(j.size()) != n) {
    fail(ErrorKind::DimensionMismatch, std::string(what) + " must have n entries");
  }
  std::vector<int> e;
  for (const Json& x : j) {
    const int v = integer(x, what);
    if (v < 0) bad(std::string(what) + " must be nonnegative");
    e.push_back(v);
  }
  return e;
}

void reject_unknown(const Json& j, std::initializer_list<const char*> keys, const char* where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) bad(std::string("unknown key \"") + it.key() + "\" in " + where);
  }
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

cplx parse_complex(const Json& j) {
  if (j.is_number()) return {number(j, "complex"), 0.0};
  if (!j.is_array() || j.size() != 2) bad("complex numbers are [re, im]");
  return {number(j[0], "re"), number(j[1], "im")};
}

ComplexPoint parse_point(const Json& j) {
  array(j, "point");
  if (j.empty()) bad("points need at least one coordinate");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) v[static_cast<Eigen::Index>(k)] = parse_complex(j[k]);
  return ComplexPoint(std::move(v));
}

CMatrix parse_complex_matrix(const Json& j) {
  array(j, "matrix");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (rows == 0) bad("empty matrix");
  CMatrix m(rows, rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = array(j[static_cast<std::size_t>(r)], "matrix row");
    if (static_cast<Eigen::Index>(row.size()) != rows) {
      fail(ErrorKind::DimensionMismatch, "matrix must be square");
    }
    for (Eigen::Index c = 0; c < rows; ++c) m(r, c) = parse_complex(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

Domain parse_domain(const Json& j) {
  const Json& type = field(j, "type");
  if (!type.is_string()) bad("domain type must be a string");
  const std::string t = type.get<std::string>();
  ComplexPoint center = parse_point(field(j, "center"));
  if (t == "ball") {
    reject_unknown(j, {"type", "center", "radius"}, "ball");
    return Ball(std::move(center), number(field(j, "radius"), "radius"));
  }
  if (t == "ellipsoid") {
    reject_unknown(j, {"type", "center", "form"}, "ellipsoid");
    CMatrix form = parse_complex_matrix(field(j, "form"));
    if (form.rows() != center.dim()) fail(ErrorKind::DimensionMismatch, "form vs center");
    return HermitianEllipsoid(std::move(center), std::move(form));
  }
  bad("domain type must be \"ball\" or \"ellipsoid\"");
}

ComplexLine parse_line(const Json& j) {
  ComplexPoint base = parse_point(field(j, "base"));
  ComplexPoint dir = parse_point(field(j, "direction"));
  if (base.dim() != dir.dim()) fail(ErrorKind::DimensionMismatch, "line base vs direction");
  return ComplexLine::through(std::move(base), dir.coords());
}

MixedPolynomial parse_polynomial(const Json& j) {
  const int n = integer(field(j, "n"), "n");
  if (n < 1) bad("n must be positive");
  std::vector<MixedTerm> terms;
  for (const Json& t : array(field(j, "terms"), "terms")) {
    const cplx c{number(field(t, "re"), "re"), t.contains("im") ? number(t["im"], "im") : 0.0};
    terms.push_back({c, {exponents(field(t, "z"), n, "z"), exponents(field(t, "zbar"), n, "zbar")}});
  }
  std::optional<int> bound;
  if (j.contains("degreeBound")) bound = integer(j["degreeBound"], "degreeBound");
  return MixedPolynomial(n, std::move(terms), bound);
}

MixedMap parse_map(const Json& j) {
  const Json& comps = j.is_object() ? field(j, "components") : j;
  array(comps, "map");
  std::vector<MixedPolynomial> out;
  for (const Json& c : comps) out.push_back(parse_polynomial(c));
  if (out.empty()) bad("map needs at least one component");
  return MixedMap(std::move(out));
}

UnivariateMixed parse_univariate(const Json& j) {
  UnivariateMixed u;
  for (const Json& t : array(field(j, "terms"), "terms")) {
    const cplx c{number(field(t, "re"), "re"), t.contains("im") ? number(t["im"], "im") : 0.0};
    const int i = integer(field(t, "i"), "i");
    const int k = integer(field(t, "j"), "j");
    if (i < 0 || k < 0) bad("exponents must be nonnegative");
    u.add_term(c, i, k);
  }
  return u;
}

SampledLoop parse_loop(const Json& j) {
  std::vector<cplx> values;
  for (const Json& v : array(field(j, "values"), "values")) values.push_back(parse_complex(v));
  if (!j.contains("theta")) return SampledLoop::uniform(std::move(values));
  std::vector<double> theta;
  for (const Json& t : array(j["theta"], "theta")) theta.push_back(number(t, "theta"));
  return SampledLoop(std::move(theta), std::move(values));
}

RealLinearMap parse_real_linear(const Json& j) {
  const Json& rows = j.is_object() ? field(j, "matrix") : j;
  array(rows, "matrix");
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const Json& row = array(rows[static_cast<std::size_t>(r)], "matrix row");
    if (static_cast<Eigen::Index>(row.size()) != n) {
      fail(ErrorKind::DimensionMismatch, "matrix must be square");
    }
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = number(row[static_cast<std::size_t>(c)], "entry");
  }
  return RealLinearMap(std::move(m));
}

void RunConfig::validate() const {
  for (double s : {zero_tol_scale, fourier_tol_scale, dedup_radius_scale}) {
    if (!(s > 0.0) || !std::isfinite(s)) bad("tolerance scales must be positive");
  }
  if (boundary_samples < 8 || boundary_samples > kMaxBoundarySamples) {
    bad("sampleCounts.boundary must be in [8, 2^20]");
  }
  if (line_count < 1 || line_count > kMaxLineCount) bad("sampleCounts.lines must be in [1, 100000]");
  if (lambda_steps < 33 || lambda_steps > kMaxLambdaSteps) {
    bad("sampleCounts.lambdaSteps must be in [33, 65536]");
  }
}

RunConfig parse_run_config(const Json& j, RunConfig c) {
  if (!j.is_object()) bad("config must be an object");
  reject_unknown(j, {"seed", "tolerances", "sampleCounts", "outputPath"}, "config");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) bad("seed must be a nonnegative integer");
    c.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("tolerances")) {
    const Json& t = j["tolerances"];
    if (!t.is_object()) bad("tolerances must be an object");
    reject_unknown(t, {"zeroTolScale", "fourierTolScale", "dedupRadiusScale"}, "tolerances");
    if (t.contains("zeroTolScale")) c.zero_tol_scale = number(t["zeroTolScale"], "zeroTolScale");
    if (t.contains("fourierTolScale")) {
      c.fourier_tol_scale = number(t["fourierTolScale"], "fourierTolScale");
    }
    if (t.contains("dedupRadiusScale")) {
      c.dedup_radius_scale = number(t["dedupRadiusScale"], "dedupRadiusScale");
    }
  }
  if (j.contains("sampleCounts")) {
    const Json& s = j["sampleCounts"];
    if (!s.is_object()) bad("sampleCounts must be an object");
    reject_unknown(s, {"boundary", "lines", "lambdaSteps"}, "sampleCounts");
    if (s.contains("boundary")) c.boundary_samples = count(s["boundary"], "boundary");
    if (s.contains("lines")) c.line_count = count(s["lines"], "lines");
    if (s.contains("lambdaSteps")) c.lambda_steps = count(s["lambdaSteps"], "lambdaSteps");
  }
  if (j.contains("outputPath")) {
    if (!j["outputPath"].is_string()) bad("outputPath must be a string");
    c.output_path = j["outputPath"].get<std::string>();
  }
  c.validate();
  return c;
}

Json to_json(cplx c) { return Json::array({c.real(), c.imag()}); }

Json to_json(const CVector& v) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(to_json(v[k]));
  return out;
}

Json to_json(const CMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const Eigen::MatrixXd& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const ComplexLine& line) {
  return {{"base", to_json(line.base().coords())}, {"direction", to_json(line.direction().coords())}};
}

Json to_json(const DiscSlice& slice) {
  return {{"center", to_json(slice.center)}, {"radius", slice.radius}, {"line", to_json(slice.line)}};
}

Json to_json(const Domain& domain) {
  if (const Ball* b = domain.as_ball()) {
    return {{"type", "ball"}, {"center", to_json(b->center.coords())}, {"radius", b->radius}};
  }
  const HermitianEllipsoid* e = domain.as_ellipsoid();
  return {{"type", "ellipsoid"}, {"center", to_json(e->center.coords())}, {"form", to_json(e->form)}};
}

Json to_json(const MixedPolynomial& p) {
  Json terms = Json::array();
  for (const MixedTerm& t : p.terms()) {
    terms.push_back({{"re", t.coefficient.real()},
                     {"im", t.coefficient.imag()},
                     {"z", t.exponent.z},
                     {"zbar", t.exponent.zbar}});
  }
  return {{"n", p.n()}, {"terms", std::move(terms)}};
}

Json to_json(const MixedMap& map) {
  Json out = Json::array();
  for (const MixedPolynomial& p : map.components()) out.push_back(to_json(p));
  return out;
}

Json to_json(const UnivariateMixed& u) {
  Json terms = Json::array();
  for (const auto& [ij, c] : u.terms()) {
    terms.push_back({{"re", c.real()}, {"im", c.imag()}, {"i", ij.first}, {"j", ij.second}});
  }
  return {{"terms", std::move(terms)}};
}

Json to_json(const HoloPoly& p) {
  Json coeffs = Json::array();
  for (const cplx& c : p.coefficients()) coeffs.push_back(to_json(c));
  return {{"basepoint", to_json(p.basepoint())}, {"degree", p.degree()}, {"coefficients", std::move(coeffs)}};
}

Json to_json(const WindingResult& w) {
  return {{"winding", w.winding},
          {"minModulus", w.min_modulus},
          {"maxAngularStep", w.max_angular_step},
          {"samplesUsed", w.samples_used}};
}

Json to_json(const DegreeCertificate& c) {
  Json out = {{"degree", c.degree},
              {"method", c.method == DegreeMethod::ZeroCount ? "zeroCount" : "sliceWinding"},
              {"boundaryMargin", c.boundary_margin}};
  if (c.method == DegreeMethod::ZeroCount) {
    Json zeros = Json::array();
    for (const OracleZero& z : c.zeros) {
      Json loc = Json::array();
      for (Eigen::Index k = 0; k < z.location.size(); ++k) loc.push_back(z.location[k]);
      zeros.push_back({{"location", std::move(loc)},
                       {"jacobianSign", z.jacobian_sign},
                       {"residualNorm", z.residual_norm},
                       {"jacobianDet", z.jacobian_det}});
    }
    out["zeros"] = std::move(zeros);
    out["gridDensity"] = c.grid_density;
    out["starts"] = c.starts;
  }
  if (c.slice) out["slice"] = to_json(*c.slice);
  if (c.winding) out["windingEvidence"] = to_json(*c.winding);
  return out;
}

Json to_json(const HomotopyResult& h) {
  return {{"ok", h.ok}, {"minModulus", h.min_modulus}, {"lambdaAtMin", h.lambda_at_min}};
}

Json to_json(const ScaledDegreeResult& r) {
  auto method = [](DegreeMethod m) { return m == DegreeMethod::ZeroCount ? "zeroCount" : "sliceWinding"; };
  return {{"before", r.before},
          {"after", r.after},
          {"equal", r.equal()},
          {"methodBefore", method(r.method_before)},
          {"methodAfter", method(r.method_after)},
          {"homotopy", to_json(r.homotopy)}};
}

Json to_json(const ExtensionVerdict& v) {
  Json out = {{"extends", v.extends},
              {"sampled", v.sampled},
              {"defect", v.defect},
              {"tolerance", v.tolerance},
              {"linesTested", v.lines_tested}};
  if (v.witness_line) out["witnessLine"] = to_json(*v.witness_line);
  if (v.witness_slice) out["witnessSlice"] = to_json(*v.witness_slice);
  if (v.component) out["component"] = *v.component;
  Json table = Json::array();
  for (const auto& [k, c] : v.coefficient_table) table.push_back({{"k", k}, {"abs", c}});
  out["coefficientTable"] = std::move(table);
  return out;
}

Json to_json(const Witness1D& w) {
  return {{"q", to_json(w.split.q)},
          {"s", to_json(w.split.s)},
          {"b", to_json(w.b)},
          {"gridOffset", to_json(w.grid_offset)},
          {"g", to_json(w.g)},
          {"winding", w.winding},
          {"margin", w.margin}};
}

Json to_json(const WitnessReport& r) {
  return {{"P", to_json(r.P)},
          {"degreeP", r.P.degree()},
          {"component", r.component},
          {"line", to_json(r.line)},
          {"slice", to_json(r.slice)},
          {"split", {{"q", to_json(r.one_dim.split.q)}, {"s", to_json(r.one_dim.split.s)}}},
          {"b", to_json(r.one_dim.b)},
          {"g", to_json(r.one_dim.g)},
          {"T", r.T},
          {"sliceWinding", r.slice_winding},
          {"structuredDegree", to_json(r.structured_degree)},
          {"ambientDegree", to_json(r.ambient_degree)},
          {"homotopyMargins", r.homotopy_margins},
          {"finalMargin", r.final_margin}};
}

Json to_json(const LinearWitnessReport& r) {
  return {{"H", to_json(r.H.matrix())},
          {"Hcomplex", to_json(r.H_complex)},
          {"alpha", to_json(r.alpha)},
          {"beta", to_json(r.beta)},
          {"T", r.T},
          {"sign", r.sign},
          {"component", r.component},
          {"direction", to_json(r.direction)}};
}

Json to_json(const RunConfig& c) {
  Json out = {{"seed", c.seed},
              {"tolerances",
               {{"zeroTolScale", c.zero_tol_scale},
                {"fourierTolScale", c.fourier_tol_scale},
                {"dedupRadiusScale", c.dedup_radius_scale}}},
              {"sampleCounts",
               {{"boundary", c.boundary_samples}, {"lines", c.line_count}, {"lambdaSteps", c.lambda_steps}}}};
  if (c.output_path) out["outputPath"] = *c.output_path;
  return out;
}

Json to_json(const Error& e) {
  return {{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}, {"exitCode", exit_code(e.kind())}}}};
}

}  // namespace degext::io
