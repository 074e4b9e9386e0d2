// Copyright 2026 The qutrit-witnesses Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/* cli_app.hpp
 * The qutrit-ew command line front end. Kept in a header so the test suite
 * can drive commands in-process through run_cli().
 *
 * Every command prints one OutputRecord
 *   {"schema_version", "command", "inputs", "results"}
 * as JSON, or a CSV table for the tabular commands (witness, detect, sweep).
 * Exit status: 0 on success, 2 on invalid input.
 */

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qutrit/qutrit.hpp"
#include "qutrit/serialize.hpp"

namespace qutrit::cli {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr const char *kSeedEnv = "QUTRIT_EW_SEED";

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Where the (a, b, c) triple came from, and its exact value when known.
struct ParamSpec {
  MapParams params;
  std::optional<std::array<Rational, 3>> exact;
  std::optional<double> alpha;
  bool improper = false;
};

struct Options {
  std::vector<std::string> abc;
  std::vector<std::string> bc;
  std::optional<double> alpha;
  bool improper = false;
  bool degrees = false;
  std::string format = "json";
  std::string output;
  double tol = 1e-10; ///< ellipse / disk membership tolerance
  std::uint64_t seed = SeeSawConfig{}.rng_seed;
  int restarts = SeeSawConfig{}.restarts;

  std::string kind = "standard";
  std::vector<double> eps_grid{0.1, 10.0, 100};
  bool certify_tilde = false;
  bool certify_indecomposable = false;
  int resolution = 256;
  int alpha_grid = 12;
  std::string what = "coeffs";

  SeeSawConfig seesaw() const {
    SeeSawConfig cfg;
    cfg.rng_seed = seed;
    cfg.restarts = restarts;
    return cfg;
  }
};

namespace detail {

inline double parse_real(const std::string &s, std::optional<Rational> &exact) {
  exact = Rational::parse(s);
  if (exact)
    return exact->to_double();
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size() || !std::isfinite(v))
      throw InvalidInput("not a number: " + s);
    return v;
  } catch (const std::logic_error &) {
    throw InvalidInput("not a number: " + s);
  }
}

inline ParamSpec resolve_params(const Options &o) {
  const int sources = int(!o.abc.empty()) + int(!o.bc.empty()) + int(o.alpha.has_value());
  if (sources != 1)
    throw InvalidInput("give exactly one of: a b c | --bc b c | --alpha ANGLE");

  ParamSpec spec;
  if (o.alpha) {
    const double rad = o.degrees ? *o.alpha * std::numbers::pi / 180.0 : *o.alpha;
    const RotationAngle angle(rad);
    spec.alpha = angle.radians();
    spec.improper = o.improper;
    spec.params = o.improper ? improper_coeffs(angle) : so2_coeffs(angle);
    return spec;
  }
  if (o.improper)
    throw InvalidInput("--improper only applies together with --alpha");

  std::array<std::optional<Rational>, 3> ex;
  if (!o.abc.empty()) {
    spec.params = {parse_real(o.abc[0], ex[0]), parse_real(o.abc[1], ex[1]), parse_real(o.abc[2], ex[2])};
  } else {
    std::optional<Rational> eb, ec;
    const double b = parse_real(o.bc[0], eb), c = parse_real(o.bc[1], ec);
    try {
      spec.params = slice_params(b, c);
    } catch (const std::invalid_argument &e) {
      throw InvalidInput(e.what());
    }
    if (eb && ec)
      ex = {Rational(2) - *eb - *ec, eb, ec};
  }
  try {
    spec.params.validate();
  } catch (const std::invalid_argument &e) {
    throw InvalidInput(e.what());
  }
  if (ex[0] && ex[1] && ex[2])
    spec.exact = std::array<Rational, 3>{*ex[0], *ex[1], *ex[2]};
  return spec;
}

inline json inputs_json(const ParamSpec &spec) {
  json j{{"params", params_to_json(spec.params)}};
  if (spec.alpha) {
    j["alpha"] = *spec.alpha;
    j["improper"] = spec.improper;
  }
  if (spec.exact)
    j["params_exact"] = {(*spec.exact)[0].str(), (*spec.exact)[1].str(), (*spec.exact)[2].str()};
  return j;
}

inline json record(const std::string &command, json inputs, json results) {
  return {{"schema_version", kSchemaVersion},
          {"command", command},
          {"inputs", std::move(inputs)},
          {"results", std::move(results)}};
}

inline void require_slice(const MapParams &p, const char *what) {
  if (!p.on_slice())
    throw InvalidInput(std::string(what) + " requires a + b + c = 2");
}

inline WitnessKind parse_kind(const std::string &k) {
  if (k == "standard")
    return WitnessKind::Standard;
  if (k == "tilde")
    return WitnessKind::Tilde;
  if (k == "u")
    return WitnessKind::UConjugated;
  throw InvalidInput("unknown witness kind: " + k);
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  std::string csv() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < header.size(); ++i)
      os << (i ? "," : "") << header[i];
    os << "\n";
    for (const auto &r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i)
        os << (i ? "," : "") << csv_number(r[i]);
      os << "\n";
    }
    return os.str();
  }

  json to_json() const {
    json arr = json::array();
    for (const auto &r : rows) {
      json row;
      for (std::size_t i = 0; i < r.size(); ++i)
        row[header[i]] = real_or_inf(r[i]);
      arr.push_back(row);
    }
    return arr;
  }
};

inline json eigen_summary(const ComplexMatrix &m) {
  const auto eig = hermitian_eigen(m);
  return {{"min", eig.min()}, {"max", eig.max()}, {"eigenvalues", eig.eigenvalues}};
}

} // namespace detail

/// Result of one command: either a JSON record or CSV text.
struct Output {
  std::optional<json> record;
  std::string csv;

  std::string text() const { return record ? record->dump(2) + "\n" : csv; }
};

// ---------------------------------------------------------------------------
// Commands

inline Output cmd_classify(const Options &o) {
  using namespace detail;
  const ParamSpec spec = resolve_params(o);
  const MapParams &p = spec.params;
  const MapClass cls = classify(p);
  json res{{"class", to_string(cls.positivity)},
           {"decomposability", to_string(cls.decomposability)},
           {"dual", params_to_json(dual(p))},
           {"sum", p.sum()},
           {"on_slice", p.on_slice()}};
  if (p.on_slice()) {
    res["on_ellipse"] = on_ellipse(p, o.tol);
    res["detection_interval"] = interval_to_json(detects_rho_family(p));
  } else {
    res["on_ellipse"] = nullptr;
    res["detection_interval"] = nullptr;
  }
  return {record("classify", inputs_json(spec), std::move(res)), {}};
}

inline Output cmd_witness(const Options &o) {
  using namespace detail;
  const ParamSpec spec = resolve_params(o);
  const WitnessKind kind = parse_kind(o.kind);
  const MapParams &p = spec.params;
  if (kind != WitnessKind::Standard)
    require_slice(p, "witness --kind tilde|u");

  WitnessMatrix w = kind == WitnessKind::Standard ? witness_matrix(p)
                    : kind == WitnessKind::Tilde  ? witness_tilde_matrix(p)
                                                  : witness_u(p);

  if (o.format == "csv") {
    Table t{{"row", "col", "re", "im"}, {}};
    for (std::size_t i = 0; i < 9; ++i)
      for (std::size_t j = 0; j < 9; ++j)
        t.rows.push_back({double(i), double(j), w.matrix(i, j).real(), w.matrix(i, j).imag()});
    return {std::nullopt, t.csv()};
  }

  const ProductVectorPair best = min_product_expectation(w.matrix, o.seesaw());
  json res{{"kind", to_string(kind)},
           {"matrix", matrix_to_json(w.matrix)},
           {"trace", w.matrix.trace().real()},
           {"min_eigenvalue", min_eigenvalue(w.matrix)},
           {"block_positivity",
            {{"min_product_expectation", best.value},
             {"block_positive", best.value >= -kBlockPositivityTol},
             {"restarts", o.restarts},
             {"seed", o.seed}}},
           {"decomposability", to_string(witness_decomposability(w))}};
  if (spec.exact) {
    const auto &[a, b, c] = *spec.exact;
    res["matrix_exact"] = matrix_to_json(witness_display<Rational>(kind, a, b, c));
  }
  return {record("witness", inputs_json(spec), std::move(res)), {}};
}

inline Output cmd_detect(const Options &o) {
  using namespace detail;
  const ParamSpec spec = resolve_params(o);
  const WitnessKind kind = parse_kind(o.kind);
  const MapParams &p = spec.params;
  if (kind == WitnessKind::UConjugated)
    throw InvalidInput("detect supports --kind standard|tilde");
  if (kind == WitnessKind::Tilde)
    require_slice(p, "detect --kind tilde");
  if (o.eps_grid.size() != 3)
    throw InvalidInput("--eps-grid takes LO HI N");
  const double lo = o.eps_grid[0], hi = o.eps_grid[1];
  const double nd = o.eps_grid[2];
  if (!(lo > 0.0) || !(hi >= lo) || nd < 1 || nd != std::floor(nd))
    throw InvalidInput("--eps-grid needs 0 < LO ≤ HI and integer N ≥ 1");
  const int n = int(nd);

  const ComplexMatrix w = kind == WitnessKind::Standard ? witness_matrix(p).matrix
                                                        : witness_tilde_matrix(p).matrix;
  Table t{{"eps", "value", "numeric_trace"}, {}};
  for (int k = 0; k < n; ++k) {
    const double eps = n == 1 ? lo : lo + (hi - lo) * double(k) / double(n - 1);
    const double numeric = trace_pair(rho_eps(eps).matrix, w).real();
    const double closed = kind == WitnessKind::Standard ? detection_value(p, eps) : numeric;
    t.rows.push_back({eps, closed, numeric});
  }
  if (o.format == "csv")
    return {std::nullopt, t.csv()};

  json res{{"kind", to_string(kind)}, {"grid", t.to_json()}};
  res["detection_interval"] =
      kind == WitnessKind::Standard ? interval_to_json(detects_rho_family(p)) : json(nullptr);
  json inputs = inputs_json(spec);
  inputs["eps_grid"] = {lo, hi, n};
  return {record("detect", std::move(inputs), std::move(res)), {}};
}

inline Output cmd_spa(const Options &o) {
  using namespace detail;
  const ParamSpec spec = resolve_params(o);
  const MapParams &p = spec.params;
  require_slice(p, "spa");
  if (p.a >= 2.0)
    throw InvalidInput("spa requires a < 2 (the witness is already PSD)");

  const SpaResult r = spa_state(p);
  json res{{"p_star", r.p_star},
           {"p_star_spectral", critical_p_spectral(witness_matrix(p).matrix)},
           {"state", matrix_to_json(r.state.matrix)},
           {"state_min_eigenvalue", min_eigenvalue(r.state.matrix)},
           {"region", spa_region(p.b, p.c)},
           {"separable_certified", r.separable_certified},
           {"components", nullptr}};
  if (r.components) {
    const auto &c = *r.components;
    std::vector<double> sd;
    for (std::size_t i = 0; i < 9; ++i)
      sd.push_back(c.sigma_d.matrix(i, i).real());
    res["components"] = {{"scale", c.scale},
                         {"sigma_d_diagonal", sd},
                         {"reconstruction_residual", frobenius_distance(c.sum(), r.state.matrix)}};
  }
  return {record("spa", inputs_json(spec), std::move(res)), {}};
}

inline Output cmd_certify(const Options &o) {
  using namespace detail;
  const ParamSpec spec = resolve_params(o);
  const MapParams &p = spec.params;
  if (o.certify_tilde == o.certify_indecomposable)
    throw InvalidInput("certify needs exactly one of --tilde, --indecomposable");

  json res;
  if (o.certify_tilde) {
    require_slice(p, "certify --tilde");
    DecompositionCertificate cert;
    try {
      cert = decompose_tilde(p, o.tol);
    } catch (const std::invalid_argument &e) {
      throw InvalidInput(e.what());
    }
    const ComplexMatrix target = witness_tilde_matrix(p).matrix * cplx(cert.scale);
    res = {{"type", "tilde_decomposition"},
           {"P", matrix_to_json(cert.P)},
           {"Q", matrix_to_json(cert.Q)},
           {"scale", cert.scale},
           {"P_eigenvalues", eigen_summary(cert.P)},
           {"Q_eigenvalues", eigen_summary(cert.Q)},
           {"P_principal_eigenvalues",
            hermitian_eigen(principal_submatrix(cert.P, qutrit::detail::kDiagonalKets)).eigenvalues},
           {"reconstruction_residual", frobenius_distance(cert.reconstruction(), target)},
           {"lambda", cert.lambda},
           {"chord", nullptr}};
    if (cert.chord)
      res["chord"] = {params_to_json((*cert.chord)[0]), params_to_json((*cert.chord)[1])};
  } else {
    const auto cert = indecomposability_certificate(p);
    res = {{"type", "indecomposability"}, {"certificate", nullptr}};
    if (cert)
      res["certificate"] = {{"eps", cert->eps},
                            {"value", cert->value},
                            {"interval", interval_to_json(cert->interval)},
                            {"rho_eps_ppt", cert->ppt}};
  }
  return {record("certify", inputs_json(spec), std::move(res)), {}};
}

inline Output cmd_figure(const Options &o) {
  using namespace detail;
  if (o.resolution < 8)
    throw InvalidInput("--resolution must be at least 8");
  const int n = o.resolution;

  // (b, c) = ((x + y)/2, (x - y)/2), x = 4/3 + 2/3 cos t, y = 2/sqrt(3) sin t.
  json ellipse = json::array();
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * double(k) / double(n);
    const double x = 4.0 / 3.0 + 2.0 / 3.0 * std::cos(t);
    const double y = 2.0 / std::numbers::sqrt3 * std::sin(t);
    const double b = (x + y) / 2.0, c = (x - y) / 2.0;
    worst = std::max(worst, std::abs(ellipse_form(b, c) - 1.0));
    ellipse.push_back({b, c});
  }
  auto seg = [](double b0, double c0, double b1, double c1) { return json{{b0, c0}, {b1, c1}}; };
  json points = json::array({
      {{"label", "i"}, {"name", "Choi map"}, {"b", 1.0}, {"c", 0.0}},
      {{"label", "ii"}, {"name", "dual Choi map"}, {"b", 0.0}, {"c", 1.0}},
      {{"label", "iii"}, {"name", "reduction map"}, {"b", 1.0}, {"c", 1.0}},
      {{"label", "iv"}, {"name", "decomposable map b=c=1/3"}, {"b", 1.0 / 3.0}, {"c", 1.0 / 3.0}},
      {{"label", "v"}, {"name", "completely positive map"}, {"b", 0.0}, {"c", 0.0}},
  });
  json res{{"ellipse", ellipse},
           {"ellipse_max_residual", worst},
           {"ellipse_center", {2.0 / 3.0, 2.0 / 3.0}},
           {"decomposable_line", seg(0.0, 0.0, 1.0, 1.0)},
           {"simplex_edges", json::array({seg(0, 0, 2, 0), seg(2, 0, 0, 2), seg(0, 2, 0, 0)})},
           {"spa_lines", json::array({seg(0.0, 1.0, 0.5, 0.0), seg(1.0, 0.0, 0.0, 0.5)})},
           {"special_points", points}};
  return {record("figure", {{"resolution", n}}, std::move(res)), {}};
}

inline Output cmd_sweep(const Options &o) {
  using namespace detail;
  if (o.alpha_grid < 1)
    throw InvalidInput("--alpha-grid must be positive");
  const int n = o.alpha_grid;
  Table t;
  const std::string &what = o.what;
  if (what == "coeffs")
    t.header = {"alpha", "a", "b", "c", "sum"};
  else if (what == "witness")
    t.header = {"alpha", "trace", "min_eigenvalue", "indecomposable"};
  else if (what == "pstar")
    t.header = {"alpha", "a", "p_star", "p_star_spectral"};
  else if (what == "rank")
    t.header = {"alpha", "zero_vectors", "span_rank"};
  else
    throw InvalidInput("--what must be coeffs|witness|pstar|rank");

  for (int k = 0; k < n; ++k) {
    const double alpha = 2.0 * std::numbers::pi * double(k) / double(n);
    const RotationAngle angle(alpha);
    const MapParams p = o.improper ? improper_coeffs(angle) : so2_coeffs(angle);
    const ComplexMatrix w = o.improper ? witness_tilde_matrix(p).matrix : witness_matrix(p).matrix;
    if (what == "coeffs") {
      t.rows.push_back({alpha, p.a, p.b, p.c, p.sum()});
    } else if (what == "witness") {
      const bool indec = !o.improper && classify(p).decomposability == Decomposability::Indecomposable;
      t.rows.push_back({alpha, w.trace().real(), min_eigenvalue(w), indec ? 1.0 : 0.0});
    } else if (what == "pstar") {
      const double ps = p.a >= 2.0 ? 0.0 : (o.improper ? critical_p_spectral(w) : critical_p(p));
      t.rows.push_back({alpha, p.a, ps, critical_p_spectral(w)});
    } else {
      const auto zeros = zero_product_vectors(w, o.seesaw());
      t.rows.push_back({alpha, double(zeros.size()), double(span_rank(zeros))});
    }
  }
  if (o.format == "csv")
    return {std::nullopt, t.csv()};
  json inputs{{"alpha_grid", n}, {"improper", o.improper}, {"what", what}};
  json res{{"rows", t.to_json()}};
  if (what == "rank")
    res["slow_path"] = true;
  return {record("sweep", std::move(inputs), std::move(res)), {}};
}

// ---------------------------------------------------------------------------

inline std::uint64_t default_seed() {
  if (const char *env = std::getenv(kSeedEnv)) {
    try {
      return std::stoull(env);
    } catch (const std::logic_error &) {
    }
  }
  return SeeSawConfig{}.rng_seed;
}

/// Parses `args` (without the program name), runs the command, and writes the
/// output to `out` (or --output). Diagnostics go to `err`.
inline int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Positive maps and entanglement witnesses for two qutrits", "qutrit-ew"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  o.seed = default_seed();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", o.output, "Write output to this path instead of stdout");
  app.add_option("--tol", o.tol, "Tolerance for ellipse and disk membership")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, std::string("See-saw RNG seed (default from ") + kSeedEnv + ")");
  app.add_option("--restarts", o.restarts, "See-saw restarts")->check(CLI::PositiveNumber);
  app.add_flag("--degrees", o.degrees, "Interpret --alpha in degrees");

  auto add_param_options = [&](CLI::App *sub) {
    sub->add_option("abc", o.abc, "Parameters a b c (decimal or p/q)")->expected(3);
    sub->add_option("--bc", o.bc, "Slice point: a = 2 - b - c")->expected(2);
    sub->add_option("--alpha", o.alpha, "Rotation angle (radians)");
    sub->add_flag("--improper", o.improper, "Use the improper rotation family");
  };

  auto *classify_cmd = app.add_subcommand("classify", "Positivity and decomposability of Phi[a,b,c]");
  add_param_options(classify_cmd);

  auto *witness_cmd = app.add_subcommand("witness", "Emit a 9x9 witness matrix");
  add_param_options(witness_cmd);
  witness_cmd->add_option("--kind", o.kind, "standard|tilde|u");

  auto *detect_cmd = app.add_subcommand("detect", "Tr(rho_eps W) over a grid of eps");
  add_param_options(detect_cmd);
  detect_cmd->add_option("--kind", o.kind, "standard|tilde");
  detect_cmd->add_option("--eps-grid", o.eps_grid, "LO HI N")->expected(3);

  auto *spa_cmd = app.add_subcommand("spa", "Structural physical approximation at p*");
  add_param_options(spa_cmd);

  auto *certify_cmd = app.add_subcommand("certify", "Decomposability or indecomposability certificate");
  add_param_options(certify_cmd);
  certify_cmd->add_flag("--tilde", o.certify_tilde, "P + Q^Gamma certificate for W~");
  certify_cmd->add_flag("--indecomposable", o.certify_indecomposable, "rho_eps certificate for W");

  auto *figure_cmd = app.add_subcommand("figure", "Geometry of the (b, c) slice as polylines");
  figure_cmd->add_option("--resolution", o.resolution, "Ellipse vertices");

  auto *sweep_cmd = app.add_subcommand("sweep", "Tabulate over a grid of rotation angles");
  sweep_cmd->add_option("--alpha-grid", o.alpha_grid, "Number of angles in [0, 2pi)");
  sweep_cmd->add_flag("--improper", o.improper, "Use the improper rotation family");
  sweep_cmd->add_option("--what", o.what, "coeffs|witness|pstar|rank");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  const bool tabular = witness_cmd->parsed() || detect_cmd->parsed() || sweep_cmd->parsed();
  try {
    if (o.format == "csv" && !tabular)
      throw InvalidInput("--format csv is only available for witness, detect and sweep");
    Output result;
    if (classify_cmd->parsed())
      result = cmd_classify(o);
    else if (witness_cmd->parsed())
      result = cmd_witness(o);
    else if (detect_cmd->parsed())
      result = cmd_detect(o);
    else if (spa_cmd->parsed())
      result = cmd_spa(o);
    else if (certify_cmd->parsed())
      result = cmd_certify(o);
    else if (figure_cmd->parsed())
      result = cmd_figure(o);
    else
      result = cmd_sweep(o);

    if (o.output.empty()) {
      out << result.text();
    } else {
      std::ofstream f(o.output);
      if (!f)
        throw InvalidInput("cannot open output file: " + o.output);
      f << result.text();
    }
    return kExitOk;
  } catch (const InvalidInput &e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

} // namespace qutrit::cli
