// Copyright 2026 The mpilat Authors
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


#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "manifest.hpp"
#include "mpilat/errors.hpp"
#include "mpilat/generators.hpp"
#include "mpilat/json_io.hpp"
#include "mpilat/lattice.hpp"
#include "mpilat/reference/fixtures.hpp"
#include "mpilat/solver.hpp"
#include "mpilat/targets.hpp"

namespace mpilat::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::optional<double> tol;
  std::string out_path;
  std::string format = "json";
  int jobs = 1;
  bool timing = false;

  bool text() const { return format == "text"; }
};

// State shared by one invocation: streams, globals, and the manifest that
// collects input digests as files are read.
struct Context {
  Globals g;
  std::ostream &out;
  std::ostream &err;
  std::istream &in;
  RunManifest manifest;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  std::string read_input(const std::string &path) {
    std::string bytes;
    if (path == "-") {
      bytes.assign(std::istreambuf_iterator<char>(in), {});
    } else {
      std::ifstream f(path, std::ios::binary);
      if (!f) throw ParseError("cannot read '" + path + "'");
      bytes.assign(std::istreambuf_iterator<char>(f), {});
    }
    manifest.inputs.push_back({path, sha256_hex(bytes)});
    return bytes;
  }

  void finish_manifest() {
    manifest.version = MPILAT_VERSION;
    if (g.timing)
      manifest.wall_clock_s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }

  void emit(const std::string &body) {
    if (g.out_path.empty()) {
      out << body;
      out.flush();
      return;
    }
    std::ofstream f(g.out_path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot write '" + g.out_path + "'");
    f << body;
    if (!f) throw IoError("write to '" + g.out_path + "' failed");
  }

  void emit_json(Json doc) {
    finish_manifest();
    doc["manifest"] = manifest.to_json();
    emit(doc.dump(2) + "\n");
  }

  void emit_text(const std::string &body) {
    finish_manifest();
    emit(manifest.to_text() + body);
  }
};

constexpr double kPi = std::numbers::pi;

std::string fmt(double v, int precision = 10) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

std::string fmt_complex(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%+.10f%+.10fi", z.real(), z.imag());
  return buf;
}

std::string matrix_text(const CMatrix &m) {
  std::ostringstream os;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) os << (c ? "  " : "") << fmt_complex(m(r, c));
    os << "\n";
  }
  return os.str();
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

// "|1,0,2>" or "|1,0>|0,1>", one ket per tensor factor.
MultiState parse_state(const std::string &label) {
  MultiState state;
  std::size_t pos = 0;
  while (pos < label.size()) {
    if (label[pos] != '|') throw ParseError("malformed state label '" + label + "'");
    const auto close = label.find('>', pos);
    if (close == std::string::npos) throw ParseError("malformed state label '" + label + "'");
    Occupation occ;
    std::string_view body(label.data() + pos + 1, close - pos - 1);
    while (true) {
      const auto comma = body.find(',');
      const auto part = body.substr(0, comma);
      int v = 0;
      auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
      if (ec != std::errc() || ptr != part.data() + part.size() || v < 0)
        throw ParseError("malformed state label '" + label + "'");
      occ.push_back(v);
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    state.push_back(std::move(occ));
    pos = close + 1;
  }
  if (state.empty()) throw ParseError("empty state label");
  return state;
}

Complex amplitude_from_json(const Json &v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  throw ParseError("amplitudes must be numbers or [re, im] pairs");
}

Json amplitude_table(const GeneratorSet &g, const CVector &v) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    rows.push_back({{"state", state_label(state_at(g, static_cast<std::size_t>(i)))},
                    {"amplitude", complex_json(v(i))},
                    {"probability", std::norm(v(i))}});
  return rows;
}

std::string amplitude_text(const std::vector<std::string> &labels, const CVector &v) {
  std::size_t width = 5;
  for (const auto &l : labels) width = std::max(width, l.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width)) << "state" << "  "
     << std::setw(29) << "amplitude" << "probability\n";
  for (Eigen::Index i = 0; i < v.size(); ++i)
    os << std::setw(static_cast<int>(width)) << labels[static_cast<std::size_t>(i)] << "  "
       << std::setw(29) << fmt_complex(v(i)) << fmt(std::norm(v(i))) << "\n";
  return os.str();
}

std::vector<std::string> labels_of(const GeneratorSet &g) {
  std::vector<std::string> out;
  for (Eigen::Index i = 0; i < g.dim(); ++i)
    out.push_back(state_label(state_at(g, static_cast<std::size_t>(i))));
  return out;
}

// ---- decompose ------------------------------------------------------------

struct Solve {
  std::string path;
  std::optional<DecompositionResult> result;
  int code = exit_code::kOk;
  std::string message;
};

void solve_one(Solve &s, const std::string &bytes, double tolerance) {
  try {
    const CMatrix target = matrix_from_json(parse_json(bytes));
    s.result = decompose(target, tolerance);
    if (!s.result->ok()) {
      s.code = exit_code::kResidual;
      s.message = "residual " + fmt(s.result->residual, 17) + " exceeds tolerance " +
                  fmt(tolerance, 17);
    }
  } catch (const ParseError &e) {
    s.code = exit_code::kMalformed;
    s.message = e.what();
  } catch (const NotUnitaryError &e) {
    s.code = exit_code::kNotUnitary;
    s.message = e.what();
  } catch (const PreconditionError &e) {
    s.code = exit_code::kMalformed;
    s.message = e.what();
  } catch (const ConsistencyError &e) {
    s.code = exit_code::kResidual;
    s.message = e.what();
  }
}

std::string result_text(const DecompositionResult &r) {
  std::ostringstream os;
  os << "d " << r.params.d() << "  residual " << fmt(r.residual, 6) << "  tolerance "
     << fmt(r.tolerance, 6) << "\n";
  os << std::right << std::setw(4) << "j" << std::setw(4) << "k" << std::setw(16) << "R"
     << std::setw(16) << "theta" << std::setw(16) << "phi" << "\n";
  for (int k = 1; k <= r.params.d(); ++k)
    for (int j = 1; j <= k; ++j) {
      os << std::setw(4) << j << std::setw(4) << k;
      if (j < k)
        os << std::setw(16) << fmt(r.grid.r.at({j, k})) << std::setw(16)
           << fmt(r.params.theta(j, k));
      else
        os << std::setw(16) << "-" << std::setw(16) << "-";
      os << std::setw(16) << fmt(r.params.phi(j, k)) << "\n";
    }
  return os.str();
}

int cmd_decompose(Context &ctx, const std::vector<std::string> &targets) {
  const double tolerance = ctx.g.tol.value_or(tol::kRoundTrip);
  ctx.manifest.tolerances = {{"round_trip", tolerance},
                             {"blocked_remainder", solver_tol::kBlockedRemainder},
                             {"transmissive", solver_tol::kTransmissive},
                             {"target_unitarity", solver_tol::kTargetUnitarity}};
  std::vector<std::string> bytes;
  std::vector<Solve> solves(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    solves[i].path = targets[i];
    bytes.push_back(ctx.read_input(targets[i]));
  }

  // Solves share no state; results land in input order regardless of jobs.
  const auto workers = static_cast<std::size_t>(
      std::clamp<int>(ctx.g.jobs, 1, static_cast<int>(std::max<std::size_t>(1, targets.size()))));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < solves.size(); i = next++) solve_one(solves[i], bytes[i], tolerance);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  int code = exit_code::kOk;
  for (const auto &s : solves) {
    if (s.code == exit_code::kOk) continue;
    ctx.err << "mpilat: " << s.path << ": " << s.message << "\n";
    if (code == exit_code::kOk) code = s.code;
  }

  if (solves.size() == 1) {
    const Solve &s = solves.front();
    if (!s.result) return code;
    if (ctx.g.text())
      ctx.emit_text(result_text(*s.result));
    else
      ctx.emit_json(result_to_json(*s.result));
    return code;
  }
  if (ctx.g.text()) {
    std::string body;
    for (const auto &s : solves) {
      body += "== " + s.path + "\n";
      body += s.result ? result_text(*s.result) : "error: " + s.message + "\n";
    }
    ctx.emit_text(body);
  } else {
    Json results = Json::array();
    for (const auto &s : solves) {
      Json entry = s.result ? result_to_json(*s.result) : Json::object();
      entry["target"] = s.path;
      entry["exit_code"] = s.code;
      if (!s.message.empty()) entry["error"] = s.message;
      results.push_back(std::move(entry));
    }
    ctx.emit_json({{"results", std::move(results)}});
  }
  return code;
}

// ---- synthesize, target, generators -----------------------------------------

int emit_matrix(Context &ctx, const CMatrix &m, Json extra = Json::object()) {
  if (ctx.g.text()) {
    ctx.emit_text(matrix_text(m));
  } else {
    Json doc = matrix_to_json(m);
    for (auto &[k, v] : extra.items()) doc[k] = v;
    ctx.emit_json(std::move(doc));
  }
  return exit_code::kOk;
}

int cmd_synthesize(Context &ctx, const std::string &params_path, const std::string &spec_text) {
  ctx.manifest.tolerances = {{"construction", tol::kConstruction}};
  const LatticeParams p = params_from_json(parse_json(ctx.read_input(params_path)));
  const ParticleSpec spec = ParticleSpec::parse(spec_text);
  if (spec.kind() == ParticleSpec::Kind::Single)
    return emit_matrix(ctx, assemble_unitary(p));
  const GeneratorSet g(spec, p.d());
  return emit_matrix(ctx, assemble_unitary(p, g),
                     {{"spec", spec.to_string()}, {"basis", labels_of(g)}});
}

int cmd_target(Context &ctx, const std::string &kind, std::optional<int> d,
               std::optional<double> s, std::optional<double> theta) {
  ctx.manifest.tolerances = {{"construction", tol::kConstruction}};
  if (kind == "dft") {
    if (!d) throw ParseError("target --kind dft needs --d");
    return emit_matrix(ctx, dft(*d), {{"kind", "dft"}, {"d", *d}});
  }
  if (!theta) throw ParseError("target --kind wigner needs --theta");
  double spin = 0.0;
  if (s)
    spin = *s;
  else if (d)
    spin = 0.5 * (*d - 1);
  else
    throw ParseError("target --kind wigner needs --s or --d");
  return emit_matrix(ctx, wigner_d(spin, *theta), {{"kind", "wigner"}, {"s", spin}, {"theta", *theta}});
}

int cmd_generators(Context &ctx, const std::string &spec_text, int d) {
  ctx.manifest.tolerances = {{"construction", tol::kConstruction}};
  const GeneratorSet g(ParticleSpec::parse(spec_text), d);
  if (!ctx.g.text()) {
    ctx.emit_json(genset_to_json(g));
    return exit_code::kOk;
  }
  std::ostringstream os;
  os << "spec " << g.spec().to_string() << "  d " << d << "  dim " << g.dim() << "\nbasis";
  for (const auto &l : labels_of(g)) os << " " << l;
  os << "\n";
  for (int j = 1; j <= d; ++j)
    for (int k = j + 1; k <= d; ++k) os << "\nY_" << j << "," << k << "\n" << matrix_text(g.y(j, k));
  for (int k = 1; k <= d; ++k) os << "\nE_" << k << "\n" << matrix_text(g.e(k));
  ctx.emit_text(os.str());
  return exit_code::kOk;
}

// ---- simulate ---------------------------------------------------------------

int simulate_hom(Context &ctx, double theta) {
  const HomReport r = hom_3port_simulation(theta);
  const std::vector<std::pair<std::string, std::string>> mapping = {
      {"|2,0>", "|1,0,0>"}, {"|1,1>", "|0,1,0>"}, {"|0,2>", "|0,0,1>"}};
  const std::vector<std::string> labels = {"|1,0,0>", "|0,1,0>", "|0,0,1>"};
  if (ctx.g.text()) {
    std::ostringstream os;
    os << "scenario hom  theta " << fmt(theta) << "\n";
    os << "R_1,3 " << fmt(r.scenario.params.reflectivity(1, 3)) << "  R_1,2 "
       << fmt(r.scenario.params.reflectivity(1, 2)) << "  R_2,3 "
       << fmt(r.scenario.params.reflectivity(2, 3)) << "\n";
    for (Eigen::Index col = 0; col < 3; ++col) {
      const auto &[two, three] = mapping[static_cast<std::size_t>(col)];
      os << "\ninput " << three << " (" << two << ")\n"
         << amplitude_text(labels, r.lattice.col(col));
    }
    os << "\ncoincidence probability " << fmt(r.coincidence_probability) << "\nmax deviation "
       << fmt(r.max_deviation) << "\n";
    ctx.emit_text(os.str());
    return exit_code::kOk;
  }
  Json outputs = Json::array();
  for (Eigen::Index col = 0; col < 3; ++col) {
    Json amps = Json::array();
    for (Eigen::Index row = 0; row < 3; ++row)
      amps.push_back({{"state", labels[static_cast<std::size_t>(row)]},
                      {"amplitude", complex_json(r.lattice(row, col))},
                      {"probability", std::norm(r.lattice(row, col))}});
    outputs.push_back({{"input", labels[static_cast<std::size_t>(col)]}, {"amplitudes", std::move(amps)}});
  }
  Json map_doc = Json::object();
  for (const auto &[two, three] : mapping) map_doc[two] = three;
  ctx.emit_json({{"scenario", "hom"},
                 {"theta", theta},
                 {"params", params_to_json(r.scenario.params)},
                 {"R", {{"1,2", r.scenario.params.reflectivity(1, 2)},
                        {"1,3", r.scenario.params.reflectivity(1, 3)},
                        {"2,3", r.scenario.params.reflectivity(2, 3)}}},
                 {"mapping", std::move(map_doc)},
                 {"outputs", std::move(outputs)},
                 {"coincidence_probability", r.coincidence_probability},
                 {"max_deviation", r.max_deviation}});
  return exit_code::kOk;
}

int simulate_bell(Context &ctx, double theta) {
  const BellReport r = bell_scattering(theta);
  const GeneratorSet g(ParticleSpec::distinguishable(2), 2);
  const std::vector<std::tuple<std::string, const CVector *, const CVector *>> cases = {
      {"psi_plus", &r.psi_plus_in, &r.psi_plus_out},
      {"psi_minus", &r.psi_minus_in, &r.psi_minus_out},
      {"product", &r.product_in, &r.product_out}};
  if (ctx.g.text()) {
    std::ostringstream os;
    os << "scenario bell  theta " << fmt(theta) << "\n";
    for (const auto &[name, in, out] : cases)
      os << "\ninput " << name << "\n" << amplitude_text(labels_of(g), *out);
    ctx.emit_text(os.str());
    return exit_code::kOk;
  }
  Json outputs = Json::array();
  for (const auto &[name, in, out] : cases)
    outputs.push_back({{"input", name},
                       {"input_amplitudes", amplitude_table(g, *in)},
                       {"amplitudes", amplitude_table(g, *out)},
                       {"total_probability", out->squaredNorm()}});
  ctx.emit_json({{"scenario", "bell"}, {"theta", theta}, {"spec", "2D"}, {"outputs", std::move(outputs)}});
  return exit_code::kOk;
}

int simulate_file(Context &ctx, const std::string &path) {
  const Json doc = parse_json(ctx.read_input(path));
  if (!doc.is_object() || !doc.contains("spec") || !doc.at("spec").is_string())
    throw ParseError("scenario needs a string field 'spec'");
  if (!doc.contains("params")) throw ParseError("scenario needs a field 'params'");
  if (!doc.contains("input")) throw ParseError("scenario needs a field 'input'");
  Scenario sc;
  sc.spec = ParticleSpec::parse(doc.at("spec").get<std::string>());
  sc.params = params_from_json(doc.at("params"));
  const GeneratorSet g(sc.spec, sc.params.d());
  sc.input = CVector::Zero(g.dim());
  const Json &input = doc.at("input");
  if (input.is_object()) {
    for (const auto &[label, v] : input.items()) {
      std::size_t idx = 0;
      try {
        idx = state_index(g, parse_state(label));
      } catch (const PreconditionError &e) {
        throw ParseError("input state '" + label + "': " + e.what());
      }
      sc.input(static_cast<Eigen::Index>(idx)) += amplitude_from_json(v);
    }
  } else if (input.is_array()) {
    if (input.size() != static_cast<std::size_t>(g.dim()))
      throw ParseError("input has " + std::to_string(input.size()) + " amplitudes, basis has " +
                       std::to_string(g.dim()));
    for (std::size_t i = 0; i < input.size(); ++i)
      sc.input(static_cast<Eigen::Index>(i)) = amplitude_from_json(input[i]);
  } else {
    throw ParseError("field 'input' must be an object or an array");
  }
  const CVector out = evolve(sc, g);
  if (ctx.g.text()) {
    ctx.emit_text("scenario " + path + "  spec " + sc.spec.to_string() + "  d " +
                  std::to_string(sc.params.d()) + "\n" + amplitude_text(labels_of(g), out));
    return exit_code::kOk;
  }
  ctx.emit_json({{"scenario", path},
                 {"spec", sc.spec.to_string()},
                 {"params", params_to_json(sc.params)},
                 {"outputs", Json::array({{{"input_amplitudes", amplitude_table(g, sc.input)},
                                           {"amplitudes", amplitude_table(g, out)},
                                           {"total_probability", out.squaredNorm()}}})}});
  return exit_code::kOk;
}

int cmd_simulate(Context &ctx, const std::string &scenario, double theta) {
  ctx.manifest.tolerances = {{"normalization", tol::kConstruction}};
  if (scenario == "hom") return simulate_hom(ctx, theta);
  if (scenario == "bell") return simulate_bell(ctx, theta);
  return simulate_file(ctx, scenario);
}

// ---- verify -------------------------------------------------------------------

struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  Json details = Json::object();

  bool pass() const { return value <= tolerance; }
};

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return INFINITY;
  return (a - b).cwiseAbs().maxCoeff();
}

Check check_fixture(const reference::GoldenSet &golden, double tolerance) {
  const GeneratorSet g(golden.spec, golden.d);
  const FockBasis &b = g.factor_bases().front();
  double worst = (b.states() == golden.states && b.partition() == golden.partition) ? 0.0 : INFINITY;
  for (const auto &[key, y] : golden.y) worst = std::max(worst, max_abs_diff(g.y(key.first, key.second), y));
  for (const auto &[key, p] : golden.perm)
    worst = std::max(worst, max_abs_diff(g.perm(key.first, key.second), p));
  for (int k = 1; k <= golden.d; ++k) worst = std::max(worst, max_abs_diff(g.e(k), golden.e[k - 1]));
  for (const auto &route : golden.routes) {
    const CMatrix &p = g.perm(route.perm.first, route.perm.second);
    worst = std::max(worst, max_abs_diff(route.sign * p * g.y(route.source.first, route.source.second) * p,
                                         golden.y.at(route.target)));
  }
  Check c{"fixtures " + golden.spec.to_string() + " d=" + std::to_string(golden.d), worst, tolerance};
  c.details = {{"matrices", golden.y.size() + golden.perm.size() + golden.e.size()},
               {"routes", golden.routes.size()}};
  return c;
}

Check check_su3(double tolerance) {
  const Su3Table t = su3_check(GeneratorSet(ParticleSpec::bosons(2), 3));
  Json f = Json::object();
  for (int a = 1; a <= 8; ++a)
    for (int b = a + 1; b <= 8; ++b)
      for (int c = b + 1; c <= 8; ++c)
        if (std::abs(t.at(a, b, c)) > 1e-12)
          f[std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c)] = t.at(a, b, c);
  Check c{"su3 closure 2B d=3", t.closure_residual, tolerance};
  c.details = {{"structure_constants", std::move(f)}};
  return c;
}

Check check_eta(const ParticleSpec &spec, int d, double tolerance) {
  if (!spec.is_fermionic()) throw PreconditionError("eta relations need a fermionic spec");
  const EtaCheck e = check_eta_relations(GeneratorSet(spec, d));
  Check c{"eta relations " + spec.to_string() + " d=" + std::to_string(d), e.max_error, tolerance};
  c.details = {{"relations", e.relations}, {"uncorrected_error", e.max_error_uncorrected}};
  return c;
}

Check check_z(double tolerance) {
  CMatrix sz = CMatrix::Zero(2, 2), l8 = CMatrix::Zero(3, 3);
  sz.diagonal() << 0.5, -0.5;
  l8.diagonal() << 0.5 / std::sqrt(3.0), 0.5 / std::sqrt(3.0), -1.0 / std::sqrt(3.0);
  const double worst =
      std::max(max_abs_diff(diag_z(GeneratorSet(ParticleSpec::single(), 2), 1), sz),
               max_abs_diff(diag_z(GeneratorSet(ParticleSpec::single(), 3), 2), l8));
  return {"Z diagonals d=2,3", worst, tolerance};
}

int cmd_verify(Context &ctx, const std::string &which, const std::optional<std::string> &spec_text,
               std::optional<int> d) {
  const double fixture_tol = ctx.g.tol.value_or(tol::kFixture);
  const double algebra_tol = ctx.g.tol.value_or(tol::kFixture);
  const double z_tol = ctx.g.tol.value_or(tol::kConstruction);
  ctx.manifest.tolerances = {{"fixtures", fixture_tol}, {"algebra", algebra_tol}, {"z", z_tol}};

  std::vector<Check> checks;
  const bool all = which == "all";
  if (all || which == "fixtures") {
    checks.push_back(check_fixture(reference::golden_two_bosons_three_ports(), fixture_tol));
    checks.push_back(check_fixture(reference::golden_two_fermions_four_ports(), fixture_tol));
  }
  if (all || which == "su3") checks.push_back(check_su3(algebra_tol));
  if (all || which == "eta") {
    if (spec_text || d) {
      if (!spec_text || !d) throw ParseError("verify --check eta needs both --spec and --d");
      checks.push_back(check_eta(ParticleSpec::parse(*spec_text), *d, algebra_tol));
    } else {
      for (auto [n, ports] : {std::pair{2, 3}, {2, 4}, {3, 4}})
        checks.push_back(check_eta(ParticleSpec::fermions(n), ports, algebra_tol));
    }
  }
  if (all || which == "z") checks.push_back(check_z(z_tol));

  const bool pass = std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass(); });
  if (ctx.g.text()) {
    std::ostringstream os;
    for (const auto &c : checks)
      os << (c.pass() ? "PASS  " : "FAIL  ") << std::left << std::setw(28) << c.name << " "
         << fmt(c.value, 6) << " <= " << fmt(c.tolerance, 6) << "\n";
    ctx.emit_text(os.str());
  } else {
    Json list = Json::array();
    for (const auto &c : checks)
      list.push_back({{"name", c.name},
                      {"pass", c.pass()},
                      {"value", c.value},
                      {"tolerance", c.tolerance},
                      {"details", c.details}});
    ctx.emit_json({{"checks", std::move(list)}, {"pass", pass}});
  }
  return pass ? exit_code::kOk : exit_code::kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, std::istream &in) {
  CLI::App app{"Triangular multiport interferometers: decomposition, synthesis, generators.",
               "mpilat"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(MPILAT_VERSION));

  Globals g;
  app.add_option("--tol", g.tol, "Numerical tolerance for the command's main check")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", g.out_path, "Write the output document to this file");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", g.jobs, "Concurrent solves in batch decompose")->check(CLI::Range(1, 1024));
  app.add_flag("--timing", g.timing, "Record wall-clock time in the manifest");

  std::vector<std::string> targets;
  auto *dec = app.add_subcommand("decompose", "Solve lattice parameters for unitary targets");
  dec->add_option("--target", targets, "Matrix JSON file, or - for stdin")->required();

  std::string params_path, spec_text = "1";
  auto *syn = app.add_subcommand("synthesize", "Assemble the lattice unitary from parameters");
  syn->add_option("--params", params_path, "Parameter JSON file, or - for stdin")->required();
  syn->add_option("--spec", spec_text, "Particle content (1, nB, nF, nD, partial:...)");

  std::string gen_spec;
  int gen_d = 0;
  auto *gen = app.add_subcommand("generators", "Export the generator set for a particle content");
  gen->add_option("--spec", gen_spec, "Particle content")->required();
  gen->add_option("--d", gen_d, "Number of ports")->required()->check(CLI::Range(1, 64));

  std::string scenario;
  double theta = kPi / 2;
  auto *sim = app.add_subcommand("simulate", "Evolve a scenario through a lattice");
  sim->add_option("--scenario", scenario, "hom, bell, or a scenario JSON file")->required();
  sim->add_option("--theta", theta, "Splitter angle for hom and bell");

  std::string kind;
  std::optional<int> target_d;
  std::optional<double> target_s, target_theta;
  auto *tgt = app.add_subcommand("target", "Emit a reference target matrix");
  tgt->add_option("--kind", kind)->required()->check(CLI::IsMember({"dft", "wigner"}));
  tgt->add_option("--d", target_d, "Dimension")->check(CLI::Range(1, 4096));
  tgt->add_option("--s", target_s, "Spin for wigner, a multiple of 1/2");
  tgt->add_option("--theta", target_theta, "Rotation angle for wigner");

  std::string check = "all";
  std::optional<std::string> verify_spec;
  std::optional<int> verify_d;
  auto *ver = app.add_subcommand("verify", "Run the algebra self-test");
  ver->add_option("--check", check)->check(CLI::IsMember({"all", "fixtures", "su3", "eta", "z"}));
  ver->add_option("--spec", verify_spec, "Fermionic content for --check eta");
  ver->add_option("--d", verify_d, "Ports for --check eta")->check(CLI::Range(1, 16));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return exit_code::kOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::kOk;
  } catch (const CLI::CallForVersion &) {
    out << MPILAT_VERSION << "\n";
    return exit_code::kOk;
  } catch (const CLI::ParseError &e) {
    err << "mpilat: " << e.what() << "\n";
    return exit_code::kMalformed;
  }

  Context ctx{g, out, err, in, {}};
  try {
    if (dec->parsed()) {
      ctx.manifest.command = "decompose";
      return cmd_decompose(ctx, targets);
    }
    if (syn->parsed()) {
      ctx.manifest.command = "synthesize";
      return cmd_synthesize(ctx, params_path, spec_text);
    }
    if (gen->parsed()) {
      ctx.manifest.command = "generators";
      return cmd_generators(ctx, gen_spec, gen_d);
    }
    if (sim->parsed()) {
      ctx.manifest.command = "simulate";
      return cmd_simulate(ctx, scenario, theta);
    }
    if (tgt->parsed()) {
      ctx.manifest.command = "target";
      return cmd_target(ctx, kind, target_d, target_s, target_theta);
    }
    ctx.manifest.command = "verify";
    return cmd_verify(ctx, check, verify_spec, verify_d);
  } catch (const ParseError &e) {
    err << "mpilat: " << e.what() << "\n";
    return exit_code::kMalformed;
  } catch (const NotUnitaryError &e) {
    err << "mpilat: " << e.what() << "\n";
    return exit_code::kNotUnitary;
  } catch (const CapacityError &e) {
    err << "mpilat: " << e.what() << "\n";
    return exit_code::kCapacity;
  } catch (const PreconditionError &e) {
    err << "mpilat: " << e.what() << "\n";
    return exit_code::kMalformed;
  } catch (const std::exception &e) {
    err << "mpilat: " << e.what() << "\n";
    return exit_code::kCheckFailed;
  }
}

}  // namespace mpilat::cli
