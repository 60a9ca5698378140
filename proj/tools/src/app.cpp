// Copyright 2026 The bohreq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bohr_cli/app.hpp"

#include <unistd.h>

#include <charconv>
#include <cmath>
#include <deque>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bohr/basis.hpp"
#include "bohr/equivalence.hpp"
#include "bohr/error.hpp"
#include "bohr/eval.hpp"
#include "bohr/scenarios.hpp"
#include "bohr/zeros.hpp"
#include "bohr_cli/series_io.hpp"
#include "bohr_cli/verdict.hpp"

namespace bohr::cli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Options {
  std::string series;
  std::string series2;
  std::string out;
  std::string format = "json";
  std::string route = "direct";
  std::string grid = "20x40";
  double tol = kDefaultPhaseTolerance;
  std::uint64_t seed = 1;
  double sigma = 1.0;
  double sigmaMin = 1.0;
  double sigmaMax = 1.5;
  double sigmaFloor = -10.0;
  double t = 0.0;
  double tMin = -1.0;
  double tMax = 1.0;
  double valueRe = 0.0;
  double valueIm = 0.0;
  double shift = 0.0;
  std::size_t shiftM = 0;
  std::size_t n = 0;
  std::size_t count = 10000;
  std::size_t steps = 256;
  long long searchBound = kDefaultSearchBound;
  bool negate = false;
  bool negate2 = false;
  std::vector<double> y;
  std::vector<double> theta;
  std::vector<double> beta;
};

struct Grid {
  std::size_t sigmaSteps;
  std::size_t tSteps;
};

std::optional<Grid> parseGrid(const std::string& s) {
  const auto x = s.find('x');
  if (x == std::string::npos) return std::nullopt;
  Grid g{};
  const char* end = s.data() + s.size();
  auto [p1, e1] = std::from_chars(s.data(), s.data() + x, g.sigmaSteps);
  auto [p2, e2] = std::from_chars(s.data() + x + 1, end, g.tSteps);
  if (e1 != std::errc{} || e2 != std::errc{} || p1 != s.data() + x || p2 != end) return std::nullopt;
  if (g.sigmaSteps == 0 || g.tSteps == 0) return std::nullopt;
  return g;
}

std::string formatDouble(double x) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, p);
}

Json phaseJson(const PhaseVector& y) {
  Json out = Json::array();
  for (double v : y.values) out.push_back(numberJson(v));
  return out;
}

Json stringsJson(std::span<const ExponentVector> v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(exponentJson(e));
  return out;
}

std::string_view reasonName(InequivalenceReason r) {
  switch (r) {
    case InequivalenceReason::ModulusMismatch: return "ModulusMismatch";
    case InequivalenceReason::SupportMismatch: return "SupportMismatch";
    case InequivalenceReason::PhaseInconsistent: return "PhaseInconsistent";
  }
  return "?";
}

class Runner {
 public:
  Runner(Options& o, std::ostream& out) : o_(o), out_(out) {}

  SeriesSpec load(const std::string& path, const char* label) {
    SeriesSpec spec = parseSeriesFile(path);
    digest_.add(label, emitSeries(spec));
    return spec;
  }

  void param(std::string_view name, const Json& value) { params_[std::string(name)] = value; }

  Verdict verdict(std::string command, std::optional<std::uint64_t> seed = std::nullopt) {
    digest_.add("parameters", params_.dump());
    Verdict v;
    v.command = std::move(command);
    v.inputs = digest_.hex();
    v.seed = seed;
    return v;
  }

  void emit(const std::string& text) {
    if (o_.out.empty()) {
      out_ << text;
    } else {
      writeFileAtomically(o_.out, text);
    }
  }

 private:
  Options& o_;
  std::ostream& out_;
  InputDigest digest_;
  Json params_ = Json::object();
};

SeriesSpec applyShift(SeriesSpec f, const Options& o) {
  if (o.shiftM > 0) f = shiftSeries(f, tau(o.shiftM).value);
  if (o.shift != 0.0) f = shiftSeries(f, o.shift);
  return f;
}

int cmdBasis(Options& o, Runner& r) {
  const auto f = r.load(o.series, "series");
  const auto d = computeBasis(f.exponents());
  Verdict v = r.verdict("basis");
  v.result["basis"] = stringsJson(d.basis.elements);
  Json src = Json::array();
  for (auto i : d.basis.sourceIndices) src.push_back(i + 1);
  v.result["sourceTerms"] = src;
  v.result["R"] = matrixJson(d.R);
  v.result["T"] = matrixJson(d.T);
  v.result["integral"] = isIntegral(d.R);
  Json lcms = Json::array();
  for (std::size_t h = 1; h <= d.R.nrows(); ++h) lcms.push_back(integerJson(denominatorLcm(d.R, h)));
  v.result["denominatorLcm"] = lcms;
  r.emit(v.dump());
  return kExitOk;
}

int cmdTwist(Options& o, Runner& r) {
  auto f = r.load(o.series, "series");
  if (o.shiftM > 0 || o.shift != 0.0) {
    r.emit(emitSeries(applyShift(f, o)));
    return kExitOk;
  }
  const auto d = computeBasis(f.exponents());
  PhaseVector y{o.y};
  if (y.values.empty()) {
    const double period = kTwoPi * denominatorLcm(d.R).convert_to<double>();
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> dist(0.0, period);
    y.values.resize(d.basis.size());
    for (auto& v : y.values) v = dist(rng);
  }
  r.emit(emitSeries(twist(f, d.basis, d.R, y)));
  return kExitOk;
}

int cmdSolvePhases(Options& o, Runner& r) {
  const auto f = r.load(o.series, "series");
  if (o.theta.size() > f.size()) {
    throw Error(ErrorCode::DimensionMismatch, "more phases than terms");
  }
  r.param("theta", o.theta);
  r.param("tol", o.tol);
  const auto d = computeBasis(f.exponents());
  PhaseTargets targets;
  for (std::size_t i = 0; i < o.theta.size(); ++i) targets.entries.push_back({i, normalizeAngle(o.theta[i])});
  const auto sys = solvePhaseSystem(d.R, targets, o.tol);
  Verdict v = r.verdict("solve-phases");
  v.result["feasible"] = sys.feasible();
  v.result["basis"] = stringsJson(d.basis.elements);
  Json kernel = Json::array();
  for (const auto& m : sys.kernel()) kernel.push_back(intVectorJson(m));
  v.result["kernel"] = kernel;
  if (sys.feasible()) {
    v.witnesses["y"] = phaseJson(sys.solution().y);
    v.residuals["maxResidual"] = numberJson(sys.solution().maxResidual);
    v.residuals["bound"] = numberJson(sys.residualBound());
  } else {
    v.witnesses["kernelVector"] = intVectorJson(sys.obstruction().witness);
    v.residuals["defect"] = numberJson(sys.obstruction().defect);
  }
  r.emit(v.dump());
  return sys.feasible() ? kExitOk : kExitNegative;
}

int cmdEquiv(Options& o, Runner& r) {
  const auto a = r.load(o.series, "series");
  const auto b = r.load(o.series2, "series2");
  r.param("tol", o.tol);
  const auto res = isEquivalentTruncated(a, b, o.tol);
  Verdict v = r.verdict("equiv");
  if (const auto* eq = std::get_if<Equivalent>(&res)) {
    v.result["equivalent"] = true;
    v.result["basis"] = stringsJson(eq->basis.elements);
    v.witnesses["y"] = phaseJson(eq->y);
    v.residuals["maxResidual"] = numberJson(eq->maxResidual);
    r.emit(v.dump());
    return kExitOk;
  }
  const auto& ne = std::get<NotEquivalent>(res);
  v.result["equivalent"] = false;
  v.result["reason"] = reasonName(ne.reason);
  if (ne.term) v.result["term"] = *ne.term;
  if (ne.reason == InequivalenceReason::PhaseInconsistent) {
    v.witnesses["kernelVector"] = intVectorJson(ne.witness);
    v.residuals["defect"] = numberJson(ne.defect);
  }
  r.emit(v.dump());
  return kExitNegative;
}

int cmdClosureDemo(Options& o, Runner& r) {
  const auto a = r.load(o.series, "series");
  const auto b = r.load(o.series2, "series2");
  const std::size_t nmax = o.n > 0 ? o.n : std::min(a.size(), b.size());
  r.param("n", nmax);
  r.param("searchBound", o.searchBound);
  r.param("tol", o.tol);
  const auto steps = closureDemo(a, b, nmax, o.searchBound, o.tol);
  Verdict v = r.verdict("closure-demo");
  Json rows = Json::array();
  bool all = true;
  for (const auto& s : steps) {
    Json row;
    row["n"] = s.n;
    row["feasible"] = s.feasible;
    row["basisSize"] = s.basisSize;
    if (s.minNorm) {
      row["minNorm"] = numberJson(*s.minNorm);
      row["minNormOverPi"] = numberJson(*s.minNorm / std::numbers::pi);
    }
    if (s.reason) row["reason"] = reasonName(*s.reason);
    all = all && s.feasible;
    rows.push_back(std::move(row));
  }
  v.result["steps"] = rows;
  v.result["allFeasible"] = all;
  r.emit(v.dump());
  return all ? kExitOk : kExitNegative;
}

int cmdEval(Options& o, Runner& r) {
  const auto f = r.load(o.series, "series");
  r.param("sigma", o.sigma);
  r.param("t", o.t);
  const CompiledSeries c(f);
  Verdict v = r.verdict("eval");
  v.result["value"] = complexJson(c(o.sigma, o.t));
  v.result["modulusBound"] = numberJson(c.modulusBound(o.sigma));
  if (f.tail && o.sigma > 0.0) v.residuals["tailBound"] = numberJson(tailBound(*f.tail, f.symbols, o.sigma));
  r.emit(v.dump());
  return kExitOk;
}

int cmdTail(Options& o, Runner& r) {
  const auto f = r.load(o.series, "series");
  if (!f.tail) throw Error(ErrorCode::EmptyInput, "series has no tail majorant");
  r.param("sigma", o.sigma);
  Verdict v = r.verdict("tail");
  v.result["tailBound"] = numberJson(tailBound(*f.tail, f.symbols, o.sigma));
  r.emit(v.dump());
  return kExitOk;
}

int cmdUniformDistance(Options& o, Runner& r) {
  auto a = applyShift(r.load(o.series, "series"), o);
  auto b = r.load(o.series2, "series2");
  if (o.negate2) b = negate(b);
  const Grid g = *parseGrid(o.grid);
  const GridBox box{o.sigmaMin, o.sigmaMax, o.tMin, o.tMax, g.sigmaSteps, g.tSteps};
  r.param("box", {o.sigmaMin, o.sigmaMax, o.tMin, o.tMax, g.sigmaSteps, g.tSteps});
  r.param("shift", o.shift);
  r.param("shiftM", o.shiftM);
  r.param("negate2", o.negate2);
  Verdict v = r.verdict("uniform-distance");
  v.result["distance"] = numberJson(uniformDistance(a, b, box));
  r.emit(v.dump());
  return kExitOk;
}

int emitCloud(Options& o, Runner& r, const ValueCloud& cloud, const char* command) {
  if (o.format == "csv") {
    r.emit(cloudCsv(cloud.points));
    return kExitOk;
  }
  Verdict v = r.verdict(command, cloud.meta.seed);
  v.result["route"] = routeName(cloud.route);
  v.result["sigma1"] = numberJson(cloud.meta.sigma1);
  v.result["sigma2"] = numberJson(cloud.meta.sigma2);
  v.result["tMax"] = numberJson(cloud.meta.tMax);
  v.result["count"] = cloud.meta.count;
  Json pts = Json::array();
  for (const auto& z : cloud.points) pts.push_back({numberJson(z.real()), numberJson(z.imag())});
  v.result["points"] = std::move(pts);
  r.emit(v.dump());
  return kExitOk;
}

int cmdValueSet(Options& o, Runner& r) {
  const auto f = r.load(o.series, "series");
  r.param("sigma", {o.sigmaMin, o.sigmaMax});
  r.param("tMax", o.tMax);
  r.param("count", o.count);
  r.param("route", o.route);
  r.param("seed", o.seed);
  const auto cloud = o.route == "direct"
                         ? sampleStripDirect(f, o.sigmaMin, o.sigmaMax, o.tMax, o.count, o.seed)
                         : sampleStripViaEquivalence(f, o.sigmaMin, o.sigmaMax, o.count, o.seed);
  return emitCloud(o, r, cloud, "value-set");
}

int cmdLineSet(Options& o, Runner& r) {
  const auto f = r.load(o.series, "series");
  r.param("sigma", o.sigma);
  r.param("tMax", o.tMax);
  r.param("count", o.count);
  r.param("route", o.route);
  r.param("seed", o.seed);
  const auto cloud = o.route == "direct" ? sampleLine(f, o.sigma, o.tMax, o.count, o.seed)
                                         : sampleLineViaEquivalence(f, o.sigma, o.count, o.seed);
  return emitCloud(o, r, cloud, "line-set");
}

int cmdSigmaStar(Options& o, Runner& r) {
  const auto f = r.load(o.series, "series");
  r.param("value", {o.valueRe, o.valueIm});
  r.param("window", {o.tMin, o.tMax});
  r.param("sigmaFloor", o.sigmaFloor);
  r.param("tol", o.tol);
  const double s = sigmaStar(f, {o.valueRe, o.valueIm}, {o.tMin, o.tMax}, o.sigmaFloor, o.tol);
  Verdict v = r.verdict("sigma-star");
  v.result["sigmaStar"] = numberJson(s);
  v.residuals["tol"] = numberJson(o.tol);
  r.emit(v.dump());
  return kExitOk;
}

int cmdZeros(Options& o, Runner& r) {
  const auto f = r.load(o.series, "series");
  r.param("value", {o.valueRe, o.valueIm});
  r.param("rect", {o.sigmaMin, o.sigmaMax, o.tMin, o.tMax});
  r.param("steps", o.steps);
  r.param("tol", o.tol);
  ContourOptions opts;
  opts.stepsPerSide = o.steps;
  if (o.tol > 0.0) opts.boundaryMargin = o.tol;
  const auto w = windingNumber(f, {o.valueRe, o.valueIm}, {o.sigmaMin, o.sigmaMax, o.tMin, o.tMax}, opts);
  Verdict v = r.verdict("zeros");
  v.result["count"] = w.count;
  v.result["samples"] = w.samples;
  v.residuals["turns"] = numberJson(w.turns);
  v.residuals["defect"] = numberJson(w.defect);
  r.emit(v.dump());
  return kExitOk;
}

int cmdKronecker(Options& o, Runner& r) {
  std::vector<double> beta = o.beta;
  if (!o.series.empty()) {
    const auto f = r.load(o.series, "series");
    beta = computeBasis(f.exponents()).basis.values(f.symbols);
  }
  r.param("beta", beta);
  r.param("y", o.y);
  r.param("tol", o.tol);
  r.param("tMax", o.tMax);
  const auto hit = kroneckerFindT(beta, PhaseVector{o.y}, o.tol, o.tMax);
  Verdict v = r.verdict("kronecker");
  v.result["found"] = hit.found;
  if (hit.found) v.witnesses["t"] = numberJson(hit.t);
  v.residuals["residual"] = numberJson(hit.residual);
  r.emit(v.dump());
  return hit.found ? kExitOk : kExitNegative;
}

int cmdBohrExample(Options& o, Runner& r) {
  auto f = applyShift(bohrExample(o.n), o);
  if (o.negate) f = negate(f);
  r.emit(emitSeries(f));
  return kExitOk;
}

}  // namespace

void writeFileAtomically(const std::filesystem::path& path, std::string_view data) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f.write(data.data(), static_cast<std::streamsize>(data.size()));
    f.flush();
    if (!f) {
      std::filesystem::remove(tmp);
      throw std::runtime_error("cannot write " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename to " + path.string() + ": " + ec.message());
  }
}

std::string cloudCsv(std::span<const Complex> points) {
  std::string out = "re,im\n";
  out.reserve(out.size() + points.size() * 44);
  for (const auto& z : points) {
    out += formatDouble(z.real());
    out += ',';
    out += formatDouble(z.imag());
    out += '\n';
  }
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::deque<Options> store;
  Options* chosen = nullptr;
  CLI::App app{"Bohr equivalence toolkit for general Dirichlet series", "bohr"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  int (*action)(Options&, Runner&) = nullptr;
  const auto gridCheck = CLI::Validator(
      [](std::string& s) { return parseGrid(s) ? std::string() : "expected NxM with N, M > 0"; }, "NxM");

  auto add = [&](const char* name, const char* desc, int (*fn)(Options&, Runner&), const char* tolDesc,
                 double tolDefault) {
    Options& o = store.emplace_back();
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--out", o.out, "Write to this file (atomically) instead of stdout");
    sub->add_option("--tol", o.tol, tolDesc)->default_val(tolDefault);
    sub->callback([&action, &chosen, &o, fn] {
      action = fn;
      chosen = &o;
    });
    return std::pair<CLI::App*, Options&>(sub, o);
  };
  auto series = [](CLI::App* sub, Options& o, bool second) {
    sub->add_option("--series", o.series, "Series file (JSON)")->required();
    if (second) sub->add_option("--series2", o.series2, "Second series file (JSON)")->required();
  };
  auto shifts = [](CLI::App* sub, Options& o) {
    auto* s = sub->add_option("--shift", o.shift, "Vertical shift τ: s ↦ s + iτ")->default_val(0.0);
    auto* m = sub->add_option("--shift-m", o.shiftM, "Vertical shift by τ_m = 2π·1·3·…·(2m−1)")
                  ->default_val(0)
                  ->check(CLI::Range(0, 20));
    s->excludes(m);
  };
  auto seed = [](CLI::App* sub, Options& o) { sub->add_option("--seed", o.seed, "RNG seed")->default_val(1); };
  auto cloud = [seed](CLI::App* sub, Options& o) {
    seed(sub, o);
    sub->add_option("--count", o.count, "Number of points")->default_val(10000);
    sub->add_option("--route", o.route, "direct: sample f; equivalence: sample twists g(σ)")
        ->default_val("direct")
        ->check(CLI::IsMember({"direct", "equivalence"}));
    sub->add_option("--format", o.format, "json or csv")->default_val("json")->check(
        CLI::IsMember({"json", "csv"}));
  };
  constexpr const char* kNoTol = "Accepted for uniformity; no effect";

  {
    auto [sub, o] = add("basis", "Rational basis and Bohr matrices R, T", cmdBasis, kNoTol, 0.0);
    series(sub, o, false);
  }
  {
    auto [sub, o] = add("twist", "Equivalent series b(n) = a(n)exp(i(RY)_n), or a vertical shift", cmdTwist,
                    kNoTol, 0.0);
    series(sub, o, false);
    auto* y = sub->add_option("--y", o.y, "Phase vector over the basis (random if omitted)")->delimiter(',');
    seed(sub, o);
    shifts(sub, o);
    y->excludes("--shift")->excludes("--shift-m");
  }
  {
    auto [sub, o] = add("solve-phases", "Solve R·Y ≡ θ (mod 2π) for the first terms", cmdSolvePhases,
                    "Phase residual tolerance", kDefaultPhaseTolerance);
    series(sub, o, false);
    sub->add_option("--theta", o.theta, "Target phases θ_1, θ_2, …")->delimiter(',')->required();
  }
  {
    auto [sub, o] = add("equiv", "Decide equivalence of two truncated series", cmdEquiv,
                    "Phase residual and modulus tolerance", kDefaultPhaseTolerance);
    series(sub, o, true);
  }
  {
    auto [sub, o] = add("closure-demo", "Per-truncation feasibility and minimal |Y|", cmdClosureDemo,
                    "Phase residual and modulus tolerance", kDefaultPhaseTolerance);
    series(sub, o, true);
    sub->add_option("--n", o.n, "Largest truncation (default: shorter series length)")->default_val(0);
    sub->add_option("--search-bound", o.searchBound, "Lattice enumeration budget")
        ->default_val(kDefaultSearchBound);
  }
  {
    auto [sub, o] = add("eval", "Evaluate f(σ + it)", cmdEval, kNoTol, 0.0);
    series(sub, o, false);
    sub->add_option("--sigma", o.sigma, "σ")->default_val(1.0);
    sub->add_option("--t", o.t, "t")->default_val(0.0);
  }
  {
    auto [sub, o] = add("tail", "Tail majorant bound at σ", cmdTail, kNoTol, 0.0);
    series(sub, o, false);
    sub->add_option("--sigma", o.sigma, "σ > 0")->default_val(1.0);
  }
  {
    auto [sub, o] = add("uniform-distance", "max |f − g| over a grid box", cmdUniformDistance, kNoTol, 0.0);
    series(sub, o, true);
    shifts(sub, o);
    sub->add_flag("--negate2", o.negate2, "Use −g");
    sub->add_option("--sigma-min", o.sigmaMin, "Box σ lower edge")->default_val(1.0);
    sub->add_option("--sigma-max", o.sigmaMax, "Box σ upper edge")->default_val(1.5);
    sub->add_option("--t-min", o.tMin, "Box t lower edge")->default_val(-1.0);
    sub->add_option("--t-max", o.tMax, "Box t upper edge")->default_val(1.0);
    sub->add_option("--grid", o.grid, "σ-steps x t-steps")->default_val("20x40")->check(gridCheck);
  }
  {
    auto [sub, o] = add("value-set", "Sample values on the strip σ1 < σ < σ2", cmdValueSet, kNoTol, 0.0);
    series(sub, o, false);
    cloud(sub, o);
    sub->add_option("--sigma-min", o.sigmaMin, "σ1")->default_val(0.5);
    sub->add_option("--sigma-max", o.sigmaMax, "σ2")->default_val(1.0);
    sub->add_option("--t-max", o.tMax, "t range [−tMax, tMax] (direct route)")->default_val(200.0);
  }
  {
    auto [sub, o] = add("line-set", "Sample values on the line Re s = σ", cmdLineSet, kNoTol, 0.0);
    series(sub, o, false);
    cloud(sub, o);
    sub->add_option("--sigma", o.sigma, "σ0")->default_val(1.0);
    sub->add_option("--t-max", o.tMax, "t range [−tMax, tMax] (direct route)")->default_val(1e4);
  }
  {
    auto [sub, o] = add("sigma-star", "Abscissa of the zero-free half-plane of f − v", cmdSigmaStar,
                    "Bisection tolerance on σ", 1e-3);
    series(sub, o, false);
    sub->add_option("--value", o.valueRe, "Re v")->default_val(0.0);
    sub->add_option("--value-im", o.valueIm, "Im v")->default_val(0.0);
    sub->add_option("--t-min", o.tMin, "t-window lower edge")->default_val(0.0);
    sub->add_option("--t-max", o.tMax, "t-window upper edge")->default_val(20.0);
    sub->add_option("--sigma-floor", o.sigmaFloor, "Lowest σ searched")->default_val(-10.0);
  }
  {
    auto [sub, o] = add("zeros", "Count zeros of f − v in a rectangle", cmdZeros,
                    "Minimum |f − v| on the contour (0: 1e-8·(1 + |v|))", 0.0);
    series(sub, o, false);
    sub->add_option("--value", o.valueRe, "Re v")->default_val(0.0);
    sub->add_option("--value-im", o.valueIm, "Im v")->default_val(0.0);
    sub->add_option("--sigma-min", o.sigmaMin, "Rectangle σ lower edge")->default_val(-1.0);
    sub->add_option("--sigma-max", o.sigmaMax, "Rectangle σ upper edge")->default_val(1.0);
    sub->add_option("--t-min", o.tMin, "Rectangle t lower edge")->default_val(0.0);
    sub->add_option("--t-max", o.tMax, "Rectangle t upper edge")->default_val(10.0);
    sub->add_option("--steps", o.steps, "Initial samples per side")->default_val(256);
  }
  {
    auto [sub, o] = add("kronecker", "Find t with −tβ_j ≡ y_j (mod 2π)", cmdKronecker,
                    "Allowed phase error per coordinate", 1e-2);
    sub->add_option("--series", o.series, "Take β from the basis of this series");
    sub->add_option("--beta", o.beta, "Frequencies β_j")->delimiter(',')->excludes("--series");
    sub->add_option("--y", o.y, "Target phases y_j")->delimiter(',')->required();
    sub->add_option("--t-max", o.tMax, "Search t in [0, tMax]")->default_val(1e4);
  }
  {
    auto [sub, o] = add("bohr-example", "The series Σ exp(−λ(n)s), λ(n) = 2n − 1 + 1/(2(2n − 1))",
                    cmdBohrExample, kNoTol, 0.0);
    sub->add_option("--n", o.n, "Number of terms")->required()->check(CLI::PositiveNumber);
    sub->add_flag("--negate", o.negate, "Emit −f");
    shifts(sub, o);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "bohr: " << e.what() << "\n\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.back()->help());
    return kExitUsage;
  }

  Options& o = *chosen;
  if (app.got_subcommand("kronecker") && o.series.empty() && o.beta.empty()) {
    err << "bohr: kronecker needs --series or --beta\n";
    return kExitUsage;
  }

  try {
    Runner runner(o, out);
    return action(o, runner);
  } catch (const ParseError& e) {
    err << "bohr: parse error: " << e.what() << "\n";
  } catch (const ValidationError& e) {
    err << "bohr: invalid series: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "bohr: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "bohr: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace bohr::cli
