#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "numrad/bounds.hpp"
#include "numrad/cli.hpp"
#include "numrad/ortho.hpp"
#include "numrad/range.hpp"

namespace numrad::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json complexJson(cplx z) { return json::array({z.real(), z.imag()}); }

json vectorJson(const std::vector<cplx>& v) {
  json a = json::array();
  for (cplx z : v) a.push_back(complexJson(z));
  return a;
}

std::string vectorText(const std::vector<cplx>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + formatComplex(v[i]);
  return s + "]";
}

void requireSquare(const CMatrix& m) {
  if (!m.isSquare()) throw UsageError(fmt::format("expected a square matrix, got {}x{}", m.rows(), m.cols()));
}

struct Options {
  std::string file;
  std::string fileA;
  double tol = -1.0;
  std::size_t grid = 1024;
  std::size_t samples = 360;
  std::string partition;
  bool json = false;
  std::string csv;
  std::string method = "characterization";
  std::string relation = "w";
  std::string scenario;
  int maxSweeps = 0;
};

void radiusCmd(const Options& o, std::ostream& out) {
  const MatrixDocument doc = loadDocument(o.file);
  requireSquare(doc.matrix);
  if (doc.matrix.isReal()) {
    const RealRadius rr = realRadius(doc.matrix);
    const bool plus = rr.eplus.cols() > 0;
    const CMatrix& e = plus ? rr.eplus : rr.eminus;
    std::vector<cplx> x(doc.matrix.rows());
    if (e.cols() > 0) {
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = e(i, 0);
    } else {
      x[0] = 1.0;
    }
    const double theta = plus ? 0.0 : 0.5 * kTwoPi;
    if (o.json) {
      out << json{{"field", "real"}, {"value", rr.w}, {"theta_star", theta}, {"witness", vectorJson(x)},
                  {"eplus_dim", rr.eplus.cols()}, {"eminus_dim", rr.eminus.cols()}}
                 .dump(2)
          << '\n';
      return;
    }
    out << "field       real\n"
        << "value       " << formatNumber(rr.w) << '\n'
        << "theta_star  " << formatNumber(theta) << '\n'
        << "witness     " << vectorText(x) << '\n';
    return;
  }
  SweepOptions sweep;
  sweep.grid = o.grid;
  const RadiusCertificate c = radius(doc.matrix, o.tol, sweep);
  if (o.json) {
    out << json{{"field", "complex"}, {"value", c.value}, {"theta_star", c.thetaStar}, {"witness", vectorJson(c.witness)},
                {"residual", c.residual}, {"lipschitz", c.lipschitz}}
               .dump(2)
        << '\n';
    return;
  }
  out << "value       " << formatNumber(c.value) << '\n'
      << "theta_star  " << formatNumber(c.thetaStar) << '\n'
      << "witness     " << vectorText(c.witness) << '\n'
      << "residual    " << formatNumber(c.residual) << '\n'
      << "lipschitz   " << formatNumber(c.lipschitz) << '\n';
}

void scalarCmd(const Options& o, std::ostream& out, bool crawfordNumber) {
  const MatrixDocument doc = loadDocument(o.file);
  requireSquare(doc.matrix);
  const double v = crawfordNumber ? crawford(doc.matrix, o.tol) : minModulus(doc.matrix);
  if (o.json) {
    out << json{{crawfordNumber ? "crawford" : "minmod", v}}.dump() << '\n';
  } else {
    out << formatNumber(v) << '\n';
  }
}

void boundaryCmd(const Options& o, std::ostream& out) {
  if (o.samples < 3) throw UsageError("--samples must be at least 3");
  const MatrixDocument doc = loadDocument(o.file);
  requireSquare(doc.matrix);
  const auto points = rangeBoundary(doc.matrix, o.samples);
  std::string csv = "theta,re,im\n";
  for (const BoundaryPoint& p : points) {
    csv += fmt::format("{},{},{}\n", formatNumber(p.theta), formatNumber(p.point.real()), formatNumber(p.point.imag()));
  }
  if (o.csv.empty() || o.csv == "-") {
    out << csv;
    return;
  }
  std::ofstream file(o.csv, std::ios::binary | std::ios::trunc);
  if (!file || !(file << csv) || !file.flush()) {
    throw Error(ErrorCode::ParseError, "cannot write " + o.csv);
  }
  out << fmt::format("wrote {} points to {}\n", points.size(), o.csv);
}

void printVerdict(const std::string& label, const OrthoVerdict& v, std::ostream& out) {
  out << label << ": " << (v.orthogonal ? "orthogonal" : "not orthogonal");
  if (v.marginal) out << " (marginal)";
  out << '\n' << "  margin " << formatNumber(v.margin) << '\n';
  if (v.counterexample) {
    const OrthoCounterexample& c = *v.counterexample;
    if (c.lambda) out << "  counterexample lambda " << formatComplex(*c.lambda);
    if (c.theta) out << "  counterexample theta " << formatNumber(*c.theta);
    out << " margin " << formatNumber(c.margin) << '\n';
  }
  const std::size_t shown = std::min<std::size_t>(v.witnesses.size(), 4);
  if (!v.witnesses.empty()) out << "  witnesses " << v.witnesses.size() << " (first " << shown << ")\n";
  for (std::size_t k = 0; k < shown; ++k) {
    const OrthoWitness& w = v.witnesses[k];
    out << "    theta " << formatNumber(w.theta) << " phi " << formatNumber(w.phi) << " <Tx,x> "
        << formatComplex(w.tx) << " <Ax,x> " << formatComplex(w.ax) << '\n';
  }
  if (!v.note.empty()) out << "  note " << v.note << '\n';
}

void orthoCmd(const Options& o, std::ostream& out) {
  const MatrixDocument dt = loadDocument(o.file);
  const MatrixDocument da = loadDocument(o.fileA);
  const CMatrix& t = dt.matrix;
  const CMatrix& a = da.matrix;
  requireSquare(t);
  requireSquare(a);
  if (t.rows() != a.rows()) throw UsageError("T and A have different dimensions");
  if (t.field() != a.field()) throw UsageError("T and A have different field tags");
  const bool real = t.isReal();
  out << "field " << (real ? "real" : "complex") << '\n';

  if (o.relation == "b") {
    printVerdict("birkhoff-james (definitional)", orthoB(t, a, o.tol), out);
    return;
  }
  const bool both = o.method == "both";
  std::optional<OrthoVerdict> ch;
  std::optional<OrthoVerdict> de;
  if (both || o.method == "characterization") {
    ch = real ? orthoWReal(t, a, o.tol) : orthoW(t, a, o.tol);
    printVerdict("numerical radius (characterization)", *ch, out);
  }
  if (both || o.method == "definitional") {
    de = orthoWDefinitional(t, a, o.tol);
    printVerdict("numerical radius (definitional)", *de, out);
  }
  if (ch && de) out << "consistent " << (ch->orthogonal == de->orthogonal ? "yes" : "no") << '\n';
}

std::optional<BlockPartition> parsePartition(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::vector<std::size_t> sizes;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::size_t v = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || v == 0) throw UsageError("--partition expects positive integers a,b,c");
    sizes.push_back(v);
    pos = comma + 1;
  }
  return BlockPartition(sizes);
}

void boundsCmd(const Options& o, std::ostream& out) {
  const MatrixDocument doc = loadDocument(o.file);
  requireSquare(doc.matrix);
  std::optional<BlockPartition> p = parsePartition(o.partition);
  if (!p) p = doc.partition;
  const BoundsReport rep = report(doc.matrix, p);

  if (!o.csv.empty()) {
    std::string csv = "name,value,kind,valid\n";
    for (const BoundEntry& e : rep.entries) {
      csv += fmt::format("{},{},{},{}\n", e.name, formatNumber(e.value), e.kind == BoundKind::lower ? "lower" : "upper",
                         e.valid ? "true" : "false");
    }
    if (o.csv == "-") {
      out << csv;
      return;
    }
    std::ofstream file(o.csv, std::ios::binary | std::ios::trunc);
    if (!file || !(file << csv) || !file.flush()) throw Error(ErrorCode::ParseError, "cannot write " + o.csv);
    out << fmt::format("wrote {} bounds to {}\n", rep.entries.size(), o.csv);
    return;
  }
  if (o.json) {
    json j;
    j["reference_w"] = rep.referenceW;
    j["tolerance"] = rep.tolerance;
    j["best_lower"] = rep.bestLower;
    j["partition"] = rep.partition ? json(rep.partition->sizes()) : json(nullptr);
    j["entries"] = json::array();
    for (const BoundEntry& e : rep.entries) {
      j["entries"].push_back({{"name", e.name},
                              {"value", e.value},
                              {"kind", e.kind == BoundKind::lower ? "lower" : "upper"},
                              {"valid", e.valid},
                              {"source", e.source}});
    }
    out << j.dump(2) << '\n';
    return;
  }
  out << "reference_w " << formatNumber(rep.referenceW) << '\n';
  out << fmt::format("{:<16}{:<20}{:<7}{}\n", "name", "value", "kind", "valid");
  for (const BoundEntry& e : rep.entries) {
    out << fmt::format("{:<16}{:<20}{:<7}{}{}\n", e.name, formatNumber(e.value),
                       e.kind == BoundKind::lower ? "lower" : "upper", e.valid ? "yes" : "NO",
                       e.name == rep.bestLower ? "  <- best lower" : "");
  }
}

int reproCmd(const Options& o, std::ostream& out) {
  const auto& ids = scenarioIds();
  if (std::find(ids.begin(), ids.end(), o.scenario) == ids.end()) {
    throw UsageError(fmt::format("unknown scenario '{}'; known: {}", o.scenario, fmt::join(ids, ", ")));
  }
  const ScenarioResult r = runScenario(o.scenario);
  if (o.json) {
    json j{{"scenario_id", r.id}, {"checks", json::array()}};
    for (const ScenarioCheck& c : r.checks) {
      j["checks"].push_back({{"description", c.description},
                             {"expected", c.expected},
                             {"computed", c.computed},
                             {"status", toString(c.status)}});
    }
    out << j.dump(2) << '\n';
  } else {
    out << "scenario " << r.id << '\n';
    for (const ScenarioCheck& c : r.checks) {
      out << fmt::format("{:<12}{}\n            expected {}\n            computed {}\n", toString(c.status),
                         c.description, c.expected, c.computed);
    }
  }
  return r.failed() ? kUsage : kOk;
}

void showCmd(const Options& o, std::ostream& out) {
  const MatrixDocument doc = loadDocument(o.file);
  if (o.json) {
    out << writeDocument(doc);
    return;
  }
  const CMatrix& m = doc.matrix;
  out << fmt::format("{}x{} {}\n", m.rows(), m.cols(), m.isReal() ? "real" : "complex");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? "  " : "") << formatComplex(m(i, j));
    out << '\n';
  }
  if (doc.partition) out << fmt::format("partition {}\n", fmt::join(doc.partition->sizes(), ","));
}

class SweepBudgetGuard {
 public:
  explicit SweepBudgetGuard(int sweeps) : saved_(sweepBudget()) {
    if (sweeps > 0) setSweepBudget(sweeps);
  }
  ~SweepBudgetGuard() { setSweepBudget(saved_); }
  SweepBudgetGuard(const SweepBudgetGuard&) = delete;
  SweepBudgetGuard& operator=(const SweepBudgetGuard&) = delete;

 private:
  int saved_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Numerical radius, orthogonality and block bounds for small dense matrices", "numrad"};
  app.require_subcommand(1);
  app.add_option("--max-sweeps", o.maxSweeps, "Jacobi sweep limit (diagnostics)")->check(CLI::PositiveNumber);

  auto* radiusApp = app.add_subcommand("radius", "numerical radius with maximizing angle and witness");
  radiusApp->add_option("file", o.file, "matrix document")->required();
  radiusApp->add_option("--tol", o.tol, "radius tolerance");
  radiusApp->add_option("--grid", o.grid, "angle grid size")->check(CLI::Range(3, 1 << 20));
  radiusApp->add_flag("--json", o.json, "JSON output");

  auto* crawfordApp = app.add_subcommand("crawford", "distance from the origin to the numerical range");
  crawfordApp->add_option("file", o.file)->required();
  crawfordApp->add_option("--tol", o.tol);
  crawfordApp->add_flag("--json", o.json);

  auto* minmodApp = app.add_subcommand("minmod", "minimum modulus (smallest singular value)");
  minmodApp->add_option("file", o.file)->required();
  minmodApp->add_flag("--json", o.json);

  auto* boundaryApp = app.add_subcommand("boundary", "sampled boundary of the numerical range as CSV");
  boundaryApp->add_option("file", o.file)->required();
  boundaryApp->add_option("--samples", o.samples, "number of angles");
  boundaryApp->add_option("--csv", o.csv, "output path (default stdout)");

  auto* orthoApp = app.add_subcommand("ortho", "orthogonality of T and A");
  orthoApp->add_option("fileT", o.file)->required();
  orthoApp->add_option("fileA", o.fileA)->required();
  orthoApp->add_option("--relation", o.relation)->check(CLI::IsMember({"w", "b"}));
  orthoApp->add_option("--method", o.method)->check(CLI::IsMember({"characterization", "definitional", "both"}));
  orthoApp->add_option("--tol", o.tol);

  auto* boundsApp = app.add_subcommand("bounds", "lower and upper bounds report");
  boundsApp->add_option("file", o.file)->required();
  boundsApp->add_option("--partition", o.partition, "block sizes a,b,c");
  boundsApp->add_flag("--json", o.json);
  boundsApp->add_option("--csv", o.csv, "output path, '-' for stdout");

  auto* reproApp = app.add_subcommand("repro", "embedded reproduction scenarios");
  reproApp->add_option("scenario", o.scenario)->required();
  reproApp->add_flag("--json", o.json);

  auto* showApp = app.add_subcommand("show", "print a matrix document (--json rewrites it)");
  showApp->add_option("file", o.file)->required();
  showApp->add_flag("--json", o.json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "numrad: " << e.what() << '\n';
    return kUsage;
  }

  std::ostringstream buf;
  int code = kOk;
  try {
    const SweepBudgetGuard guard(o.maxSweeps);
    if (*radiusApp) radiusCmd(o, buf);
    else if (*crawfordApp) scalarCmd(o, buf, true);
    else if (*minmodApp) scalarCmd(o, buf, false);
    else if (*boundaryApp) boundaryCmd(o, buf);
    else if (*orthoApp) orthoCmd(o, buf);
    else if (*boundsApp) boundsCmd(o, buf);
    else if (*reproApp) code = reproCmd(o, buf);
    else if (*showApp) showCmd(o, buf);
  } catch (const UsageError& e) {
    err << "numrad: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "numrad: " << toString(e.code()) << ": " << e.what() << '\n';
    return exitCodeFor(e.code());
  }
  out << buf.str();
  return code;
}

}  // namespace numrad::cli
