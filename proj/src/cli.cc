// Copyright 2026 The mincontrol Authors.
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

#include "mincontrol/cli.h"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mincontrol/errors.h"
#include "mincontrol/mcp.h"
#include "mincontrol/oracle.h"
#include "mincontrol/problem_io.h"
#include "mincontrol/report.h"
#include "mincontrol/structural.h"
#include "mincontrol/verify.h"

namespace mincontrol::cli {

using nlohmann::json;

ComplexMatrix PerturbNonzeros(const ComplexMatrix& a, double magnitude,
                              std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::uniform_real_distribution<double> noise(-magnitude, magnitude);
  ComplexMatrix out = a;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const Complex z = a(i, j);
      if (z == Complex(0.0)) continue;
      double re = z.real();
      double im = z.imag();
      if (re != 0.0) re += noise(engine);
      if (im != 0.0) im += noise(engine);
      out(i, j) = Complex(re, im);
    }
  }
  return out;
}

Tolerances TolerancesFromEnvironment() {
  Tolerances tol;
  auto read = [](const char* name, double& slot) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return;
    char* end = nullptr;
    const double x = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !(x >= 0.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(name) + "='" + raw + "' is not a nonnegative number");
    }
    slot = x;
  };
  read("MINCONTROL_TOL_RESIDUAL", tol.residual);
  read("MINCONTROL_TOL_GAP", tol.gap);
  read("MINCONTROL_TOL_RANK", tol.rank);
  read("MINCONTROL_TOL_ZERO", tol.zero);
  read("MINCONTROL_TOL_ORTHOGONALITY", tol.orthogonality);
  return tol;
}

namespace {

using Clock = std::chrono::steady_clock;

struct CommonOptions {
  std::string file;
  bool json = false;
  bool no_timings = false;
  ToleranceOverrides flags;
};

void AddCommonOptions(CLI::App* cmd, CommonOptions& opts, bool file_required) {
  auto* file = cmd->add_option("problem", opts.file,
                               "Problem file (JSON or plain-text real matrix)");
  if (file_required) file->required();
  cmd->add_flag("--json", opts.json, "Emit a machine-readable JSON report");
  cmd->add_flag("--no-timings", opts.no_timings, "Omit timings from reports");
  cmd->add_option("--residual-tol", opts.flags.residual,
                  "Relative eigenpair residual bound")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--gap-tol", opts.flags.gap, "Relative eigenvalue gap")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--rank-tol", opts.flags.rank,
                  "Relative singular-value cutoff (0 = machine precision)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--zero-tol", opts.flags.zero,
                  "Relative threshold for structural zeros")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--orth-tol", opts.flags.orthogonality,
                  "Relative orthogonality threshold")
      ->check(CLI::NonNegativeNumber);
}

// Defaults < environment < problem file < command-line flags.
Tolerances ResolveTolerances(const ProblemFile* problem,
                             const CommonOptions& opts) {
  Tolerances tol = TolerancesFromEnvironment();
  if (problem != nullptr) problem->tolerances.ApplyTo(tol);
  opts.flags.ApplyTo(tol);
  return tol;
}

std::string FormatComplex(Complex z) {
  std::ostringstream s;
  s << std::setprecision(6) << z.real();
  if (z.imag() != 0.0) {
    s << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  }
  return s.str();
}

std::string FormatVector(const ComplexVector& v) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) s += ", ";
    s += FormatComplex(v(i));
  }
  return s + "]";
}

std::string FormatIndexSet(std::span<const std::size_t> indices) {
  std::string s = "{";
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (k > 0) s += ", ";
    s += std::to_string(indices[k] + 1);
  }
  return s + "}";
}

std::string FormatTolerances(const Tolerances& tol, Eigen::Index n) {
  std::ostringstream s;
  s << "residual=" << tol.residual << " gap=" << tol.gap << " rank=";
  if (tol.rank > 0.0) {
    s << tol.rank;
  } else {
    s << "auto(" << EffectiveRankTolerance(tol, n, n) << ")";
  }
  s << " zero=" << tol.zero << " orthogonality=" << tol.orthogonality;
  return s.str();
}

void PrintVerification(std::ostream& out, const VerificationReport& r,
                       Eigen::Index n) {
  out << "verification: " << (r.controllable() ? "controllable" : "NOT controllable")
      << (r.consistent() ? "" : " (tests disagree)") << "\n";
  if (r.kalman) {
    out << "  kalman: rank " << r.kalman->rank << "/" << n << "\n";
  }
  if (r.pbh_eigenvalue) {
    out << "  pbh eigenvalue: " << (r.pbh_eigenvalue->controllable ? "pass" : "fail")
        << ", ranks [";
    for (std::size_t k = 0; k < r.pbh_eigenvalue->ranks.size(); ++k) {
      out << (k ? " " : "") << r.pbh_eigenvalue->ranks[k];
    }
    out << "]\n";
  }
  if (r.pbh_eigenvector) {
    out << "  pbh eigenvector: "
        << (r.pbh_eigenvector->controllable ? "pass" : "fail")
        << ", min relative |v^H b| = " << r.pbh_eigenvector->min_relative_inner;
    if (r.pbh_eigenvector->violator) {
      out << ", first violator v" << *r.pbh_eigenvector->violator + 1;
    }
    out << "\n";
  }
}

json ReportHeader(std::string_view command, const ProblemFile& problem) {
  return {
      {"schema", report::kReportSchema},
      {"command", command},
      {"input",
       {{"digest", ProblemDigest(problem)}, {"n", problem.matrix.rows()}}},
  };
}

double ElapsedMs(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void EmitJson(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

// ---------------------------------------------------------------- solve-mcp

struct SolveMcpOptions {
  CommonOptions common;
  std::string mode = "exact";
  double eps1 = 0.1;
  double eps2 = 0.1;
  std::optional<double> perturb;
  std::uint64_t seed = 0;
  std::size_t exact_limit = 30;
};

int RunSolveMcp(const SolveMcpOptions& opts, std::ostream& out) {
  const auto start = Clock::now();
  const ProblemFile problem = LoadProblem(opts.common.file);
  McpOptions options;
  options.mode = opts.mode == "greedy" ? CoverMode::kGreedy : CoverMode::kExact;
  options.tolerances = ResolveTolerances(&problem, opts.common);
  options.realization.eps1 = opts.eps1;
  options.realization.eps2 = opts.eps2;
  options.exact.max_universe = opts.exact_limit;

  ComplexMatrix a = problem.matrix;
  if (opts.perturb) a = PerturbNonzeros(a, *opts.perturb, opts.seed);

  // A supplied eigenbasis describes the file's matrix, not a perturbed one.
  const bool use_basis = problem.eigenbasis && !opts.perturb;
  const McpSolution solution = use_basis
                                   ? SolveMcp(a, *problem.eigenbasis, options)
                                   : SolveMcp(a, options);
  const double elapsed = ElapsedMs(start);
  const Eigen::Index n = a.rows();

  if (opts.common.json) {
    json doc = ReportHeader("solve-mcp", problem);
    if (opts.perturb) {
      doc["input"]["perturbation"] = {{"magnitude", *opts.perturb},
                                      {"seed", opts.seed}};
    }
    doc["matrix"] = MatrixToJson(a);
    doc.update(report::McpSolutionJson(solution, options.realization));
    doc["tolerances"] = report::TolerancesJson(options.tolerances, n);
    if (!opts.common.no_timings) doc["timings_ms"] = {{"total", elapsed}};
    EmitJson(out, doc);
    return kExitOk;
  }

  out << "solve-mcp (" << CoverModeName(solution.mode) << ")\n";
  out << "n: " << n << "\n";
  if (opts.perturb) {
    out << "perturbation: +/-" << *opts.perturb << " on nonzeros, seed "
        << opts.seed << "\n";
  }
  out << "eigenvector patterns ("
      << (solution.basis.source == BasisSource::kComputed ? "computed"
                                                          : "user-supplied")
      << "):\n";
  for (std::size_t j = 0; j < solution.basis.size(); ++j) {
    out << "  v" << j + 1 << "  " << solution.eigenvector_patterns[j].ToString()
        << "  lambda = " << FormatComplex(solution.basis.pairs[j].value);
    if (solution.zero_thresholds[j] > options.tolerances.zero) {
      out << "  (zero threshold raised to " << solution.zero_thresholds[j] << ")";
    }
    out << "\n";
  }
  out << "set cover (universe 1.." << solution.instance.universe_size() << "):\n";
  for (std::size_t i = 0; i < solution.instance.num_sets(); ++i) {
    out << "  S" << i + 1 << " = " << FormatIndexSet(solution.instance.set(i))
        << "\n";
  }
  out << "cover: " << FormatIndexSet(solution.cover.indices) << " (size "
      << solution.cover.indices.size() << ", "
      << (solution.cover.exact ? "exact" : "greedy") << ")\n";
  out << "input pattern: " << solution.pattern.ToString() << "\n";
  out << "b: " << FormatVector(solution.b()) << "\n";
  PrintVerification(out, solution.certificate, n);
  out << "tolerances: " << FormatTolerances(options.tolerances, n) << "\n";
  if (!opts.common.no_timings) out << "time: " << elapsed << " ms\n";
  return kExitOk;
}

// --------------------------------------------------------------- solve-mscp

struct MscpOutcome {
  StructuralMatrix pattern{0, 0};
  SccDag dag;
  StructuralVector b{1};
};

MscpOutcome SolveMscpFor(const ComplexMatrix& a, const Tolerances& tol) {
  MscpOutcome outcome;
  outcome.pattern = StructuralPattern(a, tol.zero);
  outcome.b = SolveMscp(outcome.pattern);
  outcome.dag = CondenseScc(BuildStateDigraph(outcome.pattern));
  return outcome;
}

json SccJson(const SccDag& dag) {
  json components = json::array();
  json non_top = json::array();
  for (std::size_t c = 0; c < dag.components.size(); ++c) {
    components.push_back(report::OneBased(dag.components[c]));
    if (dag.non_top_linked[c]) non_top.push_back(report::OneBased(dag.components[c]));
  }
  return {{"components", components}, {"non_top_linked", non_top}};
}

int RunSolveMscp(const CommonOptions& opts, std::ostream& out) {
  const auto start = Clock::now();
  const ProblemFile problem = LoadProblem(opts.file);
  const Tolerances tol = ResolveTolerances(&problem, opts);
  const MscpOutcome r = SolveMscpFor(problem.matrix, tol);
  const double elapsed = ElapsedMs(start);

  if (opts.json) {
    json doc = ReportHeader("solve-mscp", problem);
    doc["structure"] = r.pattern.ToRows();
    doc["scc"] = SccJson(r.dag);
    doc["input_pattern"] = r.b.ToString();
    doc["size"] = r.b.count();
    doc["tolerances"] = report::TolerancesJson(tol, problem.matrix.rows());
    if (!opts.no_timings) doc["timings_ms"] = {{"total", elapsed}};
    EmitJson(out, doc);
    return kExitOk;
  }
  out << "solve-mscp\n";
  out << "strongly connected components:\n";
  for (std::size_t c = 0; c < r.dag.components.size(); ++c) {
    out << "  " << FormatIndexSet(r.dag.components[c])
        << (r.dag.non_top_linked[c] ? "  non-top-linked" : "") << "\n";
  }
  out << "input pattern: " << r.b.ToString() << " (size " << r.b.count() << ")\n";
  if (!opts.no_timings) out << "time: " << elapsed << " ms\n";
  return kExitOk;
}

// ------------------------------------------------------------------- verify

struct VerifyOptions {
  CommonOptions common;
  std::string method = "all";
  std::string b;
  std::string report_file;
};

int RunVerify(const VerifyOptions& opts, std::ostream& out) {
  ProblemFile problem;
  ComplexVector b;
  if (!opts.report_file.empty()) {
    std::ifstream in(opts.report_file);
    if (!in) {
      throw Error(ErrorCode::kParseError, opts.report_file + ": cannot open file");
    }
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::kParseError, opts.report_file + ": " + e.what());
    }
    if (!doc.contains("matrix") || !doc.contains("b")) {
      throw Error(ErrorCode::kParseError,
                  opts.report_file + ": report lacks \"matrix\" or \"b\"");
    }
    problem.matrix = MatrixFromJson(doc["matrix"], "matrix");
    b = VectorFromJson(doc["b"], "b");
  } else {
    if (opts.common.file.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "verify needs a problem file or --report");
    }
    if (opts.b.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "verify needs --b or --report");
    }
    problem = LoadProblem(opts.common.file);
    json parsed;
    try {
      parsed = json::parse(opts.b);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::kParseError, std::string("--b: ") + e.what());
    }
    b = VectorFromJson(parsed, "--b");
  }
  const Eigen::Index n = problem.matrix.rows();
  if (problem.matrix.cols() != n || b.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "b has length " + std::to_string(b.size()) + " for a " +
                    std::to_string(n) + "x" +
                    std::to_string(problem.matrix.cols()) + " matrix");
  }
  RequireFinite(problem.matrix, "matrix");
  const Tolerances tol = ResolveTolerances(&problem, opts.common);

  const bool want_kalman = opts.method == "kalman" || opts.method == "all";
  const bool want_eig = opts.method == "pbh-eig" || opts.method == "all";
  const bool want_vec = opts.method == "pbh-vec" || opts.method == "all";

  VerificationReport report;
  report.tolerances = tol;
  if (want_kalman) {
    report.kalman = KalmanTest(problem.matrix, b, EffectiveRankTolerance(tol, n, n));
  }
  if (want_eig) {
    const auto values = Eigenvalues(problem.matrix);
    report.pbh_eigenvalue = PbhEigenvalueTest(
        problem.matrix, b, values, EffectiveRankTolerance(tol, n, n + 1));
  }
  if (want_vec) {
    std::optional<LeftEigenbasis> basis;
    if (problem.eigenbasis) {
      basis = *problem.eigenbasis;
      NormalizeEigenvectors(*basis);
    } else if (opts.method == "pbh-vec") {
      basis = ComputeLeftEigenbasis(problem.matrix, tol);
    } else {
      try {
        basis = ComputeLeftEigenbasis(problem.matrix, tol);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNotSimple) throw;
      }
    }
    if (basis) report.pbh_eigenvector = PbhEigenvectorTest(*basis, b, tol.orthogonality);
  }

  if (opts.common.json) {
    json doc = ReportHeader("verify", problem);
    doc["method"] = opts.method;
    doc["b"] = VectorToJson(b);
    doc["verification"] = report::VerificationJson(report);
    doc["tolerances"] = report::TolerancesJson(tol, n);
    EmitJson(out, doc);
  } else {
    out << "verify (" << opts.method << ")\n";
    out << "b: " << FormatVector(b) << "\n";
    PrintVerification(out, report, n);
    out << "tolerances: " << FormatTolerances(tol, n) << "\n";
  }
  return report.controllable() ? kExitOk : kExitUnsolved;
}

// ------------------------------------------------------------------- oracle

struct OracleCliOptions {
  CommonOptions common;
  std::size_t n_limit = 12;
};

int RunOracle(const OracleCliOptions& opts, std::ostream& out) {
  const auto start = Clock::now();
  const ProblemFile problem = LoadProblem(opts.common.file);
  OracleOptions options;
  options.n_limit = opts.n_limit;
  options.tolerances = ResolveTolerances(&problem, opts.common);
  const OracleResult result = BruteForceMcp(problem.matrix, options);
  const double elapsed = ElapsedMs(start);
  const bool all_verified =
      std::all_of(result.kalman_verified.begin(), result.kalman_verified.end(),
                  [](bool v) { return v; });

  if (opts.common.json) {
    json doc = ReportHeader("oracle", problem);
    doc["oracle"] = report::OracleJson(result);
    doc["tolerances"] = report::TolerancesJson(options.tolerances,
                                               problem.matrix.rows());
    if (!opts.common.no_timings) doc["timings_ms"] = {{"total", elapsed}};
    EmitJson(out, doc);
  } else {
    out << "oracle\n";
    out << "minimum support size: " << result.min_support_size << "\n";
    out << "optimal supports:\n";
    for (std::size_t k = 0; k < result.optimal_supports.size(); ++k) {
      out << "  " << FormatIndexSet(result.optimal_supports[k])
          << (result.kalman_verified[k] ? "  kalman ok" : "  kalman FAILED")
          << "\n";
    }
    if (!opts.common.no_timings) out << "time: " << elapsed << " ms\n";
  }
  return all_verified ? kExitOk : kExitUnsolved;
}

// ------------------------------------------------------------------ compare

struct CompareOptions {
  CommonOptions common;
  std::string mode = "exact";
};

int RunCompare(const CompareOptions& opts, std::ostream& out) {
  const auto start = Clock::now();
  const ProblemFile problem = LoadProblem(opts.common.file);
  McpOptions options;
  options.mode = opts.mode == "greedy" ? CoverMode::kGreedy : CoverMode::kExact;
  options.tolerances = ResolveTolerances(&problem, opts.common);
  const McpSolution mcp = problem.eigenbasis
                              ? SolveMcp(problem.matrix, *problem.eigenbasis, options)
                              : SolveMcp(problem.matrix, options);

  std::optional<MscpOutcome> mscp;
  std::string mscp_error;
  try {
    mscp = SolveMscpFor(problem.matrix, options.tolerances);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kMissingSelfLoops) throw;
    mscp_error = e.what();
  }
  const double elapsed = ElapsedMs(start);

  std::optional<bool> dominates;
  if (mscp) dominates = StructuralGeq(mcp.pattern, mscp->b);

  if (opts.common.json) {
    json doc = ReportHeader("compare", problem);
    doc["mcp"] = {{"mode", CoverModeName(mcp.mode)},
                  {"input_pattern", mcp.pattern.ToString()},
                  {"size", mcp.pattern.count()},
                  {"b", VectorToJson(mcp.b())},
                  {"controllable", mcp.certificate.controllable()}};
    if (mscp) {
      doc["mscp"] = {{"input_pattern", mscp->b.ToString()},
                     {"size", mscp->b.count()},
                     {"scc", SccJson(mscp->dag)}};
      doc["dominance"] = {{"structural_geq", *dominates},
                          {"size_gap", static_cast<long long>(mcp.pattern.count()) -
                                           static_cast<long long>(mscp->b.count())}};
    } else {
      doc["mscp"] = {{"error", {{"code", "MissingSelfLoops"}, {"message", mscp_error}}}};
      doc["dominance"] = nullptr;
    }
    doc["tolerances"] = report::TolerancesJson(options.tolerances,
                                               problem.matrix.rows());
    if (!opts.common.no_timings) doc["timings_ms"] = {{"total", elapsed}};
    EmitJson(out, doc);
    return kExitOk;
  }
  out << "compare\n";
  out << "mcp (" << CoverModeName(mcp.mode) << "): " << mcp.pattern.ToString()
      << " size " << mcp.pattern.count() << "\n";
  if (mscp) {
    out << "mscp: " << mscp->b.ToString() << " size " << mscp->b.count() << "\n";
    out << "mcp pattern >= mscp pattern: " << (*dominates ? "true" : "false")
        << "\n";
  } else {
    out << "mscp: not available (" << mscp_error << ")\n";
  }
  if (!opts.common.no_timings) out << "time: " << elapsed << " ms\n";
  return kExitOk;
}

// ---------------------------------------------------------------------- eig

int RunEig(const CommonOptions& opts, std::ostream& out) {
  const ProblemFile problem = LoadProblem(opts.file);
  const Tolerances tol = ResolveTolerances(&problem, opts);
  LeftEigenbasis basis;
  if (problem.eigenbasis) {
    basis = *problem.eigenbasis;
    NormalizeEigenvectors(basis);
  } else {
    basis = ComputeLeftEigenbasis(problem.matrix, tol);
  }
  const std::vector<double> thresholds =
      ZeroThresholds(basis, &problem.matrix, tol.zero);
  const std::vector<StructuralVector> patterns =
      EigenvectorPatterns(basis, thresholds);
  const double residual = MaxRelativeResidual(problem.matrix, basis);

  if (opts.json) {
    json doc = ReportHeader("eig", problem);
    doc["eigenbasis"] = report::BasisJson(basis);
    doc["patterns"] = report::PatternsJson(patterns);
    doc["zero_thresholds"] = thresholds;
    doc["max_relative_residual"] = residual;
    doc["tolerances"] = report::TolerancesJson(tol, problem.matrix.rows());
    EmitJson(out, doc);
    return kExitOk;
  }
  out << "eig ("
      << (basis.source == BasisSource::kComputed ? "computed" : "user-supplied")
      << ")\n";
  for (std::size_t j = 0; j < basis.size(); ++j) {
    out << "  v" << j + 1 << "  lambda = " << FormatComplex(basis.pairs[j].value)
        << "  pattern " << patterns[j].ToString() << "  "
        << FormatVector(basis.pairs[j].vector);
    if (thresholds[j] > tol.zero) {
      out << "  (zero threshold raised to " << thresholds[j] << ")";
    }
    out << "\n";
  }
  out << "max relative residual: " << residual << "\n";
  out << "tolerances: " << FormatTolerances(tol, problem.matrix.rows()) << "\n";
  return kExitOk;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotSimple:
    case ErrorCode::kEigensolveFailed:
    case ErrorCode::kZeroPattern:
    case ErrorCode::kInfeasible:
    case ErrorCode::kRepairFailed:
    case ErrorCode::kVerificationFailed:
    case ErrorCode::kMissingSelfLoops:
      return kExitUnsolved;
    default:
      return kExitInputError;
  }
}

}  // namespace

int RunCommand(std::span<const std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Sparsest single-input placement for linear systems", "mincontrol"};
  app.require_subcommand(1);

  SolveMcpOptions solve_mcp;
  auto* cmd_mcp = app.add_subcommand("solve-mcp", "Sparsest b making (A, b) controllable");
  AddCommonOptions(cmd_mcp, solve_mcp.common, true);
  cmd_mcp->add_option("--mode", solve_mcp.mode, "Set-cover solver")
      ->check(CLI::IsMember({"exact", "greedy"}));
  cmd_mcp->add_option("--eps1", solve_mcp.eps1, "Re-scaling step")
      ->check(CLI::PositiveNumber);
  cmd_mcp->add_option("--eps2", solve_mcp.eps2, "Zero-repair step")
      ->check(CLI::PositiveNumber);
  auto* perturb = cmd_mcp->add_option("--perturb", solve_mcp.perturb,
                                      "Uniform noise magnitude on nonzero entries")
                      ->check(CLI::NonNegativeNumber);
  cmd_mcp->add_option("--seed", solve_mcp.seed, "Seed for --perturb")->needs(perturb);
  cmd_mcp->add_option("--exact-limit", solve_mcp.exact_limit,
                      "Largest universe for the exact solver")
      ->check(CLI::Range(1, 64));

  CommonOptions solve_mscp;
  auto* cmd_mscp = app.add_subcommand("solve-mscp",
                                      "Sparsest structural input (full-diagonal case)");
  AddCommonOptions(cmd_mscp, solve_mscp, true);

  VerifyOptions verify;
  auto* cmd_verify = app.add_subcommand("verify", "Controllability tests for a given b");
  AddCommonOptions(cmd_verify, verify.common, false);
  cmd_verify->add_option("--method", verify.method, "Test to run")
      ->check(CLI::IsMember({"pbh-eig", "pbh-vec", "kalman", "all"}));
  cmd_verify->add_option("--b", verify.b,
                         "Input vector as JSON, e.g. [0,1,1,1,0] or [[re,im],...]");
  cmd_verify->add_option("--report", verify.report_file,
                         "Re-verify the matrix and b stored in a solve-mcp JSON report");

  OracleCliOptions oracle;
  auto* cmd_oracle = app.add_subcommand("oracle", "Brute-force sparsest support");
  AddCommonOptions(cmd_oracle, oracle.common, true);
  cmd_oracle->add_option("--n-limit", oracle.n_limit, "Largest n to enumerate");

  CompareOptions compare;
  auto* cmd_compare = app.add_subcommand("compare", "Numerical versus structural sparsest input");
  AddCommonOptions(cmd_compare, compare.common, true);
  cmd_compare->add_option("--mode", compare.mode, "Set-cover solver")
      ->check(CLI::IsMember({"exact", "greedy"}));

  CommonOptions eig;
  auto* cmd_eig = app.add_subcommand("eig", "Left eigenbasis and eigenvector patterns");
  AddCommonOptions(cmd_eig, eig, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kExitOk : kExitInputError;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  bool json_mode = false;
  try {
    if (chosen == cmd_mcp) {
      json_mode = solve_mcp.common.json;
      return RunSolveMcp(solve_mcp, out);
    }
    if (chosen == cmd_mscp) {
      json_mode = solve_mscp.json;
      return RunSolveMscp(solve_mscp, out);
    }
    if (chosen == cmd_verify) {
      json_mode = verify.common.json;
      return RunVerify(verify, out);
    }
    if (chosen == cmd_oracle) {
      json_mode = oracle.common.json;
      return RunOracle(oracle, out);
    }
    if (chosen == cmd_compare) {
      json_mode = compare.common.json;
      return RunCompare(compare, out);
    }
    json_mode = eig.json;
    return RunEig(eig, out);
  } catch (const Error& e) {
    err << "mincontrol " << command << ": " << ErrorCodeName(e.code()) << ": "
        << e.what() << "\n";
    if (json_mode) {
      EmitJson(out, {{"schema", report::kReportSchema},
                     {"command", command},
                     {"error",
                      {{"code", ErrorCodeName(e.code())}, {"message", e.what()}}}});
    }
    return ExitCodeFor(e.code());
  }
}

}  // namespace mincontrol::cli
