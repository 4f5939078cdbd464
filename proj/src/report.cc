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

#include "mincontrol/report.h"

#include "mincontrol/problem_io.h"

namespace mincontrol::report {

using nlohmann::json;

json OneBased(std::span<const std::size_t> indices) {
  json out = json::array();
  for (std::size_t i : indices) out.push_back(i + 1);
  return out;
}

json TolerancesJson(const Tolerances& tol, Eigen::Index n) {
  return {
      {"residual", tol.residual},
      {"gap", tol.gap},
      {"rank", tol.rank},
      {"rank_effective", EffectiveRankTolerance(tol, n, n)},
      {"zero", tol.zero},
      {"orthogonality", tol.orthogonality},
  };
}

json BasisJson(const LeftEigenbasis& basis) {
  json values = json::array();
  json vectors = json::array();
  for (const auto& pair : basis.pairs) {
    values.push_back(ComplexToJson(pair.value));
    vectors.push_back(VectorToJson(pair.vector));
  }
  return {
      {"source", basis.source == BasisSource::kComputed ? "computed"
                                                        : "user-supplied"},
      {"eigenvalues", values},
      {"eigenvectors", vectors},
  };
}

json PatternsJson(std::span<const StructuralVector> patterns) {
  json out = json::array();
  for (const auto& p : patterns) out.push_back(p.ToString());
  return out;
}

json InstanceJson(const SetCoverInstance& instance) {
  json sets = json::array();
  for (const auto& s : instance.sets()) sets.push_back(OneBased(s));
  return {{"universe_size", instance.universe_size()}, {"sets", sets}};
}

json VerificationJson(const VerificationReport& report) {
  json out = {
      {"controllable", report.controllable()},
      {"consistent", report.consistent()},
  };
  if (report.kalman) {
    out["kalman"] = {{"controllable", report.kalman->controllable},
                     {"rank", report.kalman->rank}};
  }
  if (report.pbh_eigenvalue) {
    out["pbh_eigenvalue"] = {{"controllable", report.pbh_eigenvalue->controllable},
                             {"ranks", report.pbh_eigenvalue->ranks}};
  }
  if (report.pbh_eigenvector) {
    const auto& r = *report.pbh_eigenvector;
    out["pbh_eigenvector"] = {
        {"controllable", r.controllable},
        {"violator", r.violator ? json(*r.violator + 1) : json(nullptr)},
        {"min_relative_inner", r.min_relative_inner},
    };
  }
  return out;
}

json RealizationJson(const Realization& realization,
                     const RealizationConfig& config) {
  return {
      {"eps1", config.eps1},
      {"eps2", config.eps2},
      {"accumulation_steps", realization.accumulation_steps},
      {"repair_steps", realization.repair_steps},
  };
}

json McpSolutionJson(const McpSolution& solution,
                     const RealizationConfig& config) {
  return {
      {"eigenbasis", BasisJson(solution.basis)},
      {"patterns", PatternsJson(solution.eigenvector_patterns)},
      {"zero_thresholds", solution.zero_thresholds},
      {"set_cover", InstanceJson(solution.instance)},
      {"cover",
       {{"mode", CoverModeName(solution.mode)},
        {"exact", solution.cover.exact},
        {"size", solution.cover.indices.size()},
        {"indices", OneBased(solution.cover.indices)}}},
      {"input_pattern", solution.pattern.ToString()},
      {"b", VectorToJson(solution.b())},
      {"realization", RealizationJson(solution.realization, config)},
      {"verification", VerificationJson(solution.certificate)},
  };
}

json OracleJson(const OracleResult& result) {
  json supports = json::array();
  for (const auto& s : result.optimal_supports) supports.push_back(OneBased(s));
  return {
      {"min_support_size", result.min_support_size},
      {"optimal_supports", supports},
      {"kalman_verified", result.kalman_verified},
  };
}

}  // namespace mincontrol::report
