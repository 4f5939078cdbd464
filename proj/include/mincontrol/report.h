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

#ifndef MINCONTROL_REPORT_H_
#define MINCONTROL_REPORT_H_

#include <string_view>

#include "json.hpp"
#include "mincontrol/mcp.h"
#include "mincontrol/oracle.h"
#include "mincontrol/setcover.h"
#include "mincontrol/structure.h"
#include "mincontrol/verify.h"

// JSON fragments of the machine-readable reports. Every index and set
// element is emitted 1-based.
namespace mincontrol::report {

inline constexpr std::string_view kReportSchema = "mincontrol.report/1";

nlohmann::json TolerancesJson(const Tolerances& tol, Eigen::Index n);
nlohmann::json BasisJson(const LeftEigenbasis& basis);
nlohmann::json PatternsJson(std::span<const StructuralVector> patterns);
nlohmann::json InstanceJson(const SetCoverInstance& instance);
nlohmann::json OneBased(std::span<const std::size_t> indices);
nlohmann::json VerificationJson(const VerificationReport& report);
nlohmann::json RealizationJson(const Realization& realization,
                               const RealizationConfig& config);

// Everything after "input"/"matrix" in a solve-mcp report.
nlohmann::json McpSolutionJson(const McpSolution& solution,
                               const RealizationConfig& config);

nlohmann::json OracleJson(const OracleResult& result);

}  // namespace mincontrol::report

#endif  // MINCONTROL_REPORT_H_
