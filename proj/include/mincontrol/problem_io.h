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

#ifndef MINCONTROL_PROBLEM_IO_H_
#define MINCONTROL_PROBLEM_IO_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "mincontrol/numerics.h"

namespace mincontrol {

inline constexpr std::string_view kProblemFormat = "mincontrol.problem/1";

struct ToleranceOverrides {
  std::optional<double> residual;
  std::optional<double> gap;
  std::optional<double> rank;
  std::optional<double> zero;
  std::optional<double> orthogonality;

  void ApplyTo(Tolerances& tol) const;
  bool empty() const;
  friend bool operator==(const ToleranceOverrides&,
                         const ToleranceOverrides&) = default;
};

// A system matrix, optionally with its left eigenbasis and tolerance
// overrides.
struct ProblemFile {
  ComplexMatrix matrix;
  std::optional<LeftEigenbasis> eigenbasis;
  ToleranceOverrides tolerances;
};

bool operator==(const ProblemFile& a, const ProblemFile& b);

// Accepts the JSON format (complex entries as [re, im] pairs or plain
// numbers) or whitespace-separated rows of real numbers with '#' comments.
// Throws kParseError with line/field context and kDimensionError for shape
// violations.
ProblemFile ParseProblem(std::string_view text,
                         std::string_view source = "<input>");

ProblemFile LoadProblem(const std::filesystem::path& path);

// Canonical JSON: every entry as a [re, im] pair.
nlohmann::json ProblemToJson(const ProblemFile& problem);
std::string SerializeProblem(const ProblemFile& problem);

nlohmann::json ComplexToJson(Complex z);
nlohmann::json VectorToJson(const ComplexVector& v);
nlohmann::json MatrixToJson(const ComplexMatrix& m);

// Parses a number or [re, im] pair; `field` names the location for errors.
Complex ComplexFromJson(const nlohmann::json& j, const std::string& field);
ComplexVector VectorFromJson(const nlohmann::json& j, const std::string& field);
ComplexMatrix MatrixFromJson(const nlohmann::json& j, const std::string& field);

// FNV-1a 64-bit digest of the canonical serialization, as 16 hex digits.
std::string ProblemDigest(const ProblemFile& problem);

}  // namespace mincontrol

#endif  // MINCONTROL_PROBLEM_IO_H_
