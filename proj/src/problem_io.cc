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

#include "mincontrol/problem_io.h"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include "mincontrol/errors.h"

namespace mincontrol {

using nlohmann::json;

void ToleranceOverrides::ApplyTo(Tolerances& tol) const {
  if (residual) tol.residual = *residual;
  if (gap) tol.gap = *gap;
  if (rank) tol.rank = *rank;
  if (zero) tol.zero = *zero;
  if (orthogonality) tol.orthogonality = *orthogonality;
}

bool ToleranceOverrides::empty() const {
  return !residual && !gap && !rank && !zero && !orthogonality;
}

bool operator==(const ProblemFile& a, const ProblemFile& b) {
  if (a.matrix.rows() != b.matrix.rows() ||
      a.matrix.cols() != b.matrix.cols() || a.matrix != b.matrix ||
      a.tolerances != b.tolerances ||
      a.eigenbasis.has_value() != b.eigenbasis.has_value()) {
    return false;
  }
  if (!a.eigenbasis) return true;
  const auto& pa = a.eigenbasis->pairs;
  const auto& pb = b.eigenbasis->pairs;
  if (pa.size() != pb.size()) return false;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    if (pa[i].value != pb[i].value || pa[i].vector.size() != pb[i].vector.size() ||
        pa[i].vector != pb[i].vector) {
      return false;
    }
  }
  return true;
}

namespace {

[[noreturn]] void FieldError(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::kParseError, field + ": " + what);
}

double FiniteNumber(const json& j, const std::string& field) {
  if (!j.is_number()) FieldError(field, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) FieldError(field, "number is not finite");
  return x;
}

std::size_t LineOf(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

ProblemFile ParseJsonProblem(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError,
                std::string(source) + ":" +
                    std::to_string(LineOf(text, e.byte)) + ": " + e.what());
  }
  if (!doc.is_object()) FieldError("<root>", "expected a JSON object");
  if (doc.contains("format") &&
      (!doc["format"].is_string() || doc["format"].get<std::string>() !=
                                         std::string(kProblemFormat))) {
    FieldError("format", "unsupported format, expected \"" +
                             std::string(kProblemFormat) + "\"");
  }
  if (!doc.contains("matrix")) FieldError("matrix", "missing");

  ProblemFile problem;
  problem.matrix = MatrixFromJson(doc["matrix"], "matrix");
  const Eigen::Index n = problem.matrix.rows();
  if (problem.matrix.cols() != n) {
    throw Error(ErrorCode::kDimensionError,
                "matrix is " + std::to_string(n) + "x" +
                    std::to_string(problem.matrix.cols()) + ", expected square");
  }
  if (doc.contains("n")) {
    if (!doc["n"].is_number_unsigned()) FieldError("n", "expected a count");
    if (doc["n"].get<std::size_t>() != static_cast<std::size_t>(n)) {
      throw Error(ErrorCode::kDimensionError,
                  "n = " + doc["n"].dump() + " but matrix has " +
                      std::to_string(n) + " rows");
    }
  }

  if (doc.contains("eigenbasis")) {
    const json& eb = doc["eigenbasis"];
    if (!eb.is_object()) FieldError("eigenbasis", "expected an object");
    if (!eb.contains("eigenvalues") || !eb["eigenvalues"].is_array()) {
      FieldError("eigenbasis.eigenvalues", "expected an array");
    }
    if (!eb.contains("eigenvectors") || !eb["eigenvectors"].is_array()) {
      FieldError("eigenbasis.eigenvectors", "expected an array");
    }
    const json& values = eb["eigenvalues"];
    const json& vectors = eb["eigenvectors"];
    if (values.size() != static_cast<std::size_t>(n) ||
        vectors.size() != static_cast<std::size_t>(n)) {
      throw Error(ErrorCode::kDimensionError,
                  "eigenbasis has " + std::to_string(values.size()) +
                      " eigenvalues and " + std::to_string(vectors.size()) +
                      " eigenvectors, expected " + std::to_string(n) +
                      " of each");
    }
    LeftEigenbasis basis;
    basis.source = BasisSource::kUserSupplied;
    for (std::size_t k = 0; k < values.size(); ++k) {
      const std::string field = "eigenbasis.eigenvectors[" + std::to_string(k) + "]";
      ComplexVector v = VectorFromJson(vectors[k], field);
      if (v.size() != n) {
        throw Error(ErrorCode::kDimensionError,
                    field + " has length " + std::to_string(v.size()) +
                        ", expected " + std::to_string(n));
      }
      basis.pairs.push_back(
          {ComplexFromJson(values[k], "eigenbasis.eigenvalues[" +
                                          std::to_string(k) + "]"),
           std::move(v)});
    }
    problem.eigenbasis = std::move(basis);
  }

  if (doc.contains("tolerances")) {
    const json& t = doc["tolerances"];
    if (!t.is_object()) FieldError("tolerances", "expected an object");
    auto read = [&](const char* key, std::optional<double>& slot) {
      if (!t.contains(key)) return;
      const double x = FiniteNumber(t[key], std::string("tolerances.") + key);
      if (x < 0.0) FieldError(std::string("tolerances.") + key, "must be >= 0");
      slot = x;
    };
    read("residual", problem.tolerances.residual);
    read("gap", problem.tolerances.gap);
    read("rank", problem.tolerances.rank);
    read("zero", problem.tolerances.zero);
    read("orthogonality", problem.tolerances.orthogonality);
    for (const auto& [key, value] : t.items()) {
      if (key != "residual" && key != "gap" && key != "rank" && key != "zero" &&
          key != "orthogonality") {
        FieldError("tolerances." + key, "unknown tolerance");
      }
    }
  }
  return problem;
}

ProblemFile ParseTextProblem(std::string_view text, std::string_view source) {
  std::vector<std::vector<double>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<double> row;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      double x = 0.0;
      try {
        x = std::stod(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || !std::isfinite(x)) {
        throw Error(ErrorCode::kParseError,
                    std::string(source) + ":" + std::to_string(line_no) +
                        ": '" + token + "' is not a finite real number");
      }
      row.push_back(x);
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(ErrorCode::kDimensionError,
                  std::string(source) + ":" + std::to_string(line_no) +
                      ": row has " + std::to_string(row.size()) +
                      " entries, expected " +
                      std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw Error(ErrorCode::kParseError, std::string(source) + ": no matrix rows");
  }
  if (rows.size() != rows.front().size()) {
    throw Error(ErrorCode::kDimensionError,
                std::string(source) + ": matrix is " +
                    std::to_string(rows.size()) + "x" +
                    std::to_string(rows.front().size()) + ", expected square");
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  ProblemFile problem;
  problem.matrix.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      problem.matrix(i, j) = rows[static_cast<std::size_t>(i)]
                                 [static_cast<std::size_t>(j)];
    }
  }
  return problem;
}

}  // namespace

Complex ComplexFromJson(const json& j, const std::string& field) {
  if (j.is_number()) return {FiniteNumber(j, field), 0.0};
  if (j.is_array() && j.size() == 2) {
    return {FiniteNumber(j[0], field + "[0]"), FiniteNumber(j[1], field + "[1]")};
  }
  FieldError(field, "expected a number or a [real, imaginary] pair");
}

ComplexVector VectorFromJson(const json& j, const std::string& field) {
  if (!j.is_array()) FieldError(field, "expected an array");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) =
        ComplexFromJson(j[i], field + "[" + std::to_string(i) + "]");
  }
  return v;
}

ComplexMatrix MatrixFromJson(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) FieldError(field, "expected a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array()) FieldError(field + "[0]", "expected an array");
  const std::size_t cols = j[0].size();
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_field = field + "[" + std::to_string(r) + "]";
    if (!j[r].is_array()) FieldError(row_field, "expected an array");
    if (j[r].size() != cols) {
      throw Error(ErrorCode::kDimensionError,
                  row_field + " has " + std::to_string(j[r].size()) +
                      " entries, expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          ComplexFromJson(j[r][c], row_field + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

json ComplexToJson(Complex z) { return json::array({z.real(), z.imag()}); }

json VectorToJson(const ComplexVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(ComplexToJson(v(i)));
  return out;
}

json MatrixToJson(const ComplexMatrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(ComplexToJson(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

ProblemFile ParseProblem(std::string_view text, std::string_view source) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return ParseJsonProblem(text, source);
  }
  return ParseTextProblem(text, source);
}

ProblemFile LoadProblem(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kParseError, path.string() + ": cannot open file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseProblem(buffer.str(), path.string());
}

json ProblemToJson(const ProblemFile& problem) {
  json doc;
  doc["format"] = kProblemFormat;
  doc["n"] = problem.matrix.rows();
  doc["matrix"] = MatrixToJson(problem.matrix);
  if (problem.eigenbasis) {
    json values = json::array();
    json vectors = json::array();
    for (const auto& pair : problem.eigenbasis->pairs) {
      values.push_back(ComplexToJson(pair.value));
      vectors.push_back(VectorToJson(pair.vector));
    }
    doc["eigenbasis"] = {{"eigenvalues", values}, {"eigenvectors", vectors}};
  }
  if (!problem.tolerances.empty()) {
    json t = json::object();
    const auto& o = problem.tolerances;
    if (o.residual) t["residual"] = *o.residual;
    if (o.gap) t["gap"] = *o.gap;
    if (o.rank) t["rank"] = *o.rank;
    if (o.zero) t["zero"] = *o.zero;
    if (o.orthogonality) t["orthogonality"] = *o.orthogonality;
    doc["tolerances"] = t;
  }
  return doc;
}

std::string SerializeProblem(const ProblemFile& problem) {
  return ProblemToJson(problem).dump(2) + "\n";
}

std::string ProblemDigest(const ProblemFile& problem) {
  const std::string canonical = ProblemToJson(problem).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

}  // namespace mincontrol
