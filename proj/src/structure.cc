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

#include "mincontrol/structure.h"

#include <algorithm>
#include <cmath>

#include "mincontrol/errors.h"

namespace mincontrol {

StructuralVector::StructuralVector(std::size_t length) : stars_(length, 0) {
  if (length == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "structural vector must have positive length");
  }
}

StructuralVector StructuralVector::FromString(std::string_view text) {
  StructuralVector out(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case '0': break;
      case '*': out.stars_[i] = 1; break;
      default:
        throw Error(ErrorCode::kParseError,
                    "pattern character '" + std::string(1, text[i]) +
                        "' at position " + std::to_string(i + 1) +
                        " is neither '0' nor '*'");
    }
  }
  return out;
}

StructuralVector StructuralVector::FromPositions(
    std::span<const std::size_t> positions, std::size_t length) {
  StructuralVector out(length);
  for (std::size_t p : positions) {
    if (p >= length) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "position " + std::to_string(p) + " outside length " +
                      std::to_string(length));
    }
    out.stars_[p] = 1;
  }
  return out;
}

std::size_t StructuralVector::count() const {
  return static_cast<std::size_t>(std::count(stars_.begin(), stars_.end(), 1));
}

std::vector<std::size_t> StructuralVector::positions() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < stars_.size(); ++i) {
    if (stars_[i]) out.push_back(i);
  }
  return out;
}

std::string StructuralVector::ToString() const {
  std::string s(stars_.size(), '0');
  for (std::size_t i = 0; i < stars_.size(); ++i) {
    if (stars_[i]) s[i] = '*';
  }
  return s;
}

StructuralMatrix::StructuralMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stars_(rows * cols, 0) {}

StructuralMatrix StructuralMatrix::FromRows(
    const std::vector<std::string>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  StructuralMatrix out(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "ragged structural matrix row " + std::to_string(i));
    }
    const auto row = StructuralVector::FromString(rows[i]);
    for (std::size_t j = 0; j < cols; ++j) out.set_star(i, j, row.is_star(j));
  }
  return out;
}

std::vector<std::string> StructuralMatrix::ToRows() const {
  std::vector<std::string> out(rows_, std::string(cols_, '0'));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (is_star(i, j)) out[i][j] = '*';
    }
  }
  return out;
}

StructuralVector StructuralPattern(const ComplexVector& v, double zero_tol) {
  StructuralVector out(static_cast<std::size_t>(v.size()));
  const double peak = v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
  if (peak == 0.0) return out;
  const double cutoff = zero_tol * peak;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > cutoff) out.set_star(static_cast<std::size_t>(i));
  }
  return out;
}

StructuralMatrix StructuralPattern(const ComplexMatrix& m, double zero_tol) {
  StructuralMatrix out(static_cast<std::size_t>(m.rows()),
                       static_cast<std::size_t>(m.cols()));
  const double peak = m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
  if (peak == 0.0) return out;
  const double cutoff = zero_tol * peak;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (std::abs(m(i, j)) > cutoff) {
        out.set_star(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      }
    }
  }
  return out;
}

namespace {

void RequireSameLength(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::kDimensionMismatch,
                "structural lengths differ: " + std::to_string(a) + " vs " +
                    std::to_string(b));
  }
}

}  // namespace

bool StructuralInner(const StructuralVector& v, const StructuralVector& w) {
  RequireSameLength(v.size(), w.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.is_star(i) && w.is_star(i)) return true;
  }
  return false;
}

bool StructuralGeq(const StructuralVector& v, const StructuralVector& w) {
  RequireSameLength(v.size(), w.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (w.is_star(i) && !v.is_star(i)) return false;
  }
  return true;
}

ComplexVector Restrict(const ComplexVector& v, const StructuralVector& pattern) {
  RequireSameLength(static_cast<std::size_t>(v.size()), pattern.size());
  const auto support = pattern.positions();
  if (support.empty()) {
    throw Error(ErrorCode::kEmptySupport, "restriction to an empty support");
  }
  ComplexVector out(static_cast<Eigen::Index>(support.size()));
  for (std::size_t k = 0; k < support.size(); ++k) {
    out(static_cast<Eigen::Index>(k)) = v(static_cast<Eigen::Index>(support[k]));
  }
  return out;
}

}  // namespace mincontrol
