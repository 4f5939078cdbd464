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

#include "mincontrol/verify.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mincontrol/errors.h"

namespace mincontrol {

namespace {

void RequireSystemShape(const ComplexMatrix& a, const ComplexVector& b) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "A must be square");
  }
  if (b.size() != a.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "b has length " + std::to_string(b.size()) + ", expected " +
                    std::to_string(a.rows()));
  }
}

}  // namespace

bool VerificationReport::consistent() const {
  std::optional<bool> seen;
  auto check = [&seen](bool verdict) {
    if (seen && *seen != verdict) return false;
    seen = verdict;
    return true;
  };
  bool ok = true;
  if (pbh_eigenvalue) ok = check(pbh_eigenvalue->controllable) && ok;
  if (pbh_eigenvector) ok = check(pbh_eigenvector->controllable) && ok;
  if (kalman) ok = check(kalman->controllable) && ok;
  return ok;
}

bool VerificationReport::controllable() const {
  if (kalman) return kalman->controllable;
  if (pbh_eigenvector) return pbh_eigenvector->controllable;
  if (pbh_eigenvalue) return pbh_eigenvalue->controllable;
  return false;
}

PbhEigenvalueResult PbhEigenvalueTest(const ComplexMatrix& a,
                                      const ComplexVector& b,
                                      std::span<const Complex> eigenvalues,
                                      double rank_tol) {
  RequireSystemShape(a, b);
  const Eigen::Index n = a.rows();
  PbhEigenvalueResult out;
  out.controllable = true;
  ComplexMatrix pencil(n, n + 1);
  pencil.col(n) = b;
  for (const Complex& lambda : eigenvalues) {
    pencil.leftCols(n) = a;
    pencil.leftCols(n).diagonal().array() -= lambda;
    const std::size_t rank = NumericalRank(pencil, rank_tol);
    out.ranks.push_back(rank);
    if (rank != static_cast<std::size_t>(n)) out.controllable = false;
  }
  return out;
}

PbhEigenvectorResult PbhEigenvectorTest(const LeftEigenbasis& basis,
                                        const ComplexVector& b, double tau) {
  PbhEigenvectorResult out;
  const double b_norm = b.norm();
  out.min_relative_inner = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const ComplexVector& v = basis.pairs[j].vector;
    if (v.size() != b.size()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "eigenvector " + std::to_string(j + 1) + " has length " +
                      std::to_string(v.size()) + ", b has length " +
                      std::to_string(b.size()));
    }
    const double scale = v.norm() * b_norm;
    const double inner = std::abs(v.dot(b));  // v^H b
    const double relative = scale == 0.0 ? 0.0 : inner / scale;
    out.min_relative_inner = std::min(out.min_relative_inner, relative);
    if (!(inner > tau * scale) && !out.violator) out.violator = j;
  }
  if (basis.size() == 0) out.min_relative_inner = 0.0;
  out.controllable = !out.violator.has_value() && b_norm > 0.0;
  return out;
}

KalmanResult KalmanTest(const ComplexMatrix& a, const ComplexVector& b,
                        double rank_tol) {
  RequireSystemShape(a, b);
  KalmanResult out;
  out.rank = NumericalRank(ControllabilityMatrix(a, b), rank_tol);
  out.controllable = out.rank == static_cast<std::size_t>(a.rows());
  return out;
}

VerificationReport Verify(const ComplexMatrix* a, const LeftEigenbasis* basis,
                          const ComplexVector& b, const Tolerances& tol) {
  VerificationReport report;
  report.tolerances = tol;
  if (a != nullptr) {
    const Eigen::Index n = a->rows();
    report.kalman = KalmanTest(*a, b, EffectiveRankTolerance(tol, n, n));
    if (basis != nullptr) {
      const auto values = basis->eigenvalues();
      report.pbh_eigenvalue = PbhEigenvalueTest(
          *a, b, values, EffectiveRankTolerance(tol, n, n + 1));
    }
  }
  if (basis != nullptr) {
    report.pbh_eigenvector = PbhEigenvectorTest(*basis, b, tol.orthogonality);
  }
  return report;
}

}  // namespace mincontrol
