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

#ifndef MINCONTROL_VERIFY_H_
#define MINCONTROL_VERIFY_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mincontrol/numerics.h"

namespace mincontrol {

struct PbhEigenvalueResult {
  bool controllable = false;
  // rank([A - lambda_k I | b]) for each eigenvalue, in input order.
  std::vector<std::size_t> ranks;
};

struct PbhEigenvectorResult {
  bool controllable = false;
  // First j with |v_j^H b| <= tau * |v_j| * |b|.
  std::optional<std::size_t> violator;
  // min_j |v_j^H b| / (|v_j| |b|); zero when b = 0.
  double min_relative_inner = 0.0;
};

struct KalmanResult {
  bool controllable = false;
  std::size_t rank = 0;
};

// Three independent controllability verdicts. A missing member means the
// test could not run (no matrix, or no eigen data).
struct VerificationReport {
  std::optional<PbhEigenvalueResult> pbh_eigenvalue;
  std::optional<PbhEigenvectorResult> pbh_eigenvector;
  std::optional<KalmanResult> kalman;
  Tolerances tolerances;

  // True iff all verdicts that ran agree.
  bool consistent() const;
  // Kalman verdict when available, else the eigenvector verdict.
  bool controllable() const;
};

PbhEigenvalueResult PbhEigenvalueTest(const ComplexMatrix& a,
                                      const ComplexVector& b,
                                      std::span<const Complex> eigenvalues,
                                      double rank_tol);

PbhEigenvectorResult PbhEigenvectorTest(const LeftEigenbasis& basis,
                                        const ComplexVector& b, double tau);

KalmanResult KalmanTest(const ComplexMatrix& a, const ComplexVector& b,
                        double rank_tol);

// Runs every test the inputs allow. `tol.rank <= 0` resolves per matrix
// shape, so the eigenvalue test (n x (n+1)) and Kalman (n x n) may use
// slightly different cutoffs.
VerificationReport Verify(const ComplexMatrix* a, const LeftEigenbasis* basis,
                          const ComplexVector& b, const Tolerances& tol);

}  // namespace mincontrol

#endif  // MINCONTROL_VERIFY_H_
