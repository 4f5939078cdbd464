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

#ifndef MINCONTROL_NUMERICS_H_
#define MINCONTROL_NUMERICS_H_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace mincontrol {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Numerical thresholds shared by every stage of the pipeline. All of them are
// relative: each is scaled by a norm of the data it is applied to.
struct Tolerances {
  // ||v^H A - lambda v^H|| <= residual * ||A||_2 for computed eigenpairs.
  double residual = 1e-8;
  // Eigenvalues are distinct iff min |l_i - l_j| > gap * (1 + max |l|).
  double gap = 1e-9;
  // Singular values above rank * sigma_max count towards the numerical rank.
  // A value <= 0 selects DefaultRankTolerance() for the matrix at hand.
  double rank = 0.0;
  // Entry i of v is structurally nonzero iff |v_i| > zero * max_j |v_j|.
  double zero = 1e-13;
  // v and b are treated as orthogonal iff |v^H b| <= orthogonality*|v||b|.
  // Kept at the zero threshold: a pattern entry just above `zero` must still
  // register as a nonzero inner product.
  double orthogonality = 1e-13;
};

// Machine-precision cutoff for a rows x cols matrix.
double DefaultRankTolerance(Eigen::Index rows, Eigen::Index cols);

// Resolves Tolerances::rank against a concrete matrix shape.
double EffectiveRankTolerance(const Tolerances& tol, Eigen::Index rows,
                              Eigen::Index cols);

// Throws kNonFinite if any entry is NaN or infinite.
void RequireFinite(const ComplexMatrix& m, const char* what);

enum class BasisSource { kComputed, kUserSupplied };

struct EigenPair {
  Complex value;
  // Left eigenvector v with v^H A = value * v^H.
  ComplexVector vector;
};

// One left eigenvector per eigenvalue of a simple matrix. Pairs are ordered by
// decreasing real part, then decreasing imaginary part.
struct LeftEigenbasis {
  std::vector<EigenPair> pairs;
  BasisSource source = BasisSource::kComputed;

  std::size_t size() const { return pairs.size(); }
  Eigen::Index dimension() const {
    return pairs.empty() ? 0 : pairs.front().vector.size();
  }
  std::vector<Complex> eigenvalues() const;
  std::vector<ComplexVector> vectors() const;
};

// Computes the left eigenbasis of a square matrix with distinct eigenvalues.
// Each vector has unit 2-norm and its first significant entry is real and
// positive. Throws kNotSquare, kNonFinite, kNotSimple (gap check) or
// kEigensolveFailed (no convergence, or a residual above tol.residual).
LeftEigenbasis ComputeLeftEigenbasis(const ComplexMatrix& a,
                                     const Tolerances& tol = {});

// Unit 2-norm, first significant entry real and positive.
void NormalizeEigenvectors(LeftEigenbasis& basis);

// NormalizeEigenvectors plus the canonical pair order.
void Canonicalize(LeftEigenbasis& basis);

// Largest ||v^H A - lambda v^H|| / ||A||_2 over all pairs (vectors are
// measured at unit norm).
double MaxRelativeResidual(const ComplexMatrix& a, const LeftEigenbasis& basis);

// Eigenvalues only, in the canonical order; no simplicity requirement.
std::vector<Complex> Eigenvalues(const ComplexMatrix& a);

bool IsSimple(std::span<const Complex> eigenvalues, double gap_tol);

// Number of singular values greater than rank_tol * sigma_max.
std::size_t NumericalRank(const ComplexMatrix& m, double rank_tol);

// [b, Ab, ..., A^(n-1) b].
ComplexMatrix ControllabilityMatrix(const ComplexMatrix& a,
                                    const ComplexVector& b);

// Spectral norm.
double OperatorNorm(const ComplexMatrix& m);

// Multiple of eps * ||A|| / separation used as the roundoff level of a
// computed eigenvector entry.
inline constexpr double kEigenvectorNoiseFactor = 16.0;

// Per-pair structural zero thresholds (relative, as Tolerances::zero). For a
// basis computed from `a`, the threshold of pair j is raised to the roundoff
// level of its vector, kEigenvectorNoiseFactor * eps * ||A||_2 / sep_j with
// sep_j the distance from lambda_j to the nearest other eigenvalue. Supplied
// bases, or a null `a`, get zero_tol throughout.
std::vector<double> ZeroThresholds(const LeftEigenbasis& basis,
                                   const ComplexMatrix* a, double zero_tol);

}  // namespace mincontrol

#endif  // MINCONTROL_NUMERICS_H_
