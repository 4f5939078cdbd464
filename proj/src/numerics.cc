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

#include "mincontrol/numerics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "mincontrol/errors.h"

namespace mincontrol {

std::vector<Complex> LeftEigenbasis::eigenvalues() const {
  std::vector<Complex> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back(p.value);
  return out;
}

std::vector<ComplexVector> LeftEigenbasis::vectors() const {
  std::vector<ComplexVector> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back(p.vector);
  return out;
}

double DefaultRankTolerance(Eigen::Index rows, Eigen::Index cols) {
  return std::numeric_limits<double>::epsilon() *
         static_cast<double>(std::max(rows, cols));
}

double EffectiveRankTolerance(const Tolerances& tol, Eigen::Index rows,
                              Eigen::Index cols) {
  return tol.rank > 0.0 ? tol.rank : DefaultRankTolerance(rows, cols);
}

void RequireFinite(const ComplexMatrix& m, const char* what) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const Complex z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw Error(ErrorCode::kNonFinite,
                    std::string(what) + " has a non-finite entry at (" +
                        std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
      }
    }
  }
}

namespace {

void NormalizeVector(ComplexVector& v) {
  const double norm = v.norm();
  if (norm == 0.0) return;
  v /= norm;
  // Phase pivot: first entry that is clearly above rounding noise.
  const double cutoff =
      std::sqrt(std::numeric_limits<double>::epsilon()) * v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > cutoff) {
      v *= std::conj(v(i)) / mag;
      v(i) = Complex(mag, 0.0);
      break;
    }
  }
}

}  // namespace

void NormalizeEigenvectors(LeftEigenbasis& basis) {
  for (auto& p : basis.pairs) NormalizeVector(p.vector);
}

void Canonicalize(LeftEigenbasis& basis) {
  NormalizeEigenvectors(basis);

  auto& pairs = basis.pairs;
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const EigenPair& a, const EigenPair& b) {
                     return a.value.real() > b.value.real();
                   });
  // Conjugate pairs share a real part only up to rounding; group near-equal
  // real parts and order each group by imaginary part.
  double scale = 1.0;
  for (const auto& p : pairs) scale = std::max(scale, 1.0 + std::abs(p.value));
  const double tie = 1e-9 * scale;
  std::size_t begin = 0;
  while (begin < pairs.size()) {
    std::size_t end = begin + 1;
    while (end < pairs.size() &&
           pairs[end - 1].value.real() - pairs[end].value.real() <= tie) {
      ++end;
    }
    std::stable_sort(pairs.begin() + begin, pairs.begin() + end,
                     [](const EigenPair& a, const EigenPair& b) {
                       return a.value.imag() > b.value.imag();
                     });
    begin = end;
  }
}

double OperatorNorm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

std::vector<double> ZeroThresholds(const LeftEigenbasis& basis,
                                   const ComplexMatrix* a, double zero_tol) {
  std::vector<double> out(basis.size(), zero_tol);
  if (a == nullptr || basis.source != BasisSource::kComputed) return out;
  const double noise = kEigenvectorNoiseFactor *
                       std::numeric_limits<double>::epsilon() * OperatorNorm(*a);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    double sep = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k != j) {
        sep = std::min(sep, std::abs(basis.pairs[j].value - basis.pairs[k].value));
      }
    }
    const double peak = basis.pairs[j].vector.cwiseAbs().maxCoeff();
    if (peak > 0.0 && std::isfinite(sep)) {
      out[j] = std::max(zero_tol, noise * basis.pairs[j].vector.norm() / (sep * peak));
    }
  }
  return out;
}

double MaxRelativeResidual(const ComplexMatrix& a, const LeftEigenbasis& basis) {
  const double a_norm = OperatorNorm(a);
  double worst = 0.0;
  for (const auto& p : basis.pairs) {
    const double v_norm = p.vector.norm();
    if (v_norm == 0.0) return std::numeric_limits<double>::infinity();
    const Eigen::RowVectorXcd r =
        p.vector.adjoint() * a - p.value * p.vector.adjoint();
    const double res = r.norm() / v_norm;
    if (a_norm == 0.0) {
      if (res != 0.0) return std::numeric_limits<double>::infinity();
      continue;
    }
    worst = std::max(worst, res / a_norm);
  }
  return worst;
}

LeftEigenbasis ComputeLeftEigenbasis(const ComplexMatrix& a,
                                     const Tolerances& tol) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::kNotSquare, "matrix is " + std::to_string(a.rows()) +
                                           "x" + std::to_string(a.cols()));
  }
  if (a.rows() == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix is empty");
  }
  RequireFinite(a, "matrix");

  // Left eigenvectors of A are the right eigenvectors of A^H, with
  // conjugated eigenvalues.
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(a.adjoint(), true);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kEigensolveFailed,
                "QR iteration did not converge");
  }

  LeftEigenbasis basis;
  basis.source = BasisSource::kComputed;
  basis.pairs.reserve(static_cast<std::size_t>(a.rows()));
  for (Eigen::Index k = 0; k < a.rows(); ++k) {
    basis.pairs.push_back(
        {std::conj(solver.eigenvalues()(k)), solver.eigenvectors().col(k)});
  }
  Canonicalize(basis);

  const auto values = basis.eigenvalues();
  if (!IsSimple(values, tol.gap)) {
    throw Error(ErrorCode::kNotSimple,
                "matrix has repeated eigenvalues (gap tolerance " +
                    std::to_string(tol.gap) +
                    "); a single input cannot control it");
  }
  const double residual = MaxRelativeResidual(a, basis);
  if (!(residual <= tol.residual)) {
    throw Error(ErrorCode::kEigensolveFailed,
                "eigenpair residual " + std::to_string(residual) +
                    " exceeds tolerance " + std::to_string(tol.residual));
  }
  return basis;
}

std::vector<Complex> Eigenvalues(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::kNotSquare, "matrix is not square");
  }
  RequireFinite(a, "matrix");
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(a, false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kEigensolveFailed, "QR iteration did not converge");
  }
  LeftEigenbasis sorter;
  for (Eigen::Index k = 0; k < a.rows(); ++k) {
    sorter.pairs.push_back({solver.eigenvalues()(k), ComplexVector()});
  }
  Canonicalize(sorter);
  return sorter.eigenvalues();
}

bool IsSimple(std::span<const Complex> eigenvalues, double gap_tol) {
  double max_mod = 0.0;
  for (const auto& z : eigenvalues) max_mod = std::max(max_mod, std::abs(z));
  const double threshold = gap_tol * (1.0 + max_mod);
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    for (std::size_t j = i + 1; j < eigenvalues.size(); ++j) {
      if (std::abs(eigenvalues[i] - eigenvalues[j]) <= threshold) return false;
    }
  }
  return true;
}

std::size_t NumericalRank(const ComplexMatrix& m, double rank_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cutoff = rank_tol * sv(0);
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++rank;
  }
  return rank;
}

ComplexMatrix ControllabilityMatrix(const ComplexMatrix& a,
                                    const ComplexVector& b) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "A must be square");
  }
  if (b.size() != a.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "b has length " + std::to_string(b.size()) + ", expected " +
                    std::to_string(a.rows()));
  }
  const Eigen::Index n = a.rows();
  ComplexMatrix c(n, n);
  if (n == 0) return c;
  c.col(0) = b;
  for (Eigen::Index k = 1; k < n; ++k) c.col(k) = a * c.col(k - 1);
  return c;
}

}  // namespace mincontrol
