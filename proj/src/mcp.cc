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

#include "mincontrol/mcp.h"

#include <cmath>
#include <sstream>
#include <string>

#include "mincontrol/errors.h"

namespace mincontrol {

SetCoverInstance BuildCoverInstance(
    std::span<const StructuralVector> patterns) {
  if (patterns.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no eigenvector patterns");
  }
  const std::size_t n = patterns.front().size();
  std::vector<std::vector<std::size_t>> sets(n);
  for (std::size_t j = 0; j < patterns.size(); ++j) {
    const auto& pattern = patterns[j];
    if (pattern.size() != n) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "pattern " + std::to_string(j + 1) + " has length " +
                      std::to_string(pattern.size()) + ", expected " +
                      std::to_string(n));
    }
    if (pattern.count() == 0) {
      throw Error(ErrorCode::kZeroPattern,
                  "eigenvector " + std::to_string(j + 1) +
                      " has an all-zero pattern");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (pattern.is_star(i)) sets[i].push_back(j);
    }
  }
  return SetCoverInstance(patterns.size(), std::move(sets));
}

StructuralVector SupportFromCover(std::span<const std::size_t> indices,
                                  std::size_t n) {
  return StructuralVector::FromPositions(indices, n);
}

namespace {

class Realizer {
 public:
  Realizer(const StructuralVector& pattern,
           std::span<const ComplexVector> vectors,
           const RealizationConfig& config)
      : config_(config), p_(static_cast<Eigen::Index>(pattern.count())) {
    restricted_.reserve(vectors.size());
    for (const auto& v : vectors) {
      restricted_.push_back(Restrict(v, pattern));
      norms_.push_back(v.norm());
      peaks_.push_back(v.cwiseAbs().maxCoeff());
    }
    b_ = ComplexVector::Zero(p_);
  }

  void Accumulate(Realization& out) {
    for (std::size_t j = 0; j < restricted_.size(); ++j) {
      const Complex alpha =
          config_.alphas.empty() ? Complex(1.0) : config_.alphas.at(j);
      b_ += alpha * restricted_[j];
      std::size_t additions = 1;
      // Re-scale the newest term until no processed vector is orthogonal to
      // the partial sum. Each processed vector rules out at most one
      // multiplier, so j + 1 re-scalings always suffice in exact arithmetic.
      while (FirstOrthogonal(j + 1) < j + 1) {
        if (additions > j + 1) {
          throw Error(ErrorCode::kRepairFailed,
                      "re-scaling vector " + std::to_string(j + 1) +
                          " did not clear orthogonality within " +
                          std::to_string(j + 2) + " additions");
        }
        b_ += config_.eps1 * restricted_[j];
        ++additions;
      }
      out.accumulation_steps.push_back(additions);
    }
  }

  void RepairZeros(Realization& out) {
    const std::size_t bound =
        static_cast<std::size_t>(p_) + restricted_.size() + 1;
    for (Eigen::Index k = 0; k < p_; ++k) {
      if (!IsZero(b_(k))) continue;
      // Lowest-index vector that is nonzero at this entry.
      std::size_t source = restricted_.size();
      for (std::size_t m = 0; m < restricted_.size(); ++m) {
        if (std::abs(restricted_[m](k)) > config_.zero * peaks_[m]) {
          source = m;
          break;
        }
      }
      if (source == restricted_.size()) {
        // No vector sees this entry, so any value leaves the inner products
        // unchanged.
        b_(k) = config_.eps2;
        out.repair_steps.push_back(1);
        continue;
      }
      std::size_t l = 1;
      for (; l <= bound; ++l) {
        b_ += config_.eps2 * restricted_[source];
        if (LeadingNonzero(k + 1) && FirstOrthogonal(restricted_.size()) ==
                                         restricted_.size()) {
          break;
        }
      }
      if (l > bound) {
        throw Error(ErrorCode::kRepairFailed,
                    "could not repair zero entry " + std::to_string(k + 1) +
                        " of the restricted vector within " +
                        std::to_string(bound) + " steps");
      }
      out.repair_steps.push_back(l);
    }
  }

  const ComplexVector& restricted_b() const { return b_; }

 private:
  bool IsZero(Complex x) const {
    return std::abs(x) <= config_.orthogonality * b_.norm();
  }

  bool LeadingNonzero(Eigen::Index count) const {
    for (Eigen::Index i = 0; i < count; ++i) {
      if (IsZero(b_(i))) return false;
    }
    return true;
  }

  // Index of the first of the leading `count` vectors orthogonal to b', or
  // `count` if there is none.
  std::size_t FirstOrthogonal(std::size_t count) const {
    const double b_norm = b_.norm();
    for (std::size_t i = 0; i < count; ++i) {
      const double inner = std::abs(restricted_[i].dot(b_));
      if (inner <= config_.orthogonality * norms_[i] * b_norm) return i;
    }
    return count;
  }

  const RealizationConfig& config_;
  Eigen::Index p_;
  std::vector<ComplexVector> restricted_;
  std::vector<double> norms_;
  std::vector<double> peaks_;
  ComplexVector b_;
};

}  // namespace

Realization Realize(const StructuralVector& pattern,
                    std::span<const ComplexVector> vectors,
                    const RealizationConfig& config) {
  if (!(config.eps1 > 0.0) || !(config.eps2 > 0.0) ||
      !(config.orthogonality > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "eps1, eps2 and the orthogonality tolerance must be positive");
  }
  if (!config.alphas.empty() && config.alphas.size() != vectors.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected one multiplier per vector");
  }
  if (pattern.count() == 0) {
    throw Error(ErrorCode::kInfeasible, "pattern has no nonzero entries");
  }
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (static_cast<std::size_t>(vectors[j].size()) != pattern.size()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "vector " + std::to_string(j + 1) + " has length " +
                      std::to_string(vectors[j].size()) + ", pattern has " +
                      std::to_string(pattern.size()));
    }
    if (!StructuralInner(pattern, StructuralPattern(vectors[j], config.zero))) {
      throw Error(ErrorCode::kInfeasible,
                  "vector " + std::to_string(j + 1) +
                      " has no nonzero entry inside pattern " +
                      pattern.ToString() + "; no realization exists");
    }
  }

  Realization out;
  Realizer realizer(pattern, vectors, config);
  realizer.Accumulate(out);
  realizer.RepairZeros(out);

  const ComplexVector& restricted = realizer.restricted_b();
  out.b = ComplexVector::Zero(static_cast<Eigen::Index>(pattern.size()));
  Eigen::Index k = 0;
  for (std::size_t i : pattern.positions()) {
    out.b(static_cast<Eigen::Index>(i)) = restricted(k++);
  }
  return out;
}

std::vector<StructuralVector> EigenvectorPatterns(
    const LeftEigenbasis& basis, std::span<const double> thresholds) {
  if (thresholds.size() != basis.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected one threshold per eigenvector");
  }
  std::vector<StructuralVector> out;
  out.reserve(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    out.push_back(StructuralPattern(basis.pairs[j].vector, thresholds[j]));
  }
  return out;
}

std::string_view CoverModeName(CoverMode mode) {
  return mode == CoverMode::kExact ? "exact" : "greedy";
}

namespace {

McpSolution SolveWithBasis(const ComplexMatrix* a, LeftEigenbasis basis,
                           const McpOptions& options) {
  const Tolerances& tol = options.tolerances;
  McpSolution out;
  out.mode = options.mode;

  const std::size_t n = static_cast<std::size_t>(basis.dimension());
  out.zero_thresholds = ZeroThresholds(basis, a, tol.zero);
  out.eigenvector_patterns = EigenvectorPatterns(basis, out.zero_thresholds);
  out.instance = BuildCoverInstance(out.eigenvector_patterns);
  out.cover = options.mode == CoverMode::kExact
                  ? SolveExact(out.instance, options.exact)
                  : SolveGreedy(out.instance);
  out.pattern = SupportFromCover(out.cover.indices, n);

  RealizationConfig config = options.realization;
  config.orthogonality = tol.orthogonality;
  config.zero = tol.zero;
  const auto vectors = basis.vectors();
  out.realization = Realize(out.pattern, vectors, config);

  out.certificate = Verify(a, &basis, out.realization.b, tol);
  out.basis = std::move(basis);
  if (!out.certificate.controllable()) {
    std::ostringstream msg;
    msg << "realized input " << out.pattern.ToString()
        << " does not verify as controllable";
    if (out.certificate.kalman) {
      msg << " (Kalman rank " << out.certificate.kalman->rank << " of " << n
          << ")";
    }
    if (out.certificate.pbh_eigenvector) {
      msg << "; min relative |v^H b| = "
          << out.certificate.pbh_eigenvector->min_relative_inner;
    }
    msg << "; check the rank (" << tol.rank << ") and zero (" << tol.zero
        << ") tolerances";
    throw Error(ErrorCode::kVerificationFailed, msg.str());
  }
  return out;
}

void ValidateSuppliedBasis(const LeftEigenbasis& basis, Eigen::Index n,
                           const Tolerances& tol) {
  if (basis.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::kDimensionError,
                "eigenbasis has " + std::to_string(basis.size()) +
                    " pairs, expected " + std::to_string(n));
  }
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto& v = basis.pairs[j].vector;
    if (v.size() != n) {
      throw Error(ErrorCode::kDimensionError,
                  "eigenvector " + std::to_string(j + 1) + " has length " +
                      std::to_string(v.size()) + ", expected " +
                      std::to_string(n));
    }
    RequireFinite(v, "eigenvector");
    if (v.norm() == 0.0) {
      throw Error(ErrorCode::kInvalidBasis,
                  "eigenvector " + std::to_string(j + 1) + " is zero");
    }
  }
  const auto values = basis.eigenvalues();
  if (!IsSimple(values, tol.gap)) {
    throw Error(ErrorCode::kNotSimple,
                "supplied eigenvalues are not pairwise distinct");
  }
}

}  // namespace

McpSolution SolveMcp(const ComplexMatrix& a, const McpOptions& options) {
  return SolveWithBasis(&a, ComputeLeftEigenbasis(a, options.tolerances),
                        options);
}

McpSolution SolveMcp(const ComplexMatrix& a, const LeftEigenbasis& basis,
                     const McpOptions& options) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::kNotSquare, "matrix is not square");
  }
  RequireFinite(a, "matrix");
  ValidateSuppliedBasis(basis, a.rows(), options.tolerances);
  LeftEigenbasis normalized = basis;
  NormalizeEigenvectors(normalized);
  const double residual = MaxRelativeResidual(a, normalized);
  if (!(residual <= options.tolerances.residual)) {
    throw Error(ErrorCode::kInvalidBasis,
                "supplied eigenbasis has residual " + std::to_string(residual) +
                    " against the matrix");
  }
  return SolveWithBasis(&a, std::move(normalized), options);
}

McpSolution SolveMcp(const LeftEigenbasis& basis, const McpOptions& options) {
  if (basis.size() == 0) {
    throw Error(ErrorCode::kDimensionError, "empty eigenbasis");
  }
  ValidateSuppliedBasis(basis, basis.dimension(), options.tolerances);
  LeftEigenbasis normalized = basis;
  NormalizeEigenvectors(normalized);
  return SolveWithBasis(nullptr, std::move(normalized), options);
}

}  // namespace mincontrol
