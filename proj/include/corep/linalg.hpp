#pragma once

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "corep/error.hpp"

namespace corep {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

/// Absolute / relative tolerance pair used by every numerical check in the
/// pipeline. Both values must be strictly positive.
struct Tolerance {
    double abs_eps = 1e-10;
    double rel_eps = 1e-8;

    void validate() const;

    /// Pass/fail threshold for residuals on data of the given magnitude.
    double threshold(double scale) const { return abs_eps + rel_eps * scale; }
};

CMatrix identity_matrix(Eigen::Index n);
CMatrix blockdiag(const CMatrix& a, const CMatrix& b);

/// Shape-checked complex matrix product.
CMatrix matmul(const CMatrix& a, const CMatrix& b);

/// Entrywise complex conjugate (no transpose).
CMatrix conjugate(const CMatrix& m);

double max_abs(const CMatrix& m);
double max_abs_diff(const CMatrix& a, const CMatrix& b);
bool approx_equal(const CMatrix& a, const CMatrix& b, double eps);

/// Throws Error if any entry is NaN or infinite.
void require_finite(const CMatrix& m, const std::string& what);

/// Ratio of the largest to the smallest singular value.
double condition_estimate(const CMatrix& m);

/// Inverse of a square matrix, rejected with SingularMatrixError when the
/// condition estimate makes the result unreliable.
CMatrix inverse(const CMatrix& m, const Tolerance& tol);

/// Orthonormal basis (entrywise inner product) of the joint solution space
///   { X : A_k X - X B_k = 0  for every pair (A_k, B_k) }.
///
/// The stacked linear operator is decomposed by SVD; singular values below
/// abs_eps times the largest singular value count as zero. An empty result
/// means the solution space is trivial.
std::vector<CMatrix> solve_intertwiner_space(
    const std::vector<std::pair<CMatrix, CMatrix>>& pairs, const Tolerance& tol);

}  // namespace corep
