#include "corep/linalg.hpp"

#include <cmath>
#include <sstream>

namespace corep {

namespace {

// Hard ceiling for inverse(); group and representation matrices in scope stay
// far below this.
constexpr double kMaxCondition = 1e12;

}  // namespace

void Tolerance::validate() const {
    if (!(abs_eps > 0.0) || !(rel_eps > 0.0)) {
        throw Error("tolerance values must be strictly positive");
    }
}

CMatrix identity_matrix(Eigen::Index n) {
    return CMatrix::Identity(n, n);
}

CMatrix blockdiag(const CMatrix& a, const CMatrix& b) {
    CMatrix out = CMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    out.topLeftCorner(a.rows(), a.cols()) = a;
    out.bottomRightCorner(b.rows(), b.cols()) = b;
    return out;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) {
        std::ostringstream msg;
        msg << "matmul shape mismatch: " << a.rows() << "x" << a.cols() << " * "
            << b.rows() << "x" << b.cols();
        throw ShapeError(msg.str());
    }
    return a * b;
}

CMatrix conjugate(const CMatrix& m) {
    return m.conjugate();
}

double max_abs(const CMatrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("max_abs_diff on matrices of different shape");
    }
    return max_abs(a - b);
}

bool approx_equal(const CMatrix& a, const CMatrix& b, double eps) {
    return a.rows() == b.rows() && a.cols() == b.cols() && max_abs_diff(a, b) < eps;
}

void require_finite(const CMatrix& m, const std::string& what) {
    if (!m.allFinite()) {
        throw Error(what + ": matrix has non-finite entries");
    }
}

double condition_estimate(const CMatrix& m) {
    Eigen::JacobiSVD<CMatrix> svd(m);
    const auto& sigma = svd.singularValues();
    if (sigma.size() == 0 || sigma(sigma.size() - 1) <= 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return sigma(0) / sigma(sigma.size() - 1);
}

CMatrix inverse(const CMatrix& m, const Tolerance& tol) {
    if (m.rows() != m.cols()) {
        throw ShapeError("inverse of a non-square matrix");
    }
    require_finite(m, "inverse");
    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sigma = svd.singularValues();
    const double smax = sigma(0);
    const double smin = sigma(sigma.size() - 1);
    const double cond = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
    if (smin <= tol.abs_eps * smax || cond > kMaxCondition) {
        std::ostringstream msg;
        msg << "matrix is singular or ill-conditioned (condition estimate " << cond << ")";
        throw SingularMatrixError(msg.str(), cond);
    }
    return svd.matrixV() * sigma.cwiseInverse().asDiagonal() * svd.matrixU().adjoint();
}

std::vector<CMatrix> solve_intertwiner_space(
    const std::vector<std::pair<CMatrix, CMatrix>>& pairs, const Tolerance& tol) {
    tol.validate();
    if (pairs.empty()) {
        throw Error("solve_intertwiner_space requires at least one pair");
    }
    const Eigen::Index d = pairs.front().first.rows();
    for (const auto& [a, b] : pairs) {
        if (a.rows() != d || a.cols() != d || b.rows() != d || b.cols() != d) {
            throw ShapeError("solve_intertwiner_space: all pair matrices must be d x d");
        }
    }

    // Column-major vec(X): A X - X B = 0 becomes (I (x) A - B^T (x) I) vec(X) = 0.
    const Eigen::Index n = d * d;
    CMatrix stacked(static_cast<Eigen::Index>(pairs.size()) * n, n);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const CMatrix& a = pairs[k].first;
        const CMatrix& b = pairs[k].second;
        CMatrix block = CMatrix::Zero(n, n);
        for (Eigen::Index j = 0; j < d; ++j) {
            block.block(j * d, j * d, d, d) += a;
            for (Eigen::Index k = 0; k < d; ++k) {
                // -(B^T (x) I): output column block j draws on column block k
                // of X with weight B(k, j).
                block.block(j * d, k * d, d, d) -=
                    b(k, j) * CMatrix::Identity(d, d);
            }
        }
        stacked.block(static_cast<Eigen::Index>(k) * n, 0, n, n) = block;
    }

    Eigen::JacobiSVD<CMatrix> svd(stacked, Eigen::ComputeThinU | Eigen::ComputeFullV);
    const auto& sigma = svd.singularValues();
    const double smax = sigma.size() > 0 ? sigma(0) : 0.0;
    const double cut = tol.abs_eps * std::max(smax, 1.0);

    std::vector<CMatrix> basis;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double s = i < sigma.size() ? sigma(i) : 0.0;
        if (s < cut) {
            Eigen::VectorXcd v = svd.matrixV().col(i);
            CMatrix x(d, d);
            for (Eigen::Index col = 0; col < d; ++col) {
                x.col(col) = v.segment(col * d, d);
            }
            basis.push_back(std::move(x));
        }
    }
    return basis;
}

}  // namespace corep
