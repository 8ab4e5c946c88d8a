#pragma once

// Test-only brute-force machinery, kept independent of the library's solver
// path: the stacked operator is assembled entry by entry from the defining
// equations and its null space comes from hand-rolled Gaussian elimination,
// not from the SVD route the implementation uses.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "corep/group.hpp"
#include "corep/rep.hpp"

namespace oracle {

using corep::CMatrix;
using corep::Complex;

/// Null-space basis of a dense complex matrix by row reduction with partial
/// pivoting. Not orthonormal; spans are what callers compare.
inline std::vector<Eigen::VectorXcd> nullspace_rref(CMatrix m, double eps) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    const double cut = eps * scale;

    std::vector<Eigen::Index> pivot_col;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index best = row;
        for (Eigen::Index r = row + 1; r < rows; ++r) {
            if (std::abs(m(r, col)) > std::abs(m(best, col))) best = r;
        }
        if (std::abs(m(best, col)) <= cut) continue;
        m.row(row).swap(m.row(best));
        m.row(row) /= m(row, col);
        for (Eigen::Index r = 0; r < rows; ++r) {
            if (r != row && std::abs(m(r, col)) > 0.0) {
                m.row(r) -= m(r, col) * m.row(row);
            }
        }
        pivot_col.push_back(col);
        ++row;
    }

    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (Eigen::Index c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<Eigen::VectorXcd> basis;
    for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(cols);
        v(free_col) = 1.0;
        for (std::size_t p = 0; p < pivot_col.size(); ++p) {
            v(pivot_col[p]) = -m(static_cast<Eigen::Index>(p), free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Inverse by Gauss-Jordan elimination on [M | I].
inline CMatrix gauss_inverse(const CMatrix& m) {
    const Eigen::Index n = m.rows();
    CMatrix aug(n, 2 * n);
    aug << m, CMatrix::Identity(n, n);
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index best = col;
        for (Eigen::Index r = col + 1; r < n; ++r) {
            if (std::abs(aug(r, col)) > std::abs(aug(best, col))) best = r;
        }
        if (std::abs(aug(best, col)) == 0.0) {
            throw std::runtime_error("oracle: singular matrix");
        }
        aug.row(col).swap(aug.row(best));
        aug.row(col) /= aug(col, col);
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r != col) aug.row(r) -= aug(r, col) * aug.row(col);
        }
    }
    return aug.rightCols(n);
}

/// Solution space of { X : A_k X - X B_k = 0 } assembled from first
/// principles: the row for output entry (i, j) has coefficient A(i, k) at
/// X(k, j) and -B(l, j) at X(i, l).
inline std::vector<CMatrix> intertwiner_space(
    const std::vector<std::pair<CMatrix, CMatrix>>& pairs, double eps) {
    if (pairs.empty()) throw std::invalid_argument("no pairs");
    const Eigen::Index d = pairs.front().first.rows();
    CMatrix op = CMatrix::Zero(static_cast<Eigen::Index>(pairs.size()) * d * d, d * d);
    auto unknown = [d](Eigen::Index r, Eigen::Index c) { return r + c * d; };
    Eigen::Index row = 0;
    for (const auto& [a, b] : pairs) {
        for (Eigen::Index i = 0; i < d; ++i) {
            for (Eigen::Index j = 0; j < d; ++j) {
                for (Eigen::Index k = 0; k < d; ++k) op(row, unknown(k, j)) += a(i, k);
                for (Eigen::Index l = 0; l < d; ++l) op(row, unknown(i, l)) -= b(l, j);
                ++row;
            }
        }
    }
    std::vector<CMatrix> out;
    for (const auto& v : nullspace_rref(op, eps)) {
        CMatrix x(d, d);
        for (Eigen::Index c = 0; c < d; ++c) x.col(c) = v.segment(c * d, d);
        out.push_back(std::move(x));
    }
    return out;
}

inline Complex small_det(const CMatrix& m) {
    if (m.rows() == 1) return m(0, 0);
    if (m.rows() == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    throw std::runtime_error("oracle determinant only handles d <= 2");
}

inline CMatrix evaluate_word(const corep::Irrep& rep, const corep::Word& w) {
    CMatrix out = CMatrix::Identity(rep.dimension, rep.dimension);
    for (int letter : w) {
        const CMatrix& img =
            rep.generator_images.at(static_cast<std::size_t>(std::abs(letter)) - 1);
        out = letter > 0 ? CMatrix(out * img) : CMatrix(out * gauss_inverse(img));
    }
    return out;
}

/// Wigner letter by brute force, for groups whose antilinear generator
/// commutes with every listed element (checked below): the conjugate
/// representation is then the entrywise conjugate, the intertwiner space
/// comes from row reduction, and the sign is read off by directly comparing
/// N N* against +rep(a0^2) and -rep(a0^2).
inline char classify_letter(const corep::Irrep& rep, const corep::MagneticGroup& group,
                            const std::vector<corep::GroupElement>& elements,
                            double eps) {
    const CMatrix a = group.a0.matrix;
    const CMatrix ai = gauss_inverse(a);
    for (const auto& e : elements) {
        const CMatrix conj_elem = (ai * e.matrix * a).conjugate();
        const double scale = std::max(1.0, e.matrix.cwiseAbs().maxCoeff());
        if ((conj_elem - e.matrix).cwiseAbs().maxCoeff() > eps * scale) {
            throw std::runtime_error(
                "oracle premise violated: a0 does not commute with the group");
        }
    }

    std::vector<std::pair<CMatrix, CMatrix>> pairs;
    for (const auto& e : elements) {
        CMatrix d = evaluate_word(rep, e.word);
        pairs.emplace_back(d, d.conjugate());
    }
    const auto space = intertwiner_space(pairs, eps);
    if (space.empty()) return 'c';
    if (space.size() > 1) {
        throw std::runtime_error("oracle: intertwiner space is not at most a line");
    }

    CMatrix n = space.front();
    const double det_abs = std::abs(small_det(n));
    if (det_abs <= 0.0) throw std::runtime_error("oracle: singular intertwiner");
    n /= std::pow(det_abs, 1.0 / static_cast<double>(n.rows()));

    const CMatrix nn = n * n.conjugate();
    const CMatrix dsq = evaluate_word(rep, group.a0_squared_word);
    const double scale = std::max(1.0, dsq.cwiseAbs().maxCoeff());
    const double plus = (nn - dsq).cwiseAbs().maxCoeff();
    const double minus = (nn + dsq).cwiseAbs().maxCoeff();
    if (plus < eps * scale && minus > eps * scale) return 'a';
    if (minus < eps * scale && plus > eps * scale) return 'b';
    throw std::runtime_error("oracle: sign of N N* against rep(a0^2) is ambiguous");
}

}  // namespace oracle
