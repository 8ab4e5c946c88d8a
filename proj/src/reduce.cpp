#include "corep/reduce.hpp"

#include <cmath>
#include <sstream>

namespace corep {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_pristine(const Corep& c, const CMatrix& intertwiner, const char* who) {
    if (c.reduced_block) {
        throw Error(std::string(who) + " expects the doubled corep, not an extracted block");
    }
    if (2 * intertwiner.rows() != c.dimension || intertwiner.rows() != intertwiner.cols()) {
        throw ShapeError(std::string(who) + ": intertwiner must be d x d for a 2d corep");
    }
    if (max_abs_diff(c.transform, identity_matrix(c.dimension)) > 1e-12) {
        throw Error(std::string(who) +
                    " must be applied to the corep in its as-built basis");
    }
}

}  // namespace

Corep equalize_blocks(const Corep& c, const CMatrix& intertwiner, const Tolerance& tol) {
    require_pristine(c, intertwiner, "equalize_blocks");
    const Eigen::Index d = intertwiner.rows();
    const CMatrix w =
        blockdiag(identity_matrix(d), CMatrix(-inverse(intertwiner, tol)));
    Corep out = apply_similarity(c, w, tol);
    out.provenance = c.provenance + " -> block-equalized";
    return out;
}

ReductionResult reduce_type_a(const Corep& c, const CMatrix& intertwiner,
                              double phase_xi, double phase_alpha0, const Tolerance& tol) {
    require_pristine(c, intertwiner, "reduce_type_a");
    if (!c.context) throw Error("corep has no builder context");
    const auto& ctx = *c.context;
    const Eigen::Index d = intertwiner.rows();

    const Complex mu_over_lambda = std::exp(kI * phase_xi);
    const Complex lambda_over_mu = std::conj(mu_over_lambda);
    const CMatrix n_inv = inverse(intertwiner, tol);

    // Splitting transform: the coset matrices become block-diagonal with two
    // equal blocks exactly when N N* = +rep(a0^2).
    CMatrix v1 = CMatrix::Zero(2 * d, 2 * d);
    const double r = 1.0 / std::sqrt(2.0);
    v1.topLeftCorner(d, d) = r * identity_matrix(d);
    v1.topRightCorner(d, d) = r * kI * identity_matrix(d);
    v1.bottomLeftCorner(d, d) = r * lambda_over_mu * n_inv;
    v1.bottomRightCorner(d, d) = -r * kI * lambda_over_mu * n_inv;

    const CMatrix t = std::exp(-kI * (phase_alpha0 / 2.0)) * v1;
    const Corep transformed = apply_similarity(c, t, tol);
    const Complex coset_phase = std::exp(kI * phase_alpha0) * mu_over_lambda;

    ReductionResult out;
    out.wigner_type = WignerType::A;
    out.transform = t;
    out.basis_coefficients = t.transpose();
    out.phase_alpha0 = phase_alpha0;
    out.phase_xi = phase_xi;

    double scale = 1.0;
    for (std::size_t i = 0; i < transformed.elements.size(); ++i) {
        const CMatrix expected_u = evaluate(ctx.rep, transformed.elements[i], tol);
        const CMatrix expected_a = CMatrix(coset_phase * expected_u * intertwiner);
        for (const auto* m : {&transformed.unitary[i], &transformed.antilinear[i]}) {
            scale = std::max(scale, max_abs(*m));
            out.offdiagonal_residual =
                std::max({out.offdiagonal_residual,
                          max_abs(m->topRightCorner(d, d)),
                          max_abs(m->bottomLeftCorner(d, d))});
            out.block_equality_residual = std::max(
                out.block_equality_residual,
                max_abs_diff(m->topLeftCorner(d, d), m->bottomRightCorner(d, d)));
        }
        out.canonical_residual = std::max(
            {out.canonical_residual,
             max_abs_diff(transformed.unitary[i].topLeftCorner(d, d), expected_u),
             max_abs_diff(transformed.antilinear[i].topLeftCorner(d, d), expected_a)});
    }

    const double threshold = tol.threshold(scale);
    if (out.offdiagonal_residual > threshold) {
        std::ostringstream msg;
        msg << "splitting failed: off-diagonal blocks remain at "
            << out.offdiagonal_residual
            << "; the input is not a positive-sign (type a) corep";
        throw ReductionError(msg.str(), out.offdiagonal_residual);
    }
    if (out.block_equality_residual > threshold || out.canonical_residual > threshold) {
        std::ostringstream msg;
        msg << "splitting produced unequal or off-formula blocks (equality "
            << out.block_equality_residual << ", formula " << out.canonical_residual << ")";
        throw ReductionError(msg.str(), out.offdiagonal_residual);
    }

    // The reduced corep: one copy of the two equal blocks, rebuilt from the
    // representation itself so the block matrices are exact.
    Corep block;
    block.dimension = d;
    block.elements = c.elements;
    block.transform = identity_matrix(d);
    block.reduced_block = true;
    block.coset_seed = CMatrix(coset_phase * intertwiner);
    block.context = c.context;
    block.provenance = c.provenance + " -> type-a block";
    block.unitary.reserve(c.elements.size());
    block.antilinear.reserve(c.elements.size());
    for (const auto& e : c.elements) {
        CMatrix u = evaluate(ctx.rep, e, tol);
        block.antilinear.push_back(u * block.coset_seed);
        block.unitary.push_back(std::move(u));
    }
    out.result = std::move(block);
    return out;
}

ReductionResult canonicalize_type_b(const Corep& c, const CMatrix& intertwiner,
                                    double phase_alpha0, const Tolerance& tol) {
    require_pristine(c, intertwiner, "canonicalize_type_b");
    if (!c.context) throw Error("corep has no builder context");
    const auto& ctx = *c.context;
    const Eigen::Index d = intertwiner.rows();

    const CMatrix v2 = blockdiag(CMatrix(kI * identity_matrix(d)),
                                 CMatrix(kI * inverse(intertwiner, tol)));
    const CMatrix t = std::exp(-kI * (phase_alpha0 / 2.0)) * v2;
    const Corep transformed = apply_similarity(c, t, tol);
    const Complex coset_phase = std::exp(kI * phase_alpha0);

    ReductionResult out;
    out.wigner_type = WignerType::B;
    out.transform = t;
    out.basis_coefficients = t.transpose();
    out.phase_alpha0 = phase_alpha0;

    double scale = 1.0;
    for (std::size_t i = 0; i < transformed.elements.size(); ++i) {
        const CMatrix u = evaluate(ctx.rep, transformed.elements[i], tol);
        const CMatrix un = u * intertwiner;
        CMatrix expected_a = CMatrix::Zero(2 * d, 2 * d);
        expected_a.topRightCorner(d, d) = coset_phase * un;
        expected_a.bottomLeftCorner(d, d) = -coset_phase * un;
        scale = std::max({scale, max_abs(transformed.unitary[i]),
                          max_abs(transformed.antilinear[i])});
        out.canonical_residual = std::max(
            {out.canonical_residual,
             max_abs_diff(transformed.unitary[i], blockdiag(u, u)),
             max_abs_diff(transformed.antilinear[i], expected_a)});
        out.offdiagonal_residual = std::max(
            {out.offdiagonal_residual,
             max_abs(transformed.antilinear[i].topLeftCorner(d, d)),
             max_abs(transformed.antilinear[i].bottomRightCorner(d, d))});
    }

    const double threshold = tol.threshold(scale);
    if (out.canonical_residual > threshold) {
        std::ostringstream msg;
        msg << "canonical form mismatch (residual " << out.canonical_residual
            << "); the input is not a negative-sign (type b) corep";
        throw ReductionError(msg.str(), out.canonical_residual);
    }

    Corep canon = transformed;
    canon.provenance = c.provenance + " -> type-b canonical";
    out.result = std::move(canon);
    return out;
}

bool reduction_condition_check(Complex lambda, Complex mu, Complex nu, Complex rho,
                               double eps) {
    const Complex lr = lambda * rho;
    const Complex mn = mu * nu;
    const bool invertible = std::abs(lr - mn) > eps;
    const bool cancels = std::abs(lr + mn) <= eps;
    const bool balanced = std::abs(std::abs(lambda) - std::abs(mu)) <= eps;
    return invertible && cancels && balanced;
}

}  // namespace corep
