#include "corep/classify.hpp"

#include <cmath>
#include <sstream>

namespace corep {

namespace {

// Unimodularity is an input-quality question, not a convergence one; a fixed
// band is more honest than scaling it with the pipeline tolerance.
constexpr double kUnimodularEps = 1e-6;

bool images_unimodular(const Irrep& rep) {
    for (const auto& m : rep.generator_images) {
        if (std::abs(std::abs(m.determinant()) - 1.0) > kUnimodularEps) return false;
    }
    return true;
}

}  // namespace

char wigner_type_letter(WignerType t) {
    switch (t) {
        case WignerType::A: return 'a';
        case WignerType::B: return 'b';
        case WignerType::C: return 'c';
    }
    return '?';
}

Irrep conjugate_rep(const Irrep& rep, const A0Conjugation& conjugation,
                    const Tolerance& tol) {
    Irrep out;
    out.dimension = rep.dimension;
    out.label = rep.label + "_conj";
    out.generator_images.reserve(rep.generator_images.size());
    for (std::size_t j = 0; j < rep.generator_images.size(); ++j) {
        out.generator_images.push_back(
            evaluate(rep, conjugation.backward.at(j), tol).conjugate());
    }
    return out;
}

Irrep conjugate_rep(const Irrep& rep, const MagneticGroup& group,
                    const std::vector<GroupElement>& elements, const Tolerance& tol) {
    return conjugate_rep(rep, resolve_a0_conjugation(group, elements, tol), tol);
}

std::optional<CMatrix> find_intertwiner(const Irrep& rep, const Irrep& conjugate,
                                        const std::vector<GroupElement>& elements,
                                        const Tolerance& tol, double* residual,
                                        double* det_scale, std::size_t* space_dimension) {
    std::vector<std::pair<CMatrix, CMatrix>> pairs;
    pairs.reserve(elements.size());
    for (const auto& e : elements) {
        pairs.emplace_back(evaluate(rep, e, tol), evaluate(conjugate, e, tol));
    }
    const auto basis = solve_intertwiner_space(pairs, tol);
    if (space_dimension) *space_dimension = basis.size();
    if (basis.empty()) {
        if (residual) *residual = 0.0;
        if (det_scale) *det_scale = 0.0;
        return std::nullopt;
    }
    if (basis.size() > 1) {
        throw ClassificationError(
            "intertwiner space has dimension " + std::to_string(basis.size()) +
            "; the input representation cannot be irreducible");
    }

    const Eigen::Index d = rep.dimension;
    const Complex det = basis.front().determinant();
    const double det_abs = std::abs(det);
    if (det_abs < tol.abs_eps) {
        throw ClassificationError(
            "the intertwiner came out singular, contradicting irreducibility");
    }
    CMatrix n = basis.front() / std::pow(det_abs, 1.0 / static_cast<double>(d));
    if (det_scale) *det_scale = det_abs;

    if (residual) {
        double worst = 0.0;
        for (const auto& [dg, dbar] : pairs) {
            worst = std::max(worst, max_abs_diff(dg * n, n * dbar));
        }
        *residual = worst;
    }
    return n;
}

LambdaResult compute_lambda(const CMatrix& intertwiner, const CMatrix& delta_a0_squared,
                            const Tolerance& tol) {
    const Eigen::Index d = intertwiner.rows();
    if (intertwiner.cols() != d || delta_a0_squared.rows() != d ||
        delta_a0_squared.cols() != d) {
        throw ShapeError("compute_lambda: intertwiner and rep(a0^2) must be square d x d");
    }
    const CMatrix m =
        intertwiner * intertwiner.conjugate() * inverse(delta_a0_squared, tol);
    const Complex lambda = m.trace() / static_cast<double>(d);

    LambdaResult out;
    out.lambda = lambda.real();
    out.imag = lambda.imag();
    out.scalarity_residual =
        max_abs_diff(m, CMatrix(lambda * identity_matrix(d)));

    const double scale = std::max(1.0, max_abs(m));
    if (out.scalarity_residual > tol.threshold(scale)) {
        std::ostringstream msg;
        msg << "N N* rep(a0^2)^-1 is not scalar (residual " << out.scalarity_residual
            << "); classification premises are violated upstream";
        throw ClassificationError(msg.str());
    }
    if (std::abs(out.imag) > tol.threshold(std::abs(lambda))) {
        std::ostringstream msg;
        msg << "sign constant has imaginary part " << out.imag;
        throw ClassificationError(msg.str());
    }
    return out;
}

Classification classify(const Irrep& rep, const MagneticGroup& group,
                        const std::vector<GroupElement>& elements, const Tolerance& tol) {
    const auto conjugation = resolve_a0_conjugation(group, elements, tol);
    const Irrep conj = conjugate_rep(rep, conjugation, tol);

    Classification out;
    out.unimodular = images_unimodular(rep);

    double residual = 0.0, det_scale = 0.0;
    std::size_t space_dim = 0;
    auto n = find_intertwiner(rep, conj, elements, tol, &residual, &det_scale, &space_dim);
    out.intertwiner_space_dimension = space_dim;

    if (!n) {
        out.wigner_type = WignerType::C;
        return out;
    }

    out.intertwiner = *n;
    out.intertwiner_residual = residual;
    out.det_scale = det_scale;

    const CMatrix delta_a0sq = evaluate(rep, group.a0_squared_word, tol);
    const LambdaResult lr = compute_lambda(*n, delta_a0sq, tol);
    out.lambda = lr.lambda;
    out.lambda_imag = lr.imag;
    out.scalarity_residual = lr.scalarity_residual;

    if (out.unimodular) {
        if (std::abs(std::abs(lr.lambda) - 1.0) > kUnimodularEps) {
            std::ostringstream msg;
            msg << "|lambda| = " << std::abs(lr.lambda)
                << " despite unimodular images; intertwiner normalization failed";
            throw ClassificationError(msg.str());
        }
    } else if (std::abs(std::abs(lr.lambda) - 1.0) > kUnimodularEps) {
        out.warnings.push_back(
            "input images are not unimodular; classifying by the sign of lambda only");
    }

    if (std::abs(lr.lambda) < 0.5) {
        std::ostringstream msg;
        msg << "sign constant " << lr.lambda << " is not resolvably +1 or -1";
        throw ClassificationError(msg.str());
    }
    out.wigner_type = lr.lambda > 0.0 ? WignerType::A : WignerType::B;
    return out;
}

Classification classify(const Irrep& rep, const MagneticGroup& group, const Tolerance& tol) {
    return classify(rep, group, element_set(group, tol), tol);
}

}  // namespace corep
