#include "corep/corep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "corep/classify.hpp"

namespace corep {

namespace {

constexpr std::size_t kPairCap = 4096;

std::vector<std::pair<std::size_t, std::size_t>> pair_schedule(std::size_t count,
                                                               std::uint64_t seed) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (count == 0) return pairs;
    if (count * count <= kPairCap) {
        pairs.reserve(count * count);
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < count; ++j) pairs.emplace_back(i, j);
        return pairs;
    }
    std::mt19937_64 rng(seed);
    pairs.reserve(kPairCap);
    for (std::size_t k = 0; k < kPairCap; ++k) {
        pairs.emplace_back(static_cast<std::size_t>(rng() % count),
                           static_cast<std::size_t>(rng() % count));
    }
    return pairs;
}

}  // namespace

CMatrix Corep::unitary_of(const Word& w) const {
    if (!context) throw Error("corep has no builder context");
    const Tolerance& tol = context->tol;
    CMatrix base = evaluate(context->rep, w, tol);
    if (!reduced_block) {
        base = blockdiag(base, evaluate(context->conjugate, w, tol));
    }
    const CMatrix t_inv = inverse(transform, tol);
    return t_inv * base * transform;
}

CMatrix Corep::antilinear_of(const Word& w) const {
    if (!context) throw Error("corep has no builder context");
    const Tolerance& tol = context->tol;
    CMatrix base = evaluate(context->rep, w, tol);
    if (!reduced_block) {
        base = blockdiag(base, evaluate(context->conjugate, w, tol));
    }
    const CMatrix t_inv = inverse(transform, tol);
    return t_inv * (base * coset_seed) * transform.conjugate();
}

Corep build_corep(const Irrep& rep, const MagneticGroup& group,
                  const std::vector<GroupElement>& elements, const Tolerance& tol) {
    validate(group, tol);  // re-raises a0^2 word mismatches as structural errors
    if (elements.empty() || !elements.front().word.empty()) {
        throw StructureError("element list must start with the identity");
    }

    auto ctx = std::make_shared<CorepContext>();
    ctx->group = group;
    ctx->rep = rep;
    ctx->conjugation = resolve_a0_conjugation(group, elements, tol);
    ctx->conjugate = conjugate_rep(rep, ctx->conjugation, tol);
    ctx->delta_a0_squared = evaluate(rep, group.a0_squared_word, tol);
    ctx->tol = tol;

    const Eigen::Index d = rep.dimension;
    Corep out;
    out.dimension = 2 * d;
    out.elements = elements;
    out.transform = identity_matrix(2 * d);
    out.reduced_block = false;

    // Matrix of a0 itself: rep(a0^2) in the upper-right block, the identity
    // in the lower-left. Every coset matrix is D(g) times this seed.
    out.coset_seed = CMatrix::Zero(2 * d, 2 * d);
    out.coset_seed.topRightCorner(d, d) = ctx->delta_a0_squared;
    out.coset_seed.bottomLeftCorner(d, d) = identity_matrix(d);

    out.unitary.reserve(elements.size());
    out.antilinear.reserve(elements.size());
    for (const auto& e : elements) {
        const CMatrix upper = evaluate(rep, e, tol);
        const CMatrix lower = evaluate(ctx->conjugate, e, tol);
        const CMatrix dg = blockdiag(upper, lower);
        out.unitary.push_back(dg);
        out.antilinear.push_back(dg * out.coset_seed);
    }
    out.context = std::move(ctx);
    out.provenance = "built";
    return out;
}

CorepLawReport verify_corep(const Corep& c, const Tolerance& tol, std::uint64_t seed) {
    if (!c.context) throw Error("corep has no builder context");
    const auto& ctx = *c.context;
    const CMatrix a0m = ctx.group.a0.matrix;
    const CMatrix a0mi = inverse(a0m, tol);
    const CMatrix a0sq_carrier = compose(ctx.group.a0, ctx.group.a0).matrix;

    CorepLawReport report;
    double scale = 1.0;
    const auto schedule = pair_schedule(c.elements.size(), seed);

    // Matrix of the product element, taken from the stored table when the
    // carrier matrix matches a listed element, otherwise rebuilt from the
    // product word. `coset` selects between D(g) and D(g * a0).
    auto product_matrix = [&](const CMatrix& carrier, const Word& word,
                              bool coset) -> CMatrix {
        const GroupElement* match = find_matching_element(
            c.elements, carrier, tol.threshold(std::max(1.0, max_abs(carrier))));
        if (match) {
            report.matched_products++;
            const auto index = static_cast<std::size_t>(match - c.elements.data());
            return coset ? c.antilinear[index] : c.unitary[index];
        }
        return coset ? c.antilinear_of(word) : c.unitary_of(word);
    };

    auto record = [&](double& law_residual, const CMatrix& lhs, const CMatrix& rhs) {
        scale = std::max({scale, max_abs(lhs), max_abs(rhs)});
        law_residual = std::max(law_residual, max_abs_diff(lhs, rhs));
    };

    for (const auto& [i, j] : schedule) {
        const GroupElement& x = c.elements[i];
        const GroupElement& y = c.elements[j];
        // Carrier matrix of a0 * y * a0^-1; pulling y leftwards through a0
        // conjugates its matrix entrywise.
        const CMatrix y_pulled = a0m * y.matrix.conjugate() * a0mi;
        const Word y_forward = ctx.conjugation.apply_inverse(y.word);

        // g1 * g2
        const CMatrix gg_carrier = x.matrix * y.matrix;
        const Word gg_word = concat_words(x.word, y.word);
        record(report.residual_gg, c.unitary[i] * c.unitary[j],
               product_matrix(gg_carrier, gg_word, false));

        // g * (h a0) = (g h) a0
        record(report.residual_ga, c.unitary[i] * c.antilinear[j],
               product_matrix(gg_carrier, gg_word, true));

        // (g a0) * h = (g * a0 h a0^-1) a0
        const CMatrix ag_carrier = x.matrix * y_pulled;
        const Word ag_word = concat_words(x.word, y_forward);
        record(report.residual_ag, c.antilinear[i] * c.unitary[j].conjugate(),
               product_matrix(ag_carrier, ag_word, true));

        // (g a0) * (h a0) = (g * a0 h a0^-1 * a0^2), a linear element
        const CMatrix aa_carrier = x.matrix * y_pulled * a0sq_carrier;
        const Word aa_word = concat_words(ag_word, ctx.group.a0_squared_word);
        record(report.residual_aa, c.antilinear[i] * c.antilinear[j].conjugate(),
               product_matrix(aa_carrier, aa_word, false));

        report.pairs_checked++;
    }

    report.max_residual = std::max({report.residual_gg, report.residual_ga,
                                    report.residual_ag, report.residual_aa});
    report.threshold = tol.threshold(scale);
    report.pass = report.max_residual <= report.threshold;
    return report;
}

Corep apply_similarity(const Corep& c, const CMatrix& s, const Tolerance& tol) {
    if (s.rows() != c.dimension || s.cols() != c.dimension) {
        throw ShapeError("similarity matrix does not match the corep dimension");
    }
    const CMatrix s_inv = inverse(s, tol);  // rejects singular transforms
    Corep out = c;
    out.transform = c.transform * s;
    for (auto& m : out.unitary) m = s_inv * m * s;
    for (auto& m : out.antilinear) m = s_inv * m * s.conjugate();
    out.provenance += " -> similarity";
    return out;
}

EquivalenceResult coreps_equivalent(const Corep& c1, const Corep& c2, const Tolerance& tol) {
    EquivalenceResult out;
    if (c1.dimension != c2.dimension || c1.elements.size() != c2.elements.size()) {
        return out;
    }
    const Eigen::Index n = c1.dimension;
    const Eigen::Index nn = n * n;

    // Unknown S = X + iY as a real vector [vec X; vec Y]. The linear-part
    // conditions D1 S = S D2 and the single antilinear condition
    // D1(a0) conj(S) = S D2(a0) are all linear over the reals.
    const std::size_t condition_count = c1.elements.size() + 1;
    Eigen::MatrixXd system(
        static_cast<Eigen::Index>(condition_count) * 2 * nn, 2 * nn);
    system.setZero();

    // Rows encode left * S' - S * right = 0 entrywise, with S' = S for the
    // linear conditions and S' = conj(S) for the antilinear one. Writing
    // left = P + iQ, right = R + iT and S' = X + i*ysign*Y:
    //   real: P X - ysign Q Y - X R + Y T = 0
    //   imag: Q X + ysign P Y - X T - Y R = 0
    auto emit = [&](Eigen::Index row0, const CMatrix& left, const CMatrix& right,
                    bool conjugate_unknown) {
        const Eigen::MatrixXd pl = left.real(), ql = left.imag();
        const Eigen::MatrixXd pr = right.real(), qr = right.imag();
        const double ysign = conjugate_unknown ? -1.0 : 1.0;
        for (Eigen::Index col = 0; col < n; ++col) {
            for (Eigen::Index i = 0; i < n; ++i) {
                const Eigen::Index re_row = row0 + col * n + i;
                const Eigen::Index im_row = row0 + nn + col * n + i;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const Eigen::Index x_kc = k + col * n;
                    const Eigen::Index y_kc = nn + k + col * n;
                    system(re_row, x_kc) += pl(i, k);
                    system(re_row, y_kc) -= ysign * ql(i, k);
                    system(im_row, x_kc) += ql(i, k);
                    system(im_row, y_kc) += ysign * pl(i, k);
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const Eigen::Index x_ik = i + k * n;
                    const Eigen::Index y_ik = nn + i + k * n;
                    system(re_row, x_ik) -= pr(k, col);
                    system(re_row, y_ik) += qr(k, col);
                    system(im_row, x_ik) -= qr(k, col);
                    system(im_row, y_ik) -= pr(k, col);
                }
            }
        }
    };

    for (std::size_t idx = 0; idx < c1.elements.size(); ++idx) {
        emit(static_cast<Eigen::Index>(idx) * 2 * nn, c1.unitary[idx], c2.unitary[idx],
             false);
    }
    if (!c1.elements.front().word.empty() || !c2.elements.front().word.empty()) {
        throw StructureError("element lists must start with the identity");
    }
    emit(static_cast<Eigen::Index>(c1.elements.size()) * 2 * nn, c1.antilinear[0],
         c2.antilinear[0], true);

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(system, Eigen::ComputeThinU | Eigen::ComputeFullV);
    const auto& sigma = svd.singularValues();
    const double smax = sigma.size() > 0 ? sigma(0) : 0.0;
    const double cut = tol.abs_eps * std::max(smax, 1.0);

    std::vector<Eigen::VectorXd> basis;
    for (Eigen::Index i = 0; i < 2 * nn; ++i) {
        const double s = i < sigma.size() ? sigma(i) : 0.0;
        if (s < cut) basis.push_back(svd.matrixV().col(i));
    }
    out.space_dimension = basis.size();
    if (basis.empty()) return out;

    auto to_matrix = [&](const Eigen::VectorXd& z) {
        CMatrix s(n, n);
        for (Eigen::Index col = 0; col < n; ++col)
            for (Eigen::Index i = 0; i < n; ++i)
                s(i, col) = Complex(z(i + col * n), z(nn + i + col * n));
        return s;
    };

    auto try_candidate = [&](const CMatrix& s) -> bool {
        Eigen::JacobiSVD<CMatrix> csvd(s);
        const auto& sv = csvd.singularValues();
        if (sv(sv.size() - 1) <= tol.abs_eps * std::max(sv(0), 1.0)) return false;
        double residual = 0.0;
        for (std::size_t idx = 0; idx < c1.elements.size(); ++idx) {
            residual = std::max(residual,
                                max_abs_diff(c1.unitary[idx] * s, s * c2.unitary[idx]));
        }
        residual = std::max(residual, max_abs_diff(c1.antilinear[0] * s.conjugate(),
                                                   s * c2.antilinear[0]));
        out.witness = s;
        out.residual = residual;
        out.equivalent = true;
        return true;
    };

    for (const auto& z : basis) {
        if (try_candidate(to_matrix(z))) return out;
    }
    std::mt19937_64 rng(0x5eed);
    for (int trial = 0; trial < 20; ++trial) {
        Eigen::VectorXd z = Eigen::VectorXd::Zero(2 * nn);
        for (const auto& b : basis) {
            const double c = 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
            z += c * b;
        }
        if (z.norm() < 1e-6) continue;
        if (try_candidate(to_matrix(z / z.norm()))) return out;
    }
    return out;  // nonzero solution space but no invertible member found
}

}  // namespace corep
