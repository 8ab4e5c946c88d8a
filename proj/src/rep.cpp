#include "corep/rep.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>

namespace corep {

namespace {

constexpr std::size_t kPairCap = 4096;

// Deterministic pair schedule: all pairs when the square fits under the cap,
// otherwise a seeded uniform sample of index pairs.
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

void validate(const Irrep& rep, const MagneticGroup& group, const Tolerance& tol) {
    if (rep.dimension < 1) {
        throw Error("irrep '" + rep.label + "': dimension must be positive");
    }
    if (rep.generator_images.size() != group.unitary_generators.size()) {
        throw Error("irrep '" + rep.label + "': expected " +
                    std::to_string(group.unitary_generators.size()) +
                    " generator images, got " +
                    std::to_string(rep.generator_images.size()));
    }
    for (std::size_t j = 0; j < rep.generator_images.size(); ++j) {
        const CMatrix& m = rep.generator_images[j];
        if (m.rows() != rep.dimension || m.cols() != rep.dimension) {
            throw Error("irrep '" + rep.label + "': image " + std::to_string(j + 1) +
                        " is not " + std::to_string(rep.dimension) + "x" +
                        std::to_string(rep.dimension));
        }
        require_finite(m, "irrep '" + rep.label + "' image");
        inverse(m, tol);
    }
}

CMatrix evaluate(const Irrep& rep, const Word& word, const Tolerance& tol) {
    return evaluate_word(rep.generator_images, word, rep.dimension, tol);
}

CMatrix evaluate(const Irrep& rep, const GroupElement& g, const Tolerance& tol) {
    if (g.antilinear) {
        throw Error("evaluate expects a linear element");
    }
    return evaluate(rep, g.word, tol);
}

HomomorphismReport verify_homomorphism(const Irrep& rep, const MagneticGroup& group,
                                       const std::vector<GroupElement>& elements,
                                       const Tolerance& tol) {
    HomomorphismReport report;
    std::vector<CMatrix> values;
    values.reserve(elements.size());
    double scale = 1.0;
    for (const auto& e : elements) {
        values.push_back(evaluate(rep, e, tol));
        scale = std::max(scale, max_abs(values.back()));
        scale = std::max(scale, max_abs(e.matrix));
    }

    const auto schedule = pair_schedule(elements.size(), group.sampling.seed);
    for (const auto& [i, j] : schedule) {
        const CMatrix product_carrier = elements[i].matrix *
                                        elements[j].matrix;
        const GroupElement* match = find_matching_element(
            elements, product_carrier, tol.threshold(std::max(1.0, max_abs(product_carrier))));
        if (!match) {
            if (group.kind == GroupKind::Finite) {
                // A finite closure must contain every product.
                report.max_residual = std::numeric_limits<double>::infinity();
                report.worst_pair = word_label(elements[i].word, group.generator_names) +
                                    " , " +
                                    word_label(elements[j].word, group.generator_names);
                report.pairs_checked++;
                report.pass = false;
                return report;
            }
            report.pairs_skipped++;
            continue;
        }
        const double residual =
            max_abs_diff(values[i] * values[j], evaluate(rep, match->word, tol));
        report.pairs_checked++;
        if (match->word != concat_words(elements[i].word, elements[j].word)) {
            report.relation_instances++;
        }
        if (residual > report.max_residual) {
            report.max_residual = residual;
            report.worst_pair = word_label(elements[i].word, group.generator_names) +
                                " , " +
                                word_label(elements[j].word, group.generator_names);
        }
    }
    report.pass = report.max_residual <= tol.threshold(scale * scale);
    return report;
}

IrreducibilityResult is_irreducible(const Irrep& rep,
                                    const std::vector<GroupElement>& elements,
                                    const Tolerance& tol) {
    std::vector<std::pair<CMatrix, CMatrix>> pairs;
    pairs.reserve(elements.size());
    for (const auto& e : elements) {
        CMatrix m = evaluate(rep, e, tol);
        pairs.emplace_back(m, m);
    }
    const auto basis = solve_intertwiner_space(pairs, tol);
    return IrreducibilityResult{basis.size() == 1, basis.size()};
}

}  // namespace corep
