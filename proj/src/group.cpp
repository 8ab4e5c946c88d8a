#include "corep/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <optional>
#include <random>
#include <sstream>

namespace corep {

namespace {

std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t n) {
    // Modulo bias is irrelevant at these ranges; plain modulo keeps the
    // sequence identical across standard library implementations.
    return rng() % n;
}

int random_letter(std::mt19937_64& rng, std::size_t generator_count) {
    const auto pick = next_below(rng, 2 * generator_count);
    const int index = static_cast<int>(pick / 2) + 1;
    return (pick % 2 == 0) ? index : -index;
}

}  // namespace

Word inverse_word(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& letter : out) letter = -letter;
    return out;
}

Word concat_words(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::string word_label(const Word& w, const std::vector<std::string>& names) {
    if (w.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += "*";
        const int letter = w[i];
        const std::size_t index = static_cast<std::size_t>(std::abs(letter)) - 1;
        out += index < names.size() ? names[index] : "g" + std::to_string(index + 1);
        if (letter < 0) out += "^-1";
    }
    return out;
}

GroupElement identity_element(Eigen::Index n) {
    return GroupElement{identity_matrix(n), false, {}};
}

GroupElement compose(const GroupElement& x, const GroupElement& y) {
    if (x.matrix.cols() != y.matrix.rows()) {
        throw ShapeError("compose: carrier dimensions do not match");
    }
    GroupElement out;
    out.matrix = x.antilinear ? CMatrix(x.matrix * y.matrix.conjugate())
                              : CMatrix(x.matrix * y.matrix);
    out.antilinear = x.antilinear != y.antilinear;
    // Word bookkeeping is only meaningful while composing linear elements;
    // products through an antilinear factor must be re-resolved by matrix.
    out.word = concat_words(x.word, y.word);
    return out;
}

GroupElement inverse_element(const GroupElement& x, const Tolerance& tol) {
    GroupElement out;
    // For antilinear (A, 1) the inverse is (conj(A)^-1, 1).
    out.matrix = x.antilinear ? CMatrix(inverse(x.matrix.conjugate(), tol))
                              : CMatrix(inverse(x.matrix, tol));
    out.antilinear = x.antilinear;
    out.word = inverse_word(x.word);
    return out;
}

CMatrix evaluate_word(const std::vector<CMatrix>& images, const Word& w,
                      Eigen::Index dim, const Tolerance& tol) {
    CMatrix out = identity_matrix(dim);
    for (int letter : w) {
        if (letter == 0 || static_cast<std::size_t>(std::abs(letter)) > images.size()) {
            throw Error("word references unknown generator index " + std::to_string(letter));
        }
        const CMatrix& image = images[static_cast<std::size_t>(std::abs(letter)) - 1];
        out = letter > 0 ? CMatrix(out * image) : CMatrix(out * inverse(image, tol));
    }
    return out;
}

CMatrix carrier_matrix(const MagneticGroup& group, const Word& w, const Tolerance& tol) {
    std::vector<CMatrix> images;
    images.reserve(group.unitary_generators.size());
    for (const auto& g : group.unitary_generators) images.push_back(g.matrix);
    return evaluate_word(images, w, group.a0.matrix.rows(), tol);
}

void validate(const MagneticGroup& group, const Tolerance& tol) {
    tol.validate();
    if (!group.a0.antilinear) {
        throw StructureError("a0 must be antilinear");
    }
    const Eigen::Index n = group.a0.matrix.rows();
    if (group.a0.matrix.cols() != n) {
        throw StructureError("a0 matrix must be square");
    }
    require_finite(group.a0.matrix, "a0");
    inverse(group.a0.matrix, tol);  // rejects a singular a0
    for (std::size_t i = 0; i < group.unitary_generators.size(); ++i) {
        const auto& g = group.unitary_generators[i];
        if (g.antilinear) {
            throw StructureError("unitary generator " + std::to_string(i + 1) +
                                 " is flagged antilinear");
        }
        if (g.matrix.rows() != n || g.matrix.cols() != n) {
            throw StructureError("generator " + std::to_string(i + 1) +
                                 " does not match the carrier dimension");
        }
        require_finite(g.matrix, "generator");
        inverse(g.matrix, tol);
    }
    // a0 composed with itself must land on the declared word in G.
    const GroupElement square = compose(group.a0, group.a0);
    const CMatrix declared = carrier_matrix(group, group.a0_squared_word, tol);
    const double scale = std::max(max_abs(square.matrix), max_abs(declared));
    if (max_abs_diff(square.matrix, declared) > tol.threshold(scale)) {
        throw StructureError(
            "a0 squared does not match the declared word over the generators");
    }
    if (group.kind == GroupKind::Sampled && group.sampling.max_word_length == 0) {
        throw StructureError("sampled group needs max_word_length >= 1");
    }
}

std::vector<GroupElement> close_finite(const std::vector<GroupElement>& generators,
                                       std::size_t cap, const Tolerance& tol) {
    if (cap < 1) throw Error("closure cap must be at least 1");
    Eigen::Index n = 0;
    for (const auto& g : generators) {
        if (g.antilinear) throw StructureError("closure generators must be linear");
        if (n == 0) n = g.matrix.rows();
        if (g.matrix.rows() != n || g.matrix.cols() != n) {
            throw ShapeError("closure generators must share one square dimension");
        }
    }
    if (n == 0) n = 1;  // no generators: the trivial group

    std::vector<GroupElement> closure;
    closure.push_back(identity_element(n));
    std::vector<std::size_t> frontier{0};

    // Breadth-first over word length; within a level the candidates appear in
    // lexicographic word order because parents already do.
    while (!frontier.empty()) {
        std::vector<std::size_t> added;
        for (std::size_t parent : frontier) {
            for (std::size_t j = 0; j < generators.size(); ++j) {
                GroupElement candidate = compose(closure[parent], generators[j]);
                candidate.word =
                    concat_words(closure[parent].word, {static_cast<int>(j) + 1});
                if (find_matching_element(closure, candidate.matrix, tol.abs_eps)) {
                    continue;
                }
                if (closure.size() >= cap) {
                    throw StructureError(
                        "generator closure exceeded the element cap of " +
                        std::to_string(cap) + "; the group is not finite at this scale");
                }
                closure.push_back(std::move(candidate));
                added.push_back(closure.size() - 1);
            }
        }
        frontier = std::move(added);
    }
    return closure;
}

std::vector<GroupElement> sample_elements(const MagneticGroup& group) {
    if (group.kind != GroupKind::Sampled) {
        throw Error("sample_elements called on a non-sampled group");
    }
    const Tolerance tol;  // evaluation-side inverses only
    const Eigen::Index n = group.a0.matrix.rows();
    std::vector<GroupElement> out;
    out.push_back(identity_element(n));
    for (std::size_t j = 0; j < group.unitary_generators.size(); ++j) {
        GroupElement g = group.unitary_generators[j];
        g.word = {static_cast<int>(j) + 1};
        out.push_back(std::move(g));
    }
    if (group.unitary_generators.empty()) return out;

    std::mt19937_64 rng(group.sampling.seed);
    for (std::size_t k = 0; k < group.sampling.sample_count; ++k) {
        const std::size_t length =
            1 + static_cast<std::size_t>(next_below(rng, group.sampling.max_word_length));
        Word w;
        w.reserve(length);
        for (std::size_t i = 0; i < length; ++i) {
            w.push_back(random_letter(rng, group.unitary_generators.size()));
        }
        GroupElement e;
        e.matrix = carrier_matrix(group, w, tol);
        e.antilinear = false;
        e.word = std::move(w);
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<GroupElement> element_set(const MagneticGroup& group, const Tolerance& tol) {
    if (group.kind == GroupKind::Finite) {
        return close_finite(group.unitary_generators, group.element_cap, tol);
    }
    return sample_elements(group);
}

GroupElement conjugate_by_a0(const MagneticGroup& group, const GroupElement& g,
                             const Tolerance& tol) {
    if (g.antilinear) {
        throw Error("conjugate_by_a0 expects a linear element");
    }
    const CMatrix a = group.a0.matrix;
    GroupElement out;
    out.matrix = (inverse(a, tol) * g.matrix * a).conjugate();
    out.antilinear = false;
    // The word over the generators is unknown here; callers resolve it by
    // matrix matching when they need one.
    return out;
}

const GroupElement* find_matching_element(const std::vector<GroupElement>& elements,
                                          const CMatrix& matrix, double eps) {
    const GroupElement* best = nullptr;
    double best_distance = eps;
    for (const auto& e : elements) {
        if (e.matrix.rows() != matrix.rows() || e.matrix.cols() != matrix.cols()) continue;
        const double d = max_abs_diff(e.matrix, matrix);
        if (d < best_distance) {
            best = &e;
            best_distance = d;
        }
    }
    return best;
}

Word A0Conjugation::apply(const Word& w) const {
    Word out;
    for (int letter : w) {
        const auto& base = backward.at(static_cast<std::size_t>(std::abs(letter)) - 1);
        const Word piece = letter > 0 ? base : inverse_word(base);
        out.insert(out.end(), piece.begin(), piece.end());
    }
    return out;
}

Word A0Conjugation::apply_inverse(const Word& w) const {
    Word out;
    for (int letter : w) {
        const auto& base = forward.at(static_cast<std::size_t>(std::abs(letter)) - 1);
        const Word piece = letter > 0 ? base : inverse_word(base);
        out.insert(out.end(), piece.begin(), piece.end());
    }
    return out;
}

namespace {

// Word whose carrier matrix lands on `target`, searched over a deterministic
// candidate list. Finite groups pass the closure and stop there; sampled
// groups also try inverses and conjugation-shaped products, which covers
// coset generators of the form a0*g with g in the sample.
std::optional<Word> resolve_matrix_to_word(const MagneticGroup& group,
                                           const std::vector<GroupElement>& elements,
                                           const CMatrix& target, const Tolerance& tol) {
    const double eps = tol.threshold(std::max(1.0, max_abs(target)));
    if (const auto* hit = find_matching_element(elements, target, eps)) {
        return hit->word;
    }
    if (group.kind == GroupKind::Finite) {
        return std::nullopt;
    }
    const std::size_t k = group.unitary_generators.size();
    for (std::size_t j = 0; j < k; ++j) {
        const Word inv{-(static_cast<int>(j) + 1)};
        if (approx_equal(carrier_matrix(group, inv, tol), target, eps)) return inv;
    }
    for (const auto& e : elements) {
        const Word inv = inverse_word(e.word);
        if (approx_equal(carrier_matrix(group, inv, tol), target, eps)) return inv;
    }
    for (const auto& v : elements) {
        const CMatrix vm = v.matrix;
        const CMatrix vi = inverse(vm, tol);
        for (std::size_t j = 0; j < k; ++j) {
            const CMatrix& gm = group.unitary_generators[j].matrix;
            const int letter = static_cast<int>(j) + 1;
            if (approx_equal(vi * gm * vm, target, eps)) {
                return concat_words(concat_words(inverse_word(v.word), {letter}), v.word);
            }
            if (approx_equal(vm * gm * vi, target, eps)) {
                return concat_words(concat_words(v.word, {letter}), inverse_word(v.word));
            }
            const CMatrix gi = inverse(gm, tol);
            if (approx_equal(vi * gi * vm, target, eps)) {
                return concat_words(concat_words(inverse_word(v.word), {-letter}), v.word);
            }
            if (approx_equal(vm * gi * vi, target, eps)) {
                return concat_words(concat_words(v.word, {-letter}), inverse_word(v.word));
            }
        }
    }
    return std::nullopt;
}

}  // namespace

A0Conjugation resolve_a0_conjugation(const MagneticGroup& group,
                                     const std::vector<GroupElement>& elements,
                                     const Tolerance& tol) {
    const CMatrix a = group.a0.matrix;
    const CMatrix ai = inverse(a, tol);
    A0Conjugation out;
    for (std::size_t j = 0; j < group.unitary_generators.size(); ++j) {
        const CMatrix& m = group.unitary_generators[j].matrix;
        const CMatrix backward = (ai * m * a).conjugate();
        const CMatrix forward = (a * m.conjugate() * ai);
        auto bw = resolve_matrix_to_word(group, elements, backward, tol);
        auto fw = resolve_matrix_to_word(group, elements, forward, tol);
        if (!bw || !fw) {
            throw StructureError(
                "cannot express the a0-conjugate of generator " + std::to_string(j + 1) +
                " over the given generators; the element set does not witness a0-closure");
        }
        out.backward.push_back(std::move(*bw));
        out.forward.push_back(std::move(*fw));
    }
    return out;
}

}  // namespace corep
