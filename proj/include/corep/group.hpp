#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "corep/linalg.hpp"

namespace corep {

/// A word over the unitary generators: entry +k names generator k-1, entry -k
/// its inverse. The empty word is the identity.
using Word = std::vector<int>;

Word inverse_word(const Word& w);
Word concat_words(const Word& a, const Word& b);
std::string word_label(const Word& w, const std::vector<std::string>& names);

/// One element of the full group: a linear transformation plus a flag marking
/// whether the element conjugates scalars. Composition follows
///   (A, p) * (B, q) = (A * conj^p(B), p xor q)
/// where conj^p applies the entrywise conjugate iff p is set.
struct GroupElement {
    CMatrix matrix;
    bool antilinear = false;
    Word word;
};

GroupElement identity_element(Eigen::Index n);
GroupElement compose(const GroupElement& x, const GroupElement& y);
GroupElement inverse_element(const GroupElement& x, const Tolerance& tol);

enum class GroupKind { Finite, Sampled };

struct SamplingOptions {
    std::size_t sample_count = 64;
    std::size_t max_word_length = 8;
    std::uint64_t seed = 0;
};

/// The group G + a0*G: a linear subgroup G given by generators, extended by
/// one antilinear coset generator a0 whose square lies in G. Membership of
/// a0^2 is declared through a0_squared_word and verified, never searched.
struct MagneticGroup {
    std::string name;
    std::vector<GroupElement> unitary_generators;
    std::vector<std::string> generator_names;
    GroupElement a0;
    std::string a0_name = "a0";
    Word a0_squared_word;
    GroupKind kind = GroupKind::Finite;
    std::size_t element_cap = 1024;
    SamplingOptions sampling;
};

/// Checks the structural invariants: generator/antilinear flags, square a0
/// matrix, and compose(a0, a0) matching the declared a0_squared_word.
void validate(const MagneticGroup& group, const Tolerance& tol);

/// Product of images (inverses for negative letters) along a word.
CMatrix evaluate_word(const std::vector<CMatrix>& images, const Word& w,
                      Eigen::Index dim, const Tolerance& tol);

/// Carrier-space matrix of a word over the group's unitary generators.
CMatrix carrier_matrix(const MagneticGroup& group, const Word& w, const Tolerance& tol);

/// Full multiplicative closure of the generators, deduplicated by max-norm
/// proximity within tol.abs_eps. Ordering is deterministic: breadth-first by
/// word length, then lexicographic word. Throws StructureError when the
/// closure exceeds cap.
std::vector<GroupElement> close_finite(const std::vector<GroupElement>& generators,
                                       std::size_t cap, const Tolerance& tol);

/// Deterministic pseudorandom element list for a sampled (continuous) group:
/// the identity, the generators, then sample_count random words of length at
/// most max_word_length over the generators and their inverses.
std::vector<GroupElement> sample_elements(const MagneticGroup& group);

/// Closure (finite) or sample list (sampled).
std::vector<GroupElement> element_set(const MagneticGroup& group, const Tolerance& tol);

/// a0^-1 * g * a0 for linear g. Both passes through the antilinear element
/// collapse into a single entrywise conjugate:
///   matrix = conj(a0.matrix^-1 * g.matrix * a0.matrix).
GroupElement conjugate_by_a0(const MagneticGroup& group, const GroupElement& g,
                             const Tolerance& tol);

/// Nearest element of the list within eps in max-norm, or nullptr.
const GroupElement* find_matching_element(const std::vector<GroupElement>& elements,
                                          const CMatrix& matrix, double eps);

/// Words expressing the a0-conjugates of each generator over the generators
/// themselves. backward[j] solves a0^-1 * gen_j * a0, forward[j] solves
/// a0 * gen_j * a0^-1. Conjugating a whole word goes letter by letter.
struct A0Conjugation {
    std::vector<Word> backward;
    std::vector<Word> forward;

    Word apply(const Word& w) const;          // a0^-1 * (word) * a0
    Word apply_inverse(const Word& w) const;  // a0 * (word) * a0^-1
};

/// Resolves each conjugated generator to a word. Finite groups search the
/// closure; sampled groups search the identity, the generators and their
/// inverses, the sampled elements, and conjugation-shaped products
/// v^-1 * gen * v with v drawn from the element list. Throws StructureError
/// when a conjugate cannot be expressed.
A0Conjugation resolve_a0_conjugation(const MagneticGroup& group,
                                     const std::vector<GroupElement>& elements,
                                     const Tolerance& tol);

}  // namespace corep
