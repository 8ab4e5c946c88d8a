#pragma once

#include <string>
#include <vector>

#include "corep/group.hpp"
#include "corep/linalg.hpp"

namespace corep {

/// A representation of the unitary part, given by one image per generator.
/// Elements are evaluated by word; the representation dimension is
/// independent of the carrier dimension of the group elements.
struct Irrep {
    Eigen::Index dimension = 0;
    std::vector<CMatrix> generator_images;
    std::string label;
};

/// Shape and invertibility checks against the owning group.
void validate(const Irrep& rep, const MagneticGroup& group, const Tolerance& tol);

CMatrix evaluate(const Irrep& rep, const Word& word, const Tolerance& tol);
CMatrix evaluate(const Irrep& rep, const GroupElement& g, const Tolerance& tol);

struct HomomorphismReport {
    double max_residual = 0.0;
    std::size_t pairs_checked = 0;
    /// Pairs whose product matrix matched an element of the list, i.e. pairs
    /// that exercised a genuine relation between distinct words.
    std::size_t relation_instances = 0;
    std::size_t pairs_skipped = 0;
    bool pass = false;
    std::string worst_pair;
};

/// Word-evaluation consistency over the element set: for every (or, above the
/// pair cap, a seeded sample of) pair (g, h), the product matrix is matched
/// back into the element list and the two word evaluations are compared.
/// For finite groups a missing match is itself a failure.
HomomorphismReport verify_homomorphism(const Irrep& rep, const MagneticGroup& group,
                                       const std::vector<GroupElement>& elements,
                                       const Tolerance& tol);

struct IrreducibilityResult {
    bool irreducible = false;
    std::size_t commutant_dimension = 0;
};

/// Dimension of { X : D(g) X = X D(g) for all g in elements }; the
/// representation is irreducible exactly when this is one.
IrreducibilityResult is_irreducible(const Irrep& rep,
                                    const std::vector<GroupElement>& elements,
                                    const Tolerance& tol);

}  // namespace corep
