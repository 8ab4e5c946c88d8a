#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "corep/group.hpp"
#include "corep/linalg.hpp"
#include "corep/rep.hpp"

namespace corep {

/// Immutable data shared by a corepresentation and everything derived from it
/// by similarity: enough to evaluate the as-built matrices on any word, so
/// verification can reach products that are not in the stored element list.
struct CorepContext {
    MagneticGroup group;
    Irrep rep;
    Irrep conjugate;  // g -> conj(rep(a0^-1 g a0))
    CMatrix delta_a0_squared;
    A0Conjugation conjugation;
    Tolerance tol;
};

/// Matrices over the full group: unitary[i] belongs to elements[i] and
/// antilinear[i] to the coset element elements[i] * a0. The accumulated
/// `transform` maps the as-built frame to the current one, so the matrix of
/// any product can be reconstructed on demand.
struct Corep {
    Eigen::Index dimension = 0;
    std::vector<GroupElement> elements;
    std::vector<CMatrix> unitary;
    std::vector<CMatrix> antilinear;
    CMatrix transform;        // identity right after construction
    bool reduced_block = false;  // true for an extracted single block
    CMatrix coset_seed;       // as-built matrix of a0 in the builder frame
    std::shared_ptr<const CorepContext> context;
    std::string provenance;

    CMatrix unitary_of(const Word& w) const;
    CMatrix antilinear_of(const Word& w) const;  // matrix of (word) * a0
};

/// The doubled corepresentation: for each g the block-diagonal pairing of the
/// representation with its conjugate, and for each coset element g * a0 the
/// off-diagonal matrix carrying rep(g) rep(a0^2) on top and the conjugate
/// below. The input representation must already be verified irreducible.
Corep build_corep(const Irrep& rep, const MagneticGroup& group,
                  const std::vector<GroupElement>& elements, const Tolerance& tol);

struct CorepLawReport {
    double residual_gg = 0.0;  // D(g1) D(g2)      = D(g1 g2)
    double residual_ga = 0.0;  // D(g)  D(a)       = D(g a)
    double residual_ag = 0.0;  // D(a)  conj(D(g)) = D(a g)
    double residual_aa = 0.0;  // D(a1) conj(D(a2))= D(a1 a2)
    double max_residual = 0.0;
    std::size_t pairs_checked = 0;
    std::size_t matched_products = 0;
    double threshold = 0.0;
    bool pass = false;
};

/// Checks the four product laws over all pairs (finite) or a seeded sample of
/// pairs capped at 4096. Products that match a stored element use the stored
/// matrix; otherwise the matrix is rebuilt from the product word.
CorepLawReport verify_corep(const Corep& c, const Tolerance& tol, std::uint64_t seed);

/// Change of basis: unitary matrices conjugate as s^-1 D s, coset matrices as
/// s^-1 D conj(s).
Corep apply_similarity(const Corep& c, const CMatrix& s, const Tolerance& tol);

struct EquivalenceResult {
    bool equivalent = false;
    std::optional<CMatrix> witness;
    double residual = 0.0;
    std::size_t space_dimension = 0;  // real dimension of the solution space
};

/// Decides whether two corepresentations are related by a nonsingular S with
/// D1(g) S = S D2(g) and D1(a0) conj(S) = S D2(a0). The combined system is
/// linear over the reals once S is split into real and imaginary parts, so it
/// is solved exactly by one real null-space computation; candidate witnesses
/// are drawn from the null basis and seeded random combinations until an
/// invertible one is found.
EquivalenceResult coreps_equivalent(const Corep& c1, const Corep& c2, const Tolerance& tol);

}  // namespace corep
