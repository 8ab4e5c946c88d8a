#pragma once

#include "corep/classify.hpp"
#include "corep/corep.hpp"
#include "corep/linalg.hpp"

namespace corep {

struct ReductionResult {
    WignerType wigner_type = WignerType::A;
    /// Composite basis change applied to the original doubled corep.
    CMatrix transform;
    /// transpose(transform): row j lists the coefficients of the new basis
    /// function psi_j over (phi_1 .. phi_d, phi_{d+1} .. phi_{2d}), where
    /// phi_{d+i} = a0 phi_i.
    CMatrix basis_coefficients;
    /// Type A: the extracted d-dimensional block corep (the two blocks are
    /// equal). Type B: the canonical 2d corep.
    Corep result;
    double phase_alpha0 = 0.0;
    double phase_xi = 0.0;
    double offdiagonal_residual = 0.0;
    double block_equality_residual = 0.0;  // type A
    double canonical_residual = 0.0;       // type B, against the direct formulas
};

/// Conjugates by blockdiag(E, -N^-1), turning the unitary part into two equal
/// diagonal blocks. Kept as a separately testable step; the reductions below
/// apply their full transform to the original corep in one go.
Corep equalize_blocks(const Corep& c, const CMatrix& intertwiner, const Tolerance& tol);

/// Type A splitting. Applies the splitting transform (with the mu/lambda
/// phase exp(i xi) and the overall coset phase exp(i alpha0)) to the original
/// corep, asserts that every coset matrix becomes block-diagonal with two
/// equal blocks, and extracts the single d-dimensional block
///   g -> rep(g),  g * a0 -> exp(i(alpha0 + xi)) rep(g) N.
/// Called on type B or C data the off-diagonal blocks stay finite; the
/// ReductionError raised then carries the residual.
ReductionResult reduce_type_a(const Corep& c, const CMatrix& intertwiner,
                              double phase_xi, double phase_alpha0, const Tolerance& tol);

/// Type B canonical form via blockdiag(iE, iN^-1): unitary matrices become
/// blockdiag(rep(g), rep(g)) and the coset matrices the canonical
/// [[0, rep(g) N], [-rep(g) N, 0]] family, times exp(i alpha0).
ReductionResult canonicalize_type_b(const Corep& c, const CMatrix& intertwiner,
                                    double phase_alpha0, const Tolerance& tol);

/// Predicate over candidate block-scalar parameters (lambda, mu, nu, rho) of
/// a splitting transform: the determinant must not vanish (lambda rho != mu
/// nu), the off-diagonal cancellation requires lambda rho = -mu nu, and the
/// two magnitudes must agree (|lambda| = |mu|).
bool reduction_condition_check(Complex lambda, Complex mu, Complex nu, Complex rho,
                               double eps);

}  // namespace corep
