#pragma once

#include <optional>
#include <string>
#include <vector>

#include "corep/group.hpp"
#include "corep/linalg.hpp"
#include "corep/rep.hpp"

namespace corep {

/// The three ways a representation can sit inside the extended group:
///   A - conjugate-equivalent with positive sign; the doubled corep splits.
///   B - conjugate-equivalent with negative sign; the doubled corep is
///       irreducible (degeneracy doubling).
///   C - conjugate-inequivalent; the doubled corep is irreducible.
enum class WignerType { A, B, C };

char wigner_type_letter(WignerType t);

struct Classification {
    WignerType wigner_type = WignerType::C;
    std::optional<CMatrix> intertwiner;  // absent exactly for type C
    double lambda = 0.0;                 // sign constant, +1 (A) or -1 (B)
    double lambda_imag = 0.0;
    double intertwiner_residual = 0.0;   // max |D(g) N - N Dbar(g)|
    double scalarity_residual = 0.0;     // |N N* Dsq^-1 - lambda E|
    double det_scale = 1.0;              // |det| of the raw basis vector
    std::size_t intertwiner_space_dimension = 0;
    bool unimodular = true;              // all |det D(g)| close to 1
    std::vector<std::string> warnings;
};

/// The conjugate representation g -> conj(D(a0^-1 g a0)), realised through
/// its generator images.
Irrep conjugate_rep(const Irrep& rep, const A0Conjugation& conjugation,
                    const Tolerance& tol);
Irrep conjugate_rep(const Irrep& rep, const MagneticGroup& group,
                    const std::vector<GroupElement>& elements, const Tolerance& tol);

/// Solves D(g) X = X Dbar(g) over the element set. For irreducible inputs the
/// space is zero- or one-dimensional; a nonempty space yields the basis
/// vector rescaled to |det| = 1. A dimension of two or more signals that the
/// input was not irreducible and raises ClassificationError.
std::optional<CMatrix> find_intertwiner(const Irrep& rep, const Irrep& conjugate,
                                        const std::vector<GroupElement>& elements,
                                        const Tolerance& tol,
                                        double* residual = nullptr,
                                        double* det_scale = nullptr,
                                        std::size_t* space_dimension = nullptr);

struct LambdaResult {
    double lambda = 0.0;
    double imag = 0.0;
    double scalarity_residual = 0.0;
};

/// The sign constant: N N* must be a real scalar multiple of D(a0^2). The
/// scalar is read off from the trace of N N* D(a0^2)^-1, which also yields a
/// scalarity residual; a residual above tolerance means an upstream
/// inconsistency.
LambdaResult compute_lambda(const CMatrix& intertwiner, const CMatrix& delta_a0_squared,
                            const Tolerance& tol);

Classification classify(const Irrep& rep, const MagneticGroup& group,
                        const std::vector<GroupElement>& elements, const Tolerance& tol);
Classification classify(const Irrep& rep, const MagneticGroup& group, const Tolerance& tol);

}  // namespace corep
