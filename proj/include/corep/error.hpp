#pragma once

#include <stdexcept>
#include <string>

namespace corep {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dimension mismatch between matrix operands.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Matrix is singular or too ill-conditioned to invert reliably.
class SingularMatrixError : public Error {
public:
    SingularMatrixError(const std::string& msg, double condition)
        : Error(msg), condition_(condition) {}
    double condition() const { return condition_; }

private:
    double condition_;
};

/// Group-level inconsistency: closure does not terminate, an element is not
/// expressible over the generators, the antilinear square does not match its
/// declared word, and similar structural failures.
class StructureError : public Error {
public:
    using Error::Error;
};

/// Malformed problem definition.
class ParseError : public Error {
public:
    using Error::Error;
};

/// File could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// Classification could not be carried out consistently (non-scalar
/// intertwiner square, sign constant away from +-1, ...).
class ClassificationError : public Error {
public:
    using Error::Error;
};

/// Reduction postconditions failed. Carries the off-diagonal residual so a
/// caller probing an irreducible corepresentation can read off how far from
/// block-diagonal the transform landed.
class ReductionError : public Error {
public:
    ReductionError(const std::string& msg, double offdiagonal_residual)
        : Error(msg), offdiagonal_residual_(offdiagonal_residual) {}
    double offdiagonal_residual() const { return offdiagonal_residual_; }

private:
    double offdiagonal_residual_;
};

}  // namespace corep
