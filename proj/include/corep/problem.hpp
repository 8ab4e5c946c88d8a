#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "corep/group.hpp"
#include "corep/rep.hpp"

namespace corep {

struct PhaseOptions {
    double xi = 0.0;      // phase of the two split blocks relative to N
    double alpha0 = 0.0;  // overall phase of the coset matrices
};

struct ProblemOptions {
    Tolerance tol;
    std::uint64_t seed = 0;  // seeds pair sampling in the verifications
    PhaseOptions phases;
};

/// One problem file: a group, the representations to analyse, and options.
struct ProblemDefinition {
    int schema_version = 1;
    std::string name;
    MagneticGroup group;
    std::vector<Irrep> irreps;
    ProblemOptions options;
};

/// Parses and eagerly validates a problem document (JSON). Matrices are
/// rectangular arrays of [re, im] pairs. Errors carry the offending field or
/// irrep label.
ProblemDefinition parse_problem(const std::string& text);
ProblemDefinition load_problem(const std::string& path);

}  // namespace corep
