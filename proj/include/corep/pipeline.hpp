#pragma once

#include <optional>
#include <string>
#include <vector>

#include "corep/classify.hpp"
#include "corep/corep.hpp"
#include "corep/problem.hpp"
#include "corep/reduce.hpp"

namespace corep {

/// The four independently runnable stages. Each later verb includes the
/// earlier checks: verify = homomorphism + irreducibility, classify adds the
/// type assignment, build adds the doubled corep with its law check, reduce
/// adds the splitting / canonical form and the basis consistency check.
enum class Verb { Verify, Classify, Build, Reduce };

Verb parse_verb(const std::string& name);
std::string verb_name(Verb v);

struct IrrepOutcome {
    std::string label;
    Eigen::Index dimension = 0;
    bool ok = false;              // no error raised
    bool passed = false;          // ok and every verification below tolerance
    std::string error_kind;
    std::string error_message;
    std::optional<HomomorphismReport> homomorphism;
    std::optional<IrreducibilityResult> irreducibility;
    std::optional<Classification> classification;
    std::optional<CorepLawReport> corep_laws;
    std::optional<Corep> corep;
    std::optional<ReductionResult> reduction;
    std::optional<CorepLawReport> reduced_laws;     // type A block re-check
    double basis_consistency_residual = -1.0;       // -1 when not computed
};

struct Report {
    int schema_version = 1;
    std::string tool_version;
    std::string problem_name;
    Verb verb = Verb::Reduce;
    GroupKind kind = GroupKind::Finite;
    std::size_t element_count = 0;
    std::uint64_t seed = 0;
    Tolerance tol;
    PhaseOptions phases;
    std::vector<std::string> generator_names;
    std::string a0_name;
    std::vector<IrrepOutcome> irreps;  // sorted by label
    bool all_passed = false;
};

/// Runs the requested stage for every irrep. Per-irrep errors are captured in
/// the outcome and the pipeline moves on to the next irrep.
Report run_pipeline(const ProblemDefinition& def, Verb verb);

}  // namespace corep
