#include "corep/pipeline.hpp"

#include <algorithm>

#include "corep/version.hpp"

namespace corep {

namespace {

bool at_least(Verb v, Verb stage) {
    return static_cast<int>(v) >= static_cast<int>(stage);
}

std::string kind_of(const std::exception& e) {
    if (dynamic_cast<const ShapeError*>(&e)) return "shape";
    if (dynamic_cast<const SingularMatrixError*>(&e)) return "singular";
    if (dynamic_cast<const ParseError*>(&e)) return "parse";
    if (dynamic_cast<const IoError*>(&e)) return "io";
    if (dynamic_cast<const StructureError*>(&e)) return "structure";
    if (dynamic_cast<const ReductionError*>(&e)) return "reduction";
    if (dynamic_cast<const ClassificationError*>(&e)) return "classification";
    return "error";
}

// Conjugates the as-built corep by the transpose of the reported basis matrix
// and measures the distance to the reduced/canonical matrices. This is the
// end-to-end consistency check tying the basis bookkeeping to the matrices.
double basis_consistency_residual(const Corep& original, const ReductionResult& red,
                                  const Tolerance& tol, double* scale_out) {
    const CMatrix s = red.basis_coefficients.transpose();
    const Corep conjugated = apply_similarity(original, s, tol);
    double residual = 0.0;
    double scale = 1.0;
    for (std::size_t i = 0; i < conjugated.elements.size(); ++i) {
        scale = std::max({scale, max_abs(conjugated.unitary[i]),
                          max_abs(conjugated.antilinear[i])});
        if (red.wigner_type == WignerType::A) {
            residual = std::max(
                {residual,
                 max_abs_diff(conjugated.unitary[i],
                              blockdiag(red.result.unitary[i], red.result.unitary[i])),
                 max_abs_diff(conjugated.antilinear[i],
                              blockdiag(red.result.antilinear[i],
                                        red.result.antilinear[i]))});
        } else {
            residual = std::max({residual,
                                 max_abs_diff(conjugated.unitary[i], red.result.unitary[i]),
                                 max_abs_diff(conjugated.antilinear[i],
                                              red.result.antilinear[i])});
        }
    }
    if (scale_out) *scale_out = scale;
    return residual;
}

}  // namespace

Verb parse_verb(const std::string& name) {
    if (name == "verify") return Verb::Verify;
    if (name == "classify") return Verb::Classify;
    if (name == "build") return Verb::Build;
    if (name == "reduce") return Verb::Reduce;
    throw Error("unknown verb '" + name + "' (expected verify, classify, build or reduce)");
}

std::string verb_name(Verb v) {
    switch (v) {
        case Verb::Verify: return "verify";
        case Verb::Classify: return "classify";
        case Verb::Build: return "build";
        case Verb::Reduce: return "reduce";
    }
    return "?";
}

Report run_pipeline(const ProblemDefinition& def, Verb verb) {
    const Tolerance& tol = def.options.tol;
    tol.validate();
    validate(def.group, tol);

    Report report;
    report.tool_version = COREP_VERSION_STRING;
    report.problem_name = def.name;
    report.verb = verb;
    report.kind = def.group.kind;
    report.seed = def.options.seed;
    report.tol = tol;
    report.phases = def.options.phases;
    report.generator_names = def.group.generator_names;
    report.a0_name = def.group.a0_name;

    const auto elements = element_set(def.group, tol);
    report.element_count = elements.size();

    std::vector<Irrep> ordered = def.irreps;
    std::sort(ordered.begin(), ordered.end(),
              [](const Irrep& a, const Irrep& b) { return a.label < b.label; });

    for (const auto& rep : ordered) {
        IrrepOutcome outcome;
        outcome.label = rep.label;
        outcome.dimension = rep.dimension;
        try {
            validate(rep, def.group, tol);

            outcome.homomorphism = verify_homomorphism(rep, def.group, elements, tol);
            outcome.irreducibility = is_irreducible(rep, elements, tol);
            bool passed = outcome.homomorphism->pass;
            if (!outcome.homomorphism->pass) {
                outcome.error_kind = "verification";
                outcome.error_message =
                    "homomorphism check failed with residual " +
                    std::to_string(outcome.homomorphism->max_residual) +
                    (outcome.homomorphism->worst_pair.empty()
                         ? ""
                         : " at pair (" + outcome.homomorphism->worst_pair + ")");
                report.irreps.push_back(std::move(outcome));
                continue;
            }
            if (!outcome.irreducibility->irreducible) {
                outcome.error_kind = "verification";
                outcome.error_message =
                    "representation is not irreducible (commutant dimension " +
                    std::to_string(outcome.irreducibility->commutant_dimension) +
                    "); decompose it before classifying";
                report.irreps.push_back(std::move(outcome));
                continue;
            }

            if (at_least(verb, Verb::Classify)) {
                outcome.classification = classify(rep, def.group, elements, tol);
            }

            if (at_least(verb, Verb::Build)) {
                outcome.corep = build_corep(rep, def.group, elements, tol);
                outcome.corep_laws = verify_corep(*outcome.corep, tol, def.options.seed);
                passed = passed && outcome.corep_laws->pass;
            }

            if (at_least(verb, Verb::Reduce) &&
                outcome.classification->wigner_type != WignerType::C) {
                const CMatrix& n = *outcome.classification->intertwiner;
                if (outcome.classification->wigner_type == WignerType::A) {
                    outcome.reduction =
                        reduce_type_a(*outcome.corep, n, def.options.phases.xi,
                                      def.options.phases.alpha0, tol);
                    outcome.reduced_laws =
                        verify_corep(outcome.reduction->result, tol, def.options.seed);
                    passed = passed && outcome.reduced_laws->pass;
                } else {
                    outcome.reduction = canonicalize_type_b(
                        *outcome.corep, n, def.options.phases.alpha0, tol);
                }
                double basis_scale = 1.0;
                outcome.basis_consistency_residual = basis_consistency_residual(
                    *outcome.corep, *outcome.reduction, tol, &basis_scale);
                passed = passed &&
                         outcome.basis_consistency_residual <= tol.threshold(basis_scale);
            }

            outcome.ok = true;
            outcome.passed = passed;
        } catch (const std::exception& e) {
            outcome.ok = false;
            outcome.passed = false;
            outcome.error_kind = kind_of(e);
            outcome.error_message = e.what();
        }
        report.irreps.push_back(std::move(outcome));
    }

    report.all_passed =
        std::all_of(report.irreps.begin(), report.irreps.end(),
                    [](const IrrepOutcome& o) { return o.ok && o.passed; });
    return report;
}

}  // namespace corep
