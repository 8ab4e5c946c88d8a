#include "corep/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace corep {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json matrix_to_json(const CMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back({m(r, c).real(), m(r, c).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json law_report_to_json(const CorepLawReport& laws) {
    ordered_json j;
    j["residual_gg"] = laws.residual_gg;
    j["residual_ga"] = laws.residual_ga;
    j["residual_ag"] = laws.residual_ag;
    j["residual_aa"] = laws.residual_aa;
    j["max_residual"] = laws.max_residual;
    j["pairs_checked"] = laws.pairs_checked;
    j["matched_products"] = laws.matched_products;
    j["threshold"] = laws.threshold;
    j["pass"] = laws.pass;
    return j;
}

// For finite groups the whole table is emitted; sampled element lists are cut
// down to the identity, the generators and the antilinear generator to keep
// reports readable. Matrices are always re-read from the corep itself.
ordered_json corep_to_json(const Corep& c, const Report& report) {
    ordered_json j;
    j["dimension"] = c.dimension;
    j["element_count"] = c.elements.size();
    const bool full = report.kind == GroupKind::Finite;
    const std::size_t count =
        full ? c.elements.size()
             : std::min(c.elements.size(), report.generator_names.size() + 1);
    j["elements_included"] = full ? "all" : "identity_and_generators";
    ordered_json items = ordered_json::array();
    for (std::size_t i = 0; i < count; ++i) {
        ordered_json item;
        item["label"] = word_label(c.elements[i].word, report.generator_names);
        item["coset_label"] =
            word_label(c.elements[i].word, report.generator_names) + "*" + report.a0_name;
        item["unitary"] = matrix_to_json(c.unitary[i]);
        item["antilinear"] = matrix_to_json(c.antilinear[i]);
        items.push_back(std::move(item));
    }
    j["matrices"] = std::move(items);
    return j;
}

std::string format_residual(double value) {
    std::ostringstream out;
    out << std::scientific << std::setprecision(1) << value;
    return out.str();
}

std::string format_entry(const Complex& z) {
    std::ostringstream out;
    out << std::setprecision(6) << z.real();
    if (z.imag() != 0.0) {
        out << (z.imag() > 0 ? "+" : "-") << std::setprecision(6)
            << std::abs(z.imag()) << "i";
    }
    return out.str();
}

void print_matrix(std::ostream& out, const std::string& name, const CMatrix& m,
                  const std::string& indent) {
    std::vector<std::vector<std::string>> cells(m.rows());
    std::size_t width = 0;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            cells[r].push_back(format_entry(m(r, c)));
            width = std::max(width, cells[r].back().size());
        }
    }
    out << indent << name << " =\n";
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        out << indent << "  [";
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            out << " " << std::setw(static_cast<int>(width)) << cells[r][c];
        }
        out << " ]\n";
    }
}

// Corep matrices for the generators and for a0, looked up by word.
void print_generator_matrices(std::ostream& out, const Corep& c, const Report& report) {
    if (c.dimension > 6) return;
    for (std::size_t j = 0; j < report.generator_names.size(); ++j) {
        const Word word{static_cast<int>(j) + 1};
        for (std::size_t i = 0; i < c.elements.size(); ++i) {
            if (c.elements[i].word == word) {
                print_matrix(out, "D(" + report.generator_names[j] + ")", c.unitary[i],
                             "   ");
                break;
            }
        }
    }
    print_matrix(out, "D(" + report.a0_name + ")", c.antilinear[0], "   ");
}

std::string type_string(const IrrepOutcome& o) {
    if (!o.classification) return "-";
    return std::string(1, wigner_type_letter(o.classification->wigner_type));
}

}  // namespace

std::string emit_report_structured(const Report& report) {
    ordered_json doc;
    doc["schema_version"] = report.schema_version;
    doc["tool"] = {{"name", "corep"}, {"version", report.tool_version}};

    ordered_json problem;
    problem["name"] = report.problem_name;
    problem["verb"] = verb_name(report.verb);
    problem["kind"] = report.kind == GroupKind::Finite ? "finite" : "sampled";
    problem["element_count"] = report.element_count;
    problem["seed"] = report.seed;
    problem["tolerance"] = {{"abs_eps", report.tol.abs_eps},
                            {"rel_eps", report.tol.rel_eps}};
    problem["phases"] = {{"xi", report.phases.xi}, {"alpha0", report.phases.alpha0}};
    doc["problem"] = std::move(problem);

    ordered_json irreps = ordered_json::array();
    for (const auto& o : report.irreps) {
        ordered_json j;
        j["label"] = o.label;
        j["dimension"] = o.dimension;
        j["status"] = o.ok ? "ok" : "error";
        if (!o.ok) {
            j["error"] = {{"kind", o.error_kind}, {"message", o.error_message}};
        } else {
            j["error"] = nullptr;
        }
        if (o.homomorphism) {
            j["homomorphism"] = {{"max_residual", o.homomorphism->max_residual},
                                 {"pairs_checked", o.homomorphism->pairs_checked},
                                 {"relation_instances", o.homomorphism->relation_instances},
                                 {"pairs_skipped", o.homomorphism->pairs_skipped},
                                 {"pass", o.homomorphism->pass}};
        }
        if (o.irreducibility) {
            j["irreducibility"] = {
                {"commutant_dimension", o.irreducibility->commutant_dimension},
                {"irreducible", o.irreducibility->irreducible}};
        }
        if (o.classification) {
            const auto& cls = *o.classification;
            ordered_json c;
            c["wigner_type"] = std::string(1, wigner_type_letter(cls.wigner_type));
            if (cls.intertwiner) {
                c["lambda"] = cls.lambda;
                c["lambda_imag"] = cls.lambda_imag;
                c["intertwiner"] = matrix_to_json(*cls.intertwiner);
                c["intertwiner_residual"] = cls.intertwiner_residual;
                c["scalarity_residual"] = cls.scalarity_residual;
                c["normalization"] = {{"det_scale", cls.det_scale}};
            } else {
                c["lambda"] = nullptr;
                c["intertwiner"] = nullptr;
            }
            c["intertwiner_space_dimension"] = cls.intertwiner_space_dimension;
            c["unimodular"] = cls.unimodular;
            c["warnings"] = cls.warnings;
            j["classification"] = std::move(c);
        }
        if (o.corep_laws) j["corep_laws"] = law_report_to_json(*o.corep_laws);
        if (o.corep) j["corep"] = corep_to_json(*o.corep, report);
        if (o.classification && !o.reduction && o.ok &&
            static_cast<int>(report.verb) >= static_cast<int>(Verb::Reduce)) {
            // Type c: nothing to reduce, the doubled corep itself is the result.
            j["reduction"] = {{"kind", "type_c_irreducible"},
                              {"note", "the corep of dimension " +
                                           std::to_string(2 * o.dimension) +
                                           " is irreducible"}};
        }
        if (o.reduction) {
            const auto& red = *o.reduction;
            ordered_json r;
            r["kind"] = red.wigner_type == WignerType::A ? "type_a_reduced"
                                                         : "type_b_canonical";
            r["phase_alpha0"] = red.phase_alpha0;
            r["phase_xi"] = red.phase_xi;
            r["transform"] = matrix_to_json(red.transform);
            r["basis_coefficients"] = matrix_to_json(red.basis_coefficients);
            r["offdiagonal_residual"] = red.offdiagonal_residual;
            r["block_equality_residual"] = red.block_equality_residual;
            r["canonical_residual"] = red.canonical_residual;
            r["basis_consistency_residual"] = o.basis_consistency_residual;
            r["result"] = corep_to_json(red.result, report);
            if (o.reduced_laws) r["result_laws"] = law_report_to_json(*o.reduced_laws);
            j["reduction"] = std::move(r);
        }
        j["passed"] = o.passed;
        irreps.push_back(std::move(j));
    }
    doc["irreps"] = std::move(irreps);
    doc["all_passed"] = report.all_passed;
    return doc.dump(2) + "\n";
}

std::string emit_report_text(const Report& report) {
    std::ostringstream out;
    out << "corep " << report.tool_version << "\n";
    out << "problem: " << report.problem_name << "   verb: " << verb_name(report.verb)
        << "\n";
    out << "group: " << (report.kind == GroupKind::Finite ? "finite" : "sampled") << ", "
        << report.element_count << " elements, " << report.generator_names.size()
        << " generator(s) + antilinear " << report.a0_name << "\n";
    out << "tolerance: abs " << report.tol.abs_eps << ", rel " << report.tol.rel_eps
        << "   seed: " << report.seed << "   phases: xi " << report.phases.xi
        << ", alpha0 " << report.phases.alpha0 << "\n\n";

    out << std::left << std::setw(12) << "irrep" << std::setw(5) << "d" << std::setw(6)
        << "type" << std::setw(12) << "lambda" << std::setw(14) << "max residual"
        << "outcome"
        << "\n";
    for (const auto& o : report.irreps) {
        double max_residual = 0.0;
        if (o.homomorphism) max_residual = std::max(max_residual, o.homomorphism->max_residual);
        if (o.corep_laws) max_residual = std::max(max_residual, o.corep_laws->max_residual);
        if (o.reduction) {
            max_residual = std::max({max_residual, o.reduction->offdiagonal_residual,
                                     o.reduction->block_equality_residual,
                                     o.reduction->canonical_residual});
        }
        std::ostringstream lambda;
        if (o.classification && o.classification->intertwiner) {
            lambda << std::showpos << std::fixed << std::setprecision(6)
                   << o.classification->lambda;
        } else {
            lambda << "-";
        }
        out << std::left << std::setw(12) << o.label << std::setw(5) << o.dimension
            << std::setw(6) << type_string(o) << std::setw(12) << lambda.str()
            << std::setw(14) << format_residual(max_residual)
            << (o.ok ? (o.passed ? "pass" : "FAIL") : "ERROR") << "\n";
    }
    out << "\n";

    for (const auto& o : report.irreps) {
        out << o.label << ":";
        if (!o.ok) {
            out << " error (" << o.error_kind << "): " << o.error_message << "\n";
            continue;
        }
        if (o.homomorphism) {
            out << " homomorphism residual " << format_residual(o.homomorphism->max_residual)
                << " over " << o.homomorphism->pairs_checked << " pairs";
        }
        if (o.irreducibility) {
            out << "; commutant dim " << o.irreducibility->commutant_dimension;
        }
        out << "\n";
        if (o.classification) {
            const auto& cls = *o.classification;
            out << "   type " << wigner_type_letter(cls.wigner_type);
            if (cls.intertwiner) {
                out << ", lambda " << std::showpos << std::fixed << std::setprecision(6)
                    << cls.lambda << std::noshowpos << ", intertwiner residual "
                    << format_residual(cls.intertwiner_residual) << ", scalarity "
                    << format_residual(cls.scalarity_residual);
            } else {
                out << " (conjugate representation inequivalent; the " << 2 * o.dimension
                    << "-dim corep is irreducible)";
            }
            for (const auto& w : cls.warnings) out << "\n   warning: " << w;
            out << "\n";
            if (cls.intertwiner && cls.intertwiner->rows() <= 6) {
                print_matrix(out, "N", *cls.intertwiner, "   ");
            } else if (!cls.intertwiner && o.corep) {
                print_generator_matrices(out, *o.corep, report);
            }
        }
        if (o.corep_laws) {
            out << "   corep laws (gg, ga, ag, aa): "
                << format_residual(o.corep_laws->residual_gg) << " "
                << format_residual(o.corep_laws->residual_ga) << " "
                << format_residual(o.corep_laws->residual_ag) << " "
                << format_residual(o.corep_laws->residual_aa) << " over "
                << o.corep_laws->pairs_checked << " pairs\n";
        }
        if (o.reduction) {
            const auto& red = *o.reduction;
            if (red.wigner_type == WignerType::A) {
                out << "   reduced to two equal " << red.result.dimension
                    << "-dim blocks: off-diagonal "
                    << format_residual(red.offdiagonal_residual) << ", block equality "
                    << format_residual(red.block_equality_residual);
            } else {
                out << "   canonical irreducible form: residual "
                    << format_residual(red.canonical_residual);
            }
            out << ", basis consistency " << format_residual(o.basis_consistency_residual)
                << "\n";
        }
    }
    out << "\n" << (report.all_passed ? "all checks passed" : "CHECKS FAILED") << "\n";
    return out.str();
}

}  // namespace corep
