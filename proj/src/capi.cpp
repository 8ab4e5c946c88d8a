#include "corep/corep_c.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "corep/pipeline.hpp"
#include "corep/problem.hpp"
#include "corep/report.hpp"
#include "corep/version.hpp"

struct corep_problem {
    corep::ProblemDefinition def;
};

struct corep_report {
    corep::Report report;
};

namespace {

thread_local std::string t_last_error = "no error";

corep_status fail(corep_status code, const std::string& message) {
    t_last_error = message;
    return code;
}

corep_status classify_exception(const std::exception& e) {
    if (dynamic_cast<const corep::ParseError*>(&e)) return COREP_ERR_PARSE;
    if (dynamic_cast<const corep::IoError*>(&e)) return COREP_ERR_IO;
    if (dynamic_cast<const corep::ShapeError*>(&e)) return COREP_ERR_INVALID_ARGUMENT;
    if (dynamic_cast<const corep::SingularMatrixError*>(&e)) return COREP_ERR_NUMERIC;
    if (dynamic_cast<const corep::StructureError*>(&e)) return COREP_ERR_STRUCTURE;
    if (dynamic_cast<const corep::ReductionError*>(&e)) return COREP_ERR_CLASSIFICATION;
    if (dynamic_cast<const corep::ClassificationError*>(&e)) return COREP_ERR_CLASSIFICATION;
    return COREP_ERR_INTERNAL;
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
corep_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        return fail(classify_exception(e), e.what());
    } catch (...) {
        return fail(COREP_ERR_INTERNAL, "unknown error");
    }
}

}  // namespace

extern "C" {

const char* corep_version_string(void) { return COREP_VERSION_STRING; }

const char* corep_status_name(corep_status status) {
    switch (status) {
        case COREP_OK: return "ok";
        case COREP_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case COREP_ERR_PARSE: return "parse";
        case COREP_ERR_IO: return "io";
        case COREP_ERR_NUMERIC: return "numeric";
        case COREP_ERR_STRUCTURE: return "structure";
        case COREP_ERR_CLASSIFICATION: return "classification";
        case COREP_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* corep_last_error(void) { return t_last_error.c_str(); }

corep_status corep_problem_from_string(const char* json_text, corep_problem** out) {
    if (!json_text || !out) return fail(COREP_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        auto* p = new corep_problem{corep::parse_problem(json_text)};
        *out = p;
        return COREP_OK;
    });
}

corep_status corep_problem_from_file(const char* path, corep_problem** out) {
    if (!path || !out) return fail(COREP_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        auto* p = new corep_problem{corep::load_problem(path)};
        *out = p;
        return COREP_OK;
    });
}

void corep_problem_free(corep_problem* problem) { delete problem; }

corep_status corep_problem_set_tolerance(corep_problem* problem, double abs_eps,
                                         double rel_eps) {
    if (!problem) return fail(COREP_ERR_INVALID_ARGUMENT, "null problem");
    return guarded([&] {
        corep::Tolerance tol{abs_eps, rel_eps};
        tol.validate();
        problem->def.options.tol = tol;
        return COREP_OK;
    });
}

corep_status corep_problem_set_seed(corep_problem* problem, unsigned long long seed) {
    if (!problem) return fail(COREP_ERR_INVALID_ARGUMENT, "null problem");
    problem->def.options.seed = seed;
    problem->def.group.sampling.seed = seed;
    return COREP_OK;
}

corep_status corep_problem_set_sample_count(corep_problem* problem, size_t count) {
    if (!problem) return fail(COREP_ERR_INVALID_ARGUMENT, "null problem");
    problem->def.group.sampling.sample_count = count;
    return COREP_OK;
}

corep_status corep_problem_set_phases(corep_problem* problem, double xi, double alpha0) {
    if (!problem) return fail(COREP_ERR_INVALID_ARGUMENT, "null problem");
    problem->def.options.phases.xi = xi;
    problem->def.options.phases.alpha0 = alpha0;
    return COREP_OK;
}

corep_status corep_run(const corep_problem* problem, const char* verb,
                       corep_report** out) {
    if (!problem || !verb || !out) return fail(COREP_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    corep::Verb v;
    try {
        v = corep::parse_verb(verb);
    } catch (const std::exception& e) {
        return fail(COREP_ERR_INVALID_ARGUMENT, e.what());
    }
    return guarded([&] {
        auto* r = new corep_report{corep::run_pipeline(problem->def, v)};
        *out = r;
        return COREP_OK;
    });
}

int corep_report_passed(const corep_report* report) {
    return report && report->report.all_passed ? 1 : 0;
}

size_t corep_report_entry_count(const corep_report* report) {
    return report ? report->report.irreps.size() : 0;
}

corep_status corep_report_entry_label(const corep_report* report, size_t index,
                                      char** out) {
    if (!report || !out) return fail(COREP_ERR_INVALID_ARGUMENT, "null argument");
    if (index >= report->report.irreps.size()) {
        return fail(COREP_ERR_INVALID_ARGUMENT, "entry index out of range");
    }
    *out = copy_string(report->report.irreps[index].label);
    return *out ? COREP_OK : fail(COREP_ERR_INTERNAL, "allocation failed");
}

corep_status corep_report_entry_type(const corep_report* report, size_t index,
                                     char* out) {
    if (!report || !out) return fail(COREP_ERR_INVALID_ARGUMENT, "null argument");
    if (index >= report->report.irreps.size()) {
        return fail(COREP_ERR_INVALID_ARGUMENT, "entry index out of range");
    }
    const auto& entry = report->report.irreps[index];
    *out = entry.classification
               ? corep::wigner_type_letter(entry.classification->wigner_type)
               : '\0';
    return COREP_OK;
}

corep_status corep_report_render(const corep_report* report, const char* format,
                                 char** out) {
    if (!report || !format || !out) return fail(COREP_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        std::string rendered;
        const std::string f = format;
        if (f == "text") {
            rendered = corep::emit_report_text(report->report);
        } else if (f == "structured") {
            rendered = corep::emit_report_structured(report->report);
        } else {
            return fail(COREP_ERR_INVALID_ARGUMENT,
                        "format must be \"text\" or \"structured\"");
        }
        *out = copy_string(rendered);
        return *out ? COREP_OK : fail(COREP_ERR_INTERNAL, "allocation failed");
    });
}

void corep_report_free(corep_report* report) { delete report; }

void corep_free_string(char* s) { std::free(s); }

}  // extern "C"
