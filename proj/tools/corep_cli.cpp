// Command-line front end. Everything goes through the shared library's C
// interface; this file deliberately uses no other project header.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "corep/corep_c.h"

namespace {

int fail_with(corep_status status) {
    std::cerr << "error (" << corep_status_name(status) << "): " << corep_last_error()
              << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"corep: classify and reduce corepresentations of groups extended "
                 "by an antilinear generator"};
    app.set_version_flag("--version", std::string("corep ") + corep_version_string());

    std::string verb;
    std::string problem_path;
    std::string format = "text";
    std::string out_path;
    double tol_abs = -1.0, tol_rel = -1.0;
    long long seed = -1;
    long long samples = -1;
    double phase_xi = 0.0, phase_alpha0 = 0.0;
    bool phases_set = false;

    app.add_option("verb", verb, "verify | classify | build | reduce")->required();
    app.add_option("problem", problem_path, "problem definition file (JSON)")->required();
    app.add_option("--tol", tol_abs, "absolute tolerance override");
    app.add_option("--rel-tol", tol_rel, "relative tolerance override");
    app.add_option("--seed", seed, "seed for sampling and pair selection");
    app.add_option("--samples", samples, "sample count override (sampled groups)");
    app.add_option("--xi", phase_xi, "block phase xi for type-a reduction")
        ->each([&](const std::string&) { phases_set = true; });
    app.add_option("--alpha0", phase_alpha0, "overall coset phase alpha0")
        ->each([&](const std::string&) { phases_set = true; });
    app.add_option("--format", format, "text | structured")
        ->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--out", out_path, "write the report to this path instead of stdout");

    CLI11_PARSE(app, argc, argv);

    corep_problem* problem = nullptr;
    corep_status status = corep_problem_from_file(problem_path.c_str(), &problem);
    if (status != COREP_OK) return fail_with(status);

    if (tol_abs > 0.0 || tol_rel > 0.0) {
        status = corep_problem_set_tolerance(problem, tol_abs > 0.0 ? tol_abs : 1e-10,
                                             tol_rel > 0.0 ? tol_rel : 1e-8);
        if (status != COREP_OK) { corep_problem_free(problem); return fail_with(status); }
    }
    if (seed >= 0) {
        corep_problem_set_seed(problem, static_cast<unsigned long long>(seed));
    }
    if (samples >= 0) {
        corep_problem_set_sample_count(problem, static_cast<size_t>(samples));
    }
    if (phases_set) {
        corep_problem_set_phases(problem, phase_xi, phase_alpha0);
    }

    corep_report* report = nullptr;
    status = corep_run(problem, verb.c_str(), &report);
    if (status != COREP_OK) {
        corep_problem_free(problem);
        return fail_with(status);
    }

    char* rendered = nullptr;
    status = corep_report_render(report, format.c_str(), &rendered);
    if (status != COREP_OK) {
        corep_report_free(report);
        corep_problem_free(problem);
        return fail_with(status);
    }

    int exit_code = corep_report_passed(report) ? 0 : 1;
    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            exit_code = 2;
        } else {
            out << rendered;
        }
    }

    corep_free_string(rendered);
    corep_report_free(report);
    corep_problem_free(problem);
    return exit_code;
}
