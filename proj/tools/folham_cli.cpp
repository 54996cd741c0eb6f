#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "folham/folham.h"

namespace {

constexpr int kInputError = 2;

// Owning wrappers around the C handles.
struct Spec {
    folham_spec* p = nullptr;
    ~Spec() { folham_spec_free(p); }
};
struct Report {
    folham_report* p = nullptr;
    ~Report() { folham_report_free(p); }
};

bool write_file(const std::string& path, const char* text) {
    std::ofstream out(path);
    if (!out) return false;
    out << text << "\n";
    return bool(out);
}

// Prints the report, optionally saves its JSON, and returns its exit code.
int finish(const Report& r, const std::string& json_path) {
    std::cout << folham_report_text(r.p);
    if (!json_path.empty() && !write_file(json_path, folham_report_json(r.p))) {
        std::cerr << "error: cannot write '" << json_path << "'\n";
        return kInputError;
    }
    return folham_report_exit_code(r.p);
}

int load_failure(const std::string& json_path) {
    Report r;
    std::string message = folham_last_error();
    if (folham_error_report(message.c_str(), &r.p) != FOLHAM_OK) {
        std::cerr << "error: " << message << "\n";
        return kInputError;
    }
    return finish(r, json_path);
}

int internal_failure() {
    std::cerr << "internal error: " << folham_last_error() << "\n";
    return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamiltonian structures of foliations: verification and cohomology"};
    app.require_subcommand(1);

    std::string spec_path, json_path, f_expr, g_expr, theory;
    bool extended = false;
    int k = 0, max_degree = 0;

    auto* verify = app.add_subcommand("verify", "Classify, run image checks and identity suites");
    verify->add_option("spec", spec_path, "Spec JSON file")->required();
    verify->add_option("--json", json_path, "Write the JSON report here");

    auto* classify = app.add_subcommand("classify", "Print the four classification verdicts");
    classify->add_option("spec", spec_path, "Spec JSON file")->required();

    auto* bracket = app.add_subcommand("bracket", "Poisson bracket of two functions");
    bracket->add_option("spec", spec_path, "Spec JSON file")->required();
    bracket->add_option("--f", f_expr, "First function")->required();
    bracket->add_option("--g", g_expr, "Second function")->required();
    bracket->add_flag("--extended", extended, "Use the extended bracket {f,g}'");

    auto* cohomology = app.add_subcommand("cohomology", "Truncated cohomology dimension");
    cohomology->add_option("spec", spec_path, "Spec JSON file")->required();
    cohomology->add_option("--theory", theory, "twisted, lp-basic or basic-derham")
        ->required()
        ->check(CLI::IsMember({"twisted", "lp-basic", "basic-derham"}));
    cohomology->add_option("--k", k, "Cochain degree")->required();
    cohomology->add_option("--max-degree", max_degree, "Coefficient degree bound D")->required();

    auto* print_spec = app.add_subcommand("print-spec", "Print the canonical form of a spec");
    print_spec->add_option("spec", spec_path, "Spec or report JSON file")->required();

    auto* corpus = app.add_subcommand("corpus", "Bundled examples");
    corpus->require_subcommand(1);
    auto* corpus_list = corpus->add_subcommand("list", "List the bundled examples");
    auto* corpus_run = corpus->add_subcommand("run", "Verify every bundled example against its expected exit code");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    if (corpus->parsed()) {
        std::size_t n = folham_corpus_count();
        if (corpus_list->parsed()) {
            for (std::size_t i = 0; i < n; ++i) std::cout << folham_corpus_name(i) << "\n";
            return 0;
        }
        (void)corpus_run;
        bool all = true;
        for (std::size_t i = 0; i < n; ++i) {
            Spec s;
            Report r;
            int code;
            int expected = -1;
            if (folham_spec_load_string(folham_corpus_json(i), &s.p) != FOLHAM_OK) {
                code = kInputError;
            } else {
                expected = folham_spec_expected(s.p);
                if (folham_verify(s.p, &r.p) != FOLHAM_OK) return internal_failure();
                code = folham_report_exit_code(r.p);
            }
            bool ok = expected < 0 ? code == 0 : code == expected;
            all &= ok;
            std::printf("%-6s exit %d  expected %d  %s\n", folham_corpus_name(i), code, expected < 0 ? 0 : expected,
                        ok ? "ok" : "MISMATCH");
        }
        return all ? 0 : 1;
    }

    Spec spec;
    if (folham_spec_load_file(spec_path.c_str(), &spec.p) != FOLHAM_OK) return load_failure(json_path);

    if (print_spec->parsed()) {
        char* text = nullptr;
        if (folham_spec_to_json(spec.p, &text) != FOLHAM_OK) return internal_failure();
        std::cout << text << "\n";
        folham_string_free(text);
        return 0;
    }

    Report r;
    folham_status st = FOLHAM_OK;
    if (verify->parsed())
        st = folham_verify(spec.p, &r.p);
    else if (classify->parsed())
        st = folham_classify(spec.p, &r.p);
    else if (bracket->parsed())
        st = folham_bracket(spec.p, f_expr.c_str(), g_expr.c_str(), extended ? 1 : 0, &r.p);
    else if (cohomology->parsed())
        st = folham_cohomology(spec.p, theory.c_str(), k, max_degree, &r.p);
    if (st != FOLHAM_OK) return internal_failure();
    return finish(r, json_path);
}
