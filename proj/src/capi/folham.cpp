#include "folham/folham.h"

#include <cstring>
#include <exception>
#include <string>

#include "corpus_data.hpp"
#include "report.hpp"

struct folham_spec {
    folham::SpecFile spec;
};

struct folham_report {
    std::string json;
    std::string text;
    int exit_code;
};

namespace {

thread_local std::string last_error;

folham_status fail(folham_status s, const std::string& message) {
    last_error = message;
    return s;
}

template <class F>
folham_status guard(F&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const folham::InternalError& e) {
        return fail(FOLHAM_INTERNAL_ERROR, e.what());
    } catch (const folham::Error& e) {
        return fail(FOLHAM_INPUT_ERROR, e.what());
    } catch (const std::exception& e) {
        return fail(FOLHAM_INTERNAL_ERROR, e.what());
    }
}

folham_status emit(const folham::Json& report, folham_report** out) {
    *out = new folham_report{report.dump(2), folham::render_text(report), folham::exit_code(report)};
    return FOLHAM_OK;
}

char* copy(const std::string& s) {
    char* p = new char[s.size() + 1];
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

}  // namespace

extern "C" {

const char* folham_last_error(void) { return last_error.c_str(); }

folham_status folham_spec_load_file(const char* path, folham_spec** out) {
    if (!path || !out) return fail(FOLHAM_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        *out = new folham_spec{folham::load_spec_file(path)};
        return FOLHAM_OK;
    });
}

folham_status folham_spec_load_string(const char* json, folham_spec** out) {
    if (!json || !out) return fail(FOLHAM_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        *out = new folham_spec{folham::load_spec_string(json)};
        return FOLHAM_OK;
    });
}

folham_status folham_spec_to_json(const folham_spec* spec, char** out) {
    if (!spec || !out) return fail(FOLHAM_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        *out = copy(folham::spec_to_json(spec->spec).dump(2));
        return FOLHAM_OK;
    });
}

int folham_spec_equal(const folham_spec* a, const folham_spec* b) {
    return a && b && a->spec == b->spec;
}

int folham_spec_expected(const folham_spec* spec) {
    return spec && spec->spec.expected ? *spec->spec.expected : -1;
}

void folham_spec_free(folham_spec* spec) { delete spec; }

folham_status folham_verify(const folham_spec* spec, folham_report** out) {
    if (!spec || !out) return fail(FOLHAM_INVALID_ARGUMENT, "null argument");
    return guard([&] { return emit(folham::run_verify(spec->spec), out); });
}

folham_status folham_classify(const folham_spec* spec, folham_report** out) {
    if (!spec || !out) return fail(FOLHAM_INVALID_ARGUMENT, "null argument");
    return guard([&] { return emit(folham::run_classify(spec->spec), out); });
}

folham_status folham_bracket(const folham_spec* spec, const char* f, const char* g, int extended, folham_report** out) {
    if (!spec || !f || !g || !out) return fail(FOLHAM_INVALID_ARGUMENT, "null argument");
    return guard([&] { return emit(folham::run_bracket(spec->spec, f, g, extended != 0), out); });
}

folham_status folham_cohomology(const folham_spec* spec, const char* theory, int k, int max_degree,
                                folham_report** out) {
    if (!spec || !theory || !out) return fail(FOLHAM_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        folham::Json r;
        try {
            r = folham::run_cohomology(spec->spec, folham::parse_theory(theory), k, max_degree);
        } catch (const folham::InputError& e) {
            r = folham::error_report(e.what());
        }
        return emit(r, out);
    });
}

folham_status folham_error_report(const char* message, folham_report** out) {
    if (!message || !out) return fail(FOLHAM_INVALID_ARGUMENT, "null argument");
    return guard([&] { return emit(folham::error_report(message), out); });
}

const char* folham_report_json(const folham_report* report) { return report ? report->json.c_str() : ""; }
const char* folham_report_text(const folham_report* report) { return report ? report->text.c_str() : ""; }
int folham_report_exit_code(const folham_report* report) { return report ? report->exit_code : 2; }
void folham_report_free(folham_report* report) { delete report; }

size_t folham_corpus_count(void) { return folham::corpus::entries().size(); }

const char* folham_corpus_name(size_t index) {
    const auto& e = folham::corpus::entries();
    return index < e.size() ? e[index].name : nullptr;
}

const char* folham_corpus_json(size_t index) {
    const auto& e = folham::corpus::entries();
    return index < e.size() ? e[index].json : nullptr;
}

void folham_string_free(char* s) { delete[] s; }

}  // extern "C"
