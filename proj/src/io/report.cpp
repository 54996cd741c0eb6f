#include "report.hpp"

#include <functional>
#include <sstream>

namespace folham {

namespace {

Json spec_summary(const SpecFile& spec) { return spec_to_json(spec); }

// Runs `body` on a fresh report; input and precondition errors become an
// "error" entry.
Json guarded(const SpecFile* spec, const char* command, const std::function<void(Json&)>& body) {
    Json r;
    r["command"] = command;
    if (spec) r["spec"] = spec_summary(*spec);
    try {
        body(r);
    } catch (const InternalError& e) {
        r["error"] = std::string("internal error: ") + e.what();
    } catch (const Error& e) {
        r["error"] = e.what();
    }
    r["exit_code"] = exit_code(r);
    return r;
}

Json point_json(const std::vector<Rational>& pt) {
    Json row = Json::array();
    for (const auto& c : pt) row.push_back(to_string(c));
    return row;
}

Json classification_json(const Classification& c) {
    Json j;
    j["hamiltonian"] = verdict_json(c.hamiltonian);
    j["strong"] = verdict_json(c.strong);
    j["transversal"] = verdict_json(c.transversal);
    j["tame"] = verdict_json(c.tame);
    return j;
}

// Eqs. (6)-(7) style identities on basis 1-forms and frame fields.
Json identity_suite(const HamStructure& hs) {
    const auto& chart = hs.chart();
    Json j;
    std::size_t checked = 0, failed = 0;
    Json failures = Json::array();
    if (!hs.h_is_foliated()) {
        j["checked"] = 0;
        j["failed"] = 0;
        j["skipped"] = "h is not foliated, the 1-form bracket is undefined";
        return j;
    }
    std::vector<VectorField> fields;
    std::vector<std::string> names;
    for (std::size_t a = 0; a < chart->q(); ++a) {
        fields.push_back(VectorField::transverse_frame(chart, a));
        names.push_back("X(" + chart->name(a) + ")");
    }
    for (std::size_t u = 0; u < chart->p(); ++u) {
        fields.push_back(VectorField::leaf_frame(chart, u));
        names.push_back("d/d" + chart->name(chart->leaf_coord(u)));
    }
    std::size_t q = chart->q();
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = a; b < q; ++b)
            for (std::size_t c = b; c < q; ++c)
                for (std::size_t i = 0; i < fields.size(); ++i) {
                    auto res = identity_checks(hs, dx(chart, a), dx(chart, b), dx(chart, c), fields[i]);
                    std::string where = "(dx" + std::to_string(a + 1) + ",dx" + std::to_string(b + 1) + ",dx" +
                                        std::to_string(c + 1) + ") X=" + names[i];
                    checked += 2;
                    if (!res.first.is_zero()) {
                        ++failed;
                        failures.push_back({{"identity", "first"}, {"location", where}, {"residual", res.first.to_string()}});
                    }
                    if (!res.second.is_zero()) {
                        ++failed;
                        failures.push_back({{"identity", "second"}, {"location", where}, {"residual", res.second.to_string()}});
                    }
                }
    j["checked"] = checked;
    j["failed"] = failed;
    j["failures"] = failures;
    return j;
}

Json image_checks_json(const SpecFile& spec) {
    std::vector<std::vector<Rational>> points = spec.points;
    if (points.empty()) points.emplace_back(spec.chart->n(), Rational(0));
    Json rows = Json::array();
    for (const auto& ic : image_checks(spec.structure, points)) {
        Json row;
        row["point"] = point_json(ic.point);
        row["rank_w"] = ic.rank_w;
        row["dim_image_cap_tf"] = ic.dim_image_cap_tf;
        row["dim_char_dist"] = ic.dim_char_dist;
        row["dim_h_of_annihilator"] = ic.dim_h_of_annihilator;
        row["annihilator_matches"] = ic.annihilator_matches;
        rows.push_back(row);
    }
    return rows;
}

bool failed_verdict(const Json& v) { return v.is_object() && v.contains("pass") && !v["pass"].get<bool>(); }

}  // namespace

Json verdict_json(const Verdict& v) {
    Json j;
    j["pass"] = v.pass;
    if (!v.pass) {
        j["location"] = v.location;
        j["witness"] = v.witness;
    }
    return j;
}

Json run_verify(const SpecFile& spec) {
    return guarded(&spec, "verify", [&](Json& r) {
        r["classification"] = classification_json(classify(spec.structure));
        r["image_checks"] = image_checks_json(spec);
        r["identities"] = identity_suite(spec.structure);
        if (spec.fundamental_form) {
            Json f = verdict_json(verify_fundamental_form(spec.structure, *spec.fundamental_form, spec.test_functions));
            r["fundamental_form"] = f;
        }
    });
}

Json run_classify(const SpecFile& spec) {
    return guarded(&spec, "classify",
                   [&](Json& r) { r["classification"] = classification_json(classify(spec.structure)); });
}

Json run_bracket(const SpecFile& spec, const std::string& f, const std::string& g, bool extended) {
    return guarded(&spec, "bracket", [&](Json& r) {
        Poly pf = spec.chart->parse(f), pg = spec.chart->parse(g);
        Poly v = extended ? extended_poisson(spec.structure, pf, pg) : poisson_bracket(spec.structure, pf, pg);
        r["bracket"] = {{"f", pf.to_string()}, {"g", pg.to_string()}, {"extended", extended}, {"value", v.to_string()}};
    });
}

Json run_cohomology(const SpecFile& spec, Theory theory, int k, int max_degree) {
    return guarded(&spec, "cohomology", [&](Json& r) {
        if (k < 0) throw InputError("--k must be non-negative");
        if (max_degree < 0) throw InputError("--max-degree must be non-negative");
        CohomologyResult c;
        switch (theory) {
            case Theory::Twisted: c = twisted_cohomology(spec.structure, k, unsigned(max_degree)); break;
            case Theory::LpBasic: c = basic_lp_cohomology(spec.structure, k, unsigned(max_degree)); break;
            case Theory::BasicDeRham: c = basic_derham_cohomology(spec.chart, k, unsigned(max_degree)); break;
        }
        Json row;
        row["theory"] = to_string(c.theory);
        row["k"] = c.k;
        row["max_degree"] = c.max_degree;
        row["target_degree"] = c.target_degree;
        row["image_source_degree"] = c.image_source_degree;
        row["dim_cochains"] = c.dim_cochains;
        row["dim_kernel"] = c.dim_kernel;
        row["dim_image_in_kernel"] = c.dim_image_in_kernel;
        row["dim"] = c.dim_twisted;
        r["cohomology"] = Json::array({row});
    });
}

Json error_report(const std::string& message) {
    return guarded(nullptr, "load", [&](Json&) { throw InputError(message); });
}

int exit_code(const Json& r) {
    if (r.contains("error")) return 2;
    bool fail = false;
    if (r.contains("classification"))
        for (const auto& [name, v] : r["classification"].items()) fail |= failed_verdict(v);
    if (r.contains("identities")) fail |= r["identities"].value("failed", 0) != 0;
    if (r.contains("fundamental_form")) fail |= failed_verdict(r["fundamental_form"]);
    return fail ? 1 : 0;
}

std::string render_text(const Json& r) {
    std::ostringstream out;
    if (r.contains("spec")) {
        const Json& s = r["spec"];
        std::string name = s.value("name", std::string("spec"));
        out << name << " (q=" << s["chart"]["q"].get<int>() << ", p=" << s["chart"]["p"].get<int>() << ")\n";
    }
    if (r.contains("classification")) {
        for (const auto& [name, v] : r["classification"].items()) {
            out << "  " << name << std::string(13 - name.size(), ' ') << (v["pass"].get<bool>() ? "pass" : "FAIL");
            if (!v["pass"].get<bool>())
                out << "  at " << v["location"].get<std::string>() << ": " << v["witness"].get<std::string>();
            out << "\n";
        }
    }
    if (r.contains("image_checks")) {
        for (const auto& row : r["image_checks"]) {
            out << "  point (";
            for (std::size_t i = 0; i < row["point"].size(); ++i)
                out << (i ? ", " : "") << row["point"][i].get<std::string>();
            out << "): rank W = " << row["rank_w"].get<int>() << ", dim(H0 cap TF) = " << row["dim_image_cap_tf"].get<int>()
                << ", dim CharDist = " << row["dim_char_dist"].get<int>()
                << ", dim h(ann CharDist) = " << row["dim_h_of_annihilator"].get<int>() << "\n";
        }
    }
    if (r.contains("identities")) {
        const Json& id = r["identities"];
        out << "  identities: " << id["checked"].get<int>() << " checked, " << id["failed"].get<int>() << " failed";
        if (id.contains("skipped")) out << " (skipped: " << id["skipped"].get<std::string>() << ")";
        out << "\n";
        if (id.contains("failures"))
            for (const auto& f : id["failures"])
                out << "    " << f["identity"].get<std::string>() << " at " << f["location"].get<std::string>() << ": "
                    << f["residual"].get<std::string>() << "\n";
    }
    if (r.contains("fundamental_form")) {
        const Json& v = r["fundamental_form"];
        out << "  fundamental form: " << (v["pass"].get<bool>() ? "pass" : "FAIL");
        if (!v["pass"].get<bool>())
            out << "  at " << v["location"].get<std::string>() << ": " << v["witness"].get<std::string>();
        out << "\n";
    }
    if (r.contains("bracket")) {
        const Json& b = r["bracket"];
        out << (b["extended"].get<bool>() ? "{f,g}' = " : "{f,g} = ") << b["value"].get<std::string>() << "\n";
    }
    if (r.contains("cohomology")) {
        for (const auto& c : r["cohomology"])
            out << "  " << c["theory"].get<std::string>() << " k=" << c["k"].get<int>() << " D=" << c["max_degree"].get<int>()
                << ": dim " << c["dim"].get<int>() << " (kernel " << c["dim_kernel"].get<int>() << ", image "
                << c["dim_image_in_kernel"].get<int>() << ", cochains " << c["dim_cochains"].get<int>() << ")\n";
    }
    if (r.contains("error")) out << "error: " << r["error"].get<std::string>() << "\n";
    out << "exit " << exit_code(r) << "\n";
    return out.str();
}

}  // namespace folham
