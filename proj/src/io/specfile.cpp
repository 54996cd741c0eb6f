#include "specfile.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "parser.hpp"

namespace folham {

namespace {

[[noreturn]] void schema(const std::string& field, const std::string& what) {
    throw InputError(field + ": " + what);
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) schema(where, std::string("missing field '") + key + "'");
    return *it;
}

void check_keys(const Json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) schema(where, "must be an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed) ok |= it.key() == a;
        if (!ok) schema(where, "unknown field '" + it.key() + "'");
    }
}

std::size_t count_field(const Json& v, const std::string& where, std::size_t min) {
    if (!v.is_number_integer() || v.get<long long>() < 0 || std::size_t(v.get<long long>()) < min)
        schema(where, "must be an integer >= " + std::to_string(min));
    return std::size_t(v.get<long long>());
}

std::vector<std::string> names_field(const Json& v, const std::string& where, std::size_t size) {
    if (!v.is_array()) schema(where, "must be an array of names");
    if (v.size() != size) schema(where, "expected " + std::to_string(size) + " names, got " + std::to_string(v.size()));
    std::vector<std::string> out;
    for (const auto& e : v) {
        if (!e.is_string()) schema(where, "names must be strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

// "i,j" with 1-based indices.
std::pair<std::size_t, std::size_t> index_pair(const std::string& key, const std::string& where) {
    std::size_t comma = key.find(',');
    auto bad = [&] { schema(where, "key '" + key + "' is not of the form \"i,j\""); };
    if (comma == std::string::npos) bad();
    auto num = [&](const std::string& s) {
        if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos) bad();
        return std::size_t(std::stoul(s));
    };
    return {num(key.substr(0, comma)), num(key.substr(comma + 1))};
}

Poly expression(const Json& v, const VariablesPtr& vars, const std::string& where) {
    std::string text;
    if (v.is_string())
        text = v.get<std::string>();
    else if (v.is_number_integer())
        text = std::to_string(v.get<long long>());
    else
        schema(where, "expression must be a string");
    try {
        return parse_poly(text, vars);
    } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
    }
}

std::string key(std::size_t i, std::size_t j) { return std::to_string(i + 1) + "," + std::to_string(j + 1); }

// Reads a skew matrix given by entries "a,b" (either order, consistent).
PolyMatrix skew_block(const Json& block, const ChartPtr& chart, std::size_t size, const std::string& where) {
    PolyMatrix m(size, std::vector<Poly>(size, chart->zero()));
    std::vector<std::vector<bool>> given(size, std::vector<bool>(size, false));
    if (!block.is_object()) schema(where, "must be an object");
    for (auto it = block.begin(); it != block.end(); ++it) {
        auto [a, b] = index_pair(it.key(), where);
        if (a < 1 || b < 1 || a > size || b > size) schema(where, "index out of range in '" + it.key() + "'");
        --a, --b;
        Poly v = expression(it.value(), chart->variables(), where + "[\"" + it.key() + "\"]");
        if (a == b) {
            if (!v.is_zero()) schema(where, "diagonal entry '" + it.key() + "' must be 0");
            continue;
        }
        if (given[b][a] && !(m[a][b] == v)) schema(where, "skew violation between '" + it.key() + "' and '" + key(b, a) + "'");
        given[a][b] = given[b][a] = true;
        m[a][b] = v;
        m[b][a] = -v;
    }
    return m;
}

}  // namespace

Rational parse_rational(const Json& value, const std::string& field) {
    if (value.is_number_integer()) return Rational(std::to_string(value.get<long long>()));
    if (!value.is_string()) schema(field, "coordinates must be integers or rational strings");
    static const VariablesPtr none = std::make_shared<Variables>();
    Poly p = [&] {
        try {
            return parse_poly(value.get<std::string>(), none);
        } catch (const Error& e) {
            schema(field, std::string("not a rational number: ") + e.what());
        }
    }();
    return p.constant_term();
}

SpecFile load_spec(const Json& input) {
    const Json* docp = &input;
    if (input.is_object() && input.contains("spec") && !input.contains("chart")) docp = &input["spec"];
    const Json& doc = *docp;
    check_keys(doc, "spec",
               {"name", "description", "expected", "chart", "structure", "points", "test_functions",
                "fundamental_form"});

    const Json& cj = require(doc, "chart", "spec");
    check_keys(cj, "chart", {"q", "p", "transverse", "leaf", "t"});
    std::size_t q = count_field(require(cj, "q", "chart"), "chart.q", 1);
    std::size_t p = count_field(require(cj, "p", "chart"), "chart.p", 0);
    auto transverse = names_field(require(cj, "transverse", "chart"), "chart.transverse", q);
    auto leaf = cj.contains("leaf") ? names_field(cj["leaf"], "chart.leaf", p) : names_field(Json::array(), "chart.leaf", p);
    VariablesPtr vars = Chart::make_variables(transverse, leaf);

    std::vector<std::vector<Poly>> t(q, std::vector<Poly>(p, Poly(vars)));
    if (cj.contains("t")) {
        const Json& tj = cj["t"];
        if (!tj.is_object()) schema("chart.t", "must be an object");
        for (auto it = tj.begin(); it != tj.end(); ++it) {
            auto [u, a] = index_pair(it.key(), "chart.t");
            if (u <= q || u > q + p) schema("chart.t", "'" + it.key() + "': first index must be a leaf coordinate");
            if (a < 1 || a > q) schema("chart.t", "'" + it.key() + "': second index must be transverse");
            t[a - 1][u - q - 1] = expression(it.value(), vars, "chart.t[\"" + it.key() + "\"]");
        }
    }
    auto chart = std::make_shared<const Chart>(vars, q, t);

    PolyMatrix h(q, std::vector<Poly>(q, chart->zero()));
    PolyMatrix k(q, std::vector<Poly>(p, chart->zero()));
    if (doc.contains("structure")) {
        const Json& sj = doc["structure"];
        check_keys(sj, "structure", {"h", "k"});
        if (sj.contains("h")) h = skew_block(sj["h"], chart, q, "structure.h");
        if (sj.contains("k")) {
            const Json& kj = sj["k"];
            if (!kj.is_object()) schema("structure.k", "must be an object");
            for (auto it = kj.begin(); it != kj.end(); ++it) {
                auto [a, u] = index_pair(it.key(), "structure.k");
                if (a < 1 || a > q) schema("structure.k", "'" + it.key() + "': first index must be transverse");
                if (u <= q || u > q + p) schema("structure.k", "'" + it.key() + "': second index must be a leaf coordinate");
                k[a - 1][u - q - 1] = expression(it.value(), vars, "structure.k[\"" + it.key() + "\"]");
            }
        }
    }

    SpecFile spec{.chart = chart, .structure = HamStructure(chart, h, k)};
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) schema("name", "must be a string");
        spec.name = doc["name"].get<std::string>();
    }
    if (doc.contains("description")) {
        if (!doc["description"].is_string()) schema("description", "must be a string");
        spec.description = doc["description"].get<std::string>();
    }
    if (doc.contains("expected")) {
        const Json& e = doc["expected"];
        if (!e.is_number_integer() || e.get<long long>() < 0 || e.get<long long>() > 2)
            schema("expected", "must be an exit code 0, 1 or 2");
        spec.expected = e.get<int>();
    }
    if (doc.contains("points")) {
        const Json& pj = doc["points"];
        if (!pj.is_array()) schema("points", "must be an array of coordinate arrays");
        for (std::size_t i = 0; i < pj.size(); ++i) {
            std::string where = "points[" + std::to_string(i) + "]";
            if (!pj[i].is_array() || pj[i].size() != chart->n())
                schema(where, "must have " + std::to_string(chart->n()) + " coordinates");
            std::vector<Rational> pt;
            for (const auto& c : pj[i]) pt.push_back(parse_rational(c, where));
            spec.points.push_back(std::move(pt));
        }
    }
    if (doc.contains("test_functions")) {
        const Json& fj = doc["test_functions"];
        if (!fj.is_array()) schema("test_functions", "must be an array of expressions");
        for (std::size_t i = 0; i < fj.size(); ++i)
            spec.test_functions.push_back(expression(fj[i], vars, "test_functions[" + std::to_string(i) + "]"));
    }
    if (doc.contains("fundamental_form")) {
        PolyMatrix phi = skew_block(doc["fundamental_form"], chart, q, "fundamental_form");
        BigradedForm form(chart);
        for (std::size_t a = 0; a < q; ++a)
            for (std::size_t b = a + 1; b < q; ++b) form.add((Mask(1) << a) | (Mask(1) << b), phi[a][b]);
        spec.fundamental_form = form;
    }
    return spec;
}

SpecFile load_spec_string(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    return load_spec(doc);
}

SpecFile load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return load_spec_string(buf.str());
}

Json spec_to_json(const SpecFile& spec) {
    const auto& chart = spec.chart;
    std::size_t q = chart->q(), p = chart->p();
    Json doc;
    if (!spec.name.empty()) doc["name"] = spec.name;
    if (!spec.description.empty()) doc["description"] = spec.description;

    Json cj;
    cj["q"] = q;
    cj["p"] = p;
    Json tr = Json::array(), lf = Json::array();
    for (std::size_t a = 0; a < q; ++a) tr.push_back(chart->name(a));
    for (std::size_t u = 0; u < p; ++u) lf.push_back(chart->name(q + u));
    cj["transverse"] = tr;
    cj["leaf"] = lf;
    Json tj = Json::object();
    for (std::size_t u = 0; u < p; ++u)
        for (std::size_t a = 0; a < q; ++a)
            if (!chart->t(a, u).is_zero()) tj[key(q + u, a)] = chart->t(a, u).to_string();
    cj["t"] = tj;
    doc["chart"] = cj;

    Json hj = Json::object(), kj = Json::object();
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = a + 1; b < q; ++b)
            if (!spec.structure.h(a, b).is_zero()) hj[key(a, b)] = spec.structure.h(a, b).to_string();
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t u = 0; u < p; ++u)
            if (!spec.structure.k(a, u).is_zero()) kj[key(a, q + u)] = spec.structure.k(a, u).to_string();
    doc["structure"] = {{"h", hj}, {"k", kj}};

    Json pts = Json::array();
    for (const auto& pt : spec.points) {
        Json row = Json::array();
        for (const auto& c : pt) {
            if (c.get_den() == 1 && c.get_num().fits_slong_p())
                row.push_back(c.get_num().get_si());
            else
                row.push_back(to_string(c));
        }
        pts.push_back(row);
    }
    doc["points"] = pts;
    Json tf = Json::array();
    for (const auto& f : spec.test_functions) tf.push_back(f.to_string());
    doc["test_functions"] = tf;
    if (spec.fundamental_form) {
        Json fj = Json::object();
        for (const auto& [m, c] : spec.fundamental_form->components()) {
            int a = std::countr_zero(m);
            int b = std::countr_zero(m & (m - 1));
            fj[key(std::size_t(a), std::size_t(b))] = c.to_string();
        }
        doc["fundamental_form"] = fj;
    }
    if (spec.expected) doc["expected"] = *spec.expected;
    return doc;
}

bool operator==(const SpecFile& a, const SpecFile& b) {
    return a.name == b.name && a.description == b.description && same_chart(a.chart, b.chart) &&
           a.structure == b.structure && a.points == b.points && a.test_functions == b.test_functions &&
           a.fundamental_form == b.fundamental_form && a.expected == b.expected;
}

}  // namespace folham
