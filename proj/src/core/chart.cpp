#include "chart.hpp"

#include <set>

#include "error.hpp"
#include "parser.hpp"

namespace folham {

VariablesPtr Chart::make_variables(const std::vector<std::string>& transverse,
                                   const std::vector<std::string>& leaf) {
    auto vars = std::make_shared<Variables>();
    vars->names = transverse;
    vars->names.insert(vars->names.end(), leaf.begin(), leaf.end());
    std::set<std::string> seen;
    for (const auto& name : vars->names) {
        if (name.empty()) throw InputError("empty coordinate name");
        if (!seen.insert(name).second) throw InputError("duplicate coordinate name '" + name + "'");
    }
    return vars;
}

Chart::Chart(VariablesPtr vars, std::size_t q, std::vector<std::vector<Poly>> t)
    : vars_(std::move(vars)), q_(q), p_(0), t_(std::move(t)) {
    if (!vars_) throw InternalError("chart without variables");
    if (q_ < 1) throw InputError("transverse dimension q must be at least 1");
    if (q_ > vars_->size()) throw InputError("q exceeds the number of coordinates");
    p_ = vars_->size() - q_;
    if (n() > 30) throw InputError("charts are limited to 30 coordinates");
    if (t_.empty()) t_.assign(q_, std::vector<Poly>(p_, Poly(vars_)));
    if (t_.size() != q_) throw InputError("t must have q rows");
    for (const auto& row : t_) {
        if (row.size() != p_) throw InputError("t must have p columns");
        for (const auto& entry : row)
            if (!same_variables(entry.variables(), vars_))
                throw InputError("t entry is not written in the chart coordinates");
    }
}

bool Chart::t_is_zero() const {
    for (const auto& row : t_)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

int Chart::t_degree() const {
    int d = -1;
    for (const auto& row : t_)
        for (const auto& e : row) d = std::max(d, e.degree());
    return d;
}

Poly Chart::parse(std::string_view text) const {
    return parse_poly(text, vars_);
}

bool Chart::is_foliated(const Poly& f) const {
    for (std::size_t u = 0; u < p_; ++u)
        if (f.depends_on(leaf_coord(u))) return false;
    return true;
}

bool Chart::operator==(const Chart& other) const {
    return q_ == other.q_ && same_variables(vars_, other.vars_) && t_ == other.t_;
}

bool same_chart(const ChartPtr& a, const ChartPtr& b) {
    return a == b || (a && b && *a == *b);
}

void require_same_chart(const ChartPtr& a, const ChartPtr& b) {
    if (!same_chart(a, b)) throw PreconditionError("objects belong to different charts");
}

}  // namespace folham
