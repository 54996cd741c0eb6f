#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "poly.hpp"

namespace folham {

// A foliated chart in adapted coordinates (x^1..x^q, y^{q+1}..y^n). The
// leaves are x = const. The complementary distribution E is spanned by
//   X_a = d/dx^a - t^u_a d/dy^u
// with dual coframe dx^a, theta^u = dy^u + t^u_a dx^a.
//
// Indices are 0-based in code: transverse a in [0, q), leaf u in [0, p),
// and coordinate index of leaf u is q + u.
class Chart {
public:
    // Builds the shared variable list (transverse names first).
    static VariablesPtr make_variables(const std::vector<std::string>& transverse,
                                       const std::vector<std::string>& leaf);

    // t[a][u] must be q x p and over `vars`. Pass an empty t for t = 0.
    Chart(VariablesPtr vars, std::size_t q, std::vector<std::vector<Poly>> t = {});

    std::size_t q() const noexcept { return q_; }
    std::size_t p() const noexcept { return p_; }
    std::size_t n() const noexcept { return q_ + p_; }

    const VariablesPtr& variables() const noexcept { return vars_; }
    const std::string& name(std::size_t coord) const { return vars_->names.at(coord); }
    std::size_t leaf_coord(std::size_t u) const noexcept { return q_ + u; }

    const Poly& t(std::size_t a, std::size_t u) const { return t_.at(a).at(u); }
    bool t_is_zero() const;
    // Largest total degree among the t entries, -1 when t = 0.
    int t_degree() const;

    Poly zero() const { return Poly(vars_); }
    Poly constant(const Rational& c) const { return Poly(vars_, c); }
    Poly coordinate(std::size_t i) const { return Poly::variable(vars_, i); }
    Poly parse(std::string_view text) const;

    // A function is foliated when it is constant along the leaves.
    bool is_foliated(const Poly& f) const;

    bool operator==(const Chart& other) const;

private:
    VariablesPtr vars_;
    std::size_t q_;
    std::size_t p_;
    std::vector<std::vector<Poly>> t_;
};

using ChartPtr = std::shared_ptr<const Chart>;

bool same_chart(const ChartPtr& a, const ChartPtr& b);
void require_same_chart(const ChartPtr& a, const ChartPtr& b);

}  // namespace folham
