#pragma once

#include <string>
#include <vector>

#include "hamiltonian.hpp"
#include "linalg.hpp"

namespace folham {

// Generalized coboundary on E-multivectors (k = 0 required):
//   (dQ)(a_0..a_k) = sum_i (-1)^i H(a_i)(Q(..^a_i..))
//                  + sum_{i<j} (-1)^{i+j} Q({a_i,a_j}', ..^a_i..^a_j..)
Multivector coboundary(const HamStructure& hs, const Multivector& q);
// Value of the coboundary on explicit (1,0)-form arguments.
Poly coboundary_value(const HamStructure& hs, const Multivector& q, const std::vector<BigradedForm>& args);

// Lichnerowicz-like coboundary on foliated E-multivectors: -p_E [W, Q].
Multivector lp_coboundary(const HamStructure& hs, const Multivector& q);
// W = 1/2 h^{ab} X_a ^ X_b.
Multivector structure_bivector(const HamStructure& hs);

// Right-hand side of the delta-square formula on explicit arguments:
//   sum_{i<j} (-1)^{i+j} Delta_h(a_i,a_j)(Q(..))
//   + sum_{i<j<l} (-1)^{i+j+l} Q(sum_cycl {a_l,{a_i,a_j}'}', ..)
Poly delta_square_rhs(const HamStructure& hs, const Multivector& q, const std::vector<BigradedForm>& args);
// delta(delta Q)(args) minus the right-hand side above.
Poly verify_delta_square(const HamStructure& hs, const Multivector& q, const std::vector<BigradedForm>& args);
// The right-hand side assembled as a (k+2)-multivector from basis arguments.
Multivector delta_square_rhs_multivector(const HamStructure& hs, const Multivector& q);

enum class Theory { Twisted, LpBasic, BasicDeRham };

std::string to_string(Theory t);
Theory parse_theory(const std::string& name);

// One element of a monomial cochain basis: coefficient monomial times the
// frame word `mask`.
struct BasisElement {
    Mask mask = 0;
    Exponents exponents;
};

// Ordered monomial basis of a truncated cochain space (multi-index first,
// then ascending monomial order).
struct TruncatedComplex {
    ChartPtr chart;
    Theory theory = Theory::Twisted;
    unsigned max_degree = 0;

    // Cochains of degree k with coefficient degree <= degree.
    std::vector<BasisElement> basis(int k, unsigned degree) const;
    std::vector<BasisElement> basis(int k) const { return basis(k, max_degree); }
};

struct CohomologyOptions {
    bool emit_kernel_basis = false;
    // Coefficient degree bound for (k-1)-cochains whose images are tested
    // against C^k_D; -1 means D + 1. Raising it checks truncation stability.
    int image_source_degree = -1;
};

struct CohomologyResult {
    Theory theory = Theory::Twisted;
    int k = 0;
    unsigned max_degree = 0;
    int target_degree = 0;        // bound on coefficient degrees of images of C^k_D
    int image_source_degree = 0;
    std::size_t dim_cochains = 0;
    std::size_t dim_kernel = 0;
    std::size_t dim_image_in_kernel = 0;
    std::size_t dim_twisted = 0;  // dim_kernel - dim_image_in_kernel
    std::vector<std::string> kernel_basis;
};

CohomologyResult twisted_cohomology(const HamStructure& hs, int k, unsigned max_degree,
                                    const CohomologyOptions& opts = {});
CohomologyResult basic_lp_cohomology(const HamStructure& hs, int k, unsigned max_degree,
                                     const CohomologyOptions& opts = {});
CohomologyResult basic_derham_cohomology(const ChartPtr& chart, int k, unsigned max_degree,
                                         const CohomologyOptions& opts = {});

// Safe coefficient-degree bound for the image of a degree-<= D cochain.
int twisted_target_degree(const HamStructure& hs, unsigned max_degree);

// Matrix of the coboundary on the basis of C^k_D; rows are indexed by
// `rows` (extended on demand with keys of images).
struct SparseIndex {
    std::map<std::pair<Mask, Exponents>, std::size_t> rows;
    std::size_t index(Mask m, const Exponents& e);
};

template <class Tag>
std::vector<std::pair<std::size_t, Rational>> sparse_column(const Graded<Tag>& g, SparseIndex& index) {
    std::vector<std::pair<std::size_t, Rational>> col;
    for (const auto& [m, c] : g.components())
        for (const auto& [e, r] : c.terms()) col.emplace_back(index.index(m, e), r);
    return col;
}

RationalMatrix assemble(const std::vector<std::vector<std::pair<std::size_t, Rational>>>& cols, std::size_t rows);

Multivector basis_multivector(const ChartPtr& chart, const BasisElement& b);

}  // namespace folham
