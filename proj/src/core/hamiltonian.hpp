#pragma once

#include <optional>
#include <string>
#include <vector>

#include "calculus.hpp"

namespace folham {

using PolyMatrix = std::vector<std::vector<Poly>>;

// Candidate hamiltonian structure of the foliation in local form
//   h(dx^a) = h^{ab} X_b + k^{au} d/dy^u
// h is q x q and skew, k is q x p.
class HamStructure {
public:
    HamStructure(ChartPtr chart, PolyMatrix h, PolyMatrix k = {});

    const ChartPtr& chart() const noexcept { return chart_; }
    const Poly& h(std::size_t a, std::size_t b) const { return h_.at(a).at(b); }
    const Poly& k(std::size_t a, std::size_t u) const { return k_.at(a).at(u); }
    const PolyMatrix& h_matrix() const noexcept { return h_; }
    const PolyMatrix& k_matrix() const noexcept { return k_; }

    // k = 0: the image lies in the chart's E.
    bool is_transversal() const;
    bool h_is_foliated() const;
    int h_degree() const;

    // H(dx^a).
    VectorField image(std::size_t a) const;

    friend bool operator==(const HamStructure& a, const HamStructure& b);

private:
    ChartPtr chart_;
    PolyMatrix h_;
    PolyMatrix k_;
};

struct Verdict {
    bool pass = true;
    std::string witness;   // printed residual
    std::string location;  // index tuple / which condition

    static Verdict ok() { return {}; }
    static Verdict fail(std::string witness, std::string location) {
        return {false, std::move(witness), std::move(location)};
    }
};

struct Classification {
    Verdict hamiltonian;
    Verdict strong;
    Verdict transversal;
    Verdict tame;
};

// H(alpha) for a (1,0)-form alpha = alpha_a dx^a.
VectorField apply_H(const HamStructure& hs, const BigradedForm& alpha);

// {f,g} = X_f g for foliated f, g.
Poly poisson_bracket(const HamStructure& hs, const Poly& f, const Poly& g);

// Gelfand-Dorfman bracket [H,K](alpha, beta, gamma) on foliated 1-forms.
Poly gd_bracket(const HamStructure& h1, const HamStructure& h2, const BigradedForm& alpha,
                const BigradedForm& beta, const BigradedForm& gamma);
// Same with L' in place of L, for arbitrary (1,0)-forms; both structures
// must be transversal.
Poly gd_bracket_extended(const HamStructure& h1, const HamStructure& h2, const BigradedForm& alpha,
                         const BigradedForm& beta, const BigradedForm& gamma);

// {alpha,beta} = L_{H alpha} beta - L_{H beta} alpha - d<H alpha, beta>.
BigradedForm omega1_bracket(const HamStructure& hs, const BigradedForm& alpha, const BigradedForm& beta);
// {alpha,beta}' = L'_{H alpha} beta - L'_{H beta} alpha - d'<H alpha, beta>.
BigradedForm omega1_bracket_extended(const HamStructure& hs, const BigradedForm& alpha,
                                     const BigradedForm& beta);

// Components of alpha -> [X, H alpha] - H(L_X alpha), for a foliated field X.
HamStructure lie_derivative_of_H(const HamStructure& hs, const VectorField& x);
// Components of alpha -> p_E[X, H alpha] - H(L'_X alpha), for X in E and k = 0.
HamStructure lie_derivative_of_H_prime(const HamStructure& hs, const VectorField& x);

struct IdentityResiduals {
    Poly first;   // <g,H{a,b}> - <g,[Ha,Hb]> - 1/2 [H,H](a,b,g)
    Poly second;  // sum_cycl <{{a,b},g},X> - [H,L_X H](a,b,g) - 1/2 sum_cycl [H,H](a,b,d<g,X>)
};

IdentityResiduals identity_checks(const HamStructure& hs, const BigradedForm& alpha, const BigradedForm& beta,
                                  const BigradedForm& gamma, const VectorField& x);

Classification classify(const HamStructure& hs);
// Extra strongness check X_{{f,g}} = [X_f, X_g] on user-supplied foliated functions.
Verdict strong_on_functions(const HamStructure& hs, const std::vector<Poly>& functions);

struct ImageCheck {
    std::vector<Rational> point;
    std::size_t rank_w = 0;
    std::size_t dim_image_cap_tf = 0;
    std::size_t dim_char_dist = 0;
    // dim h(ann CharDist), computed from a kernel basis of h.
    std::size_t dim_h_of_annihilator = 0;
    bool annihilator_matches = true;
};

std::vector<ImageCheck> image_checks(const HamStructure& hs, const std::vector<std::vector<Rational>>& points);

// X'_f = H(d'f); requires k = 0.
VectorField extended_hamiltonian_field(const HamStructure& hs, const Poly& f);
// {f,g}' = X'_f g.
Poly extended_poisson(const HamStructure& hs, const Poly& f, const Poly& g);

// P = 1/2 h^{ab} X_a ^ X_b for a tame structure; its Schouten square is
// checked to vanish.
Multivector induced_poisson_bivector(const HamStructure& hs);

Verdict is_distinguished(const HamStructure& hs, const Poly& f);

// Delta_h(alpha, beta) = H({alpha,beta}') - [H alpha, H beta].
VectorField delta_defect(const HamStructure& hs, const BigradedForm& alpha, const BigradedForm& beta);

// {f,g}' = Phi(X'_f, X'_g) for every pair of test functions.
Verdict verify_fundamental_form(const HamStructure& hs, const BigradedForm& phi, const std::vector<Poly>& tests);

// d'(d'f).
BigradedForm d_prime_squared(const Poly& f, const ChartPtr& chart);

}  // namespace folham
