#pragma once

#include <vector>

#include "graded.hpp"

namespace folham {

// Vector field in the adapted frame: sum xi^a X_a + eta^u d/dy^u.
class VectorField {
public:
    explicit VectorField(ChartPtr chart);
    VectorField(ChartPtr chart, std::vector<Poly> xi, std::vector<Poly> eta);

    // Frame fields X_a (a < q) and d/dy^u.
    static VectorField transverse_frame(ChartPtr chart, std::size_t a);
    static VectorField leaf_frame(ChartPtr chart, std::size_t u);
    // d/dx^a or d/dy^u of the coordinate frame.
    static VectorField coordinate_field(ChartPtr chart, std::size_t coord);
    static VectorField from_coordinate(ChartPtr chart, const std::vector<Poly>& comps);

    const ChartPtr& chart() const noexcept { return chart_; }
    const std::vector<Poly>& xi() const noexcept { return xi_; }
    const std::vector<Poly>& eta() const noexcept { return eta_; }
    // Component along frame slot s (xi for s < q, eta after).
    const Poly& component(std::size_t slot) const;

    // d/dx^a coefficient is xi^a; d/dy^u coefficient is eta^u - xi^a t^u_a.
    std::vector<Poly> coordinate_components() const;

    // Derivative of a function along the field.
    Poly apply(const Poly& f) const;

    bool is_zero() const;
    bool in_E() const;
    bool tangent_to_leaves() const;
    // Foliated fields map leaves to leaves: xi^a constant along the leaves.
    bool is_foliated() const;

    VectorField& operator+=(const VectorField& o);
    VectorField& operator-=(const VectorField& o);
    VectorField& operator*=(const Poly& f);
    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    friend VectorField operator*(const Poly& f, VectorField a) { return a *= f; }
    friend VectorField operator*(VectorField a, const Poly& f) { return a *= f; }
    VectorField operator-() const;
    friend bool operator==(const VectorField& a, const VectorField& b);

    Multivector as_multivector() const;
    std::string to_string() const;

private:
    ChartPtr chart_;
    std::vector<Poly> xi_;
    std::vector<Poly> eta_;
};

enum class Subbundle { E, TF };

VectorField project(const VectorField& v, Subbundle onto);

// Interior products in the adapted frame.
BigradedForm contract(const VectorField& x, const BigradedForm& w);
// Contraction of a multivector by a 1-form: i_alpha Q.
Multivector contract(const BigradedForm& alpha, const Multivector& q);

// <alpha, X> for a form of total degree 1.
Poly pairing(const BigradedForm& alpha, const VectorField& x);

// w(X_1, ..., X_k) = i(X_k) ... i(X_1) w, i.e. the determinant convention.
Poly evaluate_form(const BigradedForm& w, const std::vector<VectorField>& args);
// Q(alpha_1, ..., alpha_k), same convention.
Poly evaluate_multivector(const Multivector& q, const std::vector<BigradedForm>& args);

// Basis forms dx^a and theta^u.
BigradedForm dx(const ChartPtr& chart, std::size_t a);
BigradedForm theta(const ChartPtr& chart, std::size_t u);

// A 1-form is "(1,0)" when it has only dx components.
bool is_one_zero_form(const BigradedForm& w);
// Foliated (basic) form: only dx components with foliated coefficients.
bool is_foliated_form(const BigradedForm& w);

// Change of frame between the adapted and coordinate descriptions.
CoordForm to_coordinate(const BigradedForm& w);
BigradedForm from_coordinate(const CoordForm& w);
CoordMultivector to_coordinate(const Multivector& m);
Multivector from_coordinate(const CoordMultivector& m);

// Pointwise values.
Rational evaluate_at(const Poly& f, std::span<const Rational> point);
std::vector<Rational> evaluate_at(const VectorField& v, std::span<const Rational> point);
std::map<Mask, Rational> evaluate_at(const BigradedForm& w, std::span<const Rational> point);

}  // namespace folham
