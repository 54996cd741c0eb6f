#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace folham {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& r);

// Ordered coordinate names of a chart. Polys keep a shared pointer to the
// names they are written in; two polys combine only if the names agree.
struct Variables {
    std::vector<std::string> names;

    std::size_t size() const noexcept { return names.size(); }
    // Index of a name, or -1.
    int index_of(const std::string& name) const;
};

using VariablesPtr = std::shared_ptr<const Variables>;

using Exponents = std::vector<std::uint16_t>;

// Graded lexicographic order, larger first: total degree, then exponent of
// the first variable, then the second, ...
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

unsigned total_degree(const Exponents& e);

// Exact multivariate polynomial with rational coefficients. Terms are kept
// in a map keyed by exponent vector, so the representation is canonical:
// no zero coefficients and a fixed term order.
class Poly {
public:
    using Terms = std::map<Exponents, Rational, GrlexGreater>;

    explicit Poly(VariablesPtr vars);
    Poly(VariablesPtr vars, const Rational& constant);

    static Poly variable(VariablesPtr vars, std::size_t index);
    static Poly monomial(VariablesPtr vars, Exponents exps, const Rational& coeff = 1);

    const VariablesPtr& variables() const noexcept { return vars_; }
    std::size_t nvars() const noexcept { return vars_->size(); }
    const Terms& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    // Degree of the zero polynomial is reported as -1.
    int degree() const;
    bool depends_on(std::size_t index) const;
    Rational constant_term() const;

    Poly partial(std::size_t index) const;
    Rational evaluate(std::span<const Rational> point) const;

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    Poly operator-() const;

    Poly pow(unsigned e) const;

    friend bool operator==(const Poly& a, const Poly& b);

    std::string to_string() const;

    // Coefficient of a given exponent vector (zero if absent).
    Rational coefficient(const Exponents& e) const;

private:
    void check_same(const Poly& other) const;
    void add_term(const Exponents& e, const Rational& c);

    VariablesPtr vars_;
    Terms terms_;
};

bool same_variables(const VariablesPtr& a, const VariablesPtr& b);

// All exponent vectors over n variables of total degree <= max_degree, in
// ascending graded order (constants first).
std::vector<Exponents> monomials_up_to(std::size_t n, unsigned max_degree);

}  // namespace folham
