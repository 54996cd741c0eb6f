#pragma once

#include <random>
#include <string>

#include "cohomology.hpp"
#include "specfile.hpp"

namespace folham::test {

// Bundled example by its short name ("a" .. "g").
inline SpecFile corpus(const std::string& id) {
    return load_spec_file(std::string(FOLHAM_CORPUS_DIR) + "/ex-" + id + ".json");
}

// Seeded generators of random polynomial objects over a chart.
class Random {
public:
    explicit Random(std::uint32_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool chance(int percent) { return uniform(0, 99) < percent; }

    // Sparse polynomial with small integer coefficients. Foliated ones do not
    // involve the leaf coordinates.
    Poly poly(const ChartPtr& c, unsigned max_degree = 2, bool foliated = false, int density = 40) {
        Poly out = c->zero();
        for (const auto& e : monomials_up_to(c->n(), max_degree)) {
            if (foliated && leafwise(*c, e)) continue;
            if (!chance(density)) continue;
            int v = uniform(-3, 3);
            if (v != 0) out += Poly::monomial(c->variables(), e, Rational(v));
        }
        return out;
    }

    // Random form of total degree k in the adapted coframe.
    BigradedForm form(const ChartPtr& c, int k, unsigned max_degree = 2) {
        BigradedForm out(c);
        for (Mask m = 0; m < (Mask(1) << c->n()); ++m)
            if (popcount(m) == k && chance(60)) out.add(m, poly(c, max_degree));
        return out;
    }

    BigradedForm one_zero_form(const ChartPtr& c, bool foliated = false, unsigned max_degree = 2) {
        BigradedForm out(c);
        for (std::size_t a = 0; a < c->q(); ++a) out.add(Mask(1) << a, poly(c, max_degree, foliated));
        return out;
    }

    VectorField field(const ChartPtr& c, unsigned max_degree = 2) {
        std::vector<Poly> xi, eta;
        for (std::size_t a = 0; a < c->q(); ++a) xi.push_back(poly(c, max_degree));
        for (std::size_t u = 0; u < c->p(); ++u) eta.push_back(poly(c, max_degree));
        return VectorField(c, xi, eta);
    }

    VectorField e_field(const ChartPtr& c, unsigned max_degree = 2) {
        std::vector<Poly> xi;
        for (std::size_t a = 0; a < c->q(); ++a) xi.push_back(poly(c, max_degree));
        return VectorField(c, xi, std::vector<Poly>(c->p(), c->zero()));
    }

    VectorField foliated_field(const ChartPtr& c, unsigned max_degree = 2) {
        std::vector<Poly> xi, eta;
        for (std::size_t a = 0; a < c->q(); ++a) xi.push_back(poly(c, max_degree, true));
        for (std::size_t u = 0; u < c->p(); ++u) eta.push_back(poly(c, max_degree));
        return VectorField(c, xi, eta);
    }

    // Section of the k-th exterior power of E.
    Multivector e_multivector(const ChartPtr& c, int k, unsigned max_degree = 2) {
        Multivector out(c);
        for (Mask m = 0; m < (Mask(1) << c->q()); ++m)
            if (popcount(m) == k) out.add(m, poly(c, max_degree));
        return out;
    }

    // Random skew h (degree <= max_degree) and, with the given odds, a
    // nonzero k. Entries are foliated with the given odds, and zero or
    // constant often enough that every classification outcome shows up.
    HamStructure structure(const ChartPtr& c, unsigned max_degree = 2, int k_percent = 20, int foliated_percent = 70) {
        std::size_t q = c->q(), p = c->p();
        PolyMatrix h(q, std::vector<Poly>(q, c->zero()));
        PolyMatrix k(q, std::vector<Poly>(p, c->zero()));
        int style = uniform(0, 3);  // 0 zero-ish, 1 constant, 2 low degree, 3 full
        bool foliated = chance(foliated_percent);
        for (std::size_t a = 0; a < q; ++a)
            for (std::size_t b = a + 1; b < q; ++b) {
                Poly v = c->zero();
                if (style == 1)
                    v = c->constant(uniform(-2, 2));
                else if (style == 2)
                    v = poly(c, 1, foliated, 30);
                else if (style == 3)
                    v = poly(c, max_degree, foliated, 30);
                else if (chance(30))
                    v = c->constant(1);
                h[a][b] = v;
                h[b][a] = -v;
            }
        if (chance(k_percent))
            for (std::size_t a = 0; a < q; ++a)
                for (std::size_t u = 0; u < p; ++u)
                    if (chance(50)) k[a][u] = poly(c, 1, false, 50);
        return HamStructure(c, h, k);
    }

    // Chart of the given shape with random t of degree <= max_degree.
    ChartPtr chart(std::size_t q, std::size_t p, unsigned max_degree = 1, int t_percent = 50) {
        std::vector<std::string> tr, lf;
        for (std::size_t a = 0; a < q; ++a) tr.push_back("x" + std::to_string(a + 1));
        for (std::size_t u = 0; u < p; ++u) lf.push_back("y" + std::to_string(q + u + 1));
        auto vars = Chart::make_variables(tr, lf);
        auto base = std::make_shared<const Chart>(vars, q);
        std::vector<std::vector<Poly>> t(q, std::vector<Poly>(p, base->zero()));
        for (std::size_t a = 0; a < q; ++a)
            for (std::size_t u = 0; u < p; ++u)
                if (chance(t_percent)) t[a][u] = poly(base, max_degree, false, 40);
        return std::make_shared<const Chart>(vars, q, t);
    }

    std::mt19937& engine() { return rng_; }

private:
    static bool leafwise(const Chart& c, const Exponents& e) {
        for (std::size_t i = c.q(); i < c.n(); ++i)
            if (e[i]) return true;
        return false;
    }

    std::mt19937 rng_;
};

}  // namespace folham::test
