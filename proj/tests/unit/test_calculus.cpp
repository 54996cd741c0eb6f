#include <doctest.h>

#include "support.hpp"

using namespace folham;

namespace {

BigradedForm fn(const ChartPtr& c, const Poly& f) { return BigradedForm::function(c, f); }

}  // namespace

TEST_SUITE("calculus") {

TEST_CASE("d squares to zero and differentiates functions") {
    test::Random rnd(21);
    for (const char* id : {"a", "c", "g"}) {
        auto c = test::corpus(id).chart;
        for (int i = 0; i < 20; ++i) {
            BigradedForm w = rnd.form(c, rnd.uniform(0, 2));
            CHECK(exterior_d(exterior_d(w)).is_zero());
            Poly f = rnd.poly(c);
            VectorField x = rnd.field(c);
            CHECK(pairing(exterior_d(fn(c, f)), x) == x.apply(f));
        }
    }
}

TEST_CASE("bigraded pieces of d") {
    test::Random rnd(22);
    auto c = test::corpus("c").chart;
    for (int i = 0; i < 20; ++i) {
        BigradedForm w = rnd.form(c, rnd.uniform(0, 2));
        auto parts = d_components(w);
        CHECK(parts.d_prime + parts.d_second + parts.del == exterior_d(w));
        CHECK(d_second(d_second(w)).is_zero());
        CHECK(d_del(d_del(w)).is_zero());
        CHECK((d_prime(d_prime(w)) + d_second(d_del(w)) + d_del(d_second(w))).is_zero());
        CHECK((d_prime(d_second(w)) + d_second(d_prime(w))).is_zero());
        CHECK((d_prime(d_del(w)) + d_del(d_prime(w))).is_zero());
    }
    // the del sector is live on this chart
    CHECK_FALSE(d_del(theta(c, 0)).is_zero());
}

TEST_CASE("Cartan calculus") {
    test::Random rnd(23);
    auto c = test::corpus("c").chart;
    for (int i = 0; i < 20; ++i) {
        VectorField x = rnd.field(c), y = rnd.field(c);
        BigradedForm w = rnd.form(c, 2);
        Poly f = rnd.poly(c);
        CHECK(lie(x, fn(c, f)) == fn(c, x.apply(f)));
        CHECK(lie(x, exterior_d(w)) == exterior_d(lie(x, w)));
        CHECK(contract(vf_bracket(x, y), w) == lie(x, contract(y, w)) - contract(y, lie(x, w)));
        CHECK((contract(x, contract(y, w)) + contract(y, contract(x, w))).is_zero());
    }
}

TEST_CASE("split Lie derivative") {
    test::Random rnd(24);
    auto c = test::corpus("c").chart;
    for (int i = 0; i < 15; ++i) {
        VectorField x = rnd.e_field(c);
        BigradedForm w = rnd.form(c, rnd.uniform(0, 2));
        auto s = lie_split(x, w);
        BigradedForm rest = contract(x, d_del(w)) + d_del(contract(x, w));
        CHECK(s.prime + s.second + rest == lie(x, w));
        CHECK(lie_prime(x, w) == s.prime);
    }
    CHECK_THROWS_AS(lie_split(VectorField::leaf_frame(c, 0), dx(c, 0)), PreconditionError);
}

TEST_CASE("vector field bracket") {
    test::Random rnd(25);
    auto c = test::corpus("g").chart;
    for (int i = 0; i < 10; ++i) {
        VectorField x = rnd.field(c, 1), y = rnd.field(c, 1), z = rnd.field(c, 1);
        Poly f = rnd.poly(c);
        CHECK(vf_bracket(x, y) == -vf_bracket(y, x));
        CHECK((vf_bracket(x, vf_bracket(y, z)) + vf_bracket(y, vf_bracket(z, x)) + vf_bracket(z, vf_bracket(x, y)))
                  .is_zero());
        CHECK(vf_bracket(x, y).apply(f) == x.apply(y.apply(f)) - y.apply(x.apply(f)));
    }
}

TEST_CASE("Nijenhuis tensor of E") {
    test::Random rnd(26);
    auto c = test::corpus("g").chart;
    // on the frame it is the tau table
    for (std::size_t a = 0; a < c->q(); ++a)
        for (std::size_t b = 0; b < c->q(); ++b) {
            VectorField n = nijenhuis_E(VectorField::transverse_frame(c, a), VectorField::transverse_frame(c, b));
            CHECK(n.tangent_to_leaves());
            for (std::size_t u = 0; u < c->p(); ++u) CHECK(n.eta()[u] == tau(*c, u, a, b));
        }
    for (int i = 0; i < 10; ++i) {
        VectorField x = rnd.field(c, 1), y = rnd.field(c, 1);
        Poly f = rnd.poly(c, 1);
        CHECK(nijenhuis_E(f * x, y) == f * nijenhuis_E(x, y));
        CHECK(nijenhuis_E(x, y) == -nijenhuis_E(y, x));
    }
    auto cc = test::corpus("c").chart;
    CHECK(tau(*cc, 0, 0, 1) == cc->parse("y3"));
}

TEST_CASE("d'^2 f is the pairing of d''f with N_E") {
    test::Random rnd(27);
    auto c = test::corpus("c").chart;
    for (int i = 0; i < 20; ++i) {
        Poly f = rnd.poly(c, 3);
        VectorField x = rnd.e_field(c), y = rnd.e_field(c);
        BigradedForm dd = d_prime(d_prime(fn(c, f)));
        CHECK(evaluate_form(dd, {x, y}) == pairing(d_second(fn(c, f)), nijenhuis_E(x, y)));
    }
}

TEST_CASE("Schouten bracket normalization") {
    test::Random rnd(28);
    auto c = test::corpus("c").chart;
    for (int i = 0; i < 10; ++i) {
        VectorField x = rnd.field(c, 1), y = rnd.field(c, 1);
        CHECK(schouten(x.as_multivector(), y.as_multivector()) == vf_bracket(x, y).as_multivector());
        Poly f = rnd.poly(c);
        CHECK(schouten(x.as_multivector(), Multivector::function(c, f)) == Multivector::function(c, x.apply(f)));
    }
    // [W,W](df,dg,dk) = 2 sum_cycl {{f,g},k} for W = h^{ab} d/dx^a ^ d/dx^b (a<b)
    auto v = Chart::make_variables({"x1", "x2", "x3"}, {});
    auto flat = std::make_shared<const Chart>(v, 3);
    CoordMultivector w(flat);
    w.add(0b011, flat->parse("x3"));
    w.add(0b110, flat->parse("x2"));
    auto bracket = [&](const Poly& f, const Poly& g) {
        Poly out = flat->zero();
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                Mask m = (Mask(1) << a) | (Mask(1) << b);
                if (a == b) continue;
                Poly h = w.component(m);
                if (a > b) h = -h;
                out += h * f.partial(a) * g.partial(b);
            }
        return out;
    };
    Poly x1 = flat->coordinate(0), x2 = flat->coordinate(1), x3 = flat->coordinate(2);
    Poly cyc = bracket(bracket(x1, x2), x3) + bracket(bracket(x2, x3), x1) + bracket(bracket(x3, x1), x2);
    CoordMultivector ww = schouten(w, w);
    CHECK(ww.component(0b111) == Rational(2) * cyc);
    CHECK(ww.component(0b111) == flat->parse("-2*x3"));
}

TEST_CASE("Schouten bracket with a vector field is the Lie derivative") {
    auto v = Chart::make_variables({"x1", "x2", "x3"}, {});
    auto flat = std::make_shared<const Chart>(v, 3);
    CoordMultivector x(flat), w(flat);
    x.add(0b001, flat->parse("2*x1*x2"));
    w.add(0b011, flat->parse("x1"));
    // L_X W computed by hand
    CHECK(schouten(x, w).is_zero());
    w = CoordMultivector(flat);
    w.add(0b011, flat->parse("x2"));
    CHECK(schouten(x, w) == schouten(x, w).degree_part(2));
    CHECK(schouten(x, w).component(0b011) == flat->parse("-2*x2^2"));
}

TEST_CASE("Schouten bracket graded Jacobi") {
    test::Random rnd(29);
    auto flat = rnd.chart(3, 1, 0, 0);
    auto random = [&](int degree) {
        CoordMultivector m(flat);
        for (Mask k = 0; k < 16; ++k)
            if (popcount(k) == degree) m.add(k, rnd.poly(flat, 2));
        return m;
    };
    // superalgebra bracket of a degree-p multivector
    auto br = [](const CoordMultivector& a, int p, const CoordMultivector& b) {
        return (p - 1) % 2 ? Rational(-1) * schouten(a, b) : schouten(a, b);
    };
    for (int i = 0; i < 10; ++i)
        for (auto [p, q, r] : {std::tuple{1, 2, 2}, std::tuple{2, 2, 1}, std::tuple{2, 1, 2}, std::tuple{2, 2, 2}}) {
            auto a = random(p), b = random(q), c = random(r);
            int sign = ((p - 1) * (q - 1)) % 2 ? -1 : 1;
            CHECK(br(a, p, br(b, q, c)) == br(br(a, p, b), p + q - 1, c) + Rational(sign) * br(b, q, br(a, p, c)));
        }
}

TEST_CASE("Schouten bracket graded symmetry") {
    test::Random rnd(29);
    auto c = test::corpus("g").chart;
    for (int i = 0; i < 10; ++i) {
        int p = rnd.uniform(0, 2), q = rnd.uniform(0, 2);
        Multivector a(c), b(c);
        for (Mask m = 0; m < (Mask(1) << c->n()); ++m) {
            if (popcount(m) == p && rnd.chance(50)) a.add(m, rnd.poly(c, 1));
            if (popcount(m) == q && rnd.chance(50)) b.add(m, rnd.poly(c, 1));
        }
        int sign = (p * q) % 2 ? -1 : 1;
        CHECK(schouten(a, b) == Rational(sign) * schouten(b, a));
    }
}

}  // TEST_SUITE
