#include <doctest.h>

#include "support.hpp"

using namespace folham;

TEST_SUITE("foliation") {

TEST_CASE("chart validation") {
    CHECK_THROWS_AS(Chart::make_variables({"x1", "x1"}, {}), InputError);
    CHECK_THROWS_AS(Chart::make_variables({"x1", ""}, {}), InputError);
    auto v = Chart::make_variables({}, {"y1"});
    CHECK_THROWS_AS(Chart(v, 0), InputError);
    auto w = Chart::make_variables({"x1"}, {"y2"});
    std::vector<std::vector<Poly>> bad_t(2, std::vector<Poly>(1, Poly(w)));
    CHECK_THROWS_AS(Chart(w, 1, bad_t), InputError);
}

TEST_CASE("adapted frame and coframe are dual") {
    auto c = test::corpus("c").chart;
    for (std::size_t a = 0; a < c->q(); ++a) {
        auto xa = VectorField::transverse_frame(c, a);
        CHECK(xa.in_E());
        CHECK(xa.is_foliated());
        for (std::size_t b = 0; b < c->q(); ++b) CHECK(pairing(dx(c, b), xa) == c->constant(a == b ? 1 : 0));
        CHECK(pairing(theta(c, 0), xa).is_zero());
    }
    auto dy = VectorField::leaf_frame(c, 0);
    CHECK(dy.tangent_to_leaves());
    CHECK(pairing(theta(c, 0), dy) == c->constant(1));
    // X_1 = d/dx1 - x2*y3 d/dy3 in the coordinate frame
    auto comps = VectorField::transverse_frame(c, 0).coordinate_components();
    CHECK(comps[2] == c->parse("-x2*y3"));
}

TEST_CASE("frame bracket on the twisted chart") {
    // reference: tests/oracles/oracle.py (exc_bracket_x1_x2)
    auto c = test::corpus("c").chart;
    auto br = vf_bracket(VectorField::transverse_frame(c, 0), VectorField::transverse_frame(c, 1));
    auto comps = br.coordinate_components();
    CHECK(comps[0].is_zero());
    CHECK(comps[1].is_zero());
    CHECK(comps[2] == c->parse("y3"));
    CHECK(br.to_string() == "y3*d/dy3");
    CHECK(nijenhuis_E(VectorField::transverse_frame(c, 0), VectorField::transverse_frame(c, 1)) == br);
}

TEST_CASE("d theta on the twisted chart") {
    // reference: tests/oracles/oracle.py (exc_dtheta): d(x2*y3) ^ dx1 has
    // coordinate coefficients y3 on dx2^dx1 and x2 on dy3^dx1.
    auto c = test::corpus("c").chart;
    BigradedForm dth = exterior_d(theta(c, 0));
    CoordForm coord = to_coordinate(dth);
    CHECK(coord.component(0b011) == c->parse("-y3"));
    CHECK(coord.component(0b101) == c->parse("-x2"));
    CHECK(dth.component(0b011) == c->parse("-y3"));
    CHECK(dth.component(0b101) == c->parse("-x2"));
    CHECK(dth.to_string() == "-y3*dx1^dx2 - x2*dx1^theta(y3)");
}

TEST_CASE("coordinate conversion round trips") {
    test::Random rnd(3);
    auto c = test::corpus("g").chart;
    for (int i = 0; i < 30; ++i) {
        int k = rnd.uniform(0, 3);
        BigradedForm w = rnd.form(c, k);
        CHECK(from_coordinate(to_coordinate(w)) == w);
        Multivector m = wedge(rnd.field(c).as_multivector(), rnd.field(c).as_multivector());
        CHECK(from_coordinate(to_coordinate(m)) == m);
        VectorField v = rnd.field(c);
        CHECK(VectorField::from_coordinate(c, v.coordinate_components()) == v);
    }
}

TEST_CASE("interior product is an antiderivation") {
    test::Random rnd(4);
    auto c = test::corpus("c").chart;
    for (int i = 0; i < 30; ++i) {
        VectorField x = rnd.field(c);
        BigradedForm a = rnd.form(c, 1), b = rnd.form(c, 2);
        CHECK(contract(x, wedge(a, b)) == wedge(contract(x, a), b) - wedge(a, contract(x, b)));
    }
}

TEST_CASE("evaluation conventions") {
    auto c = test::corpus("a").chart;
    auto x1 = VectorField::transverse_frame(c, 0), x2 = VectorField::transverse_frame(c, 1);
    BigradedForm w = wedge(dx(c, 0), dx(c, 1));
    CHECK(evaluate_form(w, {x1, x2}) == c->constant(1));
    CHECK(evaluate_form(w, {x2, x1}) == c->constant(-1));
    Multivector m = wedge(x1.as_multivector(), x2.as_multivector());
    CHECK(evaluate_multivector(m, {dx(c, 0), dx(c, 1)}) == c->constant(1));
}

TEST_CASE("projections split a field") {
    test::Random rnd(6);
    auto c = test::corpus("g").chart;
    for (int i = 0; i < 20; ++i) {
        VectorField v = rnd.field(c);
        VectorField e = project(v, Subbundle::E), f = project(v, Subbundle::TF);
        CHECK(e.in_E());
        CHECK(f.tangent_to_leaves());
        CHECK(e + f == v);
    }
}

TEST_CASE("foliated objects") {
    auto c = test::corpus("c").chart;
    CHECK(c->is_foliated(c->parse("x1*x2^2")));
    CHECK_FALSE(c->is_foliated(c->parse("x1 + y3")));
    CHECK(is_foliated_form(c->parse("x1") * dx(c, 1)));
    CHECK_FALSE(is_foliated_form(theta(c, 0)));
    CHECK(is_one_zero_form(c->parse("y3") * dx(c, 0)));
    CHECK_FALSE(is_one_zero_form(theta(c, 0)));
    CHECK_THROWS_AS(dx(c, 2), InputError);
    CHECK_THROWS_AS(theta(c, 1), InputError);
}

TEST_CASE("pointwise evaluation") {
    auto c = test::corpus("c").chart;
    std::vector<Rational> pt{Rational(1), Rational(2), Rational(3)};
    auto vals = evaluate_at(VectorField::transverse_frame(c, 0), pt);
    CHECK(vals[2] == Rational(0));  // adapted components: xi = (1, 0), eta = 0
    std::vector<Rational> bad{Rational(1)};
    CHECK_THROWS_AS(evaluate_at(c->parse("x1"), bad), InputError);
}

}  // TEST_SUITE
