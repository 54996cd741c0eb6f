#include "calculus.hpp"

#include <cstdlib>

namespace folham {

CoordForm exterior_d(const CoordForm& w) {
    const auto& chart = w.chart();
    CoordForm out(chart);
    for (const auto& [m, c] : w.components()) {
        for (std::size_t i = 0; i < chart->n(); ++i) {
            Mask bit = Mask(1) << i;
            if (m & bit) continue;
            Poly dc = c.partial(i);
            if (dc.is_zero()) continue;
            if (merge_sign(bit, m) < 0) dc = -dc;
            out.add(m | bit, dc);
        }
    }
    return out;
}

BigradedForm exterior_d(const BigradedForm& w) {
    return from_coordinate(exterior_d(to_coordinate(w)));
}

DComponents d_components(const BigradedForm& w) {
    const auto& chart = w.chart();
    DComponents out{BigradedForm(chart), BigradedForm(chart), BigradedForm(chart)};
    for (Bidegree b : w.bidegrees()) {
        BigradedForm dw = exterior_d(w.bidegree_part(b));
        for (const auto& [m, c] : dw.components()) {
            Bidegree r = bidegree_of(m, chart->q());
            if (r == Bidegree{b.s + 1, b.t})
                out.d_prime.add(m, c);
            else if (r == Bidegree{b.s, b.t + 1})
                out.d_second.add(m, c);
            else if (r == Bidegree{b.s + 2, b.t - 1})
                out.del.add(m, c);
            else
                throw InternalError("exterior derivative produced an unexpected bidegree");
        }
    }
    return out;
}

BigradedForm d_prime(const BigradedForm& w) { return d_components(w).d_prime; }
BigradedForm d_second(const BigradedForm& w) { return d_components(w).d_second; }
BigradedForm d_del(const BigradedForm& w) { return d_components(w).del; }

BigradedForm lie(const VectorField& x, const BigradedForm& w) {
    return exterior_d(contract(x, w)) + contract(x, exterior_d(w));
}

LieSplit lie_split(const VectorField& x, const BigradedForm& w) {
    if (!x.in_E()) throw PreconditionError("split Lie derivative needs a field in E");
    DComponents dw = d_components(w);
    DComponents dix = d_components(contract(x, w));
    return {contract(x, dw.d_prime) + dix.d_prime, contract(x, dw.d_second) + dix.d_second};
}

BigradedForm lie_prime(const VectorField& x, const BigradedForm& w) {
    return lie_split(x, w).prime;
}

VectorField vf_bracket(const VectorField& x, const VectorField& y) {
    require_same_chart(x.chart(), y.chart());
    auto xc = x.coordinate_components();
    auto yc = y.coordinate_components();
    std::vector<Poly> out;
    for (std::size_t i = 0; i < xc.size(); ++i) out.push_back(x.apply(yc[i]) - y.apply(xc[i]));
    return VectorField::from_coordinate(x.chart(), out);
}

VectorField nijenhuis_E(const VectorField& x, const VectorField& y) {
    auto pe = [](const VectorField& v) { return project(v, Subbundle::E); };
    VectorField ex = pe(x), ey = pe(y);
    return vf_bracket(ex, ey) - pe(vf_bracket(ex, y)) - pe(vf_bracket(x, ey)) + pe(vf_bracket(x, y));
}

Poly tau(const Chart& chart, std::size_t u, std::size_t c, std::size_t e) {
    Poly r = chart.t(c, u).partial(e) - chart.t(e, u).partial(c);
    for (std::size_t v = 0; v < chart.p(); ++v) {
        std::size_t yv = chart.leaf_coord(v);
        r += chart.t(c, v) * chart.t(e, u).partial(yv);
        r -= chart.t(e, v) * chart.t(c, u).partial(yv);
    }
    return r;
}

namespace {

// Left derivative by the odd generator of slot i.
CoordMultivector odd_derivative(const CoordMultivector& m, int i) {
    CoordMultivector out(m.chart());
    Mask bit = Mask(1) << i;
    for (const auto& [mask, c] : m.components()) {
        if (!(mask & bit)) continue;
        out.add(mask & ~bit, removal_sign(mask, i) < 0 ? -c : c);
    }
    return out;
}

CoordMultivector coefficient_derivative(const CoordMultivector& m, std::size_t i) {
    CoordMultivector out(m.chart());
    for (const auto& [mask, c] : m.components()) out.add(mask, c.partial(i));
    return out;
}

// Standard bracket (right xi-derivative of the left factor), times (-1)^(pa-1):
// the first term is then the plain left-derivative sum.
CoordMultivector schouten_homogeneous(const CoordMultivector& a, int pa, const CoordMultivector& b, int pb) {
    const auto& chart = a.chart();
    CoordMultivector first(chart), second(chart);
    for (std::size_t i = 0; i < chart->n(); ++i) {
        first += wedge(odd_derivative(a, int(i)), coefficient_derivative(b, i));
        second += wedge(odd_derivative(b, int(i)), coefficient_derivative(a, i));
    }
    if (std::abs(pa - pb) % 2) second = -second;
    if (std::abs((pa - 1) * (pb - 1)) % 2 == 0) second = -second;
    return first + second;
}

}  // namespace

CoordMultivector schouten(const CoordMultivector& a, const CoordMultivector& b) {
    require_same_chart(a.chart(), b.chart());
    CoordMultivector out(a.chart());
    int n = int(a.chart()->n());
    for (int pa = 0; pa <= n; ++pa) {
        CoordMultivector ap = a.degree_part(pa);
        if (ap.is_zero()) continue;
        for (int pb = 0; pb <= n; ++pb) {
            CoordMultivector bp = b.degree_part(pb);
            if (bp.is_zero()) continue;
            out += schouten_homogeneous(ap, pa, bp, pb);
        }
    }
    return out;
}

Multivector schouten(const Multivector& a, const Multivector& b) {
    return from_coordinate(schouten(to_coordinate(a), to_coordinate(b)));
}

}  // namespace folham
