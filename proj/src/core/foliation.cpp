#include "foliation.hpp"

namespace folham {

std::string coefficient_text(const Poly& p) {
    if (p.terms().size() <= 1) return p.to_string();
    return "(" + p.to_string() + ")";
}

VectorField::VectorField(ChartPtr chart) : chart_(std::move(chart)) {
    xi_.assign(chart_->q(), chart_->zero());
    eta_.assign(chart_->p(), chart_->zero());
}

VectorField::VectorField(ChartPtr chart, std::vector<Poly> xi, std::vector<Poly> eta)
    : chart_(std::move(chart)), xi_(std::move(xi)), eta_(std::move(eta)) {
    if (xi_.size() != chart_->q() || eta_.size() != chart_->p())
        throw InputError("vector field components do not match the chart dimensions");
}

VectorField VectorField::transverse_frame(ChartPtr chart, std::size_t a) {
    VectorField v(chart);
    v.xi_.at(a) = chart->constant(1);
    return v;
}

VectorField VectorField::leaf_frame(ChartPtr chart, std::size_t u) {
    VectorField v(chart);
    v.eta_.at(u) = chart->constant(1);
    return v;
}

VectorField VectorField::coordinate_field(ChartPtr chart, std::size_t coord) {
    std::vector<Poly> comps(chart->n(), chart->zero());
    comps.at(coord) = chart->constant(1);
    return from_coordinate(chart, comps);
}

VectorField VectorField::from_coordinate(ChartPtr chart, const std::vector<Poly>& comps) {
    if (comps.size() != chart->n()) throw InputError("coordinate components have the wrong length");
    VectorField v(chart);
    for (std::size_t a = 0; a < chart->q(); ++a) v.xi_[a] = comps[a];
    for (std::size_t u = 0; u < chart->p(); ++u) {
        Poly e = comps[chart->leaf_coord(u)];
        for (std::size_t a = 0; a < chart->q(); ++a) e += v.xi_[a] * chart->t(a, u);
        v.eta_[u] = std::move(e);
    }
    return v;
}

const Poly& VectorField::component(std::size_t slot) const {
    return slot < chart_->q() ? xi_.at(slot) : eta_.at(slot - chart_->q());
}

std::vector<Poly> VectorField::coordinate_components() const {
    std::vector<Poly> out(xi_);
    for (std::size_t u = 0; u < chart_->p(); ++u) {
        Poly e = eta_[u];
        for (std::size_t a = 0; a < chart_->q(); ++a) e -= xi_[a] * chart_->t(a, u);
        out.push_back(std::move(e));
    }
    return out;
}

Poly VectorField::apply(const Poly& f) const {
    Poly r = chart_->zero();
    auto comps = coordinate_components();
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (!comps[i].is_zero()) r += comps[i] * f.partial(i);
    return r;
}

bool VectorField::is_zero() const {
    return in_E() && tangent_to_leaves();
}

bool VectorField::in_E() const {
    for (const auto& e : eta_)
        if (!e.is_zero()) return false;
    return true;
}

bool VectorField::tangent_to_leaves() const {
    for (const auto& x : xi_)
        if (!x.is_zero()) return false;
    return true;
}

bool VectorField::is_foliated() const {
    for (const auto& x : xi_)
        if (!chart_->is_foliated(x)) return false;
    return true;
}

VectorField& VectorField::operator+=(const VectorField& o) {
    require_same_chart(chart_, o.chart_);
    for (std::size_t a = 0; a < xi_.size(); ++a) xi_[a] += o.xi_[a];
    for (std::size_t u = 0; u < eta_.size(); ++u) eta_[u] += o.eta_[u];
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
    require_same_chart(chart_, o.chart_);
    for (std::size_t a = 0; a < xi_.size(); ++a) xi_[a] -= o.xi_[a];
    for (std::size_t u = 0; u < eta_.size(); ++u) eta_[u] -= o.eta_[u];
    return *this;
}

VectorField& VectorField::operator*=(const Poly& f) {
    for (auto& x : xi_) x *= f;
    for (auto& e : eta_) e *= f;
    return *this;
}

VectorField VectorField::operator-() const {
    VectorField v(*this);
    v *= chart_->constant(-1);
    return v;
}

bool operator==(const VectorField& a, const VectorField& b) {
    return same_chart(a.chart_, b.chart_) && a.xi_ == b.xi_ && a.eta_ == b.eta_;
}

Multivector VectorField::as_multivector() const {
    Multivector m(chart_);
    for (std::size_t s = 0; s < chart_->n(); ++s) m.add(Mask(1) << s, component(s));
    return m;
}

std::string VectorField::to_string() const {
    return as_multivector().to_string();
}

VectorField project(const VectorField& v, Subbundle onto) {
    const auto& chart = v.chart();
    if (onto == Subbundle::E)
        return VectorField(chart, v.xi(), std::vector<Poly>(chart->p(), chart->zero()));
    return VectorField(chart, std::vector<Poly>(chart->q(), chart->zero()), v.eta());
}

BigradedForm contract(const VectorField& x, const BigradedForm& w) {
    require_same_chart(x.chart(), w.chart());
    BigradedForm out(w.chart());
    for (const auto& [m, c] : w.components()) {
        for (Mask rest = m; rest; rest &= rest - 1) {
            int s = std::countr_zero(rest);
            const Poly& v = x.component(std::size_t(s));
            if (v.is_zero()) continue;
            Poly term = v * c;
            if (removal_sign(m, s) < 0) term = -term;
            out.add(m & ~(Mask(1) << s), term);
        }
    }
    return out;
}

Multivector contract(const BigradedForm& alpha, const Multivector& q) {
    require_same_chart(alpha.chart(), q.chart());
    if (alpha.degree() > 1) throw PreconditionError("contraction needs a 1-form");
    Multivector out(q.chart());
    for (const auto& [m, c] : q.components()) {
        for (Mask rest = m; rest; rest &= rest - 1) {
            int s = std::countr_zero(rest);
            Poly a = alpha.component(Mask(1) << s);
            if (a.is_zero()) continue;
            Poly term = a * c;
            if (removal_sign(m, s) < 0) term = -term;
            out.add(m & ~(Mask(1) << s), term);
        }
    }
    return out;
}

Poly pairing(const BigradedForm& alpha, const VectorField& x) {
    int d = alpha.degree();
    if (d != 1 && d != -1) throw PreconditionError("pairing needs a form of total degree 1");
    return contract(x, alpha).component(0);
}

Poly evaluate_form(const BigradedForm& w, const std::vector<VectorField>& args) {
    BigradedForm cur = w.degree_part(int(args.size()));
    for (const auto& x : args) cur = contract(x, cur);
    return cur.component(0);
}

Poly evaluate_multivector(const Multivector& q, const std::vector<BigradedForm>& args) {
    Multivector cur = q.degree_part(int(args.size()));
    for (const auto& a : args) cur = contract(a, cur);
    return cur.component(0);
}

BigradedForm dx(const ChartPtr& chart, std::size_t a) {
    if (a >= chart->q()) throw InputError("transverse index out of range");
    return BigradedForm::generator(chart, int(a));
}

BigradedForm theta(const ChartPtr& chart, std::size_t u) {
    if (u >= chart->p()) throw InputError("leaf index out of range");
    return BigradedForm::generator(chart, int(chart->leaf_coord(u)));
}

bool is_one_zero_form(const BigradedForm& w) {
    for (const auto& [m, c] : w.components()) {
        if (popcount(m) != 1 || std::size_t(std::countr_zero(m)) >= w.chart()->q()) return false;
    }
    return true;
}

bool is_foliated_form(const BigradedForm& w) {
    const auto& chart = *w.chart();
    Mask low = (Mask(1) << chart.q()) - 1;
    for (const auto& [m, c] : w.components()) {
        if (m & ~low) return false;
        if (!chart.is_foliated(c)) return false;
    }
    return true;
}

CoordForm to_coordinate(const BigradedForm& w) {
    const auto& chart = w.chart();
    std::vector<CoordForm> images;
    for (std::size_t s = 0; s < chart->n(); ++s) {
        CoordForm img = CoordForm::generator(chart, int(s));
        if (s >= chart->q()) {
            std::size_t u = s - chart->q();
            for (std::size_t a = 0; a < chart->q(); ++a) img.add(Mask(1) << a, chart->t(a, u));
        }
        images.push_back(std::move(img));
    }
    return substitute_generators<CoordFormTag>(w, chart, images);
}

BigradedForm from_coordinate(const CoordForm& w) {
    const auto& chart = w.chart();
    std::vector<BigradedForm> images;
    for (std::size_t s = 0; s < chart->n(); ++s) {
        BigradedForm img = BigradedForm::generator(chart, int(s));
        if (s >= chart->q()) {
            std::size_t u = s - chart->q();
            for (std::size_t a = 0; a < chart->q(); ++a) img.add(Mask(1) << a, -chart->t(a, u));
        }
        images.push_back(std::move(img));
    }
    return substitute_generators<FormTag>(w, chart, images);
}

CoordMultivector to_coordinate(const Multivector& m) {
    const auto& chart = m.chart();
    std::vector<CoordMultivector> images;
    for (std::size_t s = 0; s < chart->n(); ++s) {
        CoordMultivector img = CoordMultivector::generator(chart, int(s));
        if (s < chart->q()) {
            for (std::size_t u = 0; u < chart->p(); ++u)
                img.add(Mask(1) << chart->leaf_coord(u), -chart->t(s, u));
        }
        images.push_back(std::move(img));
    }
    return substitute_generators<CoordMultivectorTag>(m, chart, images);
}

Multivector from_coordinate(const CoordMultivector& m) {
    const auto& chart = m.chart();
    std::vector<Multivector> images;
    for (std::size_t s = 0; s < chart->n(); ++s) {
        Multivector img = Multivector::generator(chart, int(s));
        if (s < chart->q()) {
            for (std::size_t u = 0; u < chart->p(); ++u)
                img.add(Mask(1) << chart->leaf_coord(u), chart->t(s, u));
        }
        images.push_back(std::move(img));
    }
    return substitute_generators<MultivectorTag>(m, chart, images);
}

Rational evaluate_at(const Poly& f, std::span<const Rational> point) {
    return f.evaluate(point);
}

std::vector<Rational> evaluate_at(const VectorField& v, std::span<const Rational> point) {
    if (point.size() != v.chart()->n()) throw InputError("point length does not match the chart");
    std::vector<Rational> out;
    for (std::size_t s = 0; s < v.chart()->n(); ++s) out.push_back(v.component(s).evaluate(point));
    return out;
}

std::map<Mask, Rational> evaluate_at(const BigradedForm& w, std::span<const Rational> point) {
    if (point.size() != w.chart()->n()) throw InputError("point length does not match the chart");
    std::map<Mask, Rational> out;
    for (const auto& [m, c] : w.components()) {
        Rational v = c.evaluate(point);
        if (v != 0) out.emplace(m, v);
    }
    return out;
}

}  // namespace folham
