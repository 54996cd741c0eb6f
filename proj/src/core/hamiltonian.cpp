#include "hamiltonian.hpp"

#include "linalg.hpp"

namespace folham {

namespace {

std::string idx(std::size_t i) { return std::to_string(i + 1); }

void require_transversal(const HamStructure& hs, const char* what) {
    if (!hs.is_transversal())
        throw PreconditionError(std::string(what) + " requires a transversal structure (k = 0)");
}

void require_foliated_one_form(const BigradedForm& w, const char* what) {
    if (w.degree() > 1 || !is_foliated_form(w))
        throw PreconditionError(std::string(what) + " requires foliated 1-forms");
}

void require_one_zero_form(const BigradedForm& w, const char* what) {
    if (!is_one_zero_form(w)) throw PreconditionError(std::string(what) + " requires (1,0)-forms");
}

BigradedForm function_form(const ChartPtr& chart, const Poly& f) {
    return BigradedForm::function(chart, f);
}

BigradedForm differential(const ChartPtr& chart, const Poly& f) {
    return exterior_d(function_form(chart, f));
}

BigradedForm differential_prime(const ChartPtr& chart, const Poly& f) {
    return d_prime(function_form(chart, f));
}

}  // namespace

HamStructure::HamStructure(ChartPtr chart, PolyMatrix h, PolyMatrix k)
    : chart_(std::move(chart)), h_(std::move(h)), k_(std::move(k)) {
    std::size_t q = chart_->q(), p = chart_->p();
    if (k_.empty()) k_.assign(q, std::vector<Poly>(p, chart_->zero()));
    if (h_.size() != q || k_.size() != q) throw InputError("structure matrices must have q rows");
    for (std::size_t a = 0; a < q; ++a) {
        if (h_[a].size() != q) throw InputError("h must be q x q");
        if (k_[a].size() != p) throw InputError("k must be q x p");
        for (const auto& e : h_[a])
            if (!same_variables(e.variables(), chart_->variables()))
                throw InputError("h entry is not written in the chart coordinates");
        for (const auto& e : k_[a])
            if (!same_variables(e.variables(), chart_->variables()))
                throw InputError("k entry is not written in the chart coordinates");
    }
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = a; b < q; ++b)
            if (!(h_[a][b] + h_[b][a]).is_zero())
                throw InputError("h is not skew symmetric at (" + idx(a) + "," + idx(b) + ")");
}

bool HamStructure::is_transversal() const {
    for (const auto& row : k_)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

bool HamStructure::h_is_foliated() const {
    for (const auto& row : h_)
        for (const auto& e : row)
            if (!chart_->is_foliated(e)) return false;
    return true;
}

int HamStructure::h_degree() const {
    int d = -1;
    for (const auto& row : h_)
        for (const auto& e : row) d = std::max(d, e.degree());
    return d;
}

VectorField HamStructure::image(std::size_t a) const {
    return VectorField(chart_, h_.at(a), k_.at(a));
}

bool operator==(const HamStructure& a, const HamStructure& b) {
    return same_chart(a.chart_, b.chart_) && a.h_ == b.h_ && a.k_ == b.k_;
}

VectorField apply_H(const HamStructure& hs, const BigradedForm& alpha) {
    require_same_chart(hs.chart(), alpha.chart());
    if (!is_one_zero_form(alpha))
        throw PreconditionError("H is defined on (1,0)-forms only; argument has a theta component "
                                "or is not a 1-form: " + alpha.to_string());
    VectorField out(hs.chart());
    for (const auto& [m, c] : alpha.components()) out += c * hs.image(std::size_t(std::countr_zero(m)));
    return out;
}

Poly poisson_bracket(const HamStructure& hs, const Poly& f, const Poly& g) {
    const auto& chart = hs.chart();
    if (!chart->is_foliated(f) || !chart->is_foliated(g))
        throw PreconditionError("Poisson bracket needs foliated functions");
    return apply_H(hs, differential(chart, f)).apply(g);
}

namespace {

using LieOp = BigradedForm (*)(const VectorField&, const BigradedForm&);

Poly gd_sum(const HamStructure& h, const HamStructure& k, const BigradedForm& alpha, const BigradedForm& beta,
            const BigradedForm& gamma, LieOp lie_op) {
    const BigradedForm* args[3] = {&alpha, &beta, &gamma};
    Poly sum = h.chart()->zero();
    for (int i = 0; i < 3; ++i) {
        const auto& a = *args[i];
        const auto& b = *args[(i + 1) % 3];
        const auto& c = *args[(i + 2) % 3];
        sum += pairing(c, apply_H(k, lie_op(apply_H(h, a), b)));
        sum += pairing(c, apply_H(h, lie_op(apply_H(k, a), b)));
    }
    return sum;
}

}  // namespace

Poly gd_bracket(const HamStructure& h1, const HamStructure& h2, const BigradedForm& alpha,
                const BigradedForm& beta, const BigradedForm& gamma) {
    require_same_chart(h1.chart(), h2.chart());
    for (const auto* w : {&alpha, &beta, &gamma}) require_foliated_one_form(*w, "Gelfand-Dorfman bracket");
    if (!h1.h_is_foliated() || !h2.h_is_foliated())
        throw PreconditionError("Gelfand-Dorfman bracket needs structures with foliated h "
                                "(their values must be foliated fields)");
    return gd_sum(h1, h2, alpha, beta, gamma, &lie);
}

Poly gd_bracket_extended(const HamStructure& h1, const HamStructure& h2, const BigradedForm& alpha,
                         const BigradedForm& beta, const BigradedForm& gamma) {
    require_same_chart(h1.chart(), h2.chart());
    require_transversal(h1, "extended Gelfand-Dorfman bracket");
    require_transversal(h2, "extended Gelfand-Dorfman bracket");
    for (const auto* w : {&alpha, &beta, &gamma}) require_one_zero_form(*w, "extended Gelfand-Dorfman bracket");
    return gd_sum(h1, h2, alpha, beta, gamma, &lie_prime);
}

BigradedForm omega1_bracket(const HamStructure& hs, const BigradedForm& alpha, const BigradedForm& beta) {
    require_foliated_one_form(alpha, "1-form bracket");
    require_foliated_one_form(beta, "1-form bracket");
    VectorField ha = apply_H(hs, alpha), hb = apply_H(hs, beta);
    BigradedForm r = lie(ha, beta) - lie(hb, alpha) - differential(hs.chart(), pairing(beta, ha));
    if (!is_foliated_form(r))
        throw PreconditionError("1-form bracket left the foliated forms; h is not foliated");
    return r;
}

BigradedForm omega1_bracket_extended(const HamStructure& hs, const BigradedForm& alpha, const BigradedForm& beta) {
    require_transversal(hs, "extended 1-form bracket");
    require_one_zero_form(alpha, "extended 1-form bracket");
    require_one_zero_form(beta, "extended 1-form bracket");
    VectorField ha = apply_H(hs, alpha), hb = apply_H(hs, beta);
    return lie_prime(ha, beta) - lie_prime(hb, alpha) - differential_prime(hs.chart(), pairing(beta, ha));
}

namespace {

HamStructure from_images(const HamStructure& hs, const std::vector<VectorField>& images) {
    const auto& chart = hs.chart();
    PolyMatrix h(chart->q()), k(chart->q());
    for (std::size_t a = 0; a < chart->q(); ++a) {
        h[a] = images[a].xi();
        k[a] = images[a].eta();
    }
    try {
        return HamStructure(chart, std::move(h), std::move(k));
    } catch (const InputError& e) {
        throw InternalError(std::string("Lie derivative of H is not skew: ") + e.what());
    }
}

}  // namespace

HamStructure lie_derivative_of_H(const HamStructure& hs, const VectorField& x) {
    require_same_chart(hs.chart(), x.chart());
    if (!x.is_foliated()) throw PreconditionError("L_X H needs a foliated vector field X");
    std::vector<VectorField> images;
    for (std::size_t a = 0; a < hs.chart()->q(); ++a) {
        BigradedForm lx = lie(x, dx(hs.chart(), a));
        images.push_back(vf_bracket(x, hs.image(a)) - apply_H(hs, lx));
    }
    return from_images(hs, images);
}

HamStructure lie_derivative_of_H_prime(const HamStructure& hs, const VectorField& x) {
    require_same_chart(hs.chart(), x.chart());
    require_transversal(hs, "L'_X H");
    if (!x.in_E()) throw PreconditionError("L'_X H needs X in E");
    std::vector<VectorField> images;
    for (std::size_t a = 0; a < hs.chart()->q(); ++a) {
        BigradedForm lx = lie_prime(x, dx(hs.chart(), a));
        images.push_back(project(vf_bracket(x, hs.image(a)), Subbundle::E) - apply_H(hs, lx));
    }
    return from_images(hs, images);
}

IdentityResiduals identity_checks(const HamStructure& hs, const BigradedForm& alpha, const BigradedForm& beta,
                                  const BigradedForm& gamma, const VectorField& x) {
    const auto& chart = hs.chart();
    for (const auto* w : {&alpha, &beta, &gamma}) require_foliated_one_form(*w, "fundamental identities");
    Rational half(1, 2);

    Poly first = pairing(gamma, apply_H(hs, omega1_bracket(hs, alpha, beta))) -
                 pairing(gamma, vf_bracket(apply_H(hs, alpha), apply_H(hs, beta))) -
                 half * gd_bracket(hs, hs, alpha, beta, gamma);

    HamStructure lxh = lie_derivative_of_H(hs, x);
    const BigradedForm* args[3] = {&alpha, &beta, &gamma};
    Poly cyclic_brackets = chart->zero();
    Poly cyclic_hh = chart->zero();
    for (int i = 0; i < 3; ++i) {
        const auto& a = *args[i];
        const auto& b = *args[(i + 1) % 3];
        const auto& c = *args[(i + 2) % 3];
        cyclic_brackets += pairing(omega1_bracket(hs, omega1_bracket(hs, a, b), c), x);
        cyclic_hh += gd_bracket(hs, hs, a, b, differential(chart, pairing(c, x)));
    }
    Poly second = cyclic_brackets - gd_bracket(hs, lxh, alpha, beta, gamma) - half * cyclic_hh;
    return {first, second};
}

Classification classify(const HamStructure& hs) {
    const auto& chart = hs.chart();
    std::size_t q = chart->q(), p = chart->p();
    Classification out;

    // hamiltonian: h foliated and its bracket on foliated functions is Jacobi
    for (std::size_t a = 0; a < q && out.hamiltonian.pass; ++a)
        for (std::size_t b = a + 1; b < q && out.hamiltonian.pass; ++b)
            for (std::size_t u = 0; u < p; ++u) {
                Poly d = hs.h(a, b).partial(chart->leaf_coord(u));
                if (!d.is_zero()) {
                    out.hamiltonian = Verdict::fail(
                        d.to_string(), "d h^{" + idx(a) + "," + idx(b) + "}/d" + chart->name(chart->leaf_coord(u)));
                    break;
                }
            }
    for (std::size_t a = 0; a < q && out.hamiltonian.pass; ++a)
        for (std::size_t b = a + 1; b < q && out.hamiltonian.pass; ++b)
            for (std::size_t c = b + 1; c < q && out.hamiltonian.pass; ++c) {
                Poly j = chart->zero();
                const std::size_t cyc[3][3] = {{a, b, c}, {b, c, a}, {c, a, b}};
                for (const auto& t : cyc)
                    for (std::size_t d = 0; d < q; ++d) j += hs.h(t[0], d) * hs.h(t[1], t[2]).partial(d);
                if (!j.is_zero())
                    out.hamiltonian = Verdict::fail(j.to_string(), "jacobi(" + idx(a) + "," + idx(b) + "," + idx(c) + ")");
            }

    // strong: H(dh^{ab}) = [H(dx^a), H(dx^b)]
    if (!out.hamiltonian.pass) {
        out.strong = Verdict::fail("not hamiltonian", out.hamiltonian.location);
    } else {
        for (std::size_t a = 0; a < q && out.strong.pass; ++a)
            for (std::size_t b = a + 1; b < q && out.strong.pass; ++b) {
                VectorField r = vf_bracket(hs.image(a), hs.image(b)) - apply_H(hs, differential(chart, hs.h(a, b)));
                if (!r.is_zero())
                    out.strong = Verdict::fail(r.to_string(),
                                               "[H(dx^" + idx(a) + "),H(dx^" + idx(b) + ")] - H(dh^{" + idx(a) + "," +
                                                   idx(b) + "})");
            }
    }

    for (std::size_t a = 0; a < q && out.transversal.pass; ++a)
        for (std::size_t u = 0; u < p; ++u)
            if (!hs.k(a, u).is_zero()) {
                out.transversal = Verdict::fail(hs.k(a, u).to_string(),
                                                "k^{" + idx(a) + "," + idx(chart->leaf_coord(u)) + "}");
                break;
            }

    // tame: transversal hamiltonian with h^{ac} h^{be} tau^u_{ce} = 0
    if (!out.hamiltonian.pass) {
        out.tame = Verdict::fail("not hamiltonian", out.hamiltonian.location);
    } else if (!out.transversal.pass) {
        out.tame = Verdict::fail("not transversal", out.transversal.location);
    } else {
        std::vector<std::vector<std::vector<Poly>>> taus(
            p, std::vector<std::vector<Poly>>(q, std::vector<Poly>(q, chart->zero())));
        for (std::size_t u = 0; u < p; ++u)
            for (std::size_t c = 0; c < q; ++c)
                for (std::size_t e = 0; e < q; ++e) taus[u][c][e] = tau(*chart, u, c, e);
        for (std::size_t a = 0; a < q && out.tame.pass; ++a)
            for (std::size_t b = 0; b < q && out.tame.pass; ++b)
                for (std::size_t u = 0; u < p && out.tame.pass; ++u) {
                    Poly s = chart->zero();
                    for (std::size_t c = 0; c < q; ++c)
                        for (std::size_t e = 0; e < q; ++e)
                            if (!hs.h(a, c).is_zero() && !hs.h(b, e).is_zero())
                                s += hs.h(a, c) * hs.h(b, e) * taus[u][c][e];
                    if (!s.is_zero())
                        out.tame = Verdict::fail(s.to_string(), "h^{" + idx(a) + "c} h^{" + idx(b) + "e} tau^" +
                                                                    idx(chart->leaf_coord(u)) + "_{ce}");
                }
    }

    bool implications = (!out.tame.pass || out.strong.pass) && (!out.strong.pass || out.hamiltonian.pass) &&
                        (!(out.transversal.pass && out.strong.pass) || out.tame.pass);
    if (!implications) throw InternalError("classification violates tame => strong => hamiltonian");
    return out;
}

Verdict strong_on_functions(const HamStructure& hs, const std::vector<Poly>& functions) {
    const auto& chart = hs.chart();
    for (std::size_t i = 0; i < functions.size(); ++i)
        for (std::size_t j = i + 1; j < functions.size(); ++j) {
            const Poly& f = functions[i];
            const Poly& g = functions[j];
            if (!chart->is_foliated(f) || !chart->is_foliated(g)) continue;
            VectorField xf = apply_H(hs, differential(chart, f));
            VectorField xg = apply_H(hs, differential(chart, g));
            Poly fg = poisson_bracket(hs, f, g);
            VectorField r = vf_bracket(xf, xg) - apply_H(hs, differential(chart, fg));
            if (!r.is_zero())
                return Verdict::fail(r.to_string(), "[X_f,X_g] - X_{f,g} for f=" + f.to_string() + ", g=" + g.to_string());
        }
    return Verdict::ok();
}

std::vector<ImageCheck> image_checks(const HamStructure& hs, const std::vector<std::vector<Rational>>& points) {
    const auto& chart = hs.chart();
    std::size_t q = chart->q(), p = chart->p();
    std::vector<ImageCheck> out;
    for (const auto& pt : points) {
        if (pt.size() != chart->n()) throw InputError("point length does not match the chart");
        RationalMatrix h(q, q), hk(q, q + p), ht(q, q);
        for (std::size_t a = 0; a < q; ++a) {
            for (std::size_t b = 0; b < q; ++b) {
                h(a, b) = hs.h(a, b).evaluate(pt);
                hk(a, b) = h(a, b);
                ht(b, a) = h(a, b);
            }
            for (std::size_t u = 0; u < p; ++u) hk(a, q + u) = hs.k(a, u).evaluate(pt);
        }
        ImageCheck ic;
        ic.point = pt;
        ic.rank_w = h.rank();
        ic.dim_image_cap_tf = hk.rank() - ic.rank_w;
        ic.dim_char_dist = p + ic.rank_w;
        // ann(CharDist) = {alpha in nu*F : alpha_a h^{ab} = 0}
        auto ker = ht.nullspace();
        RationalMatrix img(ker.size(), p);
        for (std::size_t i = 0; i < ker.size(); ++i)
            for (std::size_t u = 0; u < p; ++u)
                for (std::size_t a = 0; a < q; ++a) img(i, u) += ker[i][a] * hk(a, q + u);
        ic.dim_h_of_annihilator = img.rank();
        ic.annihilator_matches = ic.dim_h_of_annihilator == ic.dim_image_cap_tf;
        out.push_back(std::move(ic));
    }
    return out;
}

VectorField extended_hamiltonian_field(const HamStructure& hs, const Poly& f) {
    require_transversal(hs, "extended hamiltonian field");
    return apply_H(hs, differential_prime(hs.chart(), f));
}

Poly extended_poisson(const HamStructure& hs, const Poly& f, const Poly& g) {
    return extended_hamiltonian_field(hs, f).apply(g);
}

Multivector induced_poisson_bivector(const HamStructure& hs) {
    if (!classify(hs).tame.pass) throw PreconditionError("induced Poisson bivector needs a tame structure");
    const auto& chart = hs.chart();
    Multivector p(chart);
    for (std::size_t a = 0; a < chart->q(); ++a)
        for (std::size_t b = a + 1; b < chart->q(); ++b) p.add((Mask(1) << a) | (Mask(1) << b), hs.h(a, b));
    Multivector square = schouten(p, p);
    if (!square.is_zero())
        throw InternalError("Schouten square of the induced bivector is " + square.to_string());
    return p;
}

BigradedForm d_prime_squared(const Poly& f, const ChartPtr& chart) {
    return d_prime(differential_prime(chart, f));
}

Verdict is_distinguished(const HamStructure& hs, const Poly& f) {
    require_transversal(hs, "distinguished-function test");
    const auto& chart = hs.chart();
    BigradedForm df = differential_prime(chart, f);
    for (const auto& [m, c] : df.components())
        for (std::size_t u = 0; u < chart->p(); ++u) {
            Poly d = c.partial(chart->leaf_coord(u));
            if (!d.is_zero())
                return Verdict::fail(d.to_string(), "d'f coefficient of dx^" + idx(std::size_t(std::countr_zero(m))) +
                                                        " depends on " + chart->name(chart->leaf_coord(u)));
        }
    BigradedForm dd = d_prime(df);
    std::vector<VectorField> gens;
    std::vector<std::string> names;
    for (std::size_t a = 0; a < chart->q(); ++a) {
        gens.push_back(hs.image(a));
        names.push_back("H(dx^" + idx(a) + ")");
    }
    for (std::size_t u = 0; u < chart->p(); ++u) {
        gens.push_back(VectorField::leaf_frame(chart, u));
        names.push_back("d/d" + chart->name(chart->leaf_coord(u)));
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            Poly v = evaluate_form(dd, {gens[i], gens[j]});
            if (!v.is_zero()) return Verdict::fail(v.to_string(), "d'^2 f(" + names[i] + "," + names[j] + ")");
        }
    return Verdict::ok();
}

VectorField delta_defect(const HamStructure& hs, const BigradedForm& alpha, const BigradedForm& beta) {
    require_transversal(hs, "Delta_h");
    return apply_H(hs, omega1_bracket_extended(hs, alpha, beta)) -
           vf_bracket(apply_H(hs, alpha), apply_H(hs, beta));
}

Verdict verify_fundamental_form(const HamStructure& hs, const BigradedForm& phi, const std::vector<Poly>& tests) {
    require_transversal(hs, "fundamental form check");
    require_same_chart(hs.chart(), phi.chart());
    if (!is_foliated_form(phi) || phi.degree() > 2 || phi.degree() == 0 || phi.degree() == 1)
        throw PreconditionError("fundamental form must be a foliated 2-form");
    if (!exterior_d(phi).is_zero()) throw PreconditionError("fundamental form is not closed");
    for (const auto& f : tests) {
        Verdict v = is_distinguished(hs, f);
        if (!v.pass) throw PreconditionError("test function " + f.to_string() + " is not distinguished");
    }
    for (std::size_t i = 0; i < tests.size(); ++i)
        for (std::size_t j = i + 1; j < tests.size(); ++j) {
            Poly lhs = extended_poisson(hs, tests[i], tests[j]);
            Poly rhs = evaluate_form(phi, {extended_hamiltonian_field(hs, tests[i]),
                                           extended_hamiltonian_field(hs, tests[j])});
            if (!(lhs == rhs))
                return Verdict::fail(lhs.to_string() + " != " + rhs.to_string(),
                                     "{f,g}' vs Phi(X'_f,X'_g) for f=" + tests[i].to_string() + ", g=" + tests[j].to_string());
        }
    return Verdict::ok();
}

}  // namespace folham
