#include "cohomology.hpp"

#include <functional>

namespace folham {

namespace {

Mask transverse_mask(const Chart& c) { return (Mask(1) << c.q()) - 1; }

void require_e_multivector(const HamStructure& hs, const Multivector& q) {
    require_same_chart(hs.chart(), q.chart());
    Mask low = transverse_mask(*hs.chart());
    for (const auto& [m, c] : q.components())
        if (m & ~low) throw PreconditionError("cochain must be a section of the exterior powers of E");
    q.degree();
}

std::vector<int> slots_of(Mask m) {
    std::vector<int> out;
    for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

// All masks of k transverse slots, in lexicographic order of index tuples.
std::vector<Mask> transverse_masks(std::size_t q, int k) {
    std::vector<Mask> out;
    if (k < 0 || std::size_t(k) > q) return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Mask m = 0;
        for (int i : idx) m |= Mask(1) << i;
        out.push_back(m);
        int i = k - 1;
        while (i >= 0 && idx[i] == int(q) - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::vector<BigradedForm> basis_args(const ChartPtr& chart, const std::vector<int>& slots) {
    std::vector<BigradedForm> out;
    for (int s : slots) out.push_back(dx(chart, std::size_t(s)));
    return out;
}

template <class T>
std::vector<T> without(const std::vector<T>& v, std::size_t i, std::size_t j = SIZE_MAX, std::size_t l = SIZE_MAX) {
    std::vector<T> out;
    for (std::size_t r = 0; r < v.size(); ++r)
        if (r != i && r != j && r != l) out.push_back(v[r]);
    return out;
}

int parity(std::size_t n) { return (n & 1) ? -1 : 1; }

// Assembles a multivector of degree `deg` in E from its values on basis arguments.
Multivector from_values(const ChartPtr& chart, int deg, const std::function<Poly(const std::vector<BigradedForm>&)>& value) {
    Multivector out(chart);
    for (Mask m : transverse_masks(chart->q(), deg)) out.add(m, value(basis_args(chart, slots_of(m))));
    return out;
}

}  // namespace

Poly coboundary_value(const HamStructure& hs, const Multivector& q, const std::vector<BigradedForm>& args) {
    require_e_multivector(hs, q);
    const auto& chart = hs.chart();
    // the degree of a zero cochain is read off the arguments
    if (args.empty() || (!q.is_zero() && std::size_t(std::max(q.degree(), 0)) + 1 != args.size()))
        throw PreconditionError("coboundary needs k + 1 arguments");
    Poly out = chart->zero();
    for (std::size_t i = 0; i < args.size(); ++i) {
        Poly v = apply_H(hs, args[i]).apply(evaluate_multivector(q, without(args, i)));
        out += parity(i) * v;
    }
    for (std::size_t i = 0; i < args.size(); ++i)
        for (std::size_t j = i + 1; j < args.size(); ++j) {
            std::vector<BigradedForm> rest{omega1_bracket_extended(hs, args[i], args[j])};
            for (auto& a : without(args, i, j)) rest.push_back(a);
            out += parity(i + j) * evaluate_multivector(q, rest);
        }
    return out;
}

Multivector coboundary(const HamStructure& hs, const Multivector& q) {
    require_e_multivector(hs, q);
    if (!hs.is_transversal()) throw PreconditionError("coboundary requires a transversal structure (k = 0)");
    int k = std::max(q.degree(), 0);
    return from_values(hs.chart(), k + 1, [&](const auto& args) { return coboundary_value(hs, q, args); });
}

Multivector structure_bivector(const HamStructure& hs) {
    const auto& chart = hs.chart();
    Multivector w(chart);
    for (std::size_t a = 0; a < chart->q(); ++a)
        for (std::size_t b = a + 1; b < chart->q(); ++b) w.add((Mask(1) << a) | (Mask(1) << b), hs.h(a, b));
    return w;
}

Multivector lp_coboundary(const HamStructure& hs, const Multivector& q) {
    require_e_multivector(hs, q);
    const auto& chart = hs.chart();
    for (const auto& [m, c] : q.components())
        if (!chart->is_foliated(c)) throw PreconditionError("basic cochains must have foliated coefficients");
    Multivector br = schouten(structure_bivector(hs), q);
    Multivector out(chart);
    Mask low = transverse_mask(*chart);
    for (const auto& [m, c] : br.components())
        if (!(m & ~low)) out.add(m, -c);
    return out;
}

Poly delta_square_rhs(const HamStructure& hs, const Multivector& q, const std::vector<BigradedForm>& args) {
    require_e_multivector(hs, q);
    const auto& chart = hs.chart();
    if (args.size() < 2 || (!q.is_zero() && std::size_t(std::max(q.degree(), 0)) + 2 != args.size()))
        throw PreconditionError("delta square needs k + 2 arguments");
    auto br = [&](const BigradedForm& a, const BigradedForm& b) { return omega1_bracket_extended(hs, a, b); };
    Poly out = chart->zero();
    for (std::size_t i = 0; i < args.size(); ++i)
        for (std::size_t j = i + 1; j < args.size(); ++j) {
            Poly v = delta_defect(hs, args[i], args[j]).apply(evaluate_multivector(q, without(args, i, j)));
            out += parity(i + j) * v;
        }
    for (std::size_t i = 0; i < args.size(); ++i)
        for (std::size_t j = i + 1; j < args.size(); ++j)
            for (std::size_t l = j + 1; l < args.size(); ++l) {
                const auto &a = args[i], &b = args[j], &c = args[l];
                BigradedForm cyc = br(c, br(a, b)) + br(a, br(b, c)) + br(b, br(c, a));
                std::vector<BigradedForm> rest{cyc};
                for (auto& x : without(args, i, j, l)) rest.push_back(x);
                out += parity(i + j + l) * evaluate_multivector(q, rest);
            }
    return out;
}

Poly verify_delta_square(const HamStructure& hs, const Multivector& q, const std::vector<BigradedForm>& args) {
    return coboundary_value(hs, coboundary(hs, q), args) - delta_square_rhs(hs, q, args);
}

Multivector delta_square_rhs_multivector(const HamStructure& hs, const Multivector& q) {
    int k = std::max(q.degree(), 0);
    return from_values(hs.chart(), k + 2, [&](const auto& args) { return delta_square_rhs(hs, q, args); });
}

std::string to_string(Theory t) {
    switch (t) {
        case Theory::Twisted: return "twisted";
        case Theory::LpBasic: return "lp-basic";
        case Theory::BasicDeRham: return "basic-derham";
    }
    return "?";
}

Theory parse_theory(const std::string& name) {
    if (name == "twisted") return Theory::Twisted;
    if (name == "lp-basic") return Theory::LpBasic;
    if (name == "basic-derham") return Theory::BasicDeRham;
    throw InputError("unknown cohomology theory '" + name + "' (expected twisted, lp-basic or basic-derham)");
}

std::vector<BasisElement> TruncatedComplex::basis(int k, unsigned degree) const {
    std::vector<BasisElement> out;
    std::size_t q = chart->q(), n = chart->n();
    auto monos = monomials_up_to(n, degree);
    for (Mask m : transverse_masks(q, k))
        for (const auto& e : monos) {
            if (theory != Theory::Twisted) {
                bool leafwise = false;
                for (std::size_t i = q; i < n; ++i) leafwise |= e[i] != 0;
                if (leafwise) continue;
            }
            out.push_back({m, e});
        }
    return out;
}

std::size_t SparseIndex::index(Mask m, const Exponents& e) {
    auto [it, inserted] = rows.try_emplace({m, e}, rows.size());
    return it->second;
}

RationalMatrix assemble(const std::vector<std::vector<std::pair<std::size_t, Rational>>>& cols, std::size_t rows) {
    RationalMatrix out(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [r, v] : cols[j]) out(r, j) += v;
    return out;
}

Multivector basis_multivector(const ChartPtr& chart, const BasisElement& b) {
    return Multivector::term(chart, b.mask, Poly::monomial(chart->variables(), b.exponents));
}

namespace {

template <class G>
G basis_element(const ChartPtr& chart, const BasisElement& b) {
    return G::term(chart, b.mask, Poly::monomial(chart->variables(), b.exponents));
}

int max_coefficient_degree(const auto& g) {
    int d = -1;
    for (const auto& [m, c] : g.components()) d = std::max(d, c.degree());
    return d;
}

// Kernel of the operator on C^k_D, and the part of its kernel hit by the
// operator from C^{k-1} of coefficient degree <= source_degree.
template <class G>
CohomologyResult compute(const TruncatedComplex& cx, int k, unsigned source_degree, int target_degree,
                         const std::function<G(const G&)>& op, bool emit_basis) {
    const auto& chart = cx.chart;
    CohomologyResult r;
    r.theory = cx.theory;
    r.k = k;
    r.max_degree = cx.max_degree;
    r.target_degree = target_degree;
    r.image_source_degree = int(source_degree);

    auto basis = cx.basis(k);
    r.dim_cochains = basis.size();
    if (basis.empty()) return r;

    // kernel on C^k_D
    SparseIndex rows;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> cols;
    for (const auto& b : basis) {
        G img = op(basis_element<G>(chart, b));
        if (max_coefficient_degree(img) > target_degree)
            throw InternalError("coboundary image exceeds the degree bound");
        cols.push_back(sparse_column(img, rows));
    }
    RationalMatrix m = assemble(cols, rows.rows.size());
    auto kernel = m.nullspace();
    r.dim_kernel = kernel.size();
    if (emit_basis) {
        for (const auto& v : kernel) {
            G g(chart);
            for (std::size_t j = 0; j < v.size(); ++j)
                if (v[j] != 0) g += v[j] * basis_element<G>(chart, basis[j]);
            r.kernel_basis.push_back(g.to_string());
        }
    }

    // image of C^{k-1} intersected with the kernel inside C^k_D
    auto sources = cx.basis(k - 1, source_degree);
    if (!sources.empty()) {
        std::map<std::pair<Mask, Exponents>, std::size_t> inside;
        for (std::size_t i = 0; i < basis.size(); ++i) inside.emplace(std::pair{basis[i].mask, basis[i].exponents}, i);

        SparseIndex outside, second;
        std::vector<std::vector<std::pair<std::size_t, Rational>>> img_cols, out_cols, sq_cols;
        for (const auto& s : sources) {
            G v = op(basis_element<G>(chart, s));
            std::vector<std::pair<std::size_t, Rational>> in_col, out_col;
            for (const auto& [mk, c] : v.components())
                for (const auto& [e, val] : c.terms()) {
                    auto it = inside.find({mk, e});
                    if (it != inside.end())
                        in_col.emplace_back(it->second, val);
                    else
                        out_col.emplace_back(outside.index(mk, e), val);
                }
            img_cols.push_back(std::move(in_col));
            out_cols.push_back(std::move(out_col));
            sq_cols.push_back(sparse_column(op(v), second));
        }
        // constraints: no component outside C^k_D, and op(v) = 0
        std::size_t n_out = outside.rows.size(), n_sq = second.rows.size();
        std::vector<std::vector<std::pair<std::size_t, Rational>>> constraint_cols(sources.size());
        for (std::size_t j = 0; j < sources.size(); ++j) {
            constraint_cols[j] = out_cols[j];
            for (const auto& [row, val] : sq_cols[j]) constraint_cols[j].emplace_back(n_out + row, val);
        }
        RationalMatrix constraints = assemble(constraint_cols, n_out + n_sq);
        auto admissible = constraints.nullspace();
        if (!admissible.empty()) {
            RationalMatrix images = assemble(img_cols, basis.size());
            RationalMatrix combos = RationalMatrix::from_columns(sources.size(), admissible);
            r.dim_image_in_kernel = (images * combos).rank();
        }
    }
    r.dim_twisted = r.dim_kernel - r.dim_image_in_kernel;
    return r;
}

unsigned default_source_degree(unsigned max_degree, const CohomologyOptions& opts) {
    if (opts.image_source_degree >= 0) return unsigned(opts.image_source_degree);
    return max_degree + 1;
}

void require_degree(int k) {
    if (k < 0) throw InputError("cohomology degree k must be non-negative");
}

}  // namespace

int twisted_target_degree(const HamStructure& hs, unsigned max_degree) {
    int dh = hs.h_degree();
    if (dh < 0) return int(max_degree);
    int dt = std::max(hs.chart()->t_degree(), 0);
    return int(max_degree) + std::max(0, dh - 1 + dt);
}

CohomologyResult twisted_cohomology(const HamStructure& hs, int k, unsigned max_degree, const CohomologyOptions& opts) {
    require_degree(k);
    if (!hs.is_transversal()) throw PreconditionError("twisted cohomology requires a transversal structure (k = 0)");
    TruncatedComplex cx{hs.chart(), Theory::Twisted, max_degree};
    std::function<Multivector(const Multivector&)> op = [&](const Multivector& q) { return coboundary(hs, q); };
    return compute<Multivector>(cx, k, default_source_degree(max_degree, opts), twisted_target_degree(hs, max_degree),
                                op, opts.emit_kernel_basis);
}

CohomologyResult basic_lp_cohomology(const HamStructure& hs, int k, unsigned max_degree, const CohomologyOptions& opts) {
    require_degree(k);
    Classification cls = classify(hs);
    if (!cls.hamiltonian.pass) throw PreconditionError("lp-basic cohomology requires a hamiltonian structure");
    if (!lp_coboundary(hs, structure_bivector(hs)).is_zero())
        throw InternalError("structure bivector is not a cocycle");
    TruncatedComplex cx{hs.chart(), Theory::LpBasic, max_degree};
    std::function<Multivector(const Multivector&)> op = [&](const Multivector& q) { return lp_coboundary(hs, q); };
    int target = int(max_degree) + std::max(0, hs.h_degree() - 1);
    return compute<Multivector>(cx, k, default_source_degree(max_degree, opts), target, op, opts.emit_kernel_basis);
}

CohomologyResult basic_derham_cohomology(const ChartPtr& chart, int k, unsigned max_degree,
                                         const CohomologyOptions& opts) {
    require_degree(k);
    TruncatedComplex cx{chart, Theory::BasicDeRham, max_degree};
    std::function<BigradedForm(const BigradedForm&)> op = [](const BigradedForm& w) { return exterior_d(w); };
    return compute<BigradedForm>(cx, k, default_source_degree(max_degree, opts), int(max_degree), op,
                                 opts.emit_kernel_basis);
}

}  // namespace folham
