#include "poly.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

#include "error.hpp"

namespace folham {

std::string to_string(const Rational& r) {
    return r.get_str();
}

int Variables::index_of(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

unsigned total_degree(const Exponents& e) {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

bool same_variables(const VariablesPtr& a, const VariablesPtr& b) {
    return a == b || (a && b && a->names == b->names);
}

Poly::Poly(VariablesPtr vars) : vars_(std::move(vars)) {
    if (!vars_) throw InternalError("polynomial without variables");
}

Poly::Poly(VariablesPtr vars, const Rational& constant) : Poly(std::move(vars)) {
    if (constant != 0) terms_.emplace(Exponents(nvars(), 0), constant);
}

Poly Poly::variable(VariablesPtr vars, std::size_t index) {
    Exponents e(vars->size(), 0);
    if (index >= e.size()) throw InputError("variable index out of range");
    e[index] = 1;
    return monomial(std::move(vars), std::move(e));
}

Poly Poly::monomial(VariablesPtr vars, Exponents exps, const Rational& coeff) {
    Poly p(std::move(vars));
    if (exps.size() != p.nvars()) throw InternalError("exponent vector has wrong length");
    if (coeff != 0) p.terms_.emplace(std::move(exps), coeff);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(total_degree(terms_.begin()->first));
}

bool Poly::depends_on(std::size_t index) const {
    for (const auto& [e, c] : terms_)
        if (e[index] != 0) return true;
    return false;
}

Rational Poly::constant_term() const {
    return coefficient(Exponents(nvars(), 0));
}

Rational Poly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::check_same(const Poly& other) const {
    if (!same_variables(vars_, other.vars_))
        throw PreconditionError("polynomials belong to different charts");
}

void Poly::add_term(const Exponents& e, const Rational& c) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& other) {
    check_same(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    check_same(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_same(b);
    Poly r(a.vars_);
    if (a.is_zero() || b.is_zero()) return r;
    Exponents e(a.nvars());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                unsigned s = unsigned(ea[i]) + eb[i];
                if (s > std::numeric_limits<std::uint16_t>::max())
                    throw InputError("exponent overflow");
                e[i] = static_cast<std::uint16_t>(s);
            }
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly& Poly::operator*=(const Poly& other) {
    *this = *this * other;
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& [e, v] : r.terms_) v = -v;
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly result(vars_, 1);
    Poly base(*this);
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

Poly Poly::partial(std::size_t index) const {
    if (index >= nvars()) throw InputError("unknown coordinate index");
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[index] == 0) continue;
        Exponents d = e;
        --d[index];
        r.add_term(d, c * e[index]);
    }
    return r;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
    if (point.size() != nvars())
        throw InputError("point has " + std::to_string(point.size()) + " coordinates, expected " +
                         std::to_string(nvars()));
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
        }
        sum += t;
    }
    return sum;
}

bool operator==(const Poly& a, const Poly& b) {
    return same_variables(a.vars_, b.vars_) && a.terms_ == b.terms_;
}

namespace {

std::string monomial_text(const Variables& vars, const Exponents& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += vars.names[i];
        if (e[i] > 1) s += '^' + std::to_string(e[i]);
    }
    return s;
}

bool first_factor_has_power(const Exponents& e) {
    for (auto x : e)
        if (x != 0) return x > 1;
    return false;
}

}  // namespace

// The grammar reads "-x1^2" as (-x1)^2, so a leading -1 coefficient in
// front of a power is spelled out as "-1*".
std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = abs(c);
        std::string mono = monomial_text(*vars_, e);
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mono.empty()) {
            out << mag.get_str();
        } else if (mag == 1) {
            if (first && c < 0 && first_factor_has_power(e)) out << "1*";
            out << mono;
        } else {
            out << mag.get_str() << '*' << mono;
        }
        first = false;
    }
    return out.str();
}

std::vector<Exponents> monomials_up_to(std::size_t n, unsigned max_degree) {
    std::vector<Exponents> out;
    Exponents cur(n, 0);
    for (unsigned d = 0; d <= max_degree; ++d) {
        // all exponent vectors with total degree d, in descending lex order
        std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
            if (i + 1 == n) {
                cur[i] = static_cast<std::uint16_t>(left);
                out.push_back(cur);
                return;
            }
            for (int k = static_cast<int>(left); k >= 0; --k) {
                cur[i] = static_cast<std::uint16_t>(k);
                rec(i + 1, left - static_cast<unsigned>(k));
            }
        };
        if (n == 0) {
            if (d == 0) out.push_back(cur);
            continue;
        }
        rec(0, d);
    }
    return out;
}

}  // namespace folham
