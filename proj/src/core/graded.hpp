#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "chart.hpp"
#include "error.hpp"

namespace folham {

// A set of frame slots, one bit per slot. Slot a < q is the transverse
// generator, slot q + u the leaf generator.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }

// Sign of e_A ^ e_B relative to e_{A|B} (0 if they overlap).
inline int merge_sign(Mask a, Mask b) {
    if (a & b) return 0;
    int inversions = 0;
    for (Mask rest = b; rest; rest &= rest - 1) {
        int j = std::countr_zero(rest);
        inversions += std::popcount(j >= 31 ? Mask(0) : (a >> (j + 1)));
    }
    return (inversions & 1) ? -1 : 1;
}

// Sign for removing slot s from the front of a wedge word.
inline int removal_sign(Mask m, int s) {
    return (std::popcount(m & ((Mask(1) << s) - 1)) & 1) ? -1 : 1;
}

struct Bidegree {
    int s = 0;  // transverse count
    int t = 0;  // leaf count
    auto operator<=>(const Bidegree&) const = default;
};

inline Bidegree bidegree_of(Mask m, std::size_t q) {
    Mask low = (Mask(1) << q) - 1;
    return {std::popcount(m & low), std::popcount(m & ~low)};
}

// Tags name the generators for printing and keep the four graded algebras
// from being mixed up.
struct FormTag {
    static std::string slot_name(const Chart& c, int s) {
        return std::size_t(s) < c.q() ? "d" + c.name(s) : "theta(" + c.name(s) + ")";
    }
};
struct MultivectorTag {
    static std::string slot_name(const Chart& c, int s) {
        return std::size_t(s) < c.q() ? "X(" + c.name(s) + ")" : "d/d" + c.name(s);
    }
};
struct CoordFormTag {
    static std::string slot_name(const Chart& c, int s) { return "d" + c.name(s); }
};
struct CoordMultivectorTag {
    static std::string slot_name(const Chart& c, int s) { return "d/d" + c.name(s); }
};

std::string coefficient_text(const Poly& p);

// Element of an exterior algebra over polynomial functions of a chart:
// a finite sum of coefficient * (g_{s1} ^ ... ^ g_{sk}) with s1 < ... < sk.
template <class Tag>
class Graded {
public:
    using Components = std::map<Mask, Poly>;

    explicit Graded(ChartPtr chart) : chart_(std::move(chart)) {}

    static Graded function(ChartPtr chart, const Poly& f) { return term(std::move(chart), 0, f); }

    static Graded term(ChartPtr chart, Mask m, const Poly& coeff) {
        Graded g(std::move(chart));
        g.add(m, coeff);
        return g;
    }

    static Graded generator(ChartPtr chart, int slot) {
        Poly one = chart->constant(1);
        return term(std::move(chart), Mask(1) << slot, one);
    }

    const ChartPtr& chart() const noexcept { return chart_; }
    const Components& components() const noexcept { return comps_; }

    Poly component(Mask m) const {
        auto it = comps_.find(m);
        return it == comps_.end() ? chart_->zero() : it->second;
    }

    void add(Mask m, const Poly& coeff) {
        if (coeff.is_zero()) return;
        if (m >> chart_->n()) throw InternalError("slot outside chart");
        auto [it, inserted] = comps_.try_emplace(m, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) comps_.erase(it);
        }
    }

    bool is_zero() const noexcept { return comps_.empty(); }

    Graded& operator+=(const Graded& o) {
        require_same_chart(chart_, o.chart_);
        for (const auto& [m, c] : o.comps_) add(m, c);
        return *this;
    }
    Graded& operator-=(const Graded& o) {
        require_same_chart(chart_, o.chart_);
        for (const auto& [m, c] : o.comps_) add(m, -c);
        return *this;
    }
    Graded& operator*=(const Poly& f) {
        Components out;
        for (auto& [m, c] : comps_) {
            Poly v = c * f;
            if (!v.is_zero()) out.emplace(m, std::move(v));
        }
        comps_ = std::move(out);
        return *this;
    }
    Graded& operator*=(const Rational& r) { return *this *= chart_->constant(r); }

    friend Graded operator+(Graded a, const Graded& b) { return a += b; }
    friend Graded operator-(Graded a, const Graded& b) { return a -= b; }
    friend Graded operator*(Graded a, const Poly& f) { return a *= f; }
    friend Graded operator*(const Poly& f, Graded a) { return a *= f; }
    friend Graded operator*(const Rational& r, Graded a) { return a *= r; }
    Graded operator-() const { return Graded(*this) *= Rational(-1); }

    friend bool operator==(const Graded& a, const Graded& b) {
        return same_chart(a.chart_, b.chart_) && a.comps_ == b.comps_;
    }

    // Components of total degree k.
    Graded degree_part(int k) const {
        Graded out(chart_);
        for (const auto& [m, c] : comps_)
            if (popcount(m) == k) out.comps_.emplace(m, c);
        return out;
    }

    Graded bidegree_part(Bidegree b) const {
        Graded out(chart_);
        for (const auto& [m, c] : comps_)
            if (bidegree_of(m, chart_->q()) == b) out.comps_.emplace(m, c);
        return out;
    }

    std::set<Bidegree> bidegrees() const {
        std::set<Bidegree> out;
        for (const auto& [m, c] : comps_) out.insert(bidegree_of(m, chart_->q()));
        return out;
    }

    // Total degree if homogeneous, -1 for zero, throws if mixed.
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : comps_) {
            if (d >= 0 && d != popcount(m)) throw PreconditionError("object has mixed degree");
            d = popcount(m);
        }
        return d;
    }

    std::string to_string() const {
        if (comps_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : comps_) {
            std::string word;
            for (int s = 0; s < int(chart_->n()); ++s) {
                if (!(m & (Mask(1) << s))) continue;
                if (!word.empty()) word += "^";
                word += Tag::slot_name(*chart_, s);
            }
            std::string coeff = coefficient_text(c);
            std::string piece;
            if (word.empty())
                piece = coeff;
            else if (coeff == "1")
                piece = word;
            else if (coeff == "-1")
                piece = "-" + word;
            else
                piece = coeff + "*" + word;
            if (!out.empty()) {
                if (piece[0] == '-')
                    out += " - " + piece.substr(1);
                else
                    out += " + " + piece;
            } else {
                out = piece;
            }
        }
        return out;
    }

private:
    ChartPtr chart_;
    Components comps_;
};

template <class Tag>
Graded<Tag> wedge(const Graded<Tag>& a, const Graded<Tag>& b) {
    require_same_chart(a.chart(), b.chart());
    Graded<Tag> out(a.chart());
    for (const auto& [ma, ca] : a.components()) {
        for (const auto& [mb, cb] : b.components()) {
            int sign = merge_sign(ma, mb);
            if (sign == 0) continue;
            Poly c = ca * cb;
            if (sign < 0) c = -c;
            out.add(ma | mb, c);
        }
    }
    return out;
}

// Replaces every degree-1 generator g_s by images[s] (an element of another
// graded algebra) and expands multiplicatively.
template <class To, class From, class Images>
Graded<To> substitute_generators(const Graded<From>& x, const ChartPtr& chart, const Images& images) {
    Graded<To> out(chart);
    for (const auto& [m, c] : x.components()) {
        Graded<To> word = Graded<To>::function(chart, chart->constant(1));
        for (int s = 0; s < int(chart->n()); ++s)
            if (m & (Mask(1) << s)) word = wedge(word, images[s]);
        out += word * c;
    }
    return out;
}

using BigradedForm = Graded<FormTag>;
using Multivector = Graded<MultivectorTag>;
using CoordForm = Graded<CoordFormTag>;
using CoordMultivector = Graded<CoordMultivectorTag>;

}  // namespace folham
