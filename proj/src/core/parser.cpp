#include "parser.hpp"

#include <cctype>

#include "error.hpp"

namespace folham {

namespace {

class Parser {
public:
    Parser(std::string_view text, const VariablesPtr& vars) : text_(text), vars_(vars) {}

    Poly run() {
        skip_ws();
        if (at_end()) throw ParseError("empty expression", pos_);
        Poly p = expr();
        skip_ws();
        if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return p;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        Poly acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Poly term() {
        Poly acc = factor();
        while (accept('*')) acc *= factor();
        return acc;
    }

    Poly factor() {
        Poly base = atom();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            if (!at_end() && (text_[pos_] == '-' || text_[pos_] == '+'))
                throw ParseError("negative or signed exponent", pos_);
            Integer e = uint_literal("exponent");
            if (!at_end() && (text_[pos_] == '.' || text_[pos_] == '/'))
                throw ParseError("non-integer exponent", pos_);
            if (e > 65535) throw ParseError("exponent too large", start);
            return base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    Poly atom() {
        skip_ws();
        if (at_end()) throw ParseError("unexpected end of expression", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return -atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = uint_literal("integer");
            skip_ws();
            if (!at_end() && text_[pos_] == '/') {
                ++pos_;
                skip_ws();
                std::size_t dpos = pos_;
                Integer den = uint_literal("denominator");
                if (den == 0) throw ParseError("zero denominator", dpos);
                Rational r(num, den);
                r.canonicalize();
                return Poly(vars_, r);
            }
            return Poly(vars_, Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            int idx = vars_->index_of(name);
            if (idx < 0) throw InputError("unknown identifier '" + name + "' at position " + std::to_string(start));
            return Poly::variable(vars_, static_cast<std::size_t>(idx));
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    Integer uint_literal(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError(std::string("expected ") + what, start);
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    const VariablesPtr& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const VariablesPtr& vars) {
    return Parser(text, vars).run();
}

}  // namespace folham
