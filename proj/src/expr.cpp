#include "bispec/expr.hpp"

#include <cctype>

#include "bispec/errors.hpp"

namespace bispec {

namespace {

class Parser {
  public:
    Parser(std::string_view text, const FactorBasisPtr& basis) : s_(text), basis_(basis) {}

    RatFun run() {
        RatFun v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected character", pos_);
        return v;
    }

  private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    mpz_class integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected integer", pos_);
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }

    RatFun expr() {
        RatFun v = term();
        while (true) {
            if (accept('+'))
                v = v + term();
            else if (accept('-'))
                v = v - term();
            else
                return v;
        }
    }

    RatFun term() {
        RatFun v = unary();
        while (true) {
            if (accept('*')) {
                v = v * unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                RatFun divisor = unary();
                v = v * invert(divisor, at);
            } else {
                return v;
            }
        }
    }

    RatFun unary() {
        if (accept('-')) return -factor();
        return factor();
    }

    RatFun factor() {
        RatFun b = base();
        if (accept('^')) {
            skip_ws();
            bool neg = accept('-');
            std::size_t at = pos_;
            mpz_class e = integer();
            if (!e.fits_sint_p()) throw ParseError("exponent too large", at);
            int k = static_cast<int>(e.get_si());
            if (neg) {
                RatFun invb = invert(b, at);
                return power(invb, k);
            }
            return power(b, k);
        }
        return b;
    }

    RatFun base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            RatFun v = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return v;
        }
        if (c == 'i') {
            ++pos_;
            return RatFun::constant(basis_, GR::i());
        }
        if (c == 'x') {
            ++pos_;
            return RatFun::variable(basis_, Var::x);
        }
        if (c == 'z') {
            ++pos_;
            return RatFun::variable(basis_, Var::z);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = integer();
            // A '/' directly followed by digits is a rational literal, not division.
            std::size_t save = pos_;
            if (pos_ < s_.size() && s_[pos_] == '/' && pos_ + 1 < s_.size() &&
                std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
                ++pos_;
                mpz_class den = integer();
                if (sgn(den) == 0) {
                    pos_ = save;
                    throw ParseError("zero denominator in rational literal", save);
                }
                mpq_class q(num, den);
                q.canonicalize();
                return RatFun::constant(basis_, GR(q));
            }
            return RatFun::constant(basis_, GR(mpq_class(num)));
        }
        throw ParseError("expected value", pos_);
    }

    RatFun invert(const RatFun& v, std::size_t at) {
        if (v.is_zero()) throw ParseError("division by zero", at);
        try {
            return v.inv();
        } catch (const ComputeError&) {
            throw ParseError("undeclared denominator factor", at);
        }
    }

    RatFun power(const RatFun& b, int k) {
        RatFun acc = RatFun::constant(basis_, GR(1));
        for (int j = 0; j < k; ++j) acc = acc * b;
        return acc;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    FactorBasisPtr basis_;
};

// Scalar as a grammar expression: "2", "-1/2", "i", "2*i", "(1+i)" handled by caller.
std::string scalar_expr(const GR& v) {
    if (v.is_zero()) return "0";
    std::string out;
    if (sgn(v.re()) != 0) out += v.re().get_str();
    if (sgn(v.im()) != 0) {
        if (!out.empty() && sgn(v.im()) > 0) out += "+";
        mpq_class a = abs(v.im());
        std::string mag = (a == 1) ? "i" : a.get_str() + "*i";
        out += (sgn(v.im()) < 0 ? "-" : "") + mag;
    }
    return out;
}

// One monomial as (sign, magnitude text). Mixed complex coefficients are
// parenthesized and carry sign '+'.
std::pair<char, std::string> monomial_text(const GR& c, int dx, int dz) {
    std::string vars;
    if (dx > 0) {
        vars += "x";
        if (dx > 1) vars += "^" + std::to_string(dx);
    }
    if (dz > 0) {
        if (!vars.empty()) vars += "*";
        vars += "z";
        if (dz > 1) vars += "^" + std::to_string(dz);
    }
    bool pure_real = sgn(c.im()) == 0;
    bool pure_imag = sgn(c.re()) == 0 && !pure_real;
    if (vars.empty()) {
        if (pure_real) {
            mpq_class a = abs(c.re());
            return {sgn(c.re()) < 0 ? '-' : '+', a.get_str()};
        }
        if (pure_imag) {
            mpq_class a = abs(c.im());
            return {sgn(c.im()) < 0 ? '-' : '+', a == 1 ? "i" : a.get_str() + "*i"};
        }
        return {'+', "(" + scalar_expr(c) + ")"};
    }
    if (pure_real) {
        mpq_class a = abs(c.re());
        std::string coeff = (a == 1) ? "" : a.get_str() + "*";
        return {sgn(c.re()) < 0 ? '-' : '+', coeff + vars};
    }
    if (pure_imag) {
        mpq_class a = abs(c.im());
        std::string coeff = (a == 1) ? "i*" : a.get_str() + "*i*";
        return {sgn(c.im()) < 0 ? '-' : '+', coeff + vars};
    }
    return {'+', "(" + scalar_expr(c) + ")*" + vars};
}

bool factor_name_is_atom(const std::string& name) {
    return name.size() == 1;
}

} // namespace

RatFun parse_expr(std::string_view text, const FactorBasisPtr& basis) {
    return Parser(text, basis).run();
}

std::string print_poly(const BiPoly& p) {
    if (p.is_zero()) return "0";
    // Descending (deg_x, deg_z) term order.
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        auto [sign, mag] = monomial_text(it->second, it->first.first, it->first.second);
        if (out.empty())
            out = (sign == '-' ? "-" : "") + mag;
        else
            out += std::string(1, sign) + mag;
    }
    return out;
}

std::string print_uni(const UniPoly& p, Var v) {
    return print_poly(BiPoly::from_uni(p, v));
}

std::string print_expr(const RatFun& v) {
    if (v.is_zero()) return "0";
    std::string num = print_poly(v.num());

    std::vector<std::string> den_parts;
    const auto& basis = *v.basis();
    for (std::size_t k = 0; k < v.den().size(); ++k) {
        if (v.den()[k] == 0) continue;
        const Factor& f = basis.factor(static_cast<int>(k));
        std::string part = factor_name_is_atom(f.name) ? f.name : "(" + f.name + ")";
        if (v.den()[k] > 1) part += "^" + std::to_string(v.den()[k]);
        den_parts.push_back(std::move(part));
    }
    if (den_parts.empty()) return num;

    bool num_is_single = v.num().terms().size() == 1;
    std::string left = num_is_single ? num : "(" + num + ")";
    if (den_parts.size() == 1) return left + "/" + den_parts.front();
    std::string den = den_parts.front();
    for (std::size_t k = 1; k < den_parts.size(); ++k) den += "*" + den_parts[k];
    return left + "/(" + den + ")";
}

} // namespace bispec
