#include "bispec/bipoly.hpp"

#include <algorithm>

namespace bispec {

BiPoly BiPoly::constant(const GR& v) {
    BiPoly p;
    p.add_term(0, 0, v);
    return p;
}

BiPoly BiPoly::monomial(int dx, int dz, const GR& coeff) {
    BiPoly p;
    p.add_term(dx, dz, coeff);
    return p;
}

BiPoly BiPoly::from_uni(const UniPoly& p, Var v) {
    BiPoly out;
    for (int k = 0; k <= p.degree(); ++k)
        out.add_term(v == Var::x ? k : 0, v == Var::x ? 0 : k, p.coeff(k));
    return out;
}

bool BiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
}

GR BiPoly::constant_value() const { return coeff(0, 0); }

GR BiPoly::coeff(int dx, int dz) const {
    auto it = terms_.find({dx, dz});
    return it == terms_.end() ? GR() : it->second;
}

int BiPoly::degree(Var v) const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, v == Var::x ? k.first : k.second);
    return d;
}

void BiPoly::add_term(int dx, int dz, const GR& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({dx, dz}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k.first, k.second, c);
    return out;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    BiPoly out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k.first, k.second, -c);
    return out;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly out;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

BiPoly BiPoly::operator*(const GR& s) const {
    BiPoly out;
    if (s.is_zero()) return out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * s);
    return out;
}

BiPoly BiPoly::derivative(Var v) const {
    BiPoly out;
    for (const auto& [k, c] : terms_) {
        int d = v == Var::x ? k.first : k.second;
        if (d == 0) continue;
        out.add_term(v == Var::x ? k.first - 1 : k.first,
                     v == Var::x ? k.second : k.second - 1, c * GR(d));
    }
    return out;
}

bool BiPoly::try_divide(const BiPoly& num, const UniPoly& f, Var fv, BiPoly& q) {
    // Long division along fv; f is monic so no coefficient division is needed.
    BiPoly rem = num;
    q = BiPoly();
    int df = f.degree();
    BiPoly fbi = BiPoly::from_uni(f, fv);
    while (true) {
        int dr = rem.degree(fv);
        if (dr < df) break;
        // Leading layer of rem at fv-degree dr.
        BiPoly piece;
        for (const auto& [k, c] : rem.terms()) {
            int d = fv == Var::x ? k.first : k.second;
            if (d == dr)
                piece.add_term(fv == Var::x ? k.first - df : k.first,
                               fv == Var::x ? k.second : k.second - df, c);
        }
        q = q + piece;
        rem = rem - piece * fbi; // f monic: the whole layer at dr cancels
    }
    return rem.is_zero();
}

UniPoly BiPoly::uni_layer(Var v, int k) const {
    std::vector<GR> coeffs;
    for (const auto& [key, c] : terms_) {
        int dv = v == Var::x ? key.first : key.second;
        int dw = v == Var::x ? key.second : key.first;
        if (dv != k) continue;
        if (static_cast<int>(coeffs.size()) <= dw) coeffs.resize(static_cast<std::size_t>(dw) + 1);
        coeffs[static_cast<std::size_t>(dw)] = c;
    }
    return UniPoly(std::move(coeffs));
}

UniPoly BiPoly::to_uni(Var v) const {
    Var other = v == Var::x ? Var::z : Var::x;
    if (degree(other) > 0) throw ShapeError("polynomial is not univariate");
    std::vector<GR> coeffs;
    for (const auto& [key, c] : terms_) {
        int d = v == Var::x ? key.first : key.second;
        if (static_cast<int>(coeffs.size()) <= d) coeffs.resize(static_cast<std::size_t>(d) + 1);
        coeffs[static_cast<std::size_t>(d)] = c;
    }
    return UniPoly(std::move(coeffs));
}

} // namespace bispec
