#include "bispec/unipoly.hpp"

#include <algorithm>

namespace bispec {

namespace {
const GR kZero{};
}

UniPoly UniPoly::monomial(int k, const GR& coeff) {
    std::vector<GR> c(static_cast<std::size_t>(k) + 1);
    c[static_cast<std::size_t>(k)] = coeff;
    return UniPoly(std::move(c));
}

const GR& UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(k)];
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<GR> out(std::max(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (k < c_.size()) out[k] += c_[k];
        if (k < o.c_.size()) out[k] += o.c_[k];
    }
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (o * GR(-1)); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<GR> out(c_.size() + o.c_.size() - 1);
    for (std::size_t a = 0; a < c_.size(); ++a) {
        if (c_[a].is_zero()) continue;
        for (std::size_t b = 0; b < o.c_.size(); ++b)
            if (!o.c_[b].is_zero()) out[a + b] += c_[a] * o.c_[b];
    }
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const GR& s) const {
    if (s.is_zero()) return UniPoly();
    std::vector<GR> out(c_);
    for (auto& v : out) v *= s;
    return UniPoly(std::move(out));
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<GR> out(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * GR(static_cast<long>(k));
    return UniPoly(std::move(out));
}

GR UniPoly::eval(const GR& v) const {
    GR acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw DivisionByZero();
    r = a;
    q = UniPoly();
    GR lead_inv = b.leading().inv();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        GR factor = r.leading() * lead_inv;
        UniPoly piece = UniPoly::monomial(shift, factor);
        q = q + piece;
        r = r - piece * b;
    }
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UniPoly UniPoly::ext_gcd(const UniPoly& a, const UniPoly& b, UniPoly& s, UniPoly& t) {
    UniPoly r0 = a, r1 = b;
    UniPoly s0 = UniPoly::constant(GR(1)), s1;
    UniPoly t0, t1 = UniPoly::constant(GR(1));
    while (!r1.is_zero()) {
        UniPoly q, r;
        divmod(r0, r1, q, r);
        UniPoly s2 = s0 - q * s1;
        UniPoly t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) { s = UniPoly(); t = UniPoly(); return UniPoly(); }
    GR inv = r0.leading().inv();
    s = s0 * inv;
    t = t0 * inv;
    return r0 * inv;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return UniPoly();
    return *this * leading().inv();
}

} // namespace bispec
