#include "bispec/ratfun.hpp"

#include <algorithm>

#include "bispec/errors.hpp"

namespace bispec {

RatFun::RatFun(FactorBasisPtr basis, BiPoly num, std::vector<int> den)
    : basis_(std::move(basis)), num_(std::move(num)), den_(std::move(den)) {
    den_.resize(static_cast<std::size_t>(nfactors()), 0);
    for (int e : den_)
        if (e < 0) throw ShapeError("negative denominator exponent");
    normalize();
}

RatFun RatFun::constant(FactorBasisPtr basis, const GR& v) {
    RatFun r(std::move(basis));
    r.num_ = BiPoly::constant(v);
    return r;
}

RatFun RatFun::variable(FactorBasisPtr basis, Var v) {
    RatFun r(std::move(basis));
    r.num_ = BiPoly::variable(v);
    return r;
}

RatFun RatFun::from_poly(FactorBasisPtr basis, BiPoly p) {
    RatFun r(std::move(basis));
    r.num_ = std::move(p);
    return r;
}

RatFun RatFun::factor_power(FactorBasisPtr basis, int factor_idx, int k) {
    RatFun r(basis);
    r.num_ = BiPoly::constant(GR(1));
    r.den_.at(static_cast<std::size_t>(factor_idx)) = k;
    return r;
}

bool RatFun::is_polynomial() const {
    return std::all_of(den_.begin(), den_.end(), [](int e) { return e == 0; });
}

BiPoly RatFun::poly() const {
    if (!is_polynomial()) throw ShapeError("value has a nontrivial denominator");
    return num_;
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        std::fill(den_.begin(), den_.end(), 0);
        return;
    }
    for (std::size_t idx = 0; idx < den_.size(); ++idx) {
        const Factor& f = basis_->factor(static_cast<int>(idx));
        while (den_[idx] > 0) {
            BiPoly q;
            if (!BiPoly::try_divide(num_, f.poly, f.var, q)) break;
            num_ = std::move(q);
            --den_[idx];
        }
    }
}

namespace {
std::vector<int> max_exps(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> m(std::max(a.size(), b.size()), 0);
    for (std::size_t idx = 0; idx < m.size(); ++idx) {
        int va = idx < a.size() ? a[idx] : 0;
        int vb = idx < b.size() ? b[idx] : 0;
        m[idx] = std::max(va, vb);
    }
    return m;
}
} // namespace

BiPoly RatFun::cleared(const std::vector<int>& target) const {
    std::vector<int> extra(target.size(), 0);
    for (std::size_t idx = 0; idx < target.size(); ++idx) {
        int have = idx < den_.size() ? den_[idx] : 0;
        if (target[idx] < have) throw ShapeError("clearing target below denominator");
        extra[idx] = target[idx] - have;
    }
    return num_ * basis_->expand(extra);
}

RatFun RatFun::operator+(const RatFun& o) const {
    if (basis_ != o.basis_) throw ShapeError("rational functions over different factor bases");
    std::vector<int> target = max_exps(den_, o.den_);
    RatFun out(basis_);
    out.num_ = cleared(target) + o.cleared(target);
    out.den_ = std::move(target);
    out.normalize();
    return out;
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (o * GR(-1)); }

RatFun RatFun::operator*(const RatFun& o) const {
    if (basis_ != o.basis_) throw ShapeError("rational functions over different factor bases");
    RatFun out(basis_);
    out.num_ = num_ * o.num_;
    out.den_.assign(den_.size(), 0);
    for (std::size_t idx = 0; idx < den_.size(); ++idx) out.den_[idx] = den_[idx] + o.den_[idx];
    out.normalize();
    return out;
}

RatFun RatFun::operator*(const GR& s) const {
    RatFun out(basis_);
    out.num_ = num_ * s;
    out.den_ = s.is_zero() ? std::vector<int>(den_.size(), 0) : den_;
    return out;
}

RatFun RatFun::inv() const {
    if (num_.is_zero()) throw DivisionByZero();
    // Peel declared factors off the numerator until a constant remains.
    BiPoly residual = num_;
    std::vector<int> new_den(den_.size(), 0);
    for (std::size_t idx = 0; idx < den_.size(); ++idx) {
        const Factor& f = basis_->factor(static_cast<int>(idx));
        BiPoly q;
        while (BiPoly::try_divide(residual, f.poly, f.var, q)) {
            residual = std::move(q);
            ++new_den[idx];
        }
    }
    if (!residual.is_constant())
        throw ComputeError("divisor is not a product of declared factors and constants");
    GR c = residual.constant_value();
    RatFun out(basis_);
    out.num_ = basis_->expand(den_) * c.inv();
    out.den_ = std::move(new_den);
    out.normalize();
    return out;
}

bool RatFun::operator==(const RatFun& o) const {
    if (basis_ != o.basis_) return false;
    // Cancel shared exponents before cross-multiplying.
    std::vector<int> target = max_exps(den_, o.den_);
    return cleared(target) == o.cleared(target);
}

RatFun RatFun::derivative(Var v) const {
    // num' / den  +  sum_i (-e_i) f_i' num / (den * f_i).
    RatFun out(basis_);
    out.num_ = num_.derivative(v);
    out.den_ = den_;
    out.normalize();
    for (std::size_t idx = 0; idx < den_.size(); ++idx) {
        if (den_[idx] == 0) continue;
        const Factor& f = basis_->factor(static_cast<int>(idx));
        if (f.var != v) continue;
        RatFun term(basis_);
        term.num_ = num_ * BiPoly::from_uni(f.poly.derivative(), f.var) * GR(-den_[idx]);
        term.den_ = den_;
        term.den_[idx] += 1;
        term.normalize();
        out = out + term;
    }
    return out;
}

} // namespace bispec
