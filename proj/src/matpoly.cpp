#include "bispec/matpoly.hpp"

#include <algorithm>

#include "bispec/errors.hpp"

namespace bispec {

ConstMat ConstMat::identity(int n) {
    ConstMat m(n, n);
    for (int k = 0; k < n; ++k) m.at(k, k) = GR(1);
    return m;
}

ConstMat ConstMat::unit(int n, int r, int c) {
    ConstMat m(n, n);
    m.at(r, c) = GR(1);
    return m;
}

bool ConstMat::is_zero() const {
    for (const auto& v : e_)
        if (!v.is_zero()) return false;
    return true;
}

ConstMat ConstMat::operator+(const ConstMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix shape mismatch");
    ConstMat out(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] + o.e_[k];
    return out;
}

ConstMat ConstMat::operator-(const ConstMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix shape mismatch");
    ConstMat out(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] - o.e_[k];
    return out;
}

ConstMat ConstMat::operator*(const ConstMat& o) const {
    if (cols_ != o.rows_) throw ShapeError("matrix shape mismatch");
    ConstMat out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const GR& a = at(r, k);
            if (a.is_zero()) continue;
            for (int c = 0; c < o.cols_; ++c) {
                const GR& b = o.at(k, c);
                if (!b.is_zero()) out.at(r, c) += a * b;
            }
        }
    return out;
}

ConstMat ConstMat::operator*(const GR& s) const {
    ConstMat out(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] * s;
    return out;
}

MatPoly::MatPoly(Var v, std::vector<ConstMat> coeffs) : var_(v), c_(std::move(coeffs)) {
    n_ = c_.empty() ? 0 : c_.front().rows();
    for (const auto& m : c_)
        if (m.rows() != n_ || m.cols() != n_) throw ShapeError("ragged matrix polynomial");
    trim();
}

MatPoly MatPoly::identity(Var v, int n) {
    MatPoly p(v, n);
    p.c_.push_back(ConstMat::identity(n));
    return p;
}

MatPoly MatPoly::term(Var v, int n, int k, int r, int c, const GR& coeff) {
    MatPoly p(v, n);
    if (coeff.is_zero()) return p;
    p.c_.assign(static_cast<std::size_t>(k) + 1, ConstMat(n, n));
    p.c_.back().at(r, c) = coeff;
    return p;
}

MatPoly MatPoly::scalar(Var v, int n, const UniPoly& p) {
    MatPoly out(v, n);
    for (int k = 0; k <= p.degree(); ++k)
        out.c_.push_back(ConstMat::identity(n) * p.coeff(k));
    out.trim();
    return out;
}

ConstMat MatPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return ConstMat(n_, n_);
    return c_[static_cast<std::size_t>(k)];
}

GR MatPoly::entry(int k, int r, int c) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return GR();
    return c_[static_cast<std::size_t>(k)].at(r, c);
}

MatPoly MatPoly::operator+(const MatPoly& o) const {
    if (n_ != o.n_) throw ShapeError("matrix polynomial size mismatch");
    MatPoly out(var_, n_);
    std::size_t len = std::max(c_.size(), o.c_.size());
    for (std::size_t k = 0; k < len; ++k)
        out.c_.push_back(coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k)));
    out.trim();
    return out;
}

MatPoly MatPoly::operator-(const MatPoly& o) const { return *this + (o * GR(-1)); }

MatPoly MatPoly::operator*(const MatPoly& o) const {
    if (n_ != o.n_) throw ShapeError("matrix polynomial size mismatch");
    if (is_zero() || o.is_zero()) return MatPoly(var_, n_);
    MatPoly out(var_, n_);
    out.c_.assign(c_.size() + o.c_.size() - 1, ConstMat(n_, n_));
    for (std::size_t a = 0; a < c_.size(); ++a)
        for (std::size_t b = 0; b < o.c_.size(); ++b)
            out.c_[a + b] = out.c_[a + b] + c_[a] * o.c_[b];
    out.trim();
    return out;
}

MatPoly MatPoly::operator*(const GR& s) const {
    MatPoly out(var_, n_);
    for (const auto& m : c_) out.c_.push_back(m * s);
    out.trim();
    return out;
}

bool MatPoly::operator==(const MatPoly& o) const {
    if (var_ != o.var_ || c_.size() != o.c_.size()) return false;
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != o.c_[k]) return false;
    return true;
}

MatPoly MatPoly::truncated(int d) const {
    MatPoly out(var_, n_);
    for (int k = 0; k <= d && k <= degree(); ++k) out.c_.push_back(coeff(k));
    out.trim();
    return out;
}

std::vector<GR> MatPoly::coordinates(int d) const {
    std::vector<GR> out(static_cast<std::size_t>((d + 1) * n_ * n_));
    for (int k = 0; k <= d; ++k)
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c)
                out[static_cast<std::size_t>(k * n_ * n_ + r * n_ + c)] = entry(k, r, c);
    return out;
}

MatPoly MatPoly::from_coordinates(Var v, int n, const std::vector<GR>& coords) {
    MatPoly out(v, n);
    std::size_t per = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    std::size_t ncoeff = (coords.size() + per - 1) / per;
    out.c_.assign(ncoeff, ConstMat(n, n));
    for (std::size_t idx = 0; idx < coords.size(); ++idx) {
        if (coords[idx].is_zero()) continue;
        std::size_t k = idx / per, rem = idx % per;
        out.c_[k].at(static_cast<int>(rem) / n, static_cast<int>(rem) % n) = coords[idx];
    }
    out.trim();
    return out;
}

MatPoly MatPoly::from_coordinates(Var v, int n, int d, const SparseVec& coords) {
    MatPoly out(v, n);
    out.c_.assign(static_cast<std::size_t>(d + 1), ConstMat(n, n));
    int per = n * n;
    for (const auto& [idx, val] : coords) {
        int k = idx / per, rem = idx % per;
        out.c_[static_cast<std::size_t>(k)].at(rem / n, rem % n) = val;
    }
    out.trim();
    return out;
}

MatRF MatPoly::to_matrf(FactorBasisPtr basis) const {
    MatRF out(basis, n_, n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) {
            BiPoly p;
            for (int k = 0; k <= degree(); ++k) {
                GR v = entry(k, r, c);
                if (!v.is_zero()) p.add_term(var_ == Var::x ? k : 0, var_ == Var::x ? 0 : k, v);
            }
            out.at(r, c) = RatFun::from_poly(basis, std::move(p));
        }
    return out;
}

void MatPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

} // namespace bispec
