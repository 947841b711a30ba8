#include "bispec/matrf.hpp"

#include "bispec/errors.hpp"

namespace bispec {

MatRF::MatRF(FactorBasisPtr basis, int rows, int cols)
    : rows_(rows), cols_(cols), basis_(std::move(basis)),
      e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), RatFun(basis_)) {
    if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
}

MatRF MatRF::identity(FactorBasisPtr basis, int n) {
    MatRF m(basis, n, n);
    for (int k = 0; k < n; ++k) m.at(k, k) = RatFun::constant(basis, GR(1));
    return m;
}

bool MatRF::is_zero() const {
    for (const auto& v : e_)
        if (!v.is_zero()) return false;
    return true;
}

MatRF MatRF::operator+(const MatRF& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix shape mismatch in add");
    MatRF out(basis_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] + o.e_[k];
    return out;
}

MatRF MatRF::operator-(const MatRF& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix shape mismatch in sub");
    MatRF out(basis_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] - o.e_[k];
    return out;
}

MatRF MatRF::operator*(const MatRF& o) const {
    if (cols_ != o.rows_) throw ShapeError("matrix shape mismatch in mul");
    MatRF out(basis_, rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const RatFun& a = at(r, k);
            if (a.is_zero()) continue;
            for (int c = 0; c < o.cols_; ++c) {
                const RatFun& b = o.at(k, c);
                if (b.is_zero()) continue;
                out.at(r, c) = out.at(r, c) + a * b;
            }
        }
    return out;
}

MatRF MatRF::operator*(const RatFun& s) const {
    MatRF out(basis_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] * s;
    return out;
}

MatRF MatRF::scaled(const GR& s) const {
    MatRF out(basis_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] * s;
    return out;
}

MatRF MatRF::derivative(Var v) const {
    MatRF out(basis_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k].derivative(v);
    return out;
}

bool MatRF::operator==(const MatRF& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (e_[k] != o.e_[k]) return false;
    return true;
}

} // namespace bispec
