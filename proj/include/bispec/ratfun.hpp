#pragma once

#include <vector>

#include "bispec/bipoly.hpp"
#include "bispec/factor_basis.hpp"

namespace bispec {

/// Rational function num / prod_i factor_i^{den[i]} over a shared FactorBasis.
///
/// Normal form keeps no factor with positive exponent exactly dividing num;
/// equality is decided by cross-multiplication, so normalization is only a
/// size optimization.
class RatFun {
  public:
    RatFun() = default;
    explicit RatFun(FactorBasisPtr basis) : basis_(std::move(basis)) { den_.resize(nfactors()); }
    RatFun(FactorBasisPtr basis, BiPoly num, std::vector<int> den);

    static RatFun constant(FactorBasisPtr basis, const GR& v);
    static RatFun variable(FactorBasisPtr basis, Var v);
    static RatFun from_poly(FactorBasisPtr basis, BiPoly p);
    /// 1 / factor_idx^k  (k >= 0).
    static RatFun factor_power(FactorBasisPtr basis, int factor_idx, int k);

    const FactorBasisPtr& basis() const { return basis_; }
    const BiPoly& num() const { return num_; }
    const std::vector<int>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;
    /// Requires a polynomial value.
    BiPoly poly() const;

    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator*(const GR& s) const;
    RatFun operator-() const { return *this * GR(-1); }

    /// Inverse when the numerator is a constant times declared factors;
    /// throws ComputeError otherwise.
    RatFun inv() const;
    RatFun operator/(const RatFun& o) const { return *this * o.inv(); }

    /// Exact equality via cross-multiplication.
    bool operator==(const RatFun& o) const;
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    RatFun derivative(Var v) const;

    /// Multiplies out the denominator: returns num * expand(target - den).
    /// target must dominate den componentwise.
    BiPoly cleared(const std::vector<int>& target) const;

  private:
    int nfactors() const { return basis_ ? basis_->size() : 0; }
    void normalize();

    FactorBasisPtr basis_;
    BiPoly num_;
    std::vector<int> den_;
};

} // namespace bispec
