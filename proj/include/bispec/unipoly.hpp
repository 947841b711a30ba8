#pragma once

#include <vector>

#include "bispec/gaussian_rational.hpp"

namespace bispec {

enum class Var : int { x = 0, z = 1 };

inline char var_name(Var v) { return v == Var::x ? 'x' : 'z'; }

/// Dense univariate polynomial over Q(i); coeffs[k] multiplies var^k,
/// no trailing zero coefficient.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<GR> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const GR& v) { return UniPoly(std::vector<GR>{v}); }
    /// The monomial var^k.
    static UniPoly monomial(int k, const GR& coeff = GR(1));

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const GR& coeff(int k) const;
    const std::vector<GR>& coeffs() const { return c_; }
    const GR& leading() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const GR& s) const;
    UniPoly operator-() const { return *this * GR(-1); }
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    UniPoly derivative() const;
    GR eval(const GR& v) const;

    /// Quotient and remainder; divisor must be nonzero.
    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
    /// Monic gcd (Euclid); gcd(0,0) = 0.
    static UniPoly gcd(UniPoly a, UniPoly b);
    /// Extended gcd: g = s*a + t*b with g monic (or zero).
    static UniPoly ext_gcd(const UniPoly& a, const UniPoly& b, UniPoly& s, UniPoly& t);

    UniPoly monic() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<GR> c_;
};

} // namespace bispec
