#pragma once

#include <map>
#include <utility>

#include "bispec/gaussian_rational.hpp"
#include "bispec/unipoly.hpp"

namespace bispec {

/// Sparse polynomial in x and z over Q(i).
/// Keys are (deg_x, deg_z); no stored coefficient is zero.
class BiPoly {
  public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, GR>;

    BiPoly() = default;
    static BiPoly constant(const GR& v);
    static BiPoly monomial(int dx, int dz, const GR& coeff = GR(1));
    static BiPoly variable(Var v) { return monomial(v == Var::x ? 1 : 0, v == Var::x ? 0 : 1); }
    /// Embeds a univariate polynomial in `v`.
    static BiPoly from_uni(const UniPoly& p, Var v);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    GR constant_value() const;
    const Terms& terms() const { return terms_; }
    GR coeff(int dx, int dz) const;
    int degree(Var v) const; // -1 for zero

    void add_term(int dx, int dz, const GR& c);

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator*(const GR& s) const;
    BiPoly operator-() const { return *this * GR(-1); }
    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    BiPoly derivative(Var v) const;

    /// Exact division by a monic univariate polynomial in `fv`.
    /// Returns false (and leaves q unspecified) when the division has a remainder.
    static bool try_divide(const BiPoly& num, const UniPoly& f, Var fv, BiPoly& q);

    /// The coefficient of var^k viewed as a polynomial in the other variable.
    UniPoly uni_layer(Var v, int k) const;
    /// Requires the polynomial to involve only `v`.
    UniPoly to_uni(Var v) const;

  private:
    Terms terms_;
};

} // namespace bispec
