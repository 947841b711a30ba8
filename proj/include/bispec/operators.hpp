#pragma once

#include <map>
#include <optional>

#include "bispec/matpoly.hpp"
#include "bispec/matrf.hpp"

namespace bispec {

/// psi(x,z) = e^{s x z} * mat with mat an n x n matrix of rational functions
/// and s in {1, i}. The exponential prefactor is never materialized; both
/// operator actions use the shifted-derivative identities
///   d/dx e^{sxz} M = e^{sxz} (s z M + dM/dx),
///   d/dz e^{sxz} M = e^{sxz} (s x M + dM/dz).
struct WaveFunction {
    int n = 0;
    MatRF mat;
    GR s = GR(1);
};

/// L = sum_i a_i(x) (d/dx)^i acting from the left; coefficients are z-free.
class LeftOperator {
  public:
    LeftOperator() = default;
    LeftOperator(FactorBasisPtr basis, int n) : basis_(std::move(basis)), n_(n) {}

    void set_coeff(int order, MatRF a);
    const MatRF* coeff(int order) const;
    int order() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
    int size() const { return n_; }
    const FactorBasisPtr& basis() const { return basis_; }
    const std::map<int, MatRF>& coeffs() const { return coeffs_; }

  private:
    FactorBasisPtr basis_;
    int n_ = 0;
    std::map<int, MatRF> coeffs_;
};

/// B = sum_j (d/dz)^j (.) b_j(z) acting from the right; coefficients are x-free.
class RightOperator {
  public:
    RightOperator() = default;
    RightOperator(FactorBasisPtr basis, int n) : basis_(std::move(basis)), n_(n) {}

    void set_coeff(int order, MatRF b);
    const MatRF* coeff(int order) const;
    int order() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
    int size() const { return n_; }
    const FactorBasisPtr& basis() const { return basis_; }
    const std::map<int, MatRF>& coeffs() const { return coeffs_; }

  private:
    FactorBasisPtr basis_;
    int n_ = 0;
    std::map<int, MatRF> coeffs_;
};

WaveFunction apply_left(const LeftOperator& op, const WaveFunction& psi);
WaveFunction apply_right(const WaveFunction& psi, const RightOperator& op);

/// Result of an exact eigen-equation check; on failure `row`, `col`, and
/// `residual` describe the first nonzero entry of the residual matrix.
struct EigenCheck {
    bool ok = false;
    int row = -1, col = -1;
    RatFun residual;
    MatRF residual_mat;
};

/// L psi = psi F(z), exactly.
EigenCheck check_left_eigen(const LeftOperator& op, const WaveFunction& psi, const MatPoly& f);
/// psi B = theta(x) psi, exactly.
EigenCheck check_right_eigen(const WaveFunction& psi, const RightOperator& op, const MatPoly& theta);

struct TripleCheck {
    EigenCheck left, right;
    bool ok = false;
};

TripleCheck check_triple(const LeftOperator& l, const WaveFunction& psi, const RightOperator& b,
                         const MatPoly& f, const MatPoly& theta);

/// apply_left(compose_left(l1,l2), psi) == apply_left(l1, apply_left(l2, psi)).
LeftOperator compose_left(const LeftOperator& l1, const LeftOperator& l2);
/// apply_right(psi, compose_right(b1,b2)) == apply_right(apply_right(psi, b1), b2).
RightOperator compose_right(const RightOperator& b1, const RightOperator& b2);

} // namespace bispec
