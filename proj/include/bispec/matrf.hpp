#pragma once

#include <vector>

#include "bispec/ratfun.hpp"

namespace bispec {

/// Dense matrix of RatFun sharing one FactorBasis, row-major.
class MatRF {
  public:
    MatRF() : rows_(0), cols_(0) {}
    MatRF(FactorBasisPtr basis, int rows, int cols);
    static MatRF identity(FactorBasisPtr basis, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FactorBasisPtr& basis() const { return basis_; }

    RatFun& at(int r, int c) { return e_[static_cast<std::size_t>(r * cols_ + c)]; }
    const RatFun& at(int r, int c) const { return e_[static_cast<std::size_t>(r * cols_ + c)]; }

    bool is_zero() const;

    MatRF operator+(const MatRF& o) const;
    MatRF operator-(const MatRF& o) const;
    MatRF operator*(const MatRF& o) const;
    MatRF operator*(const RatFun& s) const; // entrywise scalar (from the right)
    MatRF scaled(const GR& s) const;
    MatRF derivative(Var v) const;

    bool operator==(const MatRF& o) const;
    bool operator!=(const MatRF& o) const { return !(*this == o); }

  private:
    int rows_, cols_;
    FactorBasisPtr basis_;
    std::vector<RatFun> e_;
};

} // namespace bispec
