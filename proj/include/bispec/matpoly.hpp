#pragma once

#include <vector>

#include "bispec/gaussian_rational.hpp"
#include "bispec/linalg.hpp"
#include "bispec/matrf.hpp"
#include "bispec/unipoly.hpp"

namespace bispec {

/// Dense constant matrix over Q(i).
class ConstMat {
  public:
    ConstMat() : rows_(0), cols_(0) {}
    ConstMat(int rows, int cols)
        : rows_(rows), cols_(cols),
          e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}
    static ConstMat identity(int n);
    /// Matrix unit E_{r,c} (0-based).
    static ConstMat unit(int n, int r, int c);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    GR& at(int r, int c) { return e_[static_cast<std::size_t>(r * cols_ + c)]; }
    const GR& at(int r, int c) const { return e_[static_cast<std::size_t>(r * cols_ + c)]; }

    bool is_zero() const;
    ConstMat operator+(const ConstMat& o) const;
    ConstMat operator-(const ConstMat& o) const;
    ConstMat operator*(const ConstMat& o) const;
    ConstMat operator*(const GR& s) const;
    bool operator==(const ConstMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const ConstMat& o) const { return !(*this == o); }

  private:
    int rows_, cols_;
    std::vector<GR> e_;
};

/// Matrix polynomial sum_k coeff_k * var^k with square constant coefficients;
/// no trailing zero coefficient.
class MatPoly {
  public:
    MatPoly() : n_(0), var_(Var::x) {}
    MatPoly(Var v, int n) : n_(n), var_(v) {}
    MatPoly(Var v, std::vector<ConstMat> coeffs);

    static MatPoly identity(Var v, int n);
    static MatPoly zero(Var v, int n) { return MatPoly(v, n); }
    /// coeff * var^k * E_{r,c}
    static MatPoly term(Var v, int n, int k, int r, int c, const GR& coeff);
    static MatPoly scalar(Var v, int n, const UniPoly& p);

    Var var() const { return var_; }
    int size() const { return n_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    ConstMat coeff(int k) const;
    GR entry(int k, int r, int c) const;

    MatPoly operator+(const MatPoly& o) const;
    MatPoly operator-(const MatPoly& o) const;
    MatPoly operator*(const MatPoly& o) const;
    MatPoly operator*(const GR& s) const;
    bool operator==(const MatPoly& o) const;
    bool operator!=(const MatPoly& o) const { return !(*this == o); }

    MatPoly truncated(int d) const;

    /// Coordinates (degree, row, column)-major up to degree bound d.
    std::vector<GR> coordinates(int d) const;
    static MatPoly from_coordinates(Var v, int n, const std::vector<GR>& coords);
    static MatPoly from_coordinates(Var v, int n, int d, const SparseVec& coords);

    MatRF to_matrf(FactorBasisPtr basis) const;

  private:
    void trim();
    int n_;
    Var var_;
    std::vector<ConstMat> c_;
};

} // namespace bispec
