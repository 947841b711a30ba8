#pragma once

#include <string>
#include <vector>

#include "bispec/linalg.hpp"
#include "bispec/matpoly.hpp"

namespace bispec {

/// Canonical echelon basis of a degree-bounded subspace of the n x n matrix
/// polynomial ring in one variable. Coordinates are (degree, row, column)-major;
/// the basis is the unique reduced echelon form of the span, so two slices are
/// equal iff their serializations are identical.
class AlgebraSlice {
  public:
    AlgebraSlice() : var_(Var::x), n_(0), degree_(-1) {}
    AlgebraSlice(Var var, int n, int degree) : var_(var), n_(n), degree_(degree) {}

    static AlgebraSlice from_vectors(Var var, int n, int degree, const std::vector<SparseVec>& vecs);
    static AlgebraSlice from_elements(Var var, int n, int degree, const std::vector<MatPoly>& elems);

    Var var() const { return var_; }
    int size() const { return n_; }
    int degree_bound() const { return degree_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<MatPoly>& basis() const { return basis_; }

    bool contains(const MatPoly& p) const;
    /// Subspace inclusion: every basis element of this lies in `other`.
    bool contained_in(const AlgebraSlice& other) const;

    /// Truncation image at a lower degree bound, re-echelonized.
    AlgebraSlice truncated(int d) const;

    bool operator==(const AlgebraSlice& o) const;
    bool operator!=(const AlgebraSlice& o) const { return !(*this == o); }

    /// Canonical text form (one line per basis element).
    std::string serialize() const;

  private:
    int coords() const { return (degree_ + 1) * n_ * n_; }
    Var var_;
    int n_;
    int degree_;
    std::vector<MatPoly> basis_;
};

} // namespace bispec
