#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bispec/gaussian_rational.hpp"

namespace bispec {

/// Sparse row: (column, coefficient) pairs, strictly ascending columns, no zeros.
using SparseVec = std::vector<std::pair<int, GR>>;

/// dst -= c * src (sorted merge).
void axpy(SparseVec& dst, const GR& c, const SparseVec& src);

/// Incremental exact Gauss-Jordan over Q(i).
///
/// Rows are inserted one at a time and reduced against existing pivots;
/// finalize() back-substitutes to the unique reduced echelon form. The result
/// is canonical: it depends only on the row span, not on insertion order.
class Rref {
  public:
    /// Reduces `row` against current pivots and absorbs it if independent.
    /// Returns true when the row added a new pivot.
    bool insert(SparseVec row);

    /// Reduces `row` against current pivots without absorbing it.
    SparseVec reduce(SparseVec row) const;

    /// Back-substitution pass; afterwards rows() is the canonical RREF.
    void finalize();

    int rank() const { return static_cast<int>(pivots_.size()); }
    /// Pivot column -> normalized row, ascending.
    const std::map<int, SparseVec>& rows() const { return pivots_; }

  private:
    std::map<int, SparseVec> pivots_;
    bool finalized_ = false;
};

/// Canonical basis of {v : A v = 0} for a sparse row list with `ncols` columns.
/// One basis vector per free column, ascending; vector for free column f has
/// entry 1 at f and -RREF(r,f) at each pivot column.
std::vector<SparseVec> nullspace(const std::vector<SparseVec>& rows, int ncols);

/// Dense convenience wrapper around `nullspace`.
std::vector<std::vector<GR>> exact_nullspace(const std::vector<std::vector<GR>>& a);

/// Exact solution of A x = b with free variables pinned to zero.
/// Returns false when the system is inconsistent.
bool solve_affine(const std::vector<SparseVec>& rows, const std::vector<GR>& rhs, int ncols,
                  std::vector<GR>& solution);

std::vector<GR> to_dense(const SparseVec& v, int ncols);
SparseVec to_sparse(const std::vector<GR>& v);

} // namespace bispec
