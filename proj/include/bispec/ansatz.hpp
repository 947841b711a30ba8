#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bispec/operators.hpp"
#include "bispec/slice.hpp"

namespace bispec {

/// Which eigen-equation of the pair is being solved for.
///   Right: psi B = theta(x) psi  (unknown theta in x, operator acts in z)
///   Left:  L psi = psi F(z)      (unknown F in z, operator acts in x)
enum class Side { Right, Left };

struct AnsatzBounds {
    int eigen_deg = 0; ///< max degree of theta (resp. F)
    int op_order = 0;  ///< max derivative order m
    /// factor index -> max exponent in operator-coefficient denominators;
    /// only factors in the operator's variable are meaningful.
    std::map<int, int> pole_orders;
    /// degree allowance of coefficient numerators above the pole block:
    /// deg(numerator) <= num_deg + deg(common pole denominator).
    int num_deg = 0;
};

/// Exact linear system whose nullspace is the joint (eigenvalue, operator)
/// solution set of the chosen eigen-equation within the bounds.
struct AnsatzSystem {
    Side side = Side::Right;
    int n = 0;
    GR s;
    AnsatzBounds bounds;
    std::vector<int> op_den; ///< denominator exponents of operator coefficients
    int eigen_cols = 0;      ///< eigenvalue unknowns come first
    int ncols = 0;
    std::vector<SparseVec> rows;
};

AnsatzSystem build_right_system(const WaveFunction& psi, const AnsatzBounds& bounds);
AnsatzSystem build_left_system(const WaveFunction& psi, const AnsatzBounds& bounds);

struct SolveInfo {
    int rows = 0;
    int cols = 0;
    int joint_dim = 0;     ///< nullspace dimension over (eigenvalue, operator) unknowns
    int projected_dim = 0; ///< dimension after projecting to the eigenvalue block
};

/// Degree-bounded eigenvalue space: nullspace projected onto the theta
/// (resp. F) coordinates, canonically echelonized.
AlgebraSlice theta_slice(const WaveFunction& psi, const AnsatzBounds& bounds,
                         SolveInfo* info = nullptr);
AlgebraSlice f_slice(const WaveFunction& psi, const AnsatzBounds& bounds,
                     SolveInfo* info = nullptr);
AlgebraSlice eigen_slice(const WaveFunction& psi, const AnsatzBounds& bounds, Side side,
                         SolveInfo* info = nullptr);

/// How stabilization interprets the requested degree d:
///  - Members: ansatz degree fixed at d; the slice is the space of eigenvalues
///    of degree <= d.
///  - Truncated: the ansatz degree grows along the schedule and the result is
///    truncated back to d; the slice converges to the degree-d truncation of
///    the full eigenvalue algebra (which is larger than the member space below
///    the free-degree threshold).
enum class SliceMode { Members, Truncated };

struct StabilizeStep {
    AnsatzBounds bounds;
    int dim = 0;
    SolveInfo info;
};

struct StabilizeReport {
    std::vector<StabilizeStep> steps;
    int stabilized_at = -1; ///< index of the first repeated step
    bool stabilized = false;
};

std::vector<AnsatzBounds> default_schedule(int d, SliceMode mode, const FactorBasis& basis,
                                           Side side, int steps = 4);

/// Runs eigen_slice along the schedule; returns the first slice repeated by
/// two consecutive steps. Throws ComputeError when no step repeats.
AlgebraSlice stabilize(const WaveFunction& psi, int d, const std::vector<AnsatzBounds>& schedule,
                       Side side, SliceMode mode, StabilizeReport* report = nullptr);
AlgebraSlice stabilize_default(const WaveFunction& psi, int d, Side side, SliceMode mode,
                               StabilizeReport* report = nullptr);

struct ClosureReport {
    bool ok = false;
    int dim_d = 0, dim_2d = 0;
    /// Indices (i, j) of the first violating basis product, or (-1, -1).
    int viol_i = -1, viol_j = -1;
};

/// Every pairwise product of degree-<=d member-slice basis elements must lie
/// in the degree-<=2d member slice.
ClosureReport closure_check(const WaveFunction& psi, int d, Side side);

/// One exact partner operator for a given member of the eigenvalue slice,
/// canonicalized by echelon back-substitution with free unknowns set to zero.
/// Throws ComputeError("not in algebra within bounds") when none exists.
RightOperator witness_right_operator(const WaveFunction& psi, const MatPoly& theta,
                                     const AnsatzBounds& bounds);
LeftOperator witness_left_operator(const WaveFunction& psi, const MatPoly& f,
                                   const AnsatzBounds& bounds);

} // namespace bispec
