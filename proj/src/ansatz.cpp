#include "bispec/ansatz.hpp"

#include <algorithm>
#include <map>

#include "bispec/errors.hpp"

namespace bispec {

namespace {

struct Layout {
    int n = 0, d = 0, m = 0, tmax = 0;
    int eigen_cols = 0, per_order = 0;

    int eigen(int k, int r, int c) const { return (k * n + r) * n + c; }
    int op(int j, int t, int r, int c) const {
        return eigen_cols + ((j * (tmax + 1) + t) * n + r) * n + c;
    }
    int ncols() const { return eigen_cols + per_order * (m + 1); }
};

Layout make_layout(int n, const AnsatzBounds& bounds, int den_degree) {
    Layout lay;
    lay.n = n;
    lay.d = bounds.eigen_deg;
    lay.m = bounds.op_order;
    lay.tmax = bounds.num_deg + den_degree;
    lay.eigen_cols = (lay.d + 1) * n * n;
    lay.per_order = (lay.tmax + 1) * n * n;
    return lay;
}

std::vector<int> op_denominator(const FactorBasis& basis, const AnsatzBounds& bounds, Var op_var) {
    std::vector<int> den(static_cast<std::size_t>(basis.size()), 0);
    for (const auto& [idx, e] : bounds.pole_orders) {
        if (idx < 0 || idx >= basis.size()) throw ShapeError("pole order for unknown factor");
        if (basis.factor(idx).var == op_var) den[static_cast<std::size_t>(idx)] = e;
    }
    return den;
}

// Successive shifted derivatives of M along `op_var` (see operators.cpp).
std::vector<MatRF> shift_chain(const MatRF& m, const GR& s, Var op_var, int top) {
    RatFun other = RatFun::variable(m.basis(), op_var == Var::x ? Var::z : Var::x) * s;
    std::vector<MatRF> out;
    out.push_back(m);
    for (int k = 1; k <= top; ++k) out.push_back(out.back() * other + out.back().derivative(op_var));
    return out;
}

AnsatzSystem build_system(const WaveFunction& psi, const AnsatzBounds& bounds, Side side) {
    const int n = psi.n;
    const FactorBasisPtr& basis = psi.mat.basis();
    const Var op_var = side == Side::Right ? Var::z : Var::x;

    AnsatzSystem sys;
    sys.side = side;
    sys.n = n;
    sys.s = psi.s;
    sys.bounds = bounds;
    sys.op_den = op_denominator(*basis, bounds, op_var);

    int den_degree = 0;
    for (std::size_t k = 0; k < sys.op_den.size(); ++k)
        den_degree += sys.op_den[k] * basis->factor(static_cast<int>(k)).poly.degree();

    Layout lay = make_layout(n, bounds, den_degree);
    sys.eigen_cols = lay.eigen_cols;
    sys.ncols = lay.ncols();

    std::vector<MatRF> shifted = shift_chain(psi.mat, psi.s, op_var, lay.m);

    // Cache of factor-product expansions keyed by exponent vector.
    std::map<std::vector<int>, BiPoly> expansions;
    auto expand = [&](const std::vector<int>& e) -> const BiPoly& {
        auto it = expansions.find(e);
        if (it == expansions.end()) it = expansions.emplace(e, basis->expand(e)).first;
        return it->second;
    };

    // One contributor: a rational coefficient whose numerator, once cleared to
    // the entry's common denominator, multiplies a block of unknown columns.
    struct Contrib {
        const BiPoly* num;
        std::vector<int> den;
        bool negate;
        bool op_block;     // else eigen block
        int j = 0, r = 0, c = 0; // unknown block identifiers
    };

    for (int p = 0; p < n; ++p) {
        for (int c = 0; c < n; ++c) {
            std::vector<Contrib> contribs;
            std::vector<int> common(static_cast<std::size_t>(basis->size()), 0);
            auto note_den = [&](const std::vector<int>& den) {
                for (std::size_t k = 0; k < common.size(); ++k)
                    common[k] = std::max(common[k], den[k]);
            };

            for (int j = 0; j <= lay.m; ++j) {
                for (int r = 0; r < n; ++r) {
                    const RatFun& base =
                        side == Side::Right ? shifted[static_cast<std::size_t>(j)].at(p, r)
                                            : shifted[static_cast<std::size_t>(j)].at(r, c);
                    if (base.is_zero()) continue;
                    std::vector<int> den = base.den();
                    for (std::size_t k = 0; k < den.size(); ++k) den[k] += sys.op_den[k];
                    note_den(den);
                    contribs.push_back({&base.num(), std::move(den), false, true, j, r, c});
                }
            }
            for (int r = 0; r < n; ++r) {
                const RatFun& base = side == Side::Right ? psi.mat.at(r, c) : psi.mat.at(p, r);
                if (base.is_zero()) continue;
                note_den(base.den());
                contribs.push_back({&base.num(), base.den(), true, false, 0, r, c});
            }

            // Equations are indexed by cleared-numerator monomials.
            std::map<std::pair<int, int>, std::map<int, GR>> eqs;
            for (const auto& cb : contribs) {
                std::vector<int> delta(common.size());
                for (std::size_t k = 0; k < common.size(); ++k) delta[k] = common[k] - cb.den[k];
                BiPoly cleared = *cb.num * expand(delta);
                for (const auto& [key, val] : cleared.terms()) {
                    GR v = cb.negate ? -val : val;
                    if (cb.op_block) {
                        for (int t = 0; t <= lay.tmax; ++t) {
                            auto mono = side == Side::Right
                                            ? std::pair<int, int>{key.first, key.second + t}
                                            : std::pair<int, int>{key.first + t, key.second};
                            int col = side == Side::Right ? lay.op(cb.j, t, cb.r, c)
                                                          : lay.op(cb.j, t, p, cb.r);
                            eqs[mono][col] += v;
                        }
                    } else {
                        for (int k = 0; k <= lay.d; ++k) {
                            auto mono = side == Side::Right
                                            ? std::pair<int, int>{key.first + k, key.second}
                                            : std::pair<int, int>{key.first, key.second + k};
                            int col = side == Side::Right ? lay.eigen(k, p, cb.r)
                                                          : lay.eigen(k, cb.r, c);
                            eqs[mono][col] += v;
                        }
                    }
                }
            }

            for (auto& [mono, acc] : eqs) {
                SparseVec row;
                row.reserve(acc.size());
                for (auto& [col, val] : acc)
                    if (!val.is_zero()) row.emplace_back(col, std::move(val));
                if (!row.empty()) sys.rows.push_back(std::move(row));
            }
        }
    }
    return sys;
}

} // namespace

AnsatzSystem build_right_system(const WaveFunction& psi, const AnsatzBounds& bounds) {
    return build_system(psi, bounds, Side::Right);
}

AnsatzSystem build_left_system(const WaveFunction& psi, const AnsatzBounds& bounds) {
    return build_system(psi, bounds, Side::Left);
}

AlgebraSlice eigen_slice(const WaveFunction& psi, const AnsatzBounds& bounds, Side side,
                         SolveInfo* info) {
    AnsatzSystem sys = build_system(psi, bounds, side);
    std::vector<SparseVec> null = nullspace(sys.rows, sys.ncols);
    std::vector<SparseVec> projected;
    projected.reserve(null.size());
    for (const auto& v : null) {
        SparseVec pv;
        for (const auto& [col, val] : v) {
            if (col >= sys.eigen_cols) break;
            pv.emplace_back(col, val);
        }
        if (!pv.empty()) projected.push_back(std::move(pv));
    }
    Var ev = side == Side::Right ? Var::x : Var::z;
    AlgebraSlice slice = AlgebraSlice::from_vectors(ev, psi.n, bounds.eigen_deg, projected);
    if (info) {
        info->rows = static_cast<int>(sys.rows.size());
        info->cols = sys.ncols;
        info->joint_dim = static_cast<int>(null.size());
        info->projected_dim = slice.dim();
    }
    return slice;
}

AlgebraSlice theta_slice(const WaveFunction& psi, const AnsatzBounds& bounds, SolveInfo* info) {
    return eigen_slice(psi, bounds, Side::Right, info);
}

AlgebraSlice f_slice(const WaveFunction& psi, const AnsatzBounds& bounds, SolveInfo* info) {
    return eigen_slice(psi, bounds, Side::Left, info);
}

std::vector<AnsatzBounds> default_schedule(int d, SliceMode mode, const FactorBasis& basis,
                                           Side side, int steps) {
    Var op_var = side == Side::Right ? Var::z : Var::x;
    std::vector<AnsatzBounds> out;
    for (int k = 0; k < steps; ++k) {
        AnsatzBounds b;
        if (mode == SliceMode::Members) {
            b.eigen_deg = d;
            b.op_order = d + k;
            b.num_deg = b.op_order + d;
        } else {
            // The truncation of the algebra at degree d needs eigen headroom:
            // members of degree <= d+2 project onto the full degree-d truncation
            // for the catalog algebras, and growing headroom guards the rest.
            b.eigen_deg = d + 2 + k;
            b.op_order = b.eigen_deg + 1;
            b.num_deg = b.op_order + 2;
        }
        for (int idx = 0; idx < basis.size(); ++idx)
            if (basis.factor(idx).var == op_var) b.pole_orders[idx] = b.op_order;
        out.push_back(std::move(b));
    }
    return out;
}

AlgebraSlice stabilize(const WaveFunction& psi, int d, const std::vector<AnsatzBounds>& schedule,
                       Side side, SliceMode mode, StabilizeReport* report) {
    StabilizeReport local;
    StabilizeReport& rep = report ? *report : local;
    rep = StabilizeReport{};

    AlgebraSlice prev;
    bool have_prev = false;
    for (std::size_t k = 0; k < schedule.size(); ++k) {
        if (schedule[k].eigen_deg < d) throw ShapeError("schedule eigen degree below slice degree");
        SolveInfo info;
        AlgebraSlice s = eigen_slice(psi, schedule[k], side, &info);
        if (mode == SliceMode::Truncated && schedule[k].eigen_deg > d) s = s.truncated(d);
        rep.steps.push_back({schedule[k], s.dim(), info});
        if (have_prev && s == prev) {
            rep.stabilized = true;
            rep.stabilized_at = static_cast<int>(k);
            return s;
        }
        prev = std::move(s);
        have_prev = true;
    }
    throw ComputeError("no stabilization within schedule");
}

AlgebraSlice stabilize_default(const WaveFunction& psi, int d, Side side, SliceMode mode,
                               StabilizeReport* report) {
    auto schedule = default_schedule(d, mode, *psi.mat.basis(), side);
    return stabilize(psi, d, schedule, side, mode, report);
}

ClosureReport closure_check(const WaveFunction& psi, int d, Side side) {
    ClosureReport rep;
    AlgebraSlice low = stabilize_default(psi, d, side, SliceMode::Members);
    AlgebraSlice high = stabilize_default(psi, 2 * d, side, SliceMode::Members);
    rep.dim_d = low.dim();
    rep.dim_2d = high.dim();
    rep.ok = true;
    for (std::size_t i = 0; i < low.basis().size() && rep.ok; ++i)
        for (std::size_t j = 0; j < low.basis().size(); ++j) {
            MatPoly prod = low.basis()[i] * low.basis()[j];
            if (!high.contains(prod)) {
                rep.ok = false;
                rep.viol_i = static_cast<int>(i);
                rep.viol_j = static_cast<int>(j);
                break;
            }
        }
    return rep;
}

namespace {

// Solves for the operator block with the eigenvalue block fixed.
std::vector<GR> witness_solution(const AnsatzSystem& sys, const std::vector<GR>& eigen_coords) {
    int op_cols = sys.ncols - sys.eigen_cols;
    std::vector<SparseVec> rows;
    std::vector<GR> rhs;
    rows.reserve(sys.rows.size());
    rhs.reserve(sys.rows.size());
    for (const auto& row : sys.rows) {
        SparseVec lhs;
        GR b;
        for (const auto& [col, val] : row) {
            if (col < sys.eigen_cols)
                b -= val * eigen_coords[static_cast<std::size_t>(col)];
            else
                lhs.emplace_back(col - sys.eigen_cols, val);
        }
        if (lhs.empty() && b.is_zero()) continue;
        rows.push_back(std::move(lhs));
        rhs.push_back(std::move(b));
    }
    std::vector<GR> sol;
    if (!solve_affine(rows, rhs, op_cols, sol))
        throw ComputeError("not in algebra within bounds");
    return sol;
}

} // namespace

RightOperator witness_right_operator(const WaveFunction& psi, const MatPoly& theta,
                                     const AnsatzBounds& bounds) {
    if (theta.degree() > bounds.eigen_deg) throw ShapeError("theta degree exceeds bounds");
    AnsatzSystem sys = build_system(psi, bounds, Side::Right);
    std::vector<GR> sol = witness_solution(sys, theta.coordinates(bounds.eigen_deg));

    const FactorBasisPtr& basis = psi.mat.basis();
    int n = psi.n;
    int den_degree = 0;
    for (std::size_t k = 0; k < sys.op_den.size(); ++k)
        den_degree += sys.op_den[k] * basis->factor(static_cast<int>(k)).poly.degree();
    Layout lay = make_layout(n, bounds, den_degree);

    RightOperator out(basis, n);
    for (int j = 0; j <= lay.m; ++j) {
        MatRF bj(basis, n, n);
        bool nonzero = false;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                BiPoly num;
                for (int t = 0; t <= lay.tmax; ++t) {
                    const GR& v = sol[static_cast<std::size_t>(lay.op(j, t, r, c) - lay.eigen_cols)];
                    if (!v.is_zero()) num.add_term(0, t, v);
                }
                if (num.is_zero()) continue;
                nonzero = true;
                bj.at(r, c) = RatFun(basis, std::move(num), sys.op_den);
            }
        if (nonzero) out.set_coeff(j, std::move(bj));
    }
    return out;
}

LeftOperator witness_left_operator(const WaveFunction& psi, const MatPoly& f,
                                   const AnsatzBounds& bounds) {
    if (f.degree() > bounds.eigen_deg) throw ShapeError("eigenvalue degree exceeds bounds");
    AnsatzSystem sys = build_system(psi, bounds, Side::Left);
    std::vector<GR> sol = witness_solution(sys, f.coordinates(bounds.eigen_deg));

    const FactorBasisPtr& basis = psi.mat.basis();
    int n = psi.n;
    int den_degree = 0;
    for (std::size_t k = 0; k < sys.op_den.size(); ++k)
        den_degree += sys.op_den[k] * basis->factor(static_cast<int>(k)).poly.degree();
    Layout lay = make_layout(n, bounds, den_degree);

    LeftOperator out(basis, n);
    for (int i = 0; i <= lay.m; ++i) {
        MatRF ai(basis, n, n);
        bool nonzero = false;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                BiPoly num;
                for (int t = 0; t <= lay.tmax; ++t) {
                    const GR& v = sol[static_cast<std::size_t>(lay.op(i, t, r, c) - lay.eigen_cols)];
                    if (!v.is_zero()) num.add_term(t, 0, v);
                }
                if (num.is_zero()) continue;
                nonzero = true;
                ai.at(r, c) = RatFun(basis, std::move(num), sys.op_den);
            }
        if (nonzero) out.set_coeff(i, std::move(ai));
    }
    return out;
}

} // namespace bispec
