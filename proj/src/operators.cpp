#include "bispec/operators.hpp"

#include <vector>

#include "bispec/errors.hpp"

namespace bispec {

namespace {

bool depends_on(const MatRF& m, Var v, const FactorBasis& basis) {
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            const RatFun& e = m.at(r, c);
            if (e.num().degree(v) > 0) return true;
            for (std::size_t k = 0; k < e.den().size(); ++k)
                if (e.den()[k] > 0 && basis.factor(static_cast<int>(k)).var == v) return true;
        }
    return false;
}

// Successive shifted derivatives S^0 M .. S^m M with S = s*w*(.) + d/d(diff_var),
// where w is the opposite variable.
std::vector<MatRF> shifted_powers(const MatRF& m, const GR& s, Var diff_var, int top) {
    RatFun other = RatFun::variable(m.basis(), diff_var == Var::x ? Var::z : Var::x);
    RatFun scale = other * s;
    std::vector<MatRF> out;
    out.reserve(static_cast<std::size_t>(top) + 1);
    out.push_back(m);
    for (int k = 1; k <= top; ++k) out.push_back(out.back() * scale + out.back().derivative(diff_var));
    return out;
}

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long v = 1;
    for (int j = 1; j <= k; ++j) v = v * (n - j + 1) / j;
    return v;
}

EigenCheck residual_check(MatRF residual) {
    EigenCheck out;
    out.residual_mat = residual;
    out.ok = true;
    for (int r = 0; r < residual.rows() && out.ok; ++r)
        for (int c = 0; c < residual.cols(); ++c)
            if (!residual.at(r, c).is_zero()) {
                out.ok = false;
                out.row = r;
                out.col = c;
                out.residual = residual.at(r, c);
                break;
            }
    return out;
}

} // namespace

void LeftOperator::set_coeff(int order, MatRF a) {
    if (order < 0) throw ShapeError("negative operator order");
    if (a.rows() != n_ || a.cols() != n_) throw ShapeError("operator coefficient size mismatch");
    if (depends_on(a, Var::z, *basis_)) throw ShapeError("left operator coefficient depends on z");
    if (a.is_zero())
        coeffs_.erase(order);
    else
        coeffs_.insert_or_assign(order, std::move(a));
}

const MatRF* LeftOperator::coeff(int order) const {
    auto it = coeffs_.find(order);
    return it == coeffs_.end() ? nullptr : &it->second;
}

void RightOperator::set_coeff(int order, MatRF b) {
    if (order < 0) throw ShapeError("negative operator order");
    if (b.rows() != n_ || b.cols() != n_) throw ShapeError("operator coefficient size mismatch");
    if (depends_on(b, Var::x, *basis_)) throw ShapeError("right operator coefficient depends on x");
    if (b.is_zero())
        coeffs_.erase(order);
    else
        coeffs_.insert_or_assign(order, std::move(b));
}

const MatRF* RightOperator::coeff(int order) const {
    auto it = coeffs_.find(order);
    return it == coeffs_.end() ? nullptr : &it->second;
}

WaveFunction apply_left(const LeftOperator& op, const WaveFunction& psi) {
    if (op.size() != psi.n) throw ShapeError("operator/wavefunction size mismatch");
    MatRF acc(psi.mat.basis(), psi.n, psi.n);
    if (op.order() >= 0) {
        auto powers = shifted_powers(psi.mat, psi.s, Var::x, op.order());
        for (const auto& [i, a] : op.coeffs()) acc = acc + a * powers[static_cast<std::size_t>(i)];
    }
    return WaveFunction{psi.n, std::move(acc), psi.s};
}

WaveFunction apply_right(const WaveFunction& psi, const RightOperator& op) {
    if (op.size() != psi.n) throw ShapeError("operator/wavefunction size mismatch");
    MatRF acc(psi.mat.basis(), psi.n, psi.n);
    if (op.order() >= 0) {
        auto powers = shifted_powers(psi.mat, psi.s, Var::z, op.order());
        for (const auto& [j, b] : op.coeffs()) acc = acc + powers[static_cast<std::size_t>(j)] * b;
    }
    return WaveFunction{psi.n, std::move(acc), psi.s};
}

EigenCheck check_left_eigen(const LeftOperator& op, const WaveFunction& psi, const MatPoly& f) {
    if (f.size() != psi.n && !f.is_zero()) throw ShapeError("eigenvalue size mismatch");
    WaveFunction lhs = apply_left(op, psi);
    MatRF rhs = psi.mat * f.to_matrf(psi.mat.basis());
    return residual_check(lhs.mat - rhs);
}

EigenCheck check_right_eigen(const WaveFunction& psi, const RightOperator& op, const MatPoly& theta) {
    if (theta.size() != psi.n && !theta.is_zero()) throw ShapeError("eigenvalue size mismatch");
    WaveFunction lhs = apply_right(psi, op);
    MatRF rhs = theta.to_matrf(psi.mat.basis()) * psi.mat;
    return residual_check(lhs.mat - rhs);
}

TripleCheck check_triple(const LeftOperator& l, const WaveFunction& psi, const RightOperator& b,
                         const MatPoly& f, const MatPoly& theta) {
    TripleCheck out;
    out.left = check_left_eigen(l, psi, f);
    out.right = check_right_eigen(psi, b, theta);
    out.ok = out.left.ok && out.right.ok;
    return out;
}

LeftOperator compose_left(const LeftOperator& l1, const LeftOperator& l2) {
    if (l1.size() != l2.size()) throw ShapeError("operator size mismatch");
    LeftOperator out(l1.basis(), l1.size());
    // a_i d^i (b_j d^j .) = sum_l C(i,l) a_i b_j^{(i-l)} d^{l+j}
    std::map<int, MatRF> acc;
    for (const auto& [i, a] : l1.coeffs()) {
        for (const auto& [j, b] : l2.coeffs()) {
            MatRF db = b; // differentiated i-l times once the loop reaches l
            for (int l = i; l >= 0; --l) {
                MatRF term = (a * db).scaled(GR(binom(i, l)));
                auto [it, fresh] = acc.try_emplace(l + j, term);
                if (!fresh) it->second = it->second + term;
                if (l > 0) db = db.derivative(Var::x);
            }
        }
    }
    for (auto& [ord, m] : acc) out.set_coeff(ord, std::move(m));
    return out;
}

RightOperator compose_right(const RightOperator& b1, const RightOperator& b2) {
    if (b1.size() != b2.size()) throw ShapeError("operator size mismatch");
    RightOperator out(b1.basis(), b1.size());
    // d^k((d^j psi) c_j) e_k = sum_l C(k,l) d^{j+l} psi c_j^{(k-l)} e_k
    std::map<int, MatRF> acc;
    for (const auto& [k, e] : b2.coeffs()) {
        for (const auto& [j, c] : b1.coeffs()) {
            MatRF dc = c;
            for (int l = k; l >= 0; --l) {
                MatRF term = (dc * e).scaled(GR(binom(k, l)));
                auto [it, fresh] = acc.try_emplace(j + l, term);
                if (!fresh) it->second = it->second + term;
                if (l > 0) dc = dc.derivative(Var::z);
            }
        }
    }
    for (auto& [ord, m] : acc) out.set_coeff(ord, std::move(m));
    return out;
}

} // namespace bispec
