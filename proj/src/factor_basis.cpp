#include "bispec/factor_basis.hpp"

#include "bispec/errors.hpp"

namespace bispec {

int FactorBasis::add(UniPoly f, Var v, const std::string& name) {
    if (f.degree() < 1) throw ShapeError("factor must be non-constant: " + name);
    if (!f.is_monic()) throw ShapeError("factor must be monic: " + name);
    int existing = find(f, v);
    if (existing >= 0) return existing;
    for (const auto& g : factors_) {
        if (g.var != v) continue;
        if (UniPoly::gcd(g.poly, f).degree() > 0)
            throw ShapeError("factors not pairwise coprime: " + g.name + ", " + name);
    }
    factors_.push_back({std::move(f), v, name});
    return static_cast<int>(factors_.size()) - 1;
}

int FactorBasis::find(const UniPoly& f, Var v) const {
    for (std::size_t idx = 0; idx < factors_.size(); ++idx)
        if (factors_[idx].var == v && factors_[idx].poly == f) return static_cast<int>(idx);
    return -1;
}

BiPoly FactorBasis::expand(const std::vector<int>& exps) const {
    BiPoly out = BiPoly::constant(GR(1));
    for (std::size_t idx = 0; idx < exps.size() && idx < factors_.size(); ++idx) {
        BiPoly f = BiPoly::from_uni(factors_[idx].poly, factors_[idx].var);
        for (int e = 0; e < exps[idx]; ++e) out = out * f;
    }
    return out;
}

} // namespace bispec
