#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bispec/bipoly.hpp"
#include "bispec/unipoly.hpp"

namespace bispec {

/// One registered denominator factor: a monic univariate polynomial in x or z.
struct Factor {
    UniPoly poly;
    Var var;
    std::string name; // canonical expression text, e.g. "x-2"
};

/// Ordered family of pairwise-coprime monic factors; denominators of every
/// RatFun sharing this basis are exponent vectors over it.
class FactorBasis {
  public:
    /// Registers a factor; rejects non-monic, constant, or non-coprime entries.
    int add(UniPoly f, Var v, const std::string& name);

    int size() const { return static_cast<int>(factors_.size()); }
    const Factor& factor(int idx) const { return factors_.at(static_cast<std::size_t>(idx)); }
    const std::vector<Factor>& factors() const { return factors_; }

    /// Index of a factor equal (as a polynomial) to f in variable v, or -1.
    int find(const UniPoly& f, Var v) const;

    /// Expands prod factor_i^{exps[i]} as a BiPoly.
    BiPoly expand(const std::vector<int>& exps) const;

  private:
    std::vector<Factor> factors_;
};

using FactorBasisPtr = std::shared_ptr<const FactorBasis>;

} // namespace bispec
