#include "bispec/slice.hpp"

#include <algorithm>

#include "bispec/errors.hpp"

namespace bispec {

namespace {

Rref span_rref(const std::vector<MatPoly>& basis, int degree) {
    Rref r;
    for (const auto& p : basis) r.insert(to_sparse(p.coordinates(degree)));
    r.finalize();
    return r;
}

} // namespace

AlgebraSlice AlgebraSlice::from_vectors(Var var, int n, int degree,
                                        const std::vector<SparseVec>& vecs) {
    AlgebraSlice s(var, n, degree);
    Rref r;
    for (const auto& v : vecs) r.insert(v);
    r.finalize();
    for (const auto& [pivot, row] : r.rows())
        s.basis_.push_back(MatPoly::from_coordinates(var, n, degree, row));
    return s;
}

AlgebraSlice AlgebraSlice::from_elements(Var var, int n, int degree,
                                         const std::vector<MatPoly>& elems) {
    std::vector<SparseVec> vecs;
    vecs.reserve(elems.size());
    for (const auto& p : elems) {
        if (p.degree() > degree) throw ShapeError("element exceeds slice degree bound");
        vecs.push_back(to_sparse(p.coordinates(degree)));
    }
    return from_vectors(var, n, degree, vecs);
}

bool AlgebraSlice::contains(const MatPoly& p) const {
    if (p.is_zero()) return true;
    if (p.degree() > degree_) return false;
    Rref r = span_rref(basis_, degree_);
    return r.reduce(to_sparse(p.coordinates(degree_))).empty();
}

bool AlgebraSlice::contained_in(const AlgebraSlice& other) const {
    if (other.degree_ < degree_) {
        for (const auto& p : basis_)
            if (p.degree() > other.degree_) return false;
    }
    int deg = std::max(degree_, other.degree_);
    Rref r = span_rref(other.basis_, deg);
    for (const auto& p : basis_)
        if (!r.reduce(to_sparse(p.coordinates(deg))).empty()) return false;
    return true;
}

AlgebraSlice AlgebraSlice::truncated(int d) const {
    std::vector<MatPoly> cut;
    cut.reserve(basis_.size());
    for (const auto& p : basis_) cut.push_back(p.truncated(d));
    return from_elements(var_, n_, d, cut);
}

bool AlgebraSlice::operator==(const AlgebraSlice& o) const {
    if (var_ != o.var_ || n_ != o.n_ || degree_ != o.degree_ || basis_.size() != o.basis_.size())
        return false;
    for (std::size_t k = 0; k < basis_.size(); ++k)
        if (basis_[k] != o.basis_[k]) return false;
    return true;
}

std::string AlgebraSlice::serialize() const {
    std::string out = "slice var=";
    out += var_name(var_);
    out += " n=" + std::to_string(n_) + " degree=" + std::to_string(degree_) +
           " dim=" + std::to_string(basis_.size()) + "\n";
    for (const auto& p : basis_) {
        auto coords = p.coordinates(degree_);
        std::string line;
        for (std::size_t k = 0; k < coords.size(); ++k) {
            if (coords[k].is_zero()) continue;
            if (!line.empty()) line += " ";
            line += "[" + std::to_string(k) + "]=" + coords[k].str();
        }
        out += line + "\n";
    }
    return out;
}

} // namespace bispec
