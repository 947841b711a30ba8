#include "bispec/linalg.hpp"

#include <algorithm>

namespace bispec {

void axpy(SparseVec& dst, const GR& c, const SparseVec& src) {
    if (c.is_zero() || src.empty()) return;
    SparseVec out;
    out.reserve(dst.size() + src.size());
    std::size_t a = 0, b = 0;
    while (a < dst.size() || b < src.size()) {
        if (b == src.size() || (a < dst.size() && dst[a].first < src[b].first)) {
            out.push_back(dst[a++]);
        } else if (a == dst.size() || src[b].first < dst[a].first) {
            out.emplace_back(src[b].first, -(c * src[b].second));
            ++b;
        } else {
            GR v = dst[a].second - c * src[b].second;
            if (!v.is_zero()) out.emplace_back(dst[a].first, std::move(v));
            ++a;
            ++b;
        }
    }
    dst = std::move(out);
}

SparseVec Rref::reduce(SparseVec row) const {
    // Pivot rows are echelon: eliminating a pivot column only introduces
    // entries to its right, so chasing the leading entry terminates.
    while (!row.empty()) {
        auto it = pivots_.find(row.front().first);
        if (it == pivots_.end()) {
            if (!finalized_) break;
            // After finalize, interior entries may still sit on pivot columns.
            bool hit = false;
            for (std::size_t k = 1; k < row.size(); ++k) {
                auto jt = pivots_.find(row[k].first);
                if (jt != pivots_.end()) {
                    axpy(row, row[k].second, jt->second);
                    hit = true;
                    break;
                }
            }
            if (!hit) break;
            continue;
        }
        axpy(row, row.front().second, it->second);
    }
    return row;
}

bool Rref::insert(SparseVec row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    GR lead_inv = row.front().second.inv();
    if (!lead_inv.is_one())
        for (auto& [c, v] : row) v *= lead_inv;
    int col = row.front().first;
    if (finalized_) {
        // Keep the fully reduced invariant: clear this column from other rows.
        for (auto& [p, prow] : pivots_) {
            auto it = std::lower_bound(prow.begin(), prow.end(), col,
                                       [](const auto& e, int c) { return e.first < c; });
            if (it != prow.end() && it->first == col) axpy(prow, it->second, row);
        }
    }
    pivots_.emplace(col, std::move(row));
    return true;
}

void Rref::finalize() {
    if (finalized_) return;
    // Process pivots descending; rows below are already fully reduced.
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        SparseVec& row = it->second;
        bool again = true;
        while (again) {
            again = false;
            for (std::size_t k = 1; k < row.size(); ++k) {
                auto jt = pivots_.find(row[k].first);
                if (jt != pivots_.end() && jt->first != it->first) {
                    axpy(row, row[k].second, jt->second);
                    again = true;
                    break;
                }
            }
        }
    }
    finalized_ = true;
}

std::vector<SparseVec> nullspace(const std::vector<SparseVec>& rows, int ncols) {
    Rref rref;
    for (const auto& r : rows) rref.insert(r);
    rref.finalize();

    std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
    for (const auto& [p, row] : rref.rows()) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<SparseVec> basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        SparseVec v;
        for (const auto& [p, row] : rref.rows()) {
            auto it = std::lower_bound(row.begin(), row.end(), f,
                                       [](const auto& e, int c) { return e.first < c; });
            if (it != row.end() && it->first == f) v.emplace_back(p, -it->second);
        }
        v.emplace_back(f, GR(1));
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<GR>> exact_nullspace(const std::vector<std::vector<GR>>& a) {
    int ncols = a.empty() ? 0 : static_cast<int>(a.front().size());
    std::vector<SparseVec> rows;
    rows.reserve(a.size());
    for (const auto& r : a) rows.push_back(to_sparse(r));
    std::vector<std::vector<GR>> out;
    for (const auto& v : nullspace(rows, ncols)) out.push_back(to_dense(v, ncols));
    return out;
}

bool solve_affine(const std::vector<SparseVec>& rows, const std::vector<GR>& rhs, int ncols,
                  std::vector<GR>& solution) {
    // Augment with the right-hand side as column `ncols`.
    Rref rref;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        SparseVec row = rows[r];
        if (!rhs[r].is_zero()) row.emplace_back(ncols, rhs[r]);
        rref.insert(std::move(row));
    }
    rref.finalize();
    if (rref.rows().count(ncols)) return false;
    solution.assign(static_cast<std::size_t>(ncols), GR());
    for (const auto& [p, row] : rref.rows()) {
        auto it = std::lower_bound(row.begin(), row.end(), ncols,
                                   [](const auto& e, int c) { return e.first < c; });
        if (it != row.end() && it->first == ncols)
            solution[static_cast<std::size_t>(p)] = it->second;
    }
    return true;
}

std::vector<GR> to_dense(const SparseVec& v, int ncols) {
    std::vector<GR> out(static_cast<std::size_t>(ncols));
    for (const auto& [c, val] : v) out[static_cast<std::size_t>(c)] = val;
    return out;
}

SparseVec to_sparse(const std::vector<GR>& v) {
    SparseVec out;
    for (std::size_t c = 0; c < v.size(); ++c)
        if (!v[c].is_zero()) out.emplace_back(static_cast<int>(c), v[c]);
    return out;
}

} // namespace bispec
