#include "algforge/linalg.hpp"

#include <utility>

namespace algforge {

namespace {

void axpy(SparseRow& row, const Scalar& factor, const SparseRow& other) {
    for (const auto& [col, v] : other) {
        auto [it, inserted] = row.try_emplace(col, 0);
        it->second -= factor * v;
        if (it->second == 0) row.erase(it);
    }
}

}  // namespace

bool Echelon::add(SparseRow row, Scalar rhs) {
    for (auto it = row.begin(); it != row.end();) {
        if (it->second == 0)
            it = row.erase(it);
        else
            ++it;
    }
    while (!row.empty()) {
        const auto [col, lead] = *row.begin();
        auto p = pivots_.find(col);
        if (p == pivots_.end()) {
            const Scalar inv = 1 / Scalar(lead);
            for (auto& [c, v] : row) v *= inv;
            rhs *= inv;
            pivots_.emplace(col, Pivot{std::move(row), std::move(rhs)});
            return consistent_;
        }
        const Scalar factor = lead;
        rhs -= factor * p->second.rhs;
        axpy(row, factor, p->second.row);
    }
    if (rhs != 0) consistent_ = false;
    return consistent_;
}

SparseRow Echelon::reduce(SparseRow row) const {
    SparseRow remainder;
    while (!row.empty()) {
        const auto [col, lead] = *row.begin();
        auto p = pivots_.find(col);
        if (p == pivots_.end()) {
            remainder.emplace(col, lead);
            row.erase(row.begin());
            continue;
        }
        const Scalar factor = lead;
        axpy(row, factor, p->second.row);
    }
    return remainder;
}

std::vector<Scalar> Echelon::back_substitute(std::vector<Scalar> x, bool homogeneous) const {
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        const auto& [col, piv] = *it;
        Scalar v = homogeneous ? Scalar(0) : piv.rhs;
        for (const auto& [c, a] : piv.row)
            if (c != col) v -= a * x[c];
        x[col] = v;
    }
    return x;
}

std::optional<std::vector<Scalar>> Echelon::solve() const {
    if (!consistent_) return std::nullopt;
    return back_substitute(std::vector<Scalar>(ncols_, 0), false);
}

std::vector<std::vector<Scalar>> Echelon::nullspace() const {
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < ncols_; ++f) {
        if (pivots_.count(f)) continue;
        std::vector<Scalar> x(ncols_, 0);
        x[f] = 1;
        basis.push_back(back_substitute(std::move(x), true));
    }
    return basis;
}

namespace {

struct RowIndex {
    std::map<std::pair<std::size_t, Monomial>, std::size_t> ids;
    std::vector<SparseRow> rows;

    SparseRow& row(std::size_t comp, const Monomial& m) {
        auto [it, inserted] = ids.try_emplace({comp, m}, rows.size());
        if (inserted) rows.emplace_back();
        return rows[it->second];
    }
};

RowIndex build_rows(const std::vector<PolyVector>& columns) {
    RowIndex idx;
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [comp, p] : columns[j])
            for (const auto& [m, c] : p.terms()) idx.row(comp, m)[j] += c;
    return idx;
}

}  // namespace

std::optional<std::vector<Scalar>> solve_combination(const std::vector<PolyVector>& columns,
                                                     const PolyVector& target) {
    RowIndex idx = build_rows(columns);
    std::vector<Scalar> rhs(idx.rows.size(), 0);
    for (const auto& [comp, p] : target) {
        for (const auto& [m, c] : p.terms()) {
            auto it = idx.ids.find({comp, m});
            if (it == idx.ids.end()) return std::nullopt;  // no column reaches this term
            rhs[it->second] = c;
        }
    }
    Echelon ech(columns.size());
    for (std::size_t r = 0; r < idx.rows.size(); ++r)
        if (!ech.add(std::move(idx.rows[r]), rhs[r])) return std::nullopt;
    return ech.solve();
}

std::vector<std::vector<Scalar>> combination_nullspace(const std::vector<PolyVector>& columns) {
    RowIndex idx = build_rows(columns);
    Echelon ech(columns.size());
    for (auto& r : idx.rows) ech.add(std::move(r));
    return ech.nullspace();
}

std::size_t matrix_rank(const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty()) return 0;
    Echelon ech(rows.front().size());
    for (const auto& r : rows) {
        SparseRow s;
        for (std::size_t c = 0; c < r.size(); ++c)
            if (r[c] != 0) s.emplace(c, r[c]);
        ech.add(std::move(s));
    }
    return ech.rank();
}

Scalar determinant(std::vector<std::vector<Scalar>> m) {
    const std::size_t n = m.size();
    Scalar det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            const Scalar f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

}  // namespace algforge
