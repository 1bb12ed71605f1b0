#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "algforge/poly.hpp"

namespace algforge {

using SparseRow = std::map<std::size_t, Scalar>;

/// Incremental row echelon form over the rationals. Each stored row has its
/// pivot at its smallest column; entries to the right are kept unreduced.
class Echelon {
public:
    explicit Echelon(std::size_t ncols) : ncols_(ncols) {}

    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return pivots_.size(); }
    bool consistent() const { return consistent_; }

    /// Adds the equation row . x = rhs. Returns false once the system is inconsistent.
    bool add(SparseRow row, Scalar rhs = 0);
    /// Remainder of `row` after cancelling every pivot column (ascending).
    SparseRow reduce(SparseRow row) const;

    /// A particular solution with all free variables set to zero.
    std::optional<std::vector<Scalar>> solve() const;
    /// Basis of the homogeneous solution space, one vector per free column.
    std::vector<std::vector<Scalar>> nullspace() const;

private:
    struct Pivot {
        SparseRow row;  // normalized: row[pivot] == 1
        Scalar rhs;
    };

    std::vector<Scalar> back_substitute(std::vector<Scalar> x, bool homogeneous) const;

    std::size_t ncols_;
    std::map<std::size_t, Pivot> pivots_;
    bool consistent_ = true;
};

/// Polynomial vector stored sparsely by component index.
using PolyVector = std::map<std::size_t, Poly>;

/// Solves sum_j c_j * columns[j] == target for rational c_j by comparing the
/// coefficient of every (component, monomial) pair.
std::optional<std::vector<Scalar>> solve_combination(const std::vector<PolyVector>& columns,
                                                     const PolyVector& target);

/// Basis of {c : sum_j c_j * columns[j] == 0}.
std::vector<std::vector<Scalar>> combination_nullspace(const std::vector<PolyVector>& columns);

/// Rank of an exact scalar matrix given row-major.
std::size_t matrix_rank(const std::vector<std::vector<Scalar>>& rows);

/// Determinant of a square exact scalar matrix.
Scalar determinant(std::vector<std::vector<Scalar>> m);

}  // namespace algforge
