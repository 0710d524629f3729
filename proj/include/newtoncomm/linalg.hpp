#pragma once

#include "newtoncomm/rational.hpp"

#include <utility>
#include <vector>

namespace newtoncomm {

/// Sparse vector over Q: (column, value) pairs sorted by column, no explicit zeros.
using SparseVector = std::vector<std::pair<int, Rational>>;

/// y := y + factor * x.
void axpy(SparseVector& y, const Rational& factor, const SparseVector& x);

/// Row-major sparse matrix. Column 0 has the highest priority when choosing pivots.
struct SparseMatrix {
    int cols = 0;
    std::vector<SparseVector> rows;
};

/// Reduced row echelon form of the span of the given rows: pivots are 1, pivot
/// columns are cleared in every other row, rows are ordered by pivot column.
/// Zero rows are dropped, so the result is the canonical basis of the row space.
std::vector<SparseVector> rref(std::vector<SparseVector> rows);

/// Basis of {v : A v = 0}, returned in reduced row echelon form with respect to the
/// matrix column order (so the basis is canonical).
std::vector<SparseVector> nullspace(const SparseMatrix& a);

/// Entry lookup in a sparse vector.
Rational entry(const SparseVector& v, int col);

} // namespace newtoncomm
