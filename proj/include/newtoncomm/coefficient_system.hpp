#pragma once

#include "newtoncomm/derivation.hpp"
#include "newtoncomm/linalg.hpp"

#include <compare>
#include <string>
#include <vector>

namespace newtoncomm {

/// One of the coefficient polynomials c_i (of gamma(x)) or d_i (of gamma(y)).
struct Unknown {
    char letter = 'c';  // 'c' or 'd'
    int index = 0;

    friend auto operator<=>(const Unknown&, const Unknown&) = default;
    std::string name() const { return std::string(1, letter) + "_" + std::to_string(index); }
};

/// Coefficient of x^xpow in an unknown.
struct ColumnKey {
    Unknown unknown;
    int xpow = 0;
    friend auto operator<=>(const ColumnKey&, const ColumnKey&) = default;
};

/// Coefficient of x^xpow y^ypow in component 0 (the x-slot) or 1 (the y-slot) of a bracket.
struct RowKey {
    int component = 0;
    int ypow = 0;
    int xpow = 0;
    friend auto operator<=>(const RowKey&, const RowKey&) = default;
};

/// Linear system in the x-coefficients of the unknowns, obtained by equating coefficients.
struct CoefficientSystem {
    std::vector<ColumnKey> columns;
    std::vector<RowKey> row_keys;
    SparseMatrix matrix;
};

/// Column priority: y-index descending, then x-power descending, c before d.
bool column_precedes(const ColumnKey& a, const ColumnKey& b);

/// Parity class of an unknown: 1 for {c_odd, d_even} (gamma_1 type), 2 otherwise.
inline int parity_class(const Unknown& u) {
    bool odd = (u.index % 2) != 0;
    return (u.letter == 'c') == odd ? 1 : 2;
}

/// gamma = (sum c_i y^i, sum d_i y^i) from a solution vector.
PlanarDerivation assemble_derivation(const std::vector<ColumnKey>& columns, const SparseVector& solution);

} // namespace newtoncomm
