#pragma once

#include "newtoncomm/rational.hpp"
#include "newtoncomm/unipoly.hpp"

#include <string>
#include <vector>

namespace newtoncomm {

/// T_m, ..., T_0 and P_m in Z[X], stored as UniPoly in the variable X.
struct ObstructionPoly {
    int m = 3;
    std::vector<UniPoly> T;  ///< T[i] is T_i
    UniPoly P;
};

/// Runs the recurrences
///     T_m = T_{m-1} = 1,
///     T_{m-2k}   = X T_{m-2k+1} - (m-2k+2)((k-1)(X+1)+1) T_{m-2k+2},
///     T_{m-2k-1} = T_{m-2k} - (m-2k+1) k (X+1) T_{m-2k+1},
///     P_m        = ((m-1)/2 (X+1) + 1) T_1 - X T_0.
/// multiplier_shift is added to the (m-2k+2) factor; it is nonzero only for mutation
/// tests. Throws InvalidInput unless m is odd and >= 3.
ObstructionPoly build_obstruction(int m, int multiplier_shift = 0);

struct RationalRoot {
    Rational value;
    int multiplicity = 1;
    friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

/// All rational roots (ascending) by the rational root theorem, each verified exactly
/// and deflated to get its multiplicity. Throws InvalidInput for P = 0.
std::vector<RationalRoot> rational_roots(const UniPoly& p);

/// {1} and -(2k+1)/(2k-1) for 1 <= k <= (m-1)/2, ascending.
std::vector<Rational> expected_root_set(int m);

struct ObstructionReport {
    ObstructionPoly poly;
    std::vector<RationalRoot> roots;
    std::vector<Rational> expected;
    bool degree_bound = false;         ///< deg P_m <= (m+1)/2
    bool nonzero_at_minus_one = false; ///< P_m(-1) != 0
    bool roots_match = false;          ///< root set equals the expected set
    bool splits = false;               ///< multiplicities add up to deg P_m
    bool t_values_at_minus_one = false;///< T_{m-2k-1}(-1) = T_{m-2k}(-1)
    bool t_degree_bounds = false;      ///< deg T_{m-2k}, deg T_{m-2k-1} <= k
    bool passed() const;
};

ObstructionReport certify_obstruction(int m, int multiplier_shift = 0);

} // namespace newtoncomm
