#pragma once

#include "newtoncomm/derivation.hpp"

#include <vector>

namespace newtoncomm {

/// The commuting pair on K[x^(1/t), x^(-1/t), y], t = 2k-1:
///     alpha = (y, x^(-(2k+1)/(2k-1))),
///     beta  = (sum_l a_{2(k-l)}   x^(1 + (1-rho) l) y^(2(k-l)),
///              sum_l a_{2(k-l)+1} x^((1-rho) l)     y^(2(k-l)+1)),   rho = (2k+1)/(2k-1).
struct LaurentFamily {
    int k = 1;
    int t = 1;
    std::vector<Rational> a;  ///< a[0] .. a[2k+1]
    LaurentDerivation alpha;
    LaurentDerivation beta;
};

/// Throws InvalidInput for k < 1 or a_top = 0, DegenerateRecurrence on a zero divisor.
LaurentFamily build_family(int k, const Rational& a_top = Rational(1));

/// rho * a_{2(k-l)} = (2(k-l)+1)/(2(k-l)-1) * a_{2(k-l)+1} for 0 <= l <= k.
bool ratio_identity_holds(const LaurentFamily& family);

/// Every beta(x) term sits at (z^(t-2l), y^(2(k-l))) and every beta(y) term at
/// (z^(-2l), y^(2(k-l)+1)).
bool beta_has_family_shape(const LaurentFamily& family);

/// r = y^2 + (2k-1) x^(-2/(2k-1)), over root index 2k-1.
LaurentBiPoly first_integral(int k);

/// A derivation commuting with alpha whose y-degree is m, together with the degree
/// N of h = alpha(y).
struct PmWitness {
    int m = 3;
    int k = 0;  ///< 0 for the linear witness
    LaurentDerivation alpha;
    LaurentDerivation witness;
    Rational N;
};

/// r^((m-(2k+1))/2) * beta for the a_top = 1 family. Needs odd m >= 3 and
/// 1 <= k <= (m-1)/2, otherwise InvalidInput.
PmWitness pm_witness(int m, int k);

/// r^((m-1)/2) * (x, y) with alpha = (y, x) and r = y^2 - x^2 (N = 1).
PmWitness pm_witness_linear(int m);

/// act_x has only even y-powers <= m-1, act_y only odd y-powers <= m, and the y^m
/// coefficient of act_y is nonzero.
bool has_witness_shape(const PmWitness& w);

} // namespace newtoncomm
