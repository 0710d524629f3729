#pragma once

#include "newtoncomm/derivation.hpp"

#include <random>

namespace newtoncomm {

/// Small random elements for property checks. Coefficients are p/q with |p| <= 9,
/// 1 <= q <= 4, and each term is present with probability 1/2.
class RandomPolys {
public:
    explicit RandomPolys(std::uint64_t seed) : rng_(seed) {}

    Rational rational();
    UniPoly unipoly(int max_degree);
    /// deg_y <= max_deg_y, coefficient x-degrees <= max_deg_x.
    BiPoly bipoly(int max_deg_y, int max_deg_x);
    PlanarDerivation derivation(int max_deg_y, int max_deg_x);
    int uniform(int lo, int hi);

private:
    std::mt19937_64 rng_;
};

} // namespace newtoncomm
