#pragma once

#include "newtoncomm/coefficient_system.hpp"
#include "newtoncomm/derivation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace newtoncomm {

struct CommutantBasis {
    UniPoly f;
    int max_deg_y = 0;
    int xcap = 0;
    /// Reduced echelon basis (see column_precedes) of the commuting derivations
    /// with deg_y <= max_deg_y and coefficient degrees <= xcap.
    std::vector<PlanarDerivation> basis;
};

/// q = sum q_coeffs[k] H^k with gamma = q * delta_f.
struct HDecomposition {
    std::vector<Rational> q_coeffs;
};

/// ceil((M+1)/2) * (deg f + 1) + 1, with deg f read as 0 for constant f.
int default_xcap(const UniPoly& f, int max_deg_y);

/// The linear system [delta_f, gamma] = 0 in the x-coefficients of c_0..c_M, d_0..d_M.
/// Built literally: column j is the coefficient vector of [delta_f, e_j] for the unit
/// derivation e_j, so it inherits its correctness from bracket().
CoefficientSystem commutant_system(const UniPoly& f, int max_deg_y, int xcap);

/// Throws InvalidInput for max_deg_y < 0 or xcap < 0. f may be zero or linear.
CommutantBasis solve_commutant(const UniPoly& f, int max_deg_y, std::optional<int> xcap = std::nullopt);

/// Peels gamma = q * delta_f with q in K[H]. Throws NotAMultiple when any step fails.
HDecomposition decompose_in_H(const UniPoly& f, const PlanarDerivation& gamma);

/// sum q_k H^k * delta_f.
PlanarDerivation reconstruct(const UniPoly& f, const HDecomposition& q);

struct RankOneCertificate {
    bool passed = false;
    CommutantBasis commutant;
    std::vector<HDecomposition> decompositions;  ///< one per basis element when passed
    std::optional<PlanarDerivation> counterexample;
    std::string failure;
};

/// Solves the commutant and decomposes every basis element. Throws HypothesisViolation
/// for deg f < 2.
RankOneCertificate certify_rank_one(const UniPoly& f, int max_deg_y, std::optional<int> xcap = std::nullopt);

} // namespace newtoncomm
