#pragma once

#include "newtoncomm/coefficient_system.hpp"
#include "newtoncomm/unipoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace newtoncomm {

/// Io and IIe have c_m as top unknown, IIo and Ie have d_m. Io/IIo are the odd-m
/// systems, Ie/IIe the even-m ones; building a kind with the other parity of m gives
/// the system of the same shape.
enum class ParityKind { Io, IIo, Ie, IIe };

std::string to_string(ParityKind kind);
/// Accepts "Io", "IIo", "Ie", "IIe"; throws InvalidInput otherwise.
ParityKind parse_parity_kind(const std::string& text);

/// scale * factor * unknown^(order), with factor one of 1, f, f'.
struct LinearTerm {
    enum class Factor { One, F, FPrime };
    Rational scale{1};
    Factor factor = Factor::One;
    Unknown unknown;
    int order = 0;  // 0 or 1 (derivative)
};

/// Equation e_label: sum(lhs) = sum(rhs). component 0 comes from the x-slot of the
/// bracket, 1 from the y-slot; label is the power of y whose coefficient is matched.
struct Equation {
    int label = 0;
    int component = 0;
    std::vector<LinearTerm> lhs;
    std::vector<LinearTerm> rhs;
};

std::string to_string(const Equation& eq);

struct ParitySystem {
    ParityKind kind = ParityKind::Io;
    int m = 2;
    UniPoly f;
    std::vector<Equation> equations;  ///< e_{m+1} first, e_0 last
    std::vector<Unknown> unknowns;    ///< top unknown first
};

/// Throws InvalidInput for m < 2.
ParitySystem build_system(ParityKind kind, int m, const UniPoly& f);

/// Coefficient matching of the system with unknown x-degrees <= xcap. Row keys use the
/// same (component, y-power, x-power) convention as commutant_system, so the union of
/// the two systems for one M reproduces that matrix.
CoefficientSystem discretize(const ParitySystem& sys, int xcap);

using Assignment = std::map<Unknown, UniPoly>;

/// lhs - rhs of one equation under an assignment (missing unknowns read as 0).
UniPoly residual(const Equation& eq, const UniPoly& f, const Assignment& values);

struct SolutionSpace {
    int dimension = 0;
    int xcap = 0;
    std::vector<Assignment> basis;
    std::vector<Unknown> forced;  ///< unknowns that vanish in every solution
};

/// Polynomial solutions with degrees <= xcap (default: default_xcap(f, m)).
SolutionSpace solve_system(const ParitySystem& sys, std::optional<int> xcap = std::nullopt);

struct LemmaCheck {
    std::string name;  ///< e.g. "(Io)_3 dimension"
    ParityKind kind = ParityKind::Io;
    int m = 0;
    bool passed = false;
    std::string detail;
};

struct LemmaReport {
    std::vector<LemmaCheck> checks;  ///< ordered by m, then kind
    bool all_passed() const;
};

/// For 2 <= m <= m_max: odd m checks dim (Io)_m = (m+1)/2 (with every solution
/// decomposing as q * delta_f, q in K[H]) and d_m forced in (IIo)_m; even m checks d_m
/// forced in (Ie)_m and c_m forced in (IIe)_m. Throws HypothesisViolation for deg f < 2
/// unless enforce_hypothesis is false (used for negative controls).
LemmaReport check_lemma_suite(const UniPoly& f, int m_max, bool enforce_hypothesis = true);

} // namespace newtoncomm
