#pragma once

#include "newtoncomm/derivation.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>

namespace newtoncomm {

/// New coordinates X = m11 x + m12 y + s1, Y = m21 x + m22 y + s2 (invertible).
struct AffineChange {
    Rational m11{1}, m12{0}, m21{0}, m22{1};
    Rational s1{0}, s2{0};
    std::string description;

    Rational determinant() const { return m11 * m22 - m12 * m21; }
    /// X and Y as polynomials in x, y.
    std::pair<BiPoly, BiPoly> forward() const;
    /// x and y as polynomials in X, Y.
    std::pair<BiPoly, BiPoly> inverse() const;
};

/// d written in the new coordinates.
PlanarDerivation push_forward(const PlanarDerivation& d, const AffineChange& change);
/// The derivation on the original coordinates whose push_forward is d_new.
PlanarDerivation pull_back(const PlanarDerivation& d_new, const AffineChange& change);

struct LinearizationResult {
    PlanarDerivation delta;  ///< in the original coordinates
    std::optional<AffineChange> change;
    std::string case_label;
};

/// A commuting derivation that is transversal to d somewhere, for every nonzero d of
/// total degree <= 1. Throws InvalidInput for d = 0, HypothesisViolation for degree > 1.
LinearizationResult companion_for_linear(const PlanarDerivation& d);

/// Delta = d(x) delta(y) - d(y) delta(x).
BiPoly transversality_determinant(const PlanarDerivation& d, const PlanarDerivation& delta);

struct Trajectory {
    double dt = 0;
    std::vector<double> x, y;  ///< steps + 1 samples, x[0] = x0
};

/// Classical fixed-step RK4 for x' = d(x), y' = d(y).
Trajectory rk4_trajectory(const PlanarDerivation& d, double x0, double y0, double t_end, int steps);

/// Adaptive Simpson quadrature with absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& g, double a, double b, double tol, int max_depth = 40);

/// (t, x, y) of a reference solution.
using ReferenceSolution = std::function<std::pair<double, double>(double)>;

/// Path from (x0, y0) to (x, y) along which F is integrated. Axis is the textbook
/// formula (up the line x = x0, then across at height y); Segment is the straight
/// line. Both give the same F wherever Delta has no zero between the paths, since the
/// integrands are closed 1-forms when d and delta commute.
enum class QuadraturePath { Axis, Segment };

struct FlowCheckReport {
    double max_defect = 0;                    ///< max |F(x(t), y(t)) - (t, 0)|
    std::optional<double> trajectory_error;   ///< max distance to the reference, if given
    int steps = 0;
    double tolerance = 1e-6;
    double quadrature_tolerance = 1e-9;
    bool passed = false;
};

/// Integrates the flow of d from (x0, y0) and evaluates the rectifying map F built
/// from d and delta along it. Throws HypothesisViolation when d and delta do not
/// commute, SingularDelta when Delta vanishes at the start or on the path.
FlowCheckReport rectification_defect(const PlanarDerivation& d, const PlanarDerivation& delta, const Rational& x0,
                                     const Rational& y0, double t_end, int steps,
                                     const std::optional<ReferenceSolution>& reference = std::nullopt,
                                     double tolerance = 1e-6, QuadraturePath path = QuadraturePath::Axis);

/// d = (1 + x^2, -2xy), delta = (0, y) and the closed-form flow
/// x = tan(t + atan x0), y = y0 (1 + x0^2) cos^2(t + atan x0).
struct ExampleFixture {
    PlanarDerivation d;
    PlanarDerivation delta;
    std::function<std::pair<double, double>(double x0, double y0, double t)> solution;
};

ExampleFixture example_fixture();

} // namespace newtoncomm
