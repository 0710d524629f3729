#include "newtoncomm/integrability.hpp"

#include "newtoncomm/errors.hpp"
#include "newtoncomm/expression.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace newtoncomm {

std::pair<BiPoly, BiPoly> AffineChange::forward() const {
    const BiPoly x = bipoly_x(), y = bipoly_y();
    return {m11 * x + m12 * y + BiPoly(UniPoly(s1)), m21 * x + m22 * y + BiPoly(UniPoly(s2))};
}

std::pair<BiPoly, BiPoly> AffineChange::inverse() const {
    const Rational det = determinant();
    if (det.is_zero()) throw InvalidInput("affine change is not invertible");
    const BiPoly X = bipoly_x() - BiPoly(UniPoly(s1));
    const BiPoly Y = bipoly_y() - BiPoly(UniPoly(s2));
    const Rational inv = det.inverse();
    return {inv * (m22 * X - m12 * Y), inv * (m11 * Y - m21 * X)};
}

PlanarDerivation push_forward(const PlanarDerivation& d, const AffineChange& change) {
    const auto [x_of, y_of] = change.inverse();
    const BiPoly dX = change.m11 * d.dx + change.m12 * d.dy;
    const BiPoly dY = change.m21 * d.dx + change.m22 * d.dy;
    return {compose(dX, x_of, y_of), compose(dY, x_of, y_of)};
}

PlanarDerivation pull_back(const PlanarDerivation& d_new, const AffineChange& change) {
    const auto [X_of, Y_of] = change.forward();
    const BiPoly dX = compose(d_new.dx, X_of, Y_of);
    const BiPoly dY = compose(d_new.dy, X_of, Y_of);
    const Rational inv = change.determinant().inverse();
    return {inv * (change.m22 * dX - change.m12 * dY), inv * (change.m11 * dY - change.m21 * dX)};
}

BiPoly transversality_determinant(const PlanarDerivation& d, const PlanarDerivation& delta) {
    return d.dx * delta.dy - d.dy * delta.dx;
}

namespace {

struct LinearCoeffs {
    Rational a, b, c, e, f, g;
};

LinearCoeffs read_linear(const PlanarDerivation& d) {
    return {d.dx.coeff(0).coeff(1), d.dx.coeff(1).coeff(0), d.dx.coeff(0).coeff(0),
            d.dy.coeff(0).coeff(1), d.dy.coeff(1).coeff(0), d.dy.coeff(0).coeff(0)};
}

BiPoly affine(const Rational& a, const Rational& b, const Rational& c) {
    return a * bipoly_x() + b * bipoly_y() + BiPoly(UniPoly(c));
}

PlanarDerivation constant(const Rational& p, const Rational& q) { return {BiPoly(UniPoly(p)), BiPoly(UniPoly(q))}; }

// Case 4a: d = (c, ex + fy + g) with (e, f) != 0. The textbook companions
// (-g/e, 0) and (0, -g/f) leave [d, delta](y) = g, so these are used instead.
LinearizationResult case_4a(const LinearCoeffs& k) {
    if (!k.f.is_zero()) return {constant(1, -k.e / k.f), std::nullopt, "4a"};
    if (!k.c.is_zero()) return {constant(0, 1), std::nullopt, "4a"};
    return {{affine(1, 0, k.g / k.e), bipoly_y()}, std::nullopt, "4a"};
}

LinearizationResult in_new_coordinates(const PlanarDerivation& d, const AffineChange& change, const std::string& label) {
    const PlanarDerivation moved = push_forward(d, change);
    LinearizationResult inner = case_4a(read_linear(moved));
    return {pull_back(inner.delta, change), change, label};
}

LinearizationResult dispatch(const PlanarDerivation& d) {
    const LinearCoeffs k = read_linear(d);
    const bool homogeneous = k.c.is_zero() && k.g.is_zero();
    if (k.a.is_zero() && k.b.is_zero() && k.e.is_zero() && k.f.is_zero())
        return {k.g.is_zero() ? constant(0, 1) : constant(1, 0), std::nullopt, "0"};
    if (homogeneous && k.b.is_zero() && k.e.is_zero() && k.a == k.f)
        return {{bipoly_y(), bipoly_x()}, std::nullopt, "1"};
    if (homogeneous) return {{bipoly_x(), bipoly_y()}, std::nullopt, "2"};

    const Rational det = k.a * k.f - k.b * k.e;
    if (!det.is_zero()) {
        // Shift the unique zero of d to the origin.
        const Rational x0 = (k.b * k.g - k.f * k.c) / det;
        const Rational y0 = (k.e * k.c - k.a * k.g) / det;
        AffineChange shift;
        shift.s1 = -x0;
        shift.s2 = -y0;
        shift.description = "u = x - (" + x0.to_string() + "), v = y - (" + y0.to_string() + ")";
        const PlanarDerivation moved = push_forward(d, shift);
        LinearizationResult inner = dispatch(moved);
        return {pull_back(inner.delta, shift), shift, "3/" + inner.case_label};
    }

    if (k.a.is_zero() && k.b.is_zero()) return case_4a(k);

    AffineChange change;
    if (k.e.is_zero() && k.f.is_zero()) {
        change.m11 = 0;
        change.m12 = 1;
        change.m21 = 1;
        change.m22 = 0;
        change.description = "swap x and y";
        return in_new_coordinates(d, change, "4b/swap");
    }
    // z = ex - ay (a != 0, so e != 0) or z = fx - by (a = 0, so f != 0) replaces x.
    if (!k.a.is_zero()) {
        change.m11 = k.e;
        change.m12 = -k.a;
        change.description = "z = " + to_string(affine(k.e, -k.a, 0));
    } else {
        change.m11 = k.f;
        change.m12 = -k.b;
        change.description = "z = " + to_string(affine(k.f, -k.b, 0));
    }
    return in_new_coordinates(d, change, "4b/z");
}

} // namespace

LinearizationResult companion_for_linear(const PlanarDerivation& d) {
    if (d.is_zero()) throw InvalidInput("the zero derivation has no companion");
    if (total_degree(d.dx) > 1 || total_degree(d.dy) > 1)
        throw HypothesisViolation("companion_for_linear needs a derivation of degree <= 1");
    LinearizationResult result = dispatch(d);
    if (!bracket(d, result.delta).is_zero())
        throw std::logic_error("companion (case " + result.case_label + ") does not commute with d");
    if (transversality_determinant(d, result.delta).is_zero())
        throw std::logic_error("companion (case " + result.case_label + ") is parallel to d");
    return result;
}

namespace {

// Double-precision copy of a BiPoly for the numeric kernels.
class NumericPoly {
public:
    explicit NumericPoly(const BiPoly& p) {
        for (const auto& c : p.ycoeffs()) {
            std::vector<double> row;
            for (const auto& v : c.coeffs()) row.push_back(v.to_double());
            coeffs_.push_back(std::move(row));
        }
    }
    double operator()(double x, double y) const {
        double acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            double cx = 0.0;
            for (auto jt = it->rbegin(); jt != it->rend(); ++jt) cx = cx * x + *jt;
            acc = acc * y + cx;
        }
        return acc;
    }

private:
    std::vector<std::vector<double>> coeffs_;
};

double simpson_step(const std::function<double(double)>& g, double a, double b, double fa, double fm, double fb,
                    double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = g(lm), frm = g(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double diff = left + right - whole;
    if (depth <= 0 || std::abs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
    return simpson_step(g, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(g, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& g, double a, double b, double tol, int max_depth) {
    if (a == b) return 0.0;
    const double fa = g(a), fb = g(b), fm = g(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(g, a, b, fa, fm, fb, whole, tol, max_depth);
}

Trajectory rk4_trajectory(const PlanarDerivation& d, double x0, double y0, double t_end, int steps) {
    if (steps < 1) throw InvalidInput("step count must be positive");
    const NumericPoly fx(d.dx), fy(d.dy);
    Trajectory traj;
    traj.dt = t_end / steps;
    traj.x.reserve(static_cast<std::size_t>(steps) + 1);
    traj.y.reserve(static_cast<std::size_t>(steps) + 1);
    double x = x0, y = y0;
    traj.x.push_back(x);
    traj.y.push_back(y);
    const double h = traj.dt;
    for (int i = 0; i < steps; ++i) {
        const double k1x = fx(x, y), k1y = fy(x, y);
        const double k2x = fx(x + 0.5 * h * k1x, y + 0.5 * h * k1y), k2y = fy(x + 0.5 * h * k1x, y + 0.5 * h * k1y);
        const double k3x = fx(x + 0.5 * h * k2x, y + 0.5 * h * k2y), k3y = fy(x + 0.5 * h * k2x, y + 0.5 * h * k2y);
        const double k4x = fx(x + h * k3x, y + h * k3y), k4y = fy(x + h * k3x, y + h * k3y);
        x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        if (!std::isfinite(x) || !std::isfinite(y))
            throw SingularDelta("trajectory left the finite plane at step " + std::to_string(i + 1));
        traj.x.push_back(x);
        traj.y.push_back(y);
    }
    return traj;
}

namespace {

// The two closed 1-forms whose integrals give F:
//   w1 = (g2 dx - g1 dy) / Delta,   w2 = (-f2 dx + f1 dy) / Delta.
class RectifyingMap {
public:
    RectifyingMap(const PlanarDerivation& d, const PlanarDerivation& delta, double x0, double y0, double tol,
                  QuadraturePath path)
        : f1_(d.dx), f2_(d.dy), g1_(delta.dx), g2_(delta.dy), det_(transversality_determinant(d, delta)), x0_(x0),
          y0_(y0), tol_(tol), path_(path) {
        const double start = det_(x0, y0);
        if (start == 0.0 || !std::isfinite(start))
            throw SingularDelta("Delta vanishes at the initial point");
        sign_ = start > 0 ? 1 : -1;
    }

    std::pair<double, double> operator()(double x, double y) const {
        if (path_ == QuadraturePath::Axis) {
            // Up the line x = x0 from y0 to y, then across at height y from x0 to x.
            const Pair v1 = leg(y0_, y, [&](double s) { return std::pair{x0_, s}; }, 0.0, 1.0);
            const Pair h1 = leg(x0_, x, [&](double r) { return std::pair{r, y}; }, 1.0, 0.0);
            return {h1.first + v1.first, h1.second + v1.second};
        }
        const double dxs = x - x0_, dys = y - y0_;
        const Pair s = leg(0.0, 1.0, [&](double u) { return std::pair{x0_ + u * dxs, y0_ + u * dys}; }, dxs, dys);
        return {s.first, s.second};
    }

private:
    struct Pair {
        double first = 0, second = 0;
    };

    // Integrates (w1, w2) along p(s), s in [a, b], with constant velocity (vx, vy).
    template <class Param>
    Pair leg(double a, double b, Param p, double vx, double vy) const {
        auto integrand = [&](double s, int which) {
            const auto [x, y] = p(s);
            const double det = det_(x, y);
            if (!std::isfinite(det) || det == 0.0 || (det > 0 ? 1 : -1) != sign_)
                throw SingularDelta("Delta vanishes on the quadrature path near (" + std::to_string(x) + ", " +
                                    std::to_string(y) + ")");
            if (which == 0) return (g2_(x, y) * vx - g1_(x, y) * vy) / det;
            return (-f2_(x, y) * vx + f1_(x, y) * vy) / det;
        };
        return {adaptive_simpson([&](double s) { return integrand(s, 0); }, a, b, tol_),
                adaptive_simpson([&](double s) { return integrand(s, 1); }, a, b, tol_)};
    }

    NumericPoly f1_, f2_, g1_, g2_, det_;
    double x0_, y0_, tol_;
    QuadraturePath path_;
    int sign_ = 1;
};

} // namespace

FlowCheckReport rectification_defect(const PlanarDerivation& d, const PlanarDerivation& delta, const Rational& x0,
                                     const Rational& y0, double t_end, int steps,
                                     const std::optional<ReferenceSolution>& reference, double tolerance,
                                     QuadraturePath path) {
    if (!bracket(d, delta).is_zero()) throw HypothesisViolation("d and delta do not commute");
    if (evaluate(transversality_determinant(d, delta), x0, y0).is_zero())
        throw SingularDelta("d and delta are parallel at the initial point");

    FlowCheckReport report;
    report.steps = steps;
    report.tolerance = tolerance;
    const double sx = x0.to_double(), sy = y0.to_double();
    const Trajectory traj = rk4_trajectory(d, sx, sy, t_end, steps);
    const RectifyingMap F(d, delta, sx, sy, report.quadrature_tolerance, path);

    double traj_err = 0.0;
    for (std::size_t i = 0; i < traj.x.size(); ++i) {
        const double t = traj.dt * static_cast<double>(i);
        const auto [F1, F2] = F(traj.x[i], traj.y[i]);
        report.max_defect = std::max(report.max_defect, std::hypot(F1 - t, F2));
        if (reference) {
            const auto [rx, ry] = (*reference)(t);
            traj_err = std::max(traj_err, std::max(std::abs(traj.x[i] - rx), std::abs(traj.y[i] - ry)));
        }
    }
    if (reference) report.trajectory_error = traj_err;
    report.passed = std::isfinite(report.max_defect) && report.max_defect < tolerance &&
                    (!report.trajectory_error || *report.trajectory_error < tolerance);
    return report;
}

ExampleFixture example_fixture() {
    const BiPoly x = bipoly_x(), y = bipoly_y();
    ExampleFixture fx;
    fx.d = {BiPoly(UniPoly(1)) + x * x, Rational(-2) * x * y};
    fx.delta = {BiPoly(), y};
    fx.solution = [](double x0, double y0, double t) {
        const double phase = t + std::atan(x0);
        const double c = std::cos(phase);
        return std::pair{std::tan(phase), y0 * (1.0 + x0 * x0) * c * c};
    };
    return fx;
}

} // namespace newtoncomm
