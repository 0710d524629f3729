#include <doctest.h>

#include "newtoncomm/errors.hpp"
#include "newtoncomm/expression.hpp"
#include "newtoncomm/integrability.hpp"

#include <cmath>

using namespace newtoncomm;

namespace {

PlanarDerivation D(const char* dx, const char* dy) { return {parse_bipoly(dx), parse_bipoly(dy)}; }

BiPoly linear(int a, int b, int c) {
    return BiPoly(UniPoly{Rational(a), Rational(b)}) + BiPoly(UniPoly(c)) * bipoly_y();
}

} // namespace

TEST_CASE("every nonzero degree <= 1 derivation gets a commuting transversal companion") {
    int cases = 0;
    for (int a = -1; a <= 2; ++a)
        for (int b = -1; b <= 2; ++b)
            for (int c = -1; c <= 1; ++c)
                for (int e = -1; e <= 2; ++e)
                    for (int f = -1; f <= 2; ++f)
                        for (int g = -1; g <= 1; ++g) {
                            const PlanarDerivation d{linear(a, b, c), linear(e, f, g)};
                            if (d.is_zero()) continue;
                            const LinearizationResult r = companion_for_linear(d);
                            CHECK(bracket(d, r.delta).is_zero());
                            CHECK_FALSE(transversality_determinant(d, r.delta).is_zero());
                            ++cases;
                        }
    CHECK(cases == 4 * 4 * 3 * 4 * 4 * 3 - 1);
}

TEST_CASE("case labels and companions") {
    auto run = [](const char* dx, const char* dy) { return companion_for_linear(D(dx, dy)); };
    const auto c0 = run("3", "5");
    CHECK(c0.case_label == "0");
    CHECK(c0.delta == D("1", "0"));
    const auto c2 = run("y", "x");
    CHECK(c2.case_label == "2");
    CHECK(c2.delta == D("x", "y"));
    const auto c4a = run("0", "2*x + 1");
    CHECK(c4a.case_label == "4a");
    CHECK(c4a.delta == D("x + 1/2", "y"));
    CHECK(run("x + 1", "x + y").case_label == "3/2");
    const auto swap = run("x + 1", "0");
    CHECK(swap.case_label == "4b/swap");
    CHECK(swap.delta == D("0", "1"));

    CHECK_THROWS_AS(companion_for_linear(D("0", "0")), InvalidInput);
    CHECK_THROWS_AS(companion_for_linear(D("x^2", "y")), HypothesisViolation);
}

TEST_CASE("the uncorrected constant companion does not commute when g != 0") {
    // d = (0, 2x + 1): the constant field (-g/e, 0) = (-1/2, 0).
    const PlanarDerivation d = D("0", "2*x + 1");
    const PlanarDerivation literal = D("-1/2", "0");
    CHECK(bracket(d, literal) == D("0", "1"));
    CHECK(bracket(d, companion_for_linear(d).delta).is_zero());
}

TEST_CASE("affine changes") {
    AffineChange swap;
    swap.m11 = 0; swap.m12 = 1; swap.m21 = 1; swap.m22 = 0; swap.s1 = 2;
    CHECK(swap.determinant() == Rational(-1));
    const PlanarDerivation d = D("x + 1", "x*y");
    CHECK(pull_back(push_forward(d, swap), swap) == d);
    // X = y + 2, Y = x: d(X) = xy = (X - 2) Y, d(Y) = x + 1 = Y + 1.
    CHECK(push_forward(d, swap) == D("x*y - 2*y", "y + 1"));
}

TEST_CASE("transversality determinant") {
    CHECK(transversality_determinant(D("y", "x"), D("x", "y")) == parse_bipoly("y^2 - x^2"));
    CHECK(transversality_determinant(D("y", "x"), D("y", "x")).is_zero());
}

TEST_CASE("quadrature and RK4 primitives") {
    CHECK(adaptive_simpson([](double s) { return std::exp(s); }, 0, 1, 1e-12) == doctest::Approx(std::exp(1.0) - 1).epsilon(1e-12));
    CHECK(adaptive_simpson([](double s) { return 1 / (1 + s * s); }, 0, 1, 1e-12) == doctest::Approx(std::atan(1.0)).epsilon(1e-12));
    const Trajectory tr = rk4_trajectory(D("y", "-x"), 1, 0, 1, 200);
    REQUIRE(tr.x.size() == 201);
    CHECK(tr.x.back() == doctest::Approx(std::cos(1.0)).epsilon(1e-9));
    CHECK(tr.y.back() == doctest::Approx(-std::sin(1.0)).epsilon(1e-9));
}

TEST_CASE("rectifying map on the closed-form example") {
    const ExampleFixture fx = example_fixture();
    CHECK(bracket(fx.d, fx.delta).is_zero());
    const auto reference = [&](double t) { return fx.solution(0.0, 1.0, t); };
    const FlowCheckReport rep = rectification_defect(fx.d, fx.delta, 0, 1, 1.0, 1000, reference);
    CHECK(rep.passed);
    CHECK(rep.max_defect < 1e-6);
    REQUIRE(rep.trajectory_error);
    CHECK(*rep.trajectory_error < 1e-6);
    const FlowCheckReport seg = rectification_defect(fx.d, fx.delta, 0, 1, 1.0, 1000, reference, 1e-6, QuadraturePath::Segment);
    CHECK(seg.passed);
}

TEST_CASE("closed form satisfies the ODE") {
    const ExampleFixture fx = example_fixture();
    const double x0 = 0.3, y0 = -0.7, h = 1e-5;
    for (double t : {0.1, 0.5, 0.9}) {
        const auto [x, y] = fx.solution(x0, y0, t);
        const auto [xp, yp] = fx.solution(x0, y0, t + h);
        const auto [xm, ym] = fx.solution(x0, y0, t - h);
        CHECK((xp - xm) / (2 * h) == doctest::Approx(1 + x * x).epsilon(1e-7));
        CHECK((yp - ym) / (2 * h) == doctest::Approx(-2 * x * y).epsilon(1e-7));
    }
    const auto [x_start, y_start] = fx.solution(x0, y0, 0);
    CHECK(x_start == doctest::Approx(x0));
    CHECK(y_start == doctest::Approx(y0));
}

TEST_CASE("trajectory error shrinks with the step") {
    const ExampleFixture fx = example_fixture();
    const auto reference = [&](double t) { return fx.solution(0.5, 2.0, t); };
    const double coarse = *rectification_defect(fx.d, fx.delta, Rational(1, 2), 2, 0.8, 20, reference, 1.0).trajectory_error;
    const double fine = *rectification_defect(fx.d, fx.delta, Rational(1, 2), 2, 0.8, 40, reference, 1.0).trajectory_error;
    CHECK(fine < coarse / 8);  // fourth order: about 16x
}

TEST_CASE("linear example needs the straight path") {
    const PlanarDerivation d = D("y", "x"), delta = D("x", "y");
    CHECK_THROWS_AS(rectification_defect(d, delta, 2, 1, 1.0, 1000), SingularDelta);
    const FlowCheckReport rep =
        rectification_defect(d, delta, 2, 1, 1.0, 1000, std::nullopt, 1e-6, QuadraturePath::Segment);
    CHECK(rep.passed);
    CHECK_FALSE(rep.trajectory_error);
}

TEST_CASE("flow-check preconditions") {
    const PlanarDerivation d = D("y", "x");
    CHECK_THROWS_AS(rectification_defect(d, D("1", "0"), 0, 1, 1.0, 100), HypothesisViolation);
    CHECK_THROWS_AS(rectification_defect(d, D("x", "y"), 1, 1, 1.0, 100), SingularDelta);
}
