#include <doctest.h>

#include "newtoncomm/derivation.hpp"
#include "newtoncomm/errors.hpp"
#include "newtoncomm/expression.hpp"
#include "newtoncomm/random_poly.hpp"

using namespace newtoncomm;

namespace {

PlanarDerivation D(const char* dx, const char* dy) { return {parse_bipoly(dx), parse_bipoly(dy)}; }

} // namespace

TEST_CASE("Newton derivation acts on generators") {
    const UniPoly f = parse_unipoly("6*x^2 + 5");
    const PlanarDerivation delta = newton_derivation(f);
    CHECK(delta == D("y", "6*x^2 + 5"));
    CHECK(apply(delta, bipoly_x()) == bipoly_y());
    CHECK(apply(delta, parse_bipoly("7/3")).is_zero());
    CHECK(newton_derivation(UniPoly()) == D("y", "0"));
    CHECK(newton_derivation(UniPoly::x()) == D("y", "x"));
}

TEST_CASE("application follows the Leibniz expansion") {
    // delta_f(y^3) = 3 y^2 f for f = x^2.
    const PlanarDerivation delta = newton_derivation(parse_unipoly("x^2"));
    CHECK(apply(delta, parse_bipoly("y^3")) == parse_bipoly("3*x^2*y^2"));
}

TEST_CASE("brackets of known pairs") {
    const PlanarDerivation delta = newton_derivation(parse_unipoly("x^3 - x"));
    CHECK(bracket(delta, delta).is_zero());
    CHECK(bracket(D("1 + x^2", "-2*x*y"), D("0", "y")).is_zero());
    CHECK(bracket(D("y", "x"), D("x", "y")).is_zero());
    CHECK(bracket(D("y", "0"), D("x", "0")) == D("y", "0"));
}

TEST_CASE("Hamiltonian") {
    CHECK(hamiltonian(parse_unipoly("6*x^2 + 5")) == parse_bipoly("y^2 - 4*x^3 - 10*x"));
    CHECK(hamiltonian(UniPoly()) == parse_bipoly("y^2"));
    CHECK(hamiltonian(parse_unipoly("x^2")) == parse_bipoly("y^2 - 2/3*x^3"));
}

TEST_CASE("divergence") {
    CHECK(divergence(newton_derivation(parse_unipoly("x^4 + 1"))).is_zero());
    CHECK(divergence(D("1 + x^2", "-2*x*y")).is_zero());
    CHECK(divergence(D("x", "y")) == parse_bipoly("2"));
}

TEST_CASE("Laurent derivations refuse mixed root indices") {
    const LaurentDerivation a{to_laurent(parse_bipoly("y"), 1), to_laurent(parse_bipoly("x"), 1)};
    const LaurentDerivation b{to_laurent(parse_bipoly("y"), 3), to_laurent(parse_bipoly("x"), 3)};
    CHECK_THROWS_AS(bracket(a, b), RingMismatch);
    CHECK_THROWS_AS(apply(a, to_laurent(parse_bipoly("y"), 3)), RingMismatch);
    CHECK(bracket(to_laurent(D("y", "x"), 3), b).is_zero());
}

TEST_CASE("Jacobi identity, Leibniz rule, bilinearity") {
    RandomPolys rnd(31337);
    for (int i = 0; i < 200; ++i) {
        const PlanarDerivation d1 = rnd.derivation(3, 3), d2 = rnd.derivation(3, 3), d3 = rnd.derivation(3, 3);
        const PlanarDerivation jac = bracket(d1, bracket(d2, d3)) + bracket(d2, bracket(d3, d1)) + bracket(d3, bracket(d1, d2));
        CHECK(jac.is_zero());
        CHECK(bracket(d1, d2) == Rational(-1) * bracket(d2, d1));
        const Rational s = rnd.rational();
        CHECK(bracket(s * d1 + d3, d2) == s * bracket(d1, d2) + bracket(d3, d2));

        const BiPoly p = rnd.bipoly(3, 3), q = rnd.bipoly(3, 3);
        CHECK(apply(d1, p * q) == apply(d1, p) * q + p * apply(d1, q));
    }
}

TEST_CASE("module structure over first integrals") {
    // [q D1, D2] = q [D1, D2] - D2(q) D1; with [D1, D2] = 0 and D2(q) = 0, q D1 still commutes.
    RandomPolys rnd(8);
    for (int i = 0; i < 50; ++i) {
        const PlanarDerivation d1 = rnd.derivation(2, 2), d2 = rnd.derivation(2, 2);
        const BiPoly q = rnd.bipoly(2, 2);
        CHECK(bracket(q * d1, d2) == q * bracket(d1, d2) - apply(d2, q) * d1);
    }
    const UniPoly f = parse_unipoly("x^3 + 2");
    const PlanarDerivation delta = newton_derivation(f);
    const BiPoly H = hamiltonian(f);
    CHECK(bracket(H.pow(3) * delta, delta).is_zero());
}

TEST_CASE("Hamiltonian is a first integral and delta_f is divergence free") {
    RandomPolys rnd(4242);
    for (int i = 0; i < 50; ++i) {
        const UniPoly f = rnd.unipoly(rnd.uniform(0, 6));
        CHECK(apply(newton_derivation(f), hamiltonian(f)).is_zero());
        CHECK(divergence(newton_derivation(f)).is_zero());
        CHECK(hamiltonian(f).coeff(0).coeff(0).is_zero());
    }
}
