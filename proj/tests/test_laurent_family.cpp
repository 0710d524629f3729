#include <doctest.h>

#include "newtoncomm/errors.hpp"
#include "newtoncomm/expression.hpp"
#include "newtoncomm/laurent_family.hpp"
#include "newtoncomm/obstruction.hpp"

using namespace newtoncomm;

namespace {

LaurentBiPoly L(const char* s, int t) { return parse_laurent_bipoly(s, t); }

} // namespace

TEST_CASE("k = 1 family") {
    const LaurentFamily fam = build_family(1);
    CHECK(fam.t == 1);
    CHECK(fam.a == std::vector<Rational>{-1, 3, 1, 1});
    CHECK(fam.alpha.dx == L("y", 1));
    CHECK(fam.alpha.dy == L("x^(-3)", 1));
    CHECK(fam.beta.dx == L("x*y^2 - x^(-1)", 1));
    CHECK(fam.beta.dy == L("y^3 + 3*x^(-2)*y", 1));
    CHECK(bracket(fam.alpha, fam.beta).is_zero());
}

TEST_CASE("k = 2 family") {
    const LaurentFamily fam = build_family(2);
    CHECK(fam.t == 3);
    CHECK(fam.a == std::vector<Rational>{-27, 45, 18, 10, 1, 1});
    CHECK(fam.alpha.dy == L("x^(-5/3)", 3));
    CHECK(bracket(fam.alpha, fam.beta).is_zero());
    CHECK(ratio_identity_holds(fam));
    CHECK(beta_has_family_shape(fam));
}

TEST_CASE("families commute and r is a first integral of alpha") {
    for (int k = 1; k <= 5; ++k) {
        const LaurentFamily fam = build_family(k);
        CHECK(bracket(fam.alpha, fam.beta).is_zero());
        CHECK(ratio_identity_holds(fam));
        CHECK(beta_has_family_shape(fam));
        const LaurentBiPoly r = first_integral(k);
        CHECK(apply(fam.alpha, r).is_zero());
        CHECK_FALSE(apply(fam.beta, r).is_zero());
    }
    CHECK(first_integral(2) == L("y^2 + 3*x^(-2/3)", 3));
}

TEST_CASE("a_top scales the whole family") {
    const LaurentFamily one = build_family(3), seven = build_family(3, Rational(7));
    for (std::size_t i = 0; i < one.a.size(); ++i) CHECK(seven.a[i] == Rational(7) * one.a[i]);
    CHECK(bracket(seven.alpha, seven.beta).is_zero());
}

TEST_CASE("witnesses are roots of P_m") {
    for (int m = 3; m <= 9; m += 2) {
        const UniPoly P = build_obstruction(m).P;
        for (int k = 1; 2 * k + 1 <= m; ++k) {
            const PmWitness w = pm_witness(m, k);
            CHECK(w.N == Rational(-(2 * k + 1), 2 * k - 1));
            CHECK(bracket(w.alpha, w.witness).is_zero());
            CHECK(has_witness_shape(w));
            CHECK(P.evaluate(w.N).is_zero());
        }
        const PmWitness lin = pm_witness_linear(m);
        CHECK(lin.N == Rational(1));
        CHECK(bracket(lin.alpha, lin.witness).is_zero());
        CHECK(has_witness_shape(lin));
        CHECK(P.evaluate(lin.N).is_zero());
    }
}

TEST_CASE("invalid inputs") {
    CHECK_THROWS_AS(build_family(0), InvalidInput);
    CHECK_THROWS_AS(build_family(1, Rational(0)), InvalidInput);
    CHECK_THROWS_AS(pm_witness(4, 1), InvalidInput);
    CHECK_THROWS_AS(pm_witness(3, 2), InvalidInput);
    CHECK_THROWS_AS(pm_witness(5, 0), InvalidInput);
    CHECK_THROWS_AS(pm_witness_linear(1), InvalidInput);
    CHECK_THROWS_AS(first_integral(0), InvalidInput);
}
