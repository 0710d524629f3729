#include <doctest.h>

#include "newtoncomm/errors.hpp"
#include "newtoncomm/expression.hpp"
#include "newtoncomm/obstruction.hpp"

using namespace newtoncomm;

namespace {

UniPoly X(const char* s) { return parse_unipoly(s); }

std::vector<Rational> values(const std::vector<RationalRoot>& roots) {
    std::vector<Rational> out;
    for (const auto& r : roots) out.push_back(r.value);
    return out;
}

} // namespace

TEST_CASE("P_3 and its T chain") {
    const ObstructionPoly p = build_obstruction(3);
    REQUIRE(p.T.size() == 4);
    CHECK(p.T[3] == X("1"));
    CHECK(p.T[2] == X("1"));
    CHECK(p.T[1] == X("x - 3"));
    CHECK(p.T[0] == X("-x - 5"));
    CHECK(p.P == X("2*x^2 + 4*x - 6"));
    CHECK(p.P.evaluate(Rational(-1)) == Rational(-8));
}

TEST_CASE("P_5 and its T chain") {
    const ObstructionPoly p = build_obstruction(5);
    CHECK(p.T[3] == X("x - 5"));
    CHECK(p.T[2] == X("-3*x - 9"));
    CHECK(p.T[1] == X("-6*x^2 + 30"));
    CHECK(p.T[0] == X("6*x^2 + 48*x + 66"));
    CHECK(p.P == X("-18*x^3 - 66*x^2 - 6*x + 90"));
}

TEST_CASE("P_m vanishes on the expected set") {
    for (int m = 3; m <= 11; m += 2) {
        const ObstructionPoly p = build_obstruction(m);
        const auto expected = expected_root_set(m);
        CHECK(static_cast<int>(expected.size()) == (m + 1) / 2);
        for (const auto& s : expected) CHECK(p.P.evaluate(s).is_zero());
        CHECK(p.P.degree() <= (m + 1) / 2);
        CHECK_FALSE(p.P.evaluate(Rational(-1)).is_zero());
        CHECK(values(rational_roots(p.P)) == expected);
        CHECK(certify_obstruction(m).passed());
    }
}

TEST_CASE("expected root set") {
    CHECK(expected_root_set(3) == std::vector<Rational>{-3, 1});
    CHECK(expected_root_set(7) == std::vector<Rational>{-3, Rational(-5, 3), Rational(-7, 5), 1});
}

TEST_CASE("rational roots") {
    CHECK(rational_roots(X("x^2 + 1")).empty());
    CHECK(rational_roots(X("x^2 - 2")).empty());
    CHECK(rational_roots(X("7")).empty());
    CHECK(rational_roots(X("x^3")) == std::vector<RationalRoot>{{0, 3}});
    // (x - 1)^2 (2x + 3) (x^2 + 1)
    const auto r = rational_roots(X("(x - 1)^2 * (2*x + 3) * (x^2 + 1)"));
    CHECK(r == std::vector<RationalRoot>{{Rational(-3, 2), 1}, {1, 2}});
    CHECK(rational_roots(UniPoly{Rational(-1, 9), 0, Rational(1, 4)}) == std::vector<RationalRoot>{{Rational(-2, 3), 1}, {Rational(2, 3), 1}});
    CHECK_THROWS_AS(rational_roots(UniPoly()), InvalidInput);
}

TEST_CASE("invalid m") {
    CHECK_THROWS_AS(build_obstruction(4), InvalidInput);
    CHECK_THROWS_AS(build_obstruction(1), InvalidInput);
    CHECK_THROWS_AS(build_obstruction(-3), InvalidInput);
}

TEST_CASE("a mutated recurrence is caught") {
    for (int m : {3, 5, 7}) {
        const ObstructionReport bad = certify_obstruction(m, 1);
        CHECK_FALSE(bad.passed());
        CHECK_FALSE(bad.roots_match);
    }
}
