#include <doctest.h>

#include "newtoncomm/commutant.hpp"
#include "newtoncomm/errors.hpp"
#include "newtoncomm/expression.hpp"
#include "newtoncomm/random_poly.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>

using namespace newtoncomm;

namespace {

PlanarDerivation D(const char* dx, const char* dy) { return {parse_bipoly(dx), parse_bipoly(dy)}; }

} // namespace

TEST_CASE("default x-degree cap") {
    CHECK(default_xcap(parse_unipoly("x^2"), 3) == 2 * 3 + 1);
    CHECK(default_xcap(parse_unipoly("x^2"), 4) == 3 * 3 + 1);
    CHECK(default_xcap(UniPoly(), 0) == 2);
}

TEST_CASE("f = x^2, M = 3 gives delta_f and H delta_f") {
    const UniPoly f = parse_unipoly("x^2");
    const CommutantBasis b = solve_commutant(f, 3);
    REQUIRE(b.basis.size() == 2);
    const PlanarDerivation delta = newton_derivation(f);
    // Reduced echelon order puts the higher y-degree first.
    CHECK(b.basis[0] == hamiltonian(f) * delta);
    CHECK(b.basis[1] == delta);
    CHECK(oracle::commutant_dimension(f, 3, 2 * b.xcap) == 2);
}

TEST_CASE("f = x, M = 1 contains the Euler field") {
    const UniPoly f = UniPoly::x();
    const CommutantBasis b = solve_commutant(f, 1);
    CHECK(b.basis.size() == 2);
    CHECK(std::find(b.basis.begin(), b.basis.end(), D("x", "y")) != b.basis.end());
    CHECK(oracle::commutant_dimension(f, 1, 2 * b.xcap) == 2);
    CHECK_THROWS_AS(decompose_in_H(f, D("x", "y")), NotAMultiple);
}

TEST_CASE("f = 6x^2 + 5, M = 1 is spanned by delta_f") {
    const UniPoly f = parse_unipoly("6*x^2 + 5");
    const CommutantBasis b = solve_commutant(f, 1);
    REQUIRE(b.basis.size() == 1);
    CHECK(b.basis[0] == newton_derivation(f));
}

TEST_CASE("degenerate inputs") {
    CHECK_THROWS_AS(solve_commutant(parse_unipoly("x^2"), -1), InvalidInput);
    CHECK_THROWS_AS(solve_commutant(parse_unipoly("x^2"), 2, -3), InvalidInput);
    CHECK(solve_commutant(parse_unipoly("x^2"), 0).basis.empty());
    // f = 0: (1, 0), (y, 0) and (x, y) are all there for M = 1.
    CHECK(solve_commutant(UniPoly(), 1).basis.size() == 3);
    CHECK_THROWS_AS(certify_rank_one(UniPoly::x(), 3), HypothesisViolation);
    CHECK_THROWS_AS(certify_rank_one(UniPoly(7), 3), HypothesisViolation);
}

TEST_CASE("decompose_in_H") {
    const UniPoly f = parse_unipoly("x^2");
    const PlanarDerivation delta = newton_derivation(f);
    const BiPoly H = hamiltonian(f);
    CHECK(decompose_in_H(f, delta).q_coeffs == std::vector<Rational>{1});
    CHECK(decompose_in_H(f, H * delta).q_coeffs == std::vector<Rational>{0, 1});
    const PlanarDerivation g = (Rational(3) * H.pow(2) - BiPoly(UniPoly(Rational(1, 2)))) * delta;
    const HDecomposition q = decompose_in_H(f, g);
    CHECK(q.q_coeffs == std::vector<Rational>{Rational(-1, 2), 0, 3});
    CHECK(reconstruct(f, q) == g);

    CHECK_THROWS_AS(decompose_in_H(f, D("x", "x^3")), NotAMultiple);             // not divisible by y
    CHECK_THROWS_AS(decompose_in_H(f, D("y", "x")), NotAMultiple);               // q f mismatch
    CHECK_THROWS_AS(decompose_in_H(f, bipoly_x() * delta), NotAMultiple);        // x-dependent leading term
    CHECK_THROWS_AS(decompose_in_H(f, bipoly_y() * delta), NotAMultiple);        // odd y-degree
}

TEST_CASE("scaling gamma scales the decomposition") {
    const UniPoly f = parse_unipoly("x^3 - x");
    const PlanarDerivation g = (hamiltonian(f) + BiPoly(UniPoly(2))) * newton_derivation(f);
    const Rational lambda(-7, 3);
    const HDecomposition q = decompose_in_H(f, g), ql = decompose_in_H(f, lambda * g);
    REQUIRE(q.q_coeffs.size() == ql.q_coeffs.size());
    for (std::size_t i = 0; i < q.q_coeffs.size(); ++i) CHECK(ql.q_coeffs[i] == lambda * q.q_coeffs[i]);
}

TEST_CASE("certificates") {
    const RankOneCertificate a = certify_rank_one(parse_unipoly("6*x^2 + 5"), 5);
    CHECK(a.passed);
    REQUIRE(a.decompositions.size() == 3);
    CHECK(a.decompositions[0].q_coeffs == std::vector<Rational>{0, 0, 1});
    CHECK(a.decompositions[1].q_coeffs == std::vector<Rational>{0, 1});
    CHECK(a.decompositions[2].q_coeffs == std::vector<Rational>{1});

    const RankOneCertificate b = certify_rank_one(parse_unipoly("x^3 - x"), 7);
    CHECK(b.passed);
    CHECK(b.commutant.basis.size() == 4);
}

TEST_CASE("solver is sound and complete against the dense oracle") {
    for (const char* fs : {"x^2", "x^2 + x", "x^3", "2*x^3 - x + 1"}) {
        const UniPoly f = parse_unipoly(fs);
        for (int M : {1, 3, 5}) {
            const CommutantBasis b = solve_commutant(f, M);
            for (const auto& g : b.basis) CHECK(bracket(newton_derivation(f), g).is_zero());
            CHECK(static_cast<int>(b.basis.size()) == oracle::commutant_dimension(f, M, b.xcap));
            CHECK(static_cast<int>(b.basis.size()) == oracle::commutant_dimension(f, M, 2 * b.xcap));
            CHECK(solve_commutant(f, M, 2 * b.xcap).basis == b.basis);
        }
    }
}

TEST_CASE("random f: dimension and decomposition") {
    RandomPolys rnd(777);
    for (int i = 0; i < 50; ++i) {
        UniPoly f;
        const int deg = rnd.uniform(2, 5);
        while (f.degree() != deg) f = rnd.unipoly(deg);
        const int M = rnd.uniform(1, 5);
        const CommutantBasis b = solve_commutant(f, M);
        CHECK(static_cast<int>(b.basis.size()) == (M - 1) / 2 + 1);
        for (const auto& g : b.basis) CHECK(reconstruct(f, decompose_in_H(f, g)) == g);
    }
}

TEST_CASE("thread cap does not change the basis") {
    const UniPoly f = parse_unipoly("x^4 - 3*x");
    const auto reference = solve_commutant(f, 5).basis;
    setenv("COMMUTANT_THREADS", "1", 1);
    const auto serial = solve_commutant(f, 5).basis;
    unsetenv("COMMUTANT_THREADS");
    CHECK(serial == reference);
}
