#include <doctest.h>

#include "newtoncomm/commutant.hpp"
#include "newtoncomm/errors.hpp"
#include "newtoncomm/expression.hpp"
#include "newtoncomm/parity.hpp"
#include "newtoncomm/random_poly.hpp"

#include <algorithm>
#include <map>
#include <utility>

using namespace newtoncomm;

namespace {

std::vector<std::string> rendered(const ParitySystem& sys) {
    std::vector<std::string> out;
    for (const auto& eq : sys.equations) out.push_back(to_string(eq));
    return out;
}

using Entries = std::map<std::pair<RowKey, ColumnKey>, Rational>;

void collect(const CoefficientSystem& sys, Entries& into) {
    for (std::size_t r = 0; r < sys.matrix.rows.size(); ++r)
        for (const auto& [c, v] : sys.matrix.rows[r]) {
            auto& slot = into[{sys.row_keys[r], sys.columns[static_cast<std::size_t>(c)]}];
            slot += v;
        }
    std::erase_if(into, [](const auto& kv) { return kv.second.is_zero(); });
}

Unknown c(int i) { return {'c', i}; }
Unknown d(int i) { return {'d', i}; }

} // namespace

TEST_CASE("kind names") {
    for (ParityKind k : {ParityKind::Io, ParityKind::IIo, ParityKind::Ie, ParityKind::IIe})
        CHECK(parse_parity_kind(to_string(k)) == k);
    CHECK_THROWS_AS(parse_parity_kind("III"), InvalidInput);
    CHECK_THROWS_AS(build_system(ParityKind::Io, 1, parse_unipoly("x^2")), InvalidInput);
}

TEST_CASE("equation tables") {
    const UniPoly f = parse_unipoly("x^2");
    CHECK(rendered(build_system(ParityKind::Io, 3, f)) == std::vector<std::string>{
        "c_3' = 0", "d_2' = f'*c_3", "c_1' + 3*f*c_3 = d_2", "d_0' + 2*f*d_2 = f'*c_1", "f*c_1 = d_0"});
    CHECK(rendered(build_system(ParityKind::IIo, 3, f)) == std::vector<std::string>{
        "d_3' = 0", "c_2' = d_3", "d_1' + 3*f*d_3 = f'*c_2", "c_0' + 2*f*c_2 = d_1", "f*d_1 = f'*c_0"});
    CHECK(rendered(build_system(ParityKind::Ie, 2, f)) == std::vector<std::string>{
        "d_2' = 0", "c_1' = d_2", "d_0' + 2*f*d_2 = f'*c_1", "f*c_1 = d_0"});
    CHECK(rendered(build_system(ParityKind::IIe, 2, f)) == std::vector<std::string>{
        "c_2' = 0", "d_1' = f'*c_2", "c_0' + 2*f*c_2 = d_1", "f*d_1 = f'*c_0"});

    const ParitySystem io5 = build_system(ParityKind::Io, 5, f);
    CHECK(io5.equations.size() == 7);
    CHECK(io5.equations.front().label == 6);
    CHECK(io5.equations.back().label == 0);
    CHECK(io5.unknowns.front() == c(5));
    CHECK(build_system(ParityKind::IIe, 4, f).unknowns.front() == c(4));
    CHECK(build_system(ParityKind::Ie, 4, f).unknowns.front() == d(4));
}

TEST_CASE("the two parity systems together are the commutant system") {
    for (const char* fs : {"x^2", "x^3 - 2*x + 1", "5*x^4"}) {
        const UniPoly f = parse_unipoly(fs);
        for (int M = 2; M <= 6; ++M) {
            const int cap = default_xcap(f, M);
            Entries whole, parts;
            collect(commutant_system(f, M, cap), whole);
            const bool odd = M % 2 != 0;
            collect(discretize(build_system(odd ? ParityKind::Io : ParityKind::Ie, M, f), cap), parts);
            collect(discretize(build_system(odd ? ParityKind::IIo : ParityKind::IIe, M, f), cap), parts);
            CHECK_MESSAGE(whole == parts, "f = " << fs << ", M = " << M);
        }
    }
}

TEST_CASE("residuals vanish on solutions and detect non-solutions") {
    const UniPoly f = parse_unipoly("x^3 + x");
    for (ParityKind k : {ParityKind::Io, ParityKind::IIo, ParityKind::Ie, ParityKind::IIe}) {
        const int m = (k == ParityKind::Io || k == ParityKind::IIo) ? 5 : 4;
        const ParitySystem sys = build_system(k, m, f);
        const SolutionSpace space = solve_system(sys);
        for (const auto& sol : space.basis)
            for (const auto& eq : sys.equations) CHECK(residual(eq, f, sol).is_zero());
    }
    const ParitySystem io3 = build_system(ParityKind::Io, 3, f);
    const Assignment bogus{{c(1), UniPoly(1)}};
    CHECK(residual(io3.equations.back(), f, bogus) == f);  // f*c_1 - d_0
}

TEST_CASE("Io solutions are H-multiples of delta_f") {
    const UniPoly f = parse_unipoly("6*x^2 + 5");
    const SolutionSpace space = solve_system(build_system(ParityKind::Io, 5, f));
    CHECK(space.dimension == 3);
    for (const auto& sol : space.basis) {
        PlanarDerivation g;
        for (const auto& [u, p] : sol) {
            const BiPoly term = BiPoly::monomial(p, u.index);
            if (u.letter == 'c') g.dx = g.dx + term; else g.dy = g.dy + term;
        }
        CHECK(reconstruct(f, decompose_in_H(f, g)) == g);
    }
}

TEST_CASE("forced unknowns") {
    const UniPoly f = parse_unipoly("x^2");
    const auto forced = [&](ParityKind k, int m) { return solve_system(build_system(k, m, f)).forced; };
    const auto contains = [](const std::vector<Unknown>& v, Unknown u) { return std::find(v.begin(), v.end(), u) != v.end(); };
    CHECK(contains(forced(ParityKind::IIo, 3), d(3)));
    CHECK(contains(forced(ParityKind::Ie, 2), d(2)));
    CHECK(contains(forced(ParityKind::IIe, 2), c(2)));
    CHECK(contains(forced(ParityKind::Ie, 4), d(4)));
    CHECK(contains(forced(ParityKind::IIe, 4), c(4)));
    CHECK_FALSE(contains(forced(ParityKind::Io, 3), c(3)));
    CHECK(solve_system(build_system(ParityKind::IIo, 3, f)).dimension == 0);
}

TEST_CASE("deg_y <= 1 commutant is the line through delta_f") {
    RandomPolys rnd(4242);
    for (int i = 0; i < 20; ++i) {
        UniPoly f;
        const int deg = rnd.uniform(2, 4);
        while (f.degree() != deg) f = rnd.unipoly(deg);
        const CommutantBasis b = solve_commutant(f, 1);
        REQUIRE(b.basis.size() == 1);
        CHECK(decompose_in_H(f, b.basis[0]).q_coeffs.size() == 1);
    }
}

TEST_CASE("lemma suite") {
    const LemmaReport report = check_lemma_suite(parse_unipoly("x^3 - x"), 7);
    CHECK(report.all_passed());
    CHECK(report.checks.size() == 12);  // two checks for each m = 2..7
    CHECK(report.checks.front().m == 2);

    CHECK_THROWS_AS(check_lemma_suite(UniPoly::x(), 3), HypothesisViolation);
    // f = x: H * (x, y) commutes with delta_f, so d_3 is no longer forced in (IIo)_3.
    const LemmaReport degenerate = check_lemma_suite(UniPoly::x(), 3, false);
    CHECK_FALSE(degenerate.all_passed());
    const auto failing = std::find_if(degenerate.checks.begin(), degenerate.checks.end(),
                                      [](const LemmaCheck& c) { return !c.passed; });
    REQUIRE(failing != degenerate.checks.end());
    CHECK(failing->name == "(IIo)_3 forces d_3 = 0");
}
