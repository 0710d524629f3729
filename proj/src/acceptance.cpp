#include "newtoncomm/acceptance.hpp"

#include "newtoncomm/commutant.hpp"
#include "newtoncomm/expression.hpp"
#include "newtoncomm/integrability.hpp"
#include "newtoncomm/laurent_family.hpp"
#include "newtoncomm/obstruction.hpp"
#include "newtoncomm/parity.hpp"
#include "newtoncomm/random_poly.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <cmath>
#include <functional>
#include <sstream>

namespace newtoncomm {

namespace {

// Each criterion returns an empty string on success and a description of the first
// failure otherwise.
using Body = std::function<std::string(std::ostringstream& notes)>;

std::string ac1_rank_one(std::ostringstream& notes) {
    int runs = 0;
    for (const char* fs : {"6*x^2 + 5", "x^2", "x^3 - x", "x^5 + 2*x^2 - 1"}) {
        const UniPoly f = parse_unipoly(fs);
        for (int M : {1, 3, 5, 7}) {
            const RankOneCertificate cert = certify_rank_one(f, M);
            const int expected = (M - 1) / 2 + 1;
            const int got = static_cast<int>(cert.commutant.basis.size());
            if (got != expected)
                return std::string("f = ") + fs + ", M = " + std::to_string(M) + ": dimension " +
                       std::to_string(got) + ", expected " + std::to_string(expected);
            if (!cert.passed) return std::string("f = ") + fs + ", M = " + std::to_string(M) + ": " + cert.failure;
            ++runs;
        }
    }
    notes << runs << " (f, M) pairs certified";
    return {};
}

std::string ac2_negative_control(std::ostringstream& notes) {
    const UniPoly f = UniPoly::x();
    const CommutantBasis basis = solve_commutant(f, 1);
    int failing = 0;
    for (const auto& g : basis.basis) {
        try {
            decompose_in_H(f, g);
        } catch (const NotAMultiple&) {
            ++failing;
        }
    }
    if (failing == 0) return "f = x, M = 1: every commutant element decomposes in K[H]";

    // Stride through the coefficient grid {-2..2}^6 (minus zero) for 191 cases,
    // then add one representative per branch of the case analysis (200 in total).
    std::vector<std::array<int, 6>> cases;
    const int total = 15625;
    for (int n = 1; n < total && cases.size() < 191; n += 78) {
        std::array<int, 6> c{};
        int r = n;
        for (auto& v : c) {
            v = r % 5 - 2;
            r /= 5;
        }
        if (std::any_of(c.begin(), c.end(), [](int v) { return v != 0; })) cases.push_back(c);
    }
    for (auto c : std::vector<std::array<int, 6>>{{0, 0, 3, 0, 0, 5}, {2, 0, 0, 0, 2, 0}, {0, 1, 0, 1, 0, 0},
                                                  {1, 0, 1, 0, 1, 2}, {0, 0, 0, 2, 0, 1}, {0, 0, 1, 1, 2, 0},
                                                  {1, 1, 0, 0, 0, 2}, {2, 1, 1, 4, 2, 3}, {0, 1, 1, 0, 2, 0}})
        cases.push_back(c);
    std::map<std::string, int> by_case;
    for (const auto& c : cases) {
        const BiPoly x = bipoly_x(), y = bipoly_y();
        const PlanarDerivation d{Rational(c[0]) * x + Rational(c[1]) * y + BiPoly(UniPoly(c[2])),
                                 Rational(c[3]) * x + Rational(c[4]) * y + BiPoly(UniPoly(c[5]))};
        const LinearizationResult r = companion_for_linear(d);
        if (!bracket(d, r.delta).is_zero() || transversality_determinant(d, r.delta).is_zero())
            return "companion check failed for (" + to_string(d.dx) + ", " + to_string(d.dy) + ")";
        ++by_case[r.case_label];
    }
    notes << failing << " of " << basis.basis.size() << " elements outside K[H]*delta_f; " << cases.size()
          << " linear derivations:";
    for (const auto& [label, n] : by_case) notes << " " << label << "=" << n;
    return {};
}

std::string ac3_parity(std::ostringstream& notes) {
    int checks = 0;
    for (const char* fs : {"x^2", "x^3"}) {
        const LemmaReport report = check_lemma_suite(parse_unipoly(fs), 8);
        for (const auto& c : report.checks)
            if (!c.passed) return std::string("f = ") + fs + ": " + c.name + " failed (" + c.detail + ")";
        checks += static_cast<int>(report.checks.size());
    }
    notes << checks << " lemma checks";
    return {};
}

std::string ac4_obstruction(std::ostringstream& notes, bool fault) {
    const int shift = fault ? 1 : 0;
    for (int m : {3, 5, 7, 9, 11}) {
        const ObstructionReport r = certify_obstruction(m, shift);
        if (!r.passed()) {
            std::string why = !r.degree_bound ? "degree bound" : !r.nonzero_at_minus_one ? "P(-1) = 0"
                            : !r.roots_match ? "root set differs from S" : !r.splits ? "does not split"
                            : !r.t_values_at_minus_one ? "T(-1) equalities" : "T degree bounds";
            return "m = " + std::to_string(m) + ": " + why + " (P = " + to_string(r.poly.P, "X") + ")";
        }
    }
    const UniPoly p3 = build_obstruction(3, shift).P;
    if (p3 != UniPoly{-6, 4, 2}) return "P_3 = " + to_string(p3, "X") + ", expected 2*X^2 + 4*X - 6";
    notes << "m in {3,5,7,9,11}; P_3 = " << to_string(p3, "X");
    return {};
}

std::string ac5_laurent(std::ostringstream& notes) {
    int families = 0, witnesses = 0;
    for (int k = 1; k <= 5; ++k) {
        for (const Rational& a : {Rational(1), Rational(-2), Rational(7, 3)}) {
            const LaurentFamily fam = build_family(k, a);
            const std::string tag = "k = " + std::to_string(k) + ", a_top = " + a.to_string();
            if (!bracket(fam.alpha, fam.beta).is_zero()) return tag + ": alpha and beta do not commute";
            if (!apply(fam.alpha, first_integral(k)).is_zero()) return tag + ": alpha(r) != 0";
            if (!ratio_identity_holds(fam)) return tag + ": ratio identity fails";
            ++families;
        }
    }
    for (int m = 3; m <= 11; m += 2) {
        for (int k = 1; 2 * k + 1 <= m; ++k) {
            const PmWitness w = pm_witness(m, k);
            if (!bracket(w.alpha, w.witness).is_zero())
                return "witness (m = " + std::to_string(m) + ", k = " + std::to_string(k) + ") does not commute";
            if (w.witness.dy.coeff(m).is_zero())
                return "witness (m = " + std::to_string(m) + ", k = " + std::to_string(k) + ") has d_m = 0";
            ++witnesses;
        }
    }
    notes << families << " families, " << witnesses << " witnesses";
    return {};
}

std::string ac6_flow(std::ostringstream& notes) {
    const ExampleFixture fx = example_fixture();
    const ReferenceSolution ref = [&](double t) { return fx.solution(0.0, 1.0, t); };
    const FlowCheckReport r = rectification_defect(fx.d, fx.delta, 0, 1, 1.0, 10000, ref, 1e-6);
    notes << "max |F - (t,0)| = " << r.max_defect << ", trajectory error = " << *r.trajectory_error;
    if (!(*r.trajectory_error < 1e-6)) return "trajectory deviates from (tan t, cos^2 t)";
    if (!(r.max_defect < 1e-6)) return "rectification defect too large";
    return {};
}

std::string ac7_calculus(std::ostringstream& notes, std::uint64_t seed) {
    RandomPolys rnd(seed);
    for (int i = 0; i < 200; ++i) {
        const PlanarDerivation d1 = rnd.derivation(3, 3), d2 = rnd.derivation(3, 3), d3 = rnd.derivation(3, 3);
        const BiPoly p = rnd.bipoly(3, 3), q = rnd.bipoly(3, 3);
        if (apply(d1, p * q) != apply(d1, p) * q + p * apply(d1, q)) return "Leibniz rule fails in case " + std::to_string(i);
        const PlanarDerivation jac =
            bracket(d1, bracket(d2, d3)) + bracket(d2, bracket(d3, d1)) + bracket(d3, bracket(d1, d2));
        if (!jac.is_zero()) return "Jacobi identity fails in case " + std::to_string(i);
        const BiPoly a = rnd.bipoly(4, 5);
        const BiPoly ia = integrate_dx(a);
        if (ia.derivative_x() != a) return "d/dx of the antiderivative differs in case " + std::to_string(i);
        for (const auto& c : ia.ycoeffs())
            if (!c.coeff(0).is_zero()) return "antiderivative has a constant term in case " + std::to_string(i);
    }
    for (int i = 0; i < 50; ++i) {
        const UniPoly f = rnd.unipoly(rnd.uniform(0, 6));
        const PlanarDerivation delta = newton_derivation(f);
        if (!apply(delta, hamiltonian(f)).is_zero()) return "delta_f(H) != 0 for f = " + to_string(f);
        if (!divergence(delta).is_zero()) return "div delta_f != 0 for f = " + to_string(f);
    }
    notes << "200 Leibniz/Jacobi/antiderivative cases, 50 Hamiltonians";
    return {};
}

CriterionResult run_one(const std::string& id, const std::string& title, double limit, const Body& body) {
    CriterionResult res;
    res.id = id;
    res.title = title;
    res.time_limit = limit;
    std::ostringstream notes;
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
        failure = body(notes);
    } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && res.seconds > limit) failure = "exceeded time limit";
    res.passed = failure.empty();
    res.detail = res.passed ? notes.str() : failure;
    return res;
}

} // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
    std::vector<CriterionResult> out;
    out.push_back(run_one("ac1_rank_one_certificate", "commutant is K[H]*delta_f for deg f >= 2", 60, ac1_rank_one));
    out.push_back(run_one("ac2_negative_control", "deg f = 1 escapes rank one; degree <= 1 fields are integrable", 30,
                          ac2_negative_control));
    out.push_back(run_one("ac3_parity_lemmas", "parity system lemmas for f in {x^2, x^3}, m <= 8", 120, ac3_parity));
    out.push_back(run_one("ac4_obstruction_roots", "P_m degree bound, P_m(-1) != 0 and roots equal S", 5,
                          [&](std::ostringstream& n) { return ac4_obstruction(n, options.inject_pm_fault); }));
    out.push_back(run_one("ac5_laurent_family", "Laurent commuting families and P_m witnesses", 30, ac5_laurent));
    out.push_back(run_one("ac6_classical_formula", "RK4 flow and rectifying map for the tan/cos^2 example", 10, ac6_flow));
    out.push_back(run_one("ac7_calculus_kernel", "Leibniz, Jacobi, antiderivative and Hamiltonian properties", 10,
                          [&](std::ostringstream& n) { return ac7_calculus(n, options.seed); }));
    return out;
}

nlohmann::json acceptance_json(const std::vector<CriterionResult>& results, const AcceptanceOptions& options) {
    nlohmann::json crit = nlohmann::json::array();
    bool all = true;
    for (const auto& r : results) {
        crit.push_back({{"id", r.id},
                        {"title", r.title},
                        {"passed", r.passed},
                        {"seconds", r.seconds},
                        {"time_limit_seconds", r.time_limit},
                        {"detail", r.detail}});
        all = all && r.passed;
    }
    return {{"seed", options.seed}, {"fault_injected", options.inject_pm_fault}, {"criteria", crit}, {"passed", all}};
}

} // namespace newtoncomm
