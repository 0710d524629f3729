#include "newtoncomm/cli.hpp"

#include "newtoncomm/acceptance.hpp"
#include "newtoncomm/commutant.hpp"
#include "newtoncomm/errors.hpp"
#include "newtoncomm/expression.hpp"
#include "newtoncomm/integrability.hpp"
#include "newtoncomm/json_io.hpp"
#include "newtoncomm/laurent_family.hpp"
#include "newtoncomm/obstruction.hpp"
#include "newtoncomm/parity.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>

namespace newtoncomm {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kMathFail = 1;
constexpr int kUsage = 2;

std::string q_string(const HDecomposition& q) { return to_string(UniPoly(q.q_coeffs), "H"); }

std::string derivation_string(const PlanarDerivation& d) { return "(" + to_string(d.dx) + ", " + to_string(d.dy) + ")"; }
std::string derivation_string(const LaurentDerivation& d) { return "(" + to_string(d.dx) + ", " + to_string(d.dy) + ")"; }

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

struct Output {
    std::ostream& out;
    bool as_json = false;
    void emit(const json& j) const { out << j.dump(2) << "\n"; }
};

// commutant -----------------------------------------------------------------

int run_commutant(const Output& o, const std::string& f_text, int max_deg_y, std::optional<int> xcap) {
    const UniPoly f = parse_unipoly(f_text);
    const CommutantBasis basis = solve_commutant(f, max_deg_y, xcap);
    json elems = json::array();
    std::vector<std::optional<HDecomposition>> qs;
    for (const auto& g : basis.basis) {
        std::optional<HDecomposition> q;
        try {
            q = decompose_in_H(f, g);
        } catch (const NotAMultiple&) {
        }
        qs.push_back(q);
        json e = derivation_json(g);
        e["q_coeffs"] = q ? rationals_json(q->q_coeffs) : json(nullptr);
        elems.push_back(e);
    }
    if (o.as_json) {
        o.emit({{"f", to_string(f)},
                {"H", to_string(hamiltonian(f))},
                {"max_deg_y", max_deg_y},
                {"xcap", basis.xcap},
                {"dimension", basis.basis.size()},
                {"basis", elems}});
        return kOk;
    }
    o.out << "f = " << to_string(f) << "\nH = " << to_string(hamiltonian(f)) << "\nmax deg_y = " << max_deg_y
          << ", x-degree cap = " << basis.xcap << "\ndimension = " << basis.basis.size() << "\n";
    for (std::size_t i = 0; i < basis.basis.size(); ++i) {
        o.out << "  [" << i << "] " << derivation_string(basis.basis[i]);
        if (qs[i]) o.out << "  = (" << q_string(*qs[i]) << ") * delta_f";
        else o.out << "  not in K[H]*delta_f";
        o.out << "\n";
    }
    return kOk;
}

int run_h_decompose(const Output& o, const std::string& f_text, const std::string& gx, const std::string& gy) {
    const UniPoly f = parse_unipoly(f_text);
    const PlanarDerivation gamma{parse_bipoly(gx), parse_bipoly(gy)};
    try {
        const HDecomposition q = decompose_in_H(f, gamma);
        if (o.as_json) o.emit({{"f", to_string(f)}, {"decomposed", true}, {"q_coeffs", rationals_json(q.q_coeffs)}});
        else o.out << "gamma = (" << q_string(q) << ") * delta_f with H = " << to_string(hamiltonian(f)) << "\n";
        return kOk;
    } catch (const NotAMultiple& e) {
        if (o.as_json) o.emit({{"f", to_string(f)}, {"decomposed", false}, {"reason", e.what()}});
        else o.out << "NotAMultiple: " << e.what() << "\n";
        return kMathFail;
    }
}

int run_certify(const Output& o, const std::string& f_text, int max_deg_y, std::optional<int> xcap) {
    const UniPoly f = parse_unipoly(f_text);
    const RankOneCertificate cert = certify_rank_one(f, max_deg_y, xcap);
    if (o.as_json) {
        json qs = json::array();
        for (const auto& q : cert.decompositions) qs.push_back(rationals_json(q.q_coeffs));
        json basis = json::array();
        for (const auto& g : cert.commutant.basis) basis.push_back(derivation_json(g));
        json j{{"f", to_string(f)},       {"H", to_string(hamiltonian(f))}, {"max_deg_y", max_deg_y},
               {"xcap", cert.commutant.xcap}, {"passed", cert.passed},       {"basis", basis},
               {"q_coeffs", qs}};
        if (cert.counterexample) {
            j["counterexample"] = derivation_json(*cert.counterexample);
            j["failure"] = cert.failure;
        }
        o.emit(j);
    } else {
        o.out << "f = " << to_string(f) << "\nH = " << to_string(hamiltonian(f)) << "\ndimension = "
              << cert.commutant.basis.size() << "\n";
        for (const auto& q : cert.decompositions) o.out << "  q = " << q_string(q) << "\n";
        if (cert.counterexample)
            o.out << "counterexample: " << derivation_string(*cert.counterexample) << " (" << cert.failure << ")\n";
        o.out << verdict(cert.passed) << "\n";
    }
    return cert.passed ? kOk : kMathFail;
}

// parity systems --------------------------------------------------------------

json assignment_json(const Assignment& a) {
    json j = json::object();
    for (const auto& [u, p] : a) j[u.name()] = to_string(p);
    return j;
}

int run_parity(const Output& o, const std::string& kind_text, int m, const std::string& f_text, std::optional<int> xcap) {
    const ParitySystem sys = build_system(parse_parity_kind(kind_text), m, parse_unipoly(f_text));
    const SolutionSpace space = solve_system(sys, xcap);
    std::vector<std::string> forced;
    for (const auto& u : space.forced) forced.push_back(u.name());
    if (o.as_json) {
        json eqs = json::array();
        for (const auto& e : sys.equations) eqs.push_back({{"label", "e_" + std::to_string(e.label)}, {"equation", to_string(e)}});
        json basis = json::array();
        for (const auto& a : space.basis) basis.push_back(assignment_json(a));
        o.emit({{"kind", to_string(sys.kind)},
                {"m", m},
                {"f", to_string(sys.f)},
                {"xcap", space.xcap},
                {"equations", eqs},
                {"dimension", space.dimension},
                {"forced", forced},
                {"basis", basis}});
        return kOk;
    }
    o.out << "(" << to_string(sys.kind) << ")_" << m << " with f = " << to_string(sys.f) << "\n";
    for (const auto& e : sys.equations) o.out << "  e_" << e.label << ": " << to_string(e) << "\n";
    o.out << "x-degree cap = " << space.xcap << "\ndimension = " << space.dimension << "\nforced:";
    for (const auto& n : forced) o.out << " " << n;
    o.out << "\n";
    for (std::size_t i = 0; i < space.basis.size(); ++i) {
        o.out << "  [" << i << "]";
        for (const auto& [u, p] : space.basis[i]) o.out << " " << u.name() << " = " << to_string(p) << ";";
        o.out << "\n";
    }
    return kOk;
}

int run_lemmas(const Output& o, const std::string& f_text, int m_max, bool allow_degenerate) {
    const UniPoly f = parse_unipoly(f_text);
    const LemmaReport report = check_lemma_suite(f, m_max, !allow_degenerate);
    if (o.as_json) {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"name", c.name}, {"kind", to_string(c.kind)}, {"m", c.m}, {"passed", c.passed}, {"detail", c.detail}});
        o.emit({{"f", to_string(f)}, {"m_max", m_max}, {"checks", checks}, {"passed", report.all_passed()}});
    } else {
        for (const auto& c : report.checks) o.out << verdict(c.passed) << "  " << c.name << "  (" << c.detail << ")\n";
        o.out << (report.all_passed() ? "all lemma checks passed" : "some lemma checks failed") << "\n";
    }
    return report.all_passed() ? kOk : kMathFail;
}

// obstruction polynomials and Laurent witnesses ------------------------------

int run_pm(const Output& o, int m) {
    const ObstructionReport r = certify_obstruction(m);
    std::vector<Rational> found;
    for (const auto& root : r.roots) found.push_back(root.value);
    if (o.as_json) {
        json T = json::object();
        for (int i = m; i >= 0; --i) T["T_" + std::to_string(i)] = to_string(r.poly.T[static_cast<std::size_t>(i)], "X");
        json roots = json::array();
        for (const auto& root : r.roots) roots.push_back({{"value", rational_json(root.value)}, {"multiplicity", root.multiplicity}});
        o.emit({{"m", m},
                {"T", T},
                {"P", to_string(r.poly.P, "X")},
                {"roots", roots},
                {"expected", rationals_json(r.expected)},
                {"checks",
                 {{"degree_bound", r.degree_bound},
                  {"nonzero_at_minus_one", r.nonzero_at_minus_one},
                  {"roots_match", r.roots_match},
                  {"splits", r.splits},
                  {"t_values_at_minus_one", r.t_values_at_minus_one},
                  {"t_degree_bounds", r.t_degree_bounds}}},
                {"passed", r.passed()}});
    } else {
        for (int i = m; i >= 0; --i) o.out << "T_" << i << " = " << to_string(r.poly.T[static_cast<std::size_t>(i)], "X") << "\n";
        o.out << "P_" << m << " = " << to_string(r.poly.P, "X") << "\nroots:";
        for (const auto& root : r.roots) {
            o.out << " " << root.value;
            if (root.multiplicity > 1) o.out << " (x" << root.multiplicity << ")";
        }
        o.out << "\nexpected S:";
        for (const auto& s : r.expected) o.out << " " << s;
        o.out << "\ndeg P <= " << (m + 1) / 2 << ": " << verdict(r.degree_bound) << "\nP(-1) != 0: " << verdict(r.nonzero_at_minus_one)
              << "\nroots = S: " << verdict(r.roots_match) << "\nsplits over Q: " << verdict(r.splits)
              << "\nT(-1) equalities: " << verdict(r.t_values_at_minus_one) << "\nT degree bounds: " << verdict(r.t_degree_bounds)
              << "\n" << verdict(r.passed()) << "\n";
    }
    return r.passed() ? kOk : kMathFail;
}

int run_pm_witness(const Output& o, int m, int k) {
    const PmWitness w = k == 0 ? pm_witness_linear(m) : pm_witness(m, k);
    const bool commutes = bracket(w.alpha, w.witness).is_zero();
    const bool shape = has_witness_shape(w);
    const Rational pm_at_n = build_obstruction(m).P.evaluate(w.N);
    const bool ok = commutes && shape && pm_at_n.is_zero();
    if (o.as_json) {
        o.emit({{"m", m},
                {"k", k},
                {"alpha", derivation_json(w.alpha)},
                {"witness", derivation_json(w.witness)},
                {"N", rational_json(w.N)},
                {"P_m(N)", rational_json(pm_at_n)},
                {"commutes", commutes},
                {"shape", shape},
                {"passed", ok}});
    } else {
        o.out << "alpha = " << derivation_string(w.alpha) << "\nwitness = " << derivation_string(w.witness) << "\nN = deg alpha(y) = "
              << w.N << "\nP_" << m << "(N) = " << pm_at_n << "\ncommutes with alpha: " << verdict(commutes)
              << "\nshape (even/odd y-powers, d_m != 0): " << verdict(shape) << "\n" << verdict(ok) << "\n";
    }
    return ok ? kOk : kMathFail;
}

int run_laurent_family(const Output& o, int k, const std::string& a_top_text) {
    const LaurentFamily fam = build_family(k, Rational::parse(a_top_text));
    const LaurentBiPoly r = first_integral(k);
    const bool commutes = bracket(fam.alpha, fam.beta).is_zero();
    const bool integral = apply(fam.alpha, r).is_zero();
    const bool ratio = ratio_identity_holds(fam);
    const bool shape = beta_has_family_shape(fam);
    const bool ok = commutes && integral && ratio && shape;
    if (o.as_json) {
        o.emit({{"k", k},
                {"t", fam.t},
                {"a", rationals_json(fam.a)},
                {"alpha", derivation_json(fam.alpha)},
                {"beta", derivation_json(fam.beta)},
                {"r", to_string(r)},
                {"checks", {{"commutes", commutes}, {"first_integral", integral}, {"ratio_identity", ratio}, {"shape", shape}}},
                {"passed", ok}});
    } else {
        o.out << "t = " << fam.t << "\n";
        for (std::size_t i = 0; i < fam.a.size(); ++i) o.out << "a_" << i << " = " << fam.a[i] << "\n";
        o.out << "alpha = " << derivation_string(fam.alpha) << "\nbeta = " << derivation_string(fam.beta) << "\nr = " << to_string(r)
              << "\n[alpha, beta] = 0: " << verdict(commutes) << "\nalpha(r) = 0: " << verdict(integral)
              << "\nratio identity: " << verdict(ratio) << "\nbeta shape: " << verdict(shape) << "\n" << verdict(ok) << "\n";
    }
    return ok ? kOk : kMathFail;
}

// integrability ---------------------------------------------------------------

int run_linearize(const Output& o, const std::string& dx, const std::string& dy) {
    const PlanarDerivation d{parse_bipoly(dx), parse_bipoly(dy)};
    const LinearizationResult r = companion_for_linear(d);
    if (o.as_json) {
        json j{{"d", derivation_json(d)}, {"case", r.case_label}, {"delta", derivation_json(r.delta)}};
        j["change_of_coords"] = r.change ? json(r.change->description) : json(nullptr);
        o.emit(j);
    } else {
        o.out << "case " << r.case_label << "\n";
        if (r.change) o.out << "coordinates: " << r.change->description << "\n";
        o.out << "delta = " << derivation_string(r.delta) << "\n";
    }
    return kOk;
}

struct FlowArgs {
    std::string dx, dy, gx, gy, x0 = "0", y0 = "0", path = "axis";
    double t_end = 1.0;
    int steps = 1000;
    double tolerance = 1e-6;
};

int run_flow_check(const Output& o, const FlowArgs& a) {
    const PlanarDerivation d{parse_bipoly(a.dx), parse_bipoly(a.dy)};
    const PlanarDerivation delta{parse_bipoly(a.gx), parse_bipoly(a.gy)};
    if (a.path != "axis" && a.path != "segment") throw InvalidInput("--path must be axis or segment");
    const QuadraturePath path = a.path == "axis" ? QuadraturePath::Axis : QuadraturePath::Segment;
    const Rational x0 = Rational::parse(a.x0), y0 = Rational::parse(a.y0);

    std::optional<ReferenceSolution> reference;
    const ExampleFixture fx = example_fixture();
    if (d == fx.d && delta == fx.delta) {
        const double sx = x0.to_double(), sy = y0.to_double();
        reference = [fx, sx, sy](double t) { return fx.solution(sx, sy, t); };
    }
    const FlowCheckReport r = rectification_defect(d, delta, x0, y0, a.t_end, a.steps, reference, a.tolerance, path);
    if (o.as_json) {
        json j{{"max_defect", r.max_defect}, {"steps", r.steps}, {"tolerance", r.tolerance},
               {"quadrature_tolerance", r.quadrature_tolerance}, {"path", a.path}, {"passed", r.passed}};
        j["trajectory_error"] = r.trajectory_error ? json(*r.trajectory_error) : json(nullptr);
        o.emit(j);
    } else {
        o.out << "max |F(x(t), y(t)) - (t, 0)| = " << r.max_defect << "\n";
        if (r.trajectory_error) o.out << "max distance to closed form = " << *r.trajectory_error << "\n";
        o.out << "steps = " << r.steps << ", tolerance = " << r.tolerance << "\n" << verdict(r.passed) << "\n";
    }
    return r.passed ? kOk : kMathFail;
}

int run_selftest(const Output& o, std::uint64_t seed, const std::string& fault) {
    AcceptanceOptions opts;
    opts.seed = seed;
    if (!fault.empty()) {
        if (fault != "pm-recurrence") throw InvalidInput("unknown fault '" + fault + "' (known: pm-recurrence)");
        opts.inject_pm_fault = true;
    }
    auto results = run_acceptance(opts);
    std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    if (o.as_json) {
        o.emit(acceptance_json(results, opts));
    } else {
        for (const auto& r : results) o.out << verdict(r.passed) << "  " << r.id << "  " << r.detail << "\n";
        o.out << (all ? "all criteria passed" : "some criteria failed") << "\n";
    }
    return all ? kOk : kMathFail;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Commutants of the Newton derivation y d/dx + f(x) d/dy over Q", "newtoncomm"};
    app.require_subcommand(1);
    bool as_json = false;
    std::function<int(const Output&)> action;

    std::string f_text, gx, gy, kind;
    int max_deg_y = 0, m = 0, m_max = 0, k = 0;
    std::optional<int> xcap;
    bool allow_degenerate = false;
    std::string a_top = "1";
    FlowArgs flow;
    std::uint64_t seed = AcceptanceOptions{}.seed;
    std::string fault;

    auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "machine-readable output"); };

    auto* commutant = app.add_subcommand("commutant", "basis of the derivations commuting with delta_f");
    commutant->add_option("--f", f_text, "f(x)")->required();
    commutant->add_option("--max-deg-y", max_deg_y, "largest y-degree M")->required();
    commutant->add_option("--x-cap", xcap, "cap on the x-degree of the coefficients");
    json_flag(commutant);
    commutant->callback([&] { action = [&](const Output& o) { return run_commutant(o, f_text, max_deg_y, xcap); }; });

    auto* hdec = app.add_subcommand("h-decompose", "write gamma as q(H) * delta_f");
    hdec->add_option("--f", f_text, "f(x)")->required();
    hdec->add_option("--gamma-dx", gx, "gamma(x)")->required();
    hdec->add_option("--gamma-dy", gy, "gamma(y)")->required();
    json_flag(hdec);
    hdec->callback([&] { action = [&](const Output& o) { return run_h_decompose(o, f_text, gx, gy); }; });

    auto* certify = app.add_subcommand("certify", "check that the commutant is K[H] * delta_f");
    certify->add_option("--f", f_text, "f(x), degree >= 2")->required();
    certify->add_option("--max-deg-y", max_deg_y, "largest y-degree M")->required();
    certify->add_option("--x-cap", xcap, "cap on the x-degree of the coefficients");
    json_flag(certify);
    certify->callback([&] { action = [&](const Output& o) { return run_certify(o, f_text, max_deg_y, xcap); }; });

    auto* parity = app.add_subcommand("parity", "build and solve one parity system");
    parity->add_option("--kind", kind, "Io, IIo, Ie or IIe")->required();
    parity->add_option("--m", m, "top index m >= 2")->required();
    parity->add_option("--f", f_text, "f(x)")->required();
    parity->add_option("--x-cap", xcap, "cap on the x-degree of the unknowns");
    json_flag(parity);
    parity->callback([&] { action = [&](const Output& o) { return run_parity(o, kind, m, f_text, xcap); }; });

    auto* lemmas = app.add_subcommand("lemmas", "check the parity lemmas for 2 <= m <= m-max");
    lemmas->add_option("--f", f_text, "f(x)")->required();
    lemmas->add_option("--m-max", m_max, "largest m")->required();
    lemmas->add_flag("--allow-degenerate", allow_degenerate, "run even when deg f < 2");
    json_flag(lemmas);
    lemmas->callback([&] { action = [&](const Output& o) { return run_lemmas(o, f_text, m_max, allow_degenerate); }; });

    auto* pm = app.add_subcommand("pm", "obstruction polynomials T_i and P_m");
    pm->add_option("--m", m, "odd m >= 3")->required();
    json_flag(pm);
    pm->callback([&] { action = [&](const Output& o) { return run_pm(o, m); }; });

    auto* witness = app.add_subcommand("pm-witness", "derivation witnessing a root of P_m");
    witness->add_option("--m", m, "odd m >= 3")->required();
    witness->add_option("--k", k, "family index 1 <= k <= (m-1)/2, or 0 for the root 1")->required();
    json_flag(witness);
    witness->callback([&] { action = [&](const Output& o) { return run_pm_witness(o, m, k); }; });

    auto* family = app.add_subcommand("laurent-family", "commuting pair on the Laurent ring with t = 2k-1");
    family->add_option("--k", k, "k >= 1")->required();
    family->add_option("--a-top", a_top, "nonzero rational a_{2k+1}");
    json_flag(family);
    family->callback([&] { action = [&](const Output& o) { return run_laurent_family(o, k, a_top); }; });

    auto* linearize = app.add_subcommand("linearize", "commuting transversal companion of a degree <= 1 derivation");
    linearize->add_option("--dx", flow.dx, "d(x)")->required();
    linearize->add_option("--dy", flow.dy, "d(y)")->required();
    json_flag(linearize);
    linearize->callback([&] { action = [&](const Output& o) { return run_linearize(o, flow.dx, flow.dy); }; });

    auto* fc = app.add_subcommand("flow-check", "numeric check of the rectifying map along the flow of d");
    fc->add_option("--dx", flow.dx, "d(x)")->required();
    fc->add_option("--dy", flow.dy, "d(y)")->required();
    fc->add_option("--gx", flow.gx, "delta(x)")->required();
    fc->add_option("--gy", flow.gy, "delta(y)")->required();
    fc->add_option("--x0", flow.x0, "initial x (rational)")->required();
    fc->add_option("--y0", flow.y0, "initial y (rational)")->required();
    fc->add_option("--t-end", flow.t_end, "final time");
    fc->add_option("--steps", flow.steps, "RK4 steps")->check(CLI::PositiveNumber);
    fc->add_option("--tolerance", flow.tolerance, "pass threshold");
    fc->add_option("--path", flow.path, "quadrature path: axis or segment");
    json_flag(fc);
    fc->callback([&] { action = [&](const Output& o) { return run_flow_check(o, flow); }; });

    auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
    selftest->add_option("--seed", seed, "seed for the randomized properties");
    selftest->add_option("--inject-fault", fault, "mutation control: pm-recurrence");
    json_flag(selftest);
    selftest->callback([&] { action = [&](const Output& o) { return run_selftest(o, seed, fault); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        if (code == 0) return kOk;
        err << app.help();
        return kUsage;
    }

    const Output o{out, as_json};
    try {
        return action(o);
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const RingMismatch& e) {
        err << "ring mismatch: " << e.what() << "\n";
        return kUsage;
    } catch (const HypothesisViolation& e) {
        err << "hypothesis violated: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "failure: " << e.what() << "\n";
        return kMathFail;
    }
}

} // namespace newtoncomm
