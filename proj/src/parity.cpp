#include "newtoncomm/parity.hpp"

#include "newtoncomm/commutant.hpp"
#include "newtoncomm/errors.hpp"
#include "newtoncomm/parallel.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace newtoncomm {

std::string to_string(ParityKind kind) {
    switch (kind) {
    case ParityKind::Io: return "Io";
    case ParityKind::IIo: return "IIo";
    case ParityKind::Ie: return "Ie";
    case ParityKind::IIe: return "IIe";
    }
    return "?";
}

ParityKind parse_parity_kind(const std::string& text) {
    if (text == "Io") return ParityKind::Io;
    if (text == "IIo") return ParityKind::IIo;
    if (text == "Ie") return ParityKind::Ie;
    if (text == "IIe") return ParityKind::IIe;
    throw InvalidInput("unknown system kind '" + text + "' (expected Io, IIo, Ie or IIe)");
}

namespace {

bool c_on_top(ParityKind kind) { return kind == ParityKind::Io || kind == ParityKind::IIe; }

std::string term_string(const LinearTerm& t) {
    std::string out;
    if (t.scale != Rational(1)) out += t.scale.to_string() + "*";
    if (t.factor == LinearTerm::Factor::F) out += "f*";
    if (t.factor == LinearTerm::Factor::FPrime) out += "f'*";
    out += t.unknown.name();
    if (t.order == 1) out += "'";
    return out;
}

std::string side_string(const std::vector<LinearTerm>& side) {
    if (side.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < side.size(); ++i) {
        if (i > 0) out += " + ";
        out += term_string(side[i]);
    }
    return out;
}

// Row j of the bracket, keeping only unknowns with index <= m.
//   x-slot: c_{j-1}' + (j+1) f c_{j+1} = d_j
//   y-slot: d_{j-1}' + (j+1) f d_{j+1} = f' c_j
Equation make_row(int component, int j, int m) {
    using F = LinearTerm::Factor;
    const char top = component == 0 ? 'c' : 'd';
    Equation eq;
    eq.label = j;
    eq.component = component;
    if (j - 1 >= 0 && j - 1 <= m) eq.lhs.push_back({Rational(1), F::One, {top, j - 1}, 1});
    if (j + 1 <= m) eq.lhs.push_back({Rational(j + 1), F::F, {top, j + 1}, 0});
    if (j <= m) {
        if (component == 0)
            eq.rhs.push_back({Rational(1), F::One, {'d', j}, 0});
        else
            eq.rhs.push_back({Rational(1), F::FPrime, {'c', j}, 0});
    }
    return eq;
}

UniPoly factor_value(LinearTerm::Factor factor, const UniPoly& f, const UniPoly& fp) {
    switch (factor) {
    case LinearTerm::Factor::F: return f;
    case LinearTerm::Factor::FPrime: return fp;
    default: return UniPoly::one();
    }
}

} // namespace

std::string to_string(const Equation& eq) { return side_string(eq.lhs) + " = " + side_string(eq.rhs); }

ParitySystem build_system(ParityKind kind, int m, const UniPoly& f) {
    if (m < 2) throw InvalidInput("parity systems need m >= 2, got " + std::to_string(m));
    ParitySystem sys;
    sys.kind = kind;
    sys.m = m;
    sys.f = f;
    const bool c_top = c_on_top(kind);
    for (int j = m + 1; j >= 0; --j) {
        // c-top systems take the x-slot row when j and m differ in parity.
        const bool x_slot = c_top == ((j - m) % 2 != 0);
        sys.equations.push_back(make_row(x_slot ? 0 : 1, j, m));
    }
    const Unknown top{c_top ? 'c' : 'd', m};
    for (int i = m; i >= 0; --i) {
        for (char letter : {'c', 'd'}) {
            Unknown u{letter, i};
            if (parity_class(u) == parity_class(top)) sys.unknowns.push_back(u);
        }
    }
    return sys;
}

CoefficientSystem discretize(const ParitySystem& sys, int xcap) {
    if (xcap < 0) throw InvalidInput("x-degree cap must be nonnegative");
    CoefficientSystem out;
    for (const auto& u : sys.unknowns)
        for (int p = 0; p <= xcap; ++p) out.columns.push_back({u, p});
    std::sort(out.columns.begin(), out.columns.end(), column_precedes);
    std::map<ColumnKey, int> column_of;
    for (std::size_t i = 0; i < out.columns.size(); ++i) column_of[out.columns[i]] = static_cast<int>(i);

    const UniPoly fp = sys.f.derivative();
    std::map<RowKey, std::map<int, Rational>> rows;
    for (const auto& eq : sys.equations) {
        auto add_side = [&](const std::vector<LinearTerm>& side, const Rational& sign) {
            for (const auto& term : side) {
                const UniPoly factor = factor_value(term.factor, sys.f, fp) * (sign * term.scale);
                for (int p = 0; p <= xcap; ++p) {
                    UniPoly image = UniPoly::monomial(1, p);
                    if (term.order == 1) image = image.derivative();
                    image *= factor;
                    const int col = column_of.at({term.unknown, p});
                    for (int e = 0; e <= image.degree(); ++e) {
                        const Rational v = image.coeff(e);
                        if (v.is_zero()) continue;
                        Rational& slot = rows[RowKey{eq.component, eq.label, e}][col];
                        slot += v;
                    }
                }
            }
        };
        add_side(eq.lhs, Rational(1));
        add_side(eq.rhs, Rational(-1));
    }
    out.matrix.cols = static_cast<int>(out.columns.size());
    for (auto& [key, entries] : rows) {
        SparseVector row;
        for (auto& [col, v] : entries)
            if (!v.is_zero()) row.emplace_back(col, v);
        if (row.empty()) continue;
        out.row_keys.push_back(key);
        out.matrix.rows.push_back(std::move(row));
    }
    return out;
}

UniPoly residual(const Equation& eq, const UniPoly& f, const Assignment& values) {
    const UniPoly fp = f.derivative();
    auto side_value = [&](const std::vector<LinearTerm>& side) {
        UniPoly sum;
        for (const auto& term : side) {
            auto it = values.find(term.unknown);
            if (it == values.end()) continue;
            UniPoly v = term.order == 1 ? it->second.derivative() : it->second;
            sum += factor_value(term.factor, f, fp) * v * term.scale;
        }
        return sum;
    };
    return side_value(eq.lhs) - side_value(eq.rhs);
}

SolutionSpace solve_system(const ParitySystem& sys, std::optional<int> xcap) {
    SolutionSpace out;
    out.xcap = xcap.value_or(default_xcap(sys.f, sys.m));
    const CoefficientSystem cs = discretize(sys, out.xcap);
    const std::vector<SparseVector> kernel = nullspace(cs.matrix);
    out.dimension = static_cast<int>(kernel.size());

    std::set<Unknown> touched;
    for (const auto& v : kernel) {
        std::map<Unknown, std::vector<Rational>> coeffs;
        for (const auto& [col, value] : v) {
            const ColumnKey& key = cs.columns[static_cast<std::size_t>(col)];
            auto& c = coeffs[key.unknown];
            if (static_cast<int>(c.size()) <= key.xpow) c.resize(static_cast<std::size_t>(key.xpow) + 1);
            c[static_cast<std::size_t>(key.xpow)] = value;
            touched.insert(key.unknown);
        }
        Assignment a;
        for (auto& [u, c] : coeffs) a.emplace(u, UniPoly(std::move(c)));
        out.basis.push_back(std::move(a));
    }
    for (const auto& u : sys.unknowns)
        if (!touched.count(u)) out.forced.push_back(u);
    return out;
}

bool LemmaReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.passed; });
}

namespace {

PlanarDerivation to_derivation(const Assignment& a) {
    BiPoly dx, dy;
    for (const auto& [u, p] : a) (u.letter == 'c' ? dx : dy) += BiPoly::monomial(p, u.index);
    return {dx, dy};
}

bool is_forced(const SolutionSpace& s, const Unknown& u) {
    return std::find(s.forced.begin(), s.forced.end(), u) != s.forced.end();
}

LemmaCheck run_check(const UniPoly& f, ParityKind kind, int m) {
    LemmaCheck check;
    check.kind = kind;
    check.m = m;
    const ParitySystem sys = build_system(kind, m, f);
    const SolutionSpace space = solve_system(sys);
    std::ostringstream detail;
    if (kind == ParityKind::Io) {
        check.name = "(Io)_" + std::to_string(m) + " dimension";
        const int expected = (m + 1) / 2;
        check.passed = space.dimension == expected;
        detail << "dimension " << space.dimension << ", expected " << expected;
        for (const auto& a : space.basis) {
            try {
                decompose_in_H(f, to_derivation(a));
            } catch (const NotAMultiple& e) {
                check.passed = false;
                detail << "; solution not in K[H]*delta_f: " << e.what();
                break;
            }
        }
    } else {
        const Unknown target{kind == ParityKind::IIe ? 'c' : 'd', m};
        check.name = "(" + to_string(kind) + ")_" + std::to_string(m) + " forces " + target.name() + " = 0";
        check.passed = is_forced(space, target);
        detail << "dimension " << space.dimension << ", " << target.name()
               << (check.passed ? " forced to zero" : " free in some solution");
    }
    check.detail = detail.str();
    return check;
}

} // namespace

LemmaReport check_lemma_suite(const UniPoly& f, int m_max, bool enforce_hypothesis) {
    if (enforce_hypothesis && f.degree() < 2)
        throw HypothesisViolation("lemma suite needs deg f >= 2");
    std::vector<std::pair<ParityKind, int>> jobs;
    for (int m = 2; m <= m_max; ++m) {
        if (m % 2 == 1) {
            jobs.emplace_back(ParityKind::Io, m);
            jobs.emplace_back(ParityKind::IIo, m);
        } else {
            jobs.emplace_back(ParityKind::Ie, m);
            jobs.emplace_back(ParityKind::IIe, m);
        }
    }
    LemmaReport report;
    report.checks.resize(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t i) { report.checks[i] = run_check(f, jobs[i].first, jobs[i].second); });
    return report;
}

} // namespace newtoncomm
