#include "newtoncomm/laurent_family.hpp"

#include "newtoncomm/errors.hpp"

namespace newtoncomm {

namespace {

Rational rho_of(int k) { return Rational(2 * k + 1, 2 * k - 1); }

Rational checked_divide(const Rational& num, const Rational& den, const char* what) {
    if (den.is_zero()) throw DegenerateRecurrence(std::string("zero divisor in the recurrence for ") + what);
    return num / den;
}

} // namespace

LaurentFamily build_family(int k, const Rational& a_top) {
    if (k < 1) throw InvalidInput("family index k must be >= 1, got " + std::to_string(k));
    if (a_top.is_zero()) throw InvalidInput("a_top must be nonzero");
    LaurentFamily fam;
    fam.k = k;
    fam.t = 2 * k - 1;
    const Rational rho = rho_of(k);
    const Rational one_minus_rho = Rational(1) - rho;
    auto& a = fam.a;
    a.assign(static_cast<std::size_t>(2 * k + 2), Rational(0));
    auto at = [&](int i) -> Rational& { return a[static_cast<std::size_t>(i)]; };
    at(2 * k + 1) = a_top;
    at(2 * k) = a_top;
    for (int l = 1; l <= k; ++l) {
        const int j = k - l;
        at(2 * j + 1) = checked_divide(-rho * at(2 * j + 2) - Rational(2 * j + 3) * at(2 * j + 3),
                                       one_minus_rho * Rational(l), "odd coefficients");
        at(2 * j) = checked_divide(at(2 * j + 1) - Rational(2 * j + 2) * at(2 * j + 2),
                                   one_minus_rho * Rational(l) + Rational(1), "even coefficients");
    }

    const LaurentPoly::Ring ring{fam.t};
    fam.alpha = {LaurentBiPoly::y(ring), LaurentBiPoly(LaurentPoly::monomial(ring, 1, -(2 * k + 1)))};
    // In z = x^(1/t): x^((1-rho) l) = z^(-2l) and x^(1 + (1-rho) l) = z^(t-2l).
    LaurentBiPoly bx(ring), by(ring);
    for (int l = 0; l <= k; ++l) {
        const int j = k - l;
        bx += LaurentBiPoly::monomial(LaurentPoly::monomial(ring, at(2 * j), fam.t - 2 * l), 2 * j);
        by += LaurentBiPoly::monomial(LaurentPoly::monomial(ring, at(2 * j + 1), -2 * l), 2 * j + 1);
    }
    fam.beta = {bx, by};
    return fam;
}

bool ratio_identity_holds(const LaurentFamily& fam) {
    const Rational rho = rho_of(fam.k);
    for (int l = 0; l <= fam.k; ++l) {
        const int j = fam.k - l;
        const Rational lhs = rho * fam.a[static_cast<std::size_t>(2 * j)];
        const Rational rhs = Rational(2 * j + 1, 2 * j - 1) * fam.a[static_cast<std::size_t>(2 * j + 1)];
        if (lhs != rhs) return false;
    }
    return true;
}

bool beta_has_family_shape(const LaurentFamily& fam) {
    auto check = [&](const LaurentBiPoly& p, bool x_slot) {
        for (int i = 0; i <= p.deg_y(); ++i) {
            const LaurentPoly& c = p.ycoeffs()[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            if ((i % 2 == 0) != x_slot) return false;
            const int l = fam.k - i / 2;
            const std::int64_t z = x_slot ? fam.t - 2 * l : -2 * l;
            if (c.terms().size() != 1 || c.terms().begin()->first != z) return false;
        }
        return true;
    };
    return check(fam.beta.dx, true) && check(fam.beta.dy, false);
}

LaurentBiPoly first_integral(int k) {
    if (k < 1) throw InvalidInput("family index k must be >= 1");
    const LaurentPoly::Ring ring{2 * k - 1};
    return LaurentBiPoly::y(ring).pow(2) + LaurentBiPoly(LaurentPoly::monomial(ring, 2 * k - 1, -2));
}

PmWitness pm_witness(int m, int k) {
    if (m < 3 || m % 2 == 0) throw InvalidInput("witness degree m must be odd and >= 3");
    if (k < 1 || 2 * k + 1 > m) throw InvalidInput("witness needs 1 <= k <= (m-1)/2");
    const LaurentFamily fam = build_family(k, Rational(1));
    const LaurentBiPoly r = first_integral(k).pow(static_cast<unsigned>((m - 2 * k - 1) / 2));
    PmWitness w;
    w.m = m;
    w.k = k;
    w.alpha = fam.alpha;
    w.witness = r * fam.beta;
    w.N = *fam.alpha.dy.leading_coeff().degree();
    return w;
}

PmWitness pm_witness_linear(int m) {
    if (m < 3 || m % 2 == 0) throw InvalidInput("witness degree m must be odd and >= 3");
    const LaurentPoly::Ring ring{1};
    const LaurentBiPoly x(LaurentPoly::monomial(ring, 1, 1));
    const LaurentBiPoly y = LaurentBiPoly::y(ring);
    const LaurentBiPoly r = (y * y - x * x).pow(static_cast<unsigned>((m - 1) / 2));
    PmWitness w;
    w.m = m;
    w.alpha = {y, x};
    w.witness = r * LaurentDerivation{x, y};
    w.N = 1;
    return w;
}

bool has_witness_shape(const PmWitness& w) {
    const auto& dx = w.witness.dx;
    const auto& dy = w.witness.dy;
    if (dy.deg_y() != w.m || dx.deg_y() > w.m - 1) return false;
    for (int i = 0; i <= dx.deg_y(); ++i)
        if (i % 2 == 1 && !dx.coeff(i).is_zero()) return false;
    for (int i = 0; i <= dy.deg_y(); ++i)
        if (i % 2 == 0 && !dy.coeff(i).is_zero()) return false;
    return !dy.coeff(w.m).is_zero();
}

} // namespace newtoncomm
