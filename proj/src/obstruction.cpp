#include "newtoncomm/obstruction.hpp"

#include "newtoncomm/errors.hpp"

#include <algorithm>

namespace newtoncomm {

ObstructionPoly build_obstruction(int m, int multiplier_shift) {
    if (m < 3 || m % 2 == 0) throw InvalidInput("obstruction polynomials need odd m >= 3, got " + std::to_string(m));
    const UniPoly X = UniPoly::x();
    const UniPoly X1 = X + UniPoly(1);
    ObstructionPoly out;
    out.m = m;
    out.T.assign(static_cast<std::size_t>(m) + 1, UniPoly());
    auto T = [&](int i) -> UniPoly& { return out.T[static_cast<std::size_t>(i)]; };
    T(m) = UniPoly(1);
    T(m - 1) = UniPoly(1);
    for (int k = 1; m - 2 * k >= 0; ++k) {
        const int i = m - 2 * k;
        const UniPoly mult = X1 * Rational(k - 1) + UniPoly(1);
        T(i) = X * T(i + 1) - mult * T(i + 2) * Rational(i + 2 + multiplier_shift);
        if (i - 1 >= 0) T(i - 1) = T(i) - X1 * T(i + 1) * Rational((i + 1) * k);
    }
    out.P = (X1 * Rational((m - 1) / 2) + UniPoly(1)) * T(1) - X * T(0);
    return out;
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

std::vector<RationalRoot> rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw InvalidInput("rational_roots of the zero polynomial");
    std::vector<RationalRoot> roots;
    UniPoly rest = p;
    int zero_mult = 0;
    while (!rest.is_zero() && rest.coeff(0).is_zero()) {
        rest = rest.exact_divide(UniPoly::x());
        ++zero_mult;
    }
    if (zero_mult > 0) roots.push_back({Rational(0), zero_mult});
    if (rest.degree() >= 1) {
        Integer scale = 1;
        for (const auto& c : rest.coeffs()) scale = lcm(scale, c.den());
        const Integer a0 = (rest.coeff(0) * Rational(scale)).num();
        const Integer an = (rest.lc() * Rational(scale)).num();
        std::vector<Rational> candidates;
        for (const auto& num : positive_divisors(a0))
            for (const auto& den : positive_divisors(an)) {
                candidates.emplace_back(num, den);
                candidates.emplace_back(Integer(-num), den);
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& r : candidates) {
            int mult = 0;
            const UniPoly linear{-r, Rational(1)};
            while (rest.degree() >= 1 && rest.evaluate(r).is_zero()) {
                rest = rest.exact_divide(linear);
                ++mult;
            }
            if (mult > 0) roots.push_back({r, mult});
        }
    }
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
    return roots;
}

std::vector<Rational> expected_root_set(int m) {
    if (m < 3 || m % 2 == 0) throw InvalidInput("expected root set needs odd m >= 3");
    std::vector<Rational> out{Rational(1)};
    for (int k = 1; k <= (m - 1) / 2; ++k) out.emplace_back(-(2 * k + 1), 2 * k - 1);
    std::sort(out.begin(), out.end());
    return out;
}

bool ObstructionReport::passed() const {
    return degree_bound && nonzero_at_minus_one && roots_match && splits && t_values_at_minus_one && t_degree_bounds;
}

ObstructionReport certify_obstruction(int m, int multiplier_shift) {
    ObstructionReport r;
    r.poly = build_obstruction(m, multiplier_shift);
    const UniPoly& P = r.poly.P;
    r.expected = expected_root_set(m);
    r.degree_bound = !P.is_zero() && P.degree() <= (m + 1) / 2;
    r.nonzero_at_minus_one = !P.evaluate(Rational(-1)).is_zero();
    if (!P.is_zero()) {
        r.roots = rational_roots(P);
        std::vector<Rational> found;
        int total = 0;
        for (const auto& root : r.roots) {
            found.push_back(root.value);
            total += root.multiplicity;
        }
        r.roots_match = found == r.expected;
        r.splits = total == P.degree();
    }
    r.t_values_at_minus_one = true;
    r.t_degree_bounds = true;
    const auto& T = r.poly.T;
    for (int k = 0; m - 2 * k >= 0; ++k) {
        const int i = m - 2 * k;
        auto deg_ok = [&](int idx) { return T[static_cast<std::size_t>(idx)].is_zero() || T[static_cast<std::size_t>(idx)].degree() <= k; };
        if (!deg_ok(i)) r.t_degree_bounds = false;
        if (i - 1 >= 0) {
            if (!deg_ok(i - 1)) r.t_degree_bounds = false;
            if (T[static_cast<std::size_t>(i - 1)].evaluate(Rational(-1)) != T[static_cast<std::size_t>(i)].evaluate(Rational(-1)))
                r.t_values_at_minus_one = false;
        }
    }
    return r;
}

} // namespace newtoncomm
