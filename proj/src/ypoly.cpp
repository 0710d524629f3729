#include "newtoncomm/ypoly.hpp"

namespace newtoncomm {

int total_degree(const BiPoly& p) {
    int best = kDegreeNegInf;
    for (int i = 0; i <= p.deg_y(); ++i) {
        const auto& c = p.ycoeffs()[static_cast<std::size_t>(i)];
        if (!c.is_zero()) best = std::max(best, i + c.degree());
    }
    return best;
}

BiPoly integrate_dx(const BiPoly& p) {
    std::vector<UniPoly> out;
    out.reserve(p.ycoeffs().size());
    for (const auto& c : p.ycoeffs()) out.push_back(c.integral());
    return BiPoly(p.ring(), std::move(out));
}

BiPoly exact_divide(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw InvalidInput("division by the zero polynomial");
    BiPoly rem = a;
    BiPoly quot;
    const UniPoly& lead_b = b.leading_coeff();
    while (!rem.is_zero()) {
        int shift = rem.deg_y() - b.deg_y();
        if (shift < 0) throw NotDivisible("polynomial is not divisible by the given divisor");
        // The y-leading coefficient of the quotient must divide exactly in K[x].
        UniPoly factor = rem.leading_coeff().exact_divide(lead_b);
        BiPoly term = BiPoly::monomial(factor, shift);
        quot += term;
        rem -= term * b;
    }
    return quot;
}

BiPoly compose(const BiPoly& p, const BiPoly& x_image, const BiPoly& y_image) {
    BiPoly result;
    // Horner in y, and Horner in x inside each coefficient.
    for (int i = p.deg_y(); i >= 0; --i) {
        const UniPoly& c = p.ycoeffs()[static_cast<std::size_t>(i)];
        BiPoly ci;
        for (int j = c.degree(); j >= 0; --j) ci = ci * x_image + BiPoly(UniPoly(c.coeff(j)));
        result = result * y_image + ci;
    }
    return result;
}

Rational evaluate(const BiPoly& p, const Rational& x, const Rational& y) {
    Rational acc;
    for (int i = p.deg_y(); i >= 0; --i) acc = acc * y + p.ycoeffs()[static_cast<std::size_t>(i)].evaluate(x);
    return acc;
}

double evaluate(const BiPoly& p, double x, double y) {
    double acc = 0.0;
    for (int i = p.deg_y(); i >= 0; --i) acc = acc * y + p.ycoeffs()[static_cast<std::size_t>(i)].evaluate(x);
    return acc;
}

double evaluate(const LaurentBiPoly& p, double x, double y) {
    double acc = 0.0;
    for (int i = p.deg_y(); i >= 0; --i) acc = acc * y + p.ycoeffs()[static_cast<std::size_t>(i)].evaluate(x);
    return acc;
}

LaurentBiPoly to_laurent(const BiPoly& p, int t) {
    LaurentPoly::Ring ring{t};
    std::vector<LaurentPoly> out;
    out.reserve(p.ycoeffs().size());
    for (const auto& c : p.ycoeffs()) out.push_back(LaurentPoly::from_unipoly(c, ring));
    return LaurentBiPoly(ring, std::move(out));
}

LaurentBiPoly with_root_index(const LaurentBiPoly& p, int new_t) {
    LaurentPoly::Ring ring{new_t};
    std::vector<LaurentPoly> out;
    out.reserve(p.ycoeffs().size());
    for (const auto& c : p.ycoeffs()) out.push_back(c.with_root_index(new_t));
    return LaurentBiPoly(ring, std::move(out));
}

BiPoly bipoly_x() { return BiPoly(UniPoly::x()); }
BiPoly bipoly_y() { return BiPoly::y(); }

} // namespace newtoncomm
