#pragma once

#include "newtoncomm/rational.hpp"

#include <initializer_list>
#include <limits>
#include <utility>
#include <vector>

namespace newtoncomm {

/// Degree of the zero polynomial. Compares below every real degree.
inline constexpr int kDegreeNegInf = std::numeric_limits<int>::min();

/// Dense univariate polynomial over Q, coefficient i multiplies x^i.
class UniPoly {
public:
    /// K[x] has no parameters; the tag lets generic code treat K[x] and Laurent rings alike.
    struct Ring {
        friend bool operator==(const Ring&, const Ring&) = default;
    };

    UniPoly() = default;
    explicit UniPoly(Ring) {}
    UniPoly(const Rational& constant);
    UniPoly(int constant) : UniPoly(Rational(constant)) {}
    explicit UniPoly(std::vector<Rational> coeffs);
    UniPoly(std::initializer_list<Rational> coeffs) : UniPoly(std::vector<Rational>(coeffs)) {}

    static UniPoly monomial(const Rational& c, int exponent);
    static UniPoly x() { return monomial(1, 1); }
    static UniPoly one(Ring = {}) { return UniPoly(Rational(1)); }

    Ring ring() const { return {}; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    int degree() const { return coeffs_.empty() ? kDegreeNegInf : static_cast<int>(coeffs_.size()) - 1; }
    /// Leading coefficient; zero for the zero polynomial.
    Rational lc() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    UniPoly derivative() const;
    /// Antiderivative with zero constant term.
    UniPoly integral() const;

    Rational evaluate(const Rational& at) const;
    double evaluate(double at) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& s);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
    UniPoly operator-() const;

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    UniPoly pow(unsigned exponent) const;

    /// Euclidean division; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
    /// Throws NotDivisible when the remainder is nonzero.
    UniPoly exact_divide(const UniPoly& divisor) const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

} // namespace newtoncomm
