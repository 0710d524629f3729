#pragma once

#include "newtoncomm/rational.hpp"
#include "newtoncomm/unipoly.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <optional>

namespace newtoncomm {

/// Ring parameter of a Laurent ring: the root index t of z = x^(1/t).
struct LaurentRing {
    int t = 1;
    friend bool operator==(const LaurentRing&, const LaurentRing&) = default;
};

/// Element of K[x^(1/t), x^(-1/t)].
///
/// Terms are stored against the integer exponent of z = x^(1/t); the x-exponent of the
/// term z^k is k/t. The root index t is part of the ring: arithmetic between different
/// t raises RingMismatch, and t only changes on an explicit call to with_root_index()
/// or normalized().
class LaurentPoly {
public:
    using Ring = LaurentRing;

    static constexpr std::int64_t kZeroDegree = std::numeric_limits<std::int64_t>::min();

    LaurentPoly() = default;
    explicit LaurentPoly(Ring ring);
    LaurentPoly(Ring ring, const Rational& constant);
    LaurentPoly(Ring ring, std::map<std::int64_t, Rational> terms);

    /// c * z^z_exponent.
    static LaurentPoly monomial(Ring ring, const Rational& c, std::int64_t z_exponent);
    /// c * x^(x_exponent); x_exponent must be a multiple of 1/t.
    static LaurentPoly monomial_x(Ring ring, const Rational& c, const Rational& x_exponent);
    static LaurentPoly one(Ring ring) { return LaurentPoly(ring, Rational(1)); }
    /// Image of p under K[x] -> K[x^(1/t), x^(-1/t)].
    static LaurentPoly from_unipoly(const UniPoly& p, Ring ring = {});

    Ring ring() const { return ring_; }
    int t() const { return ring_.t; }
    const std::map<std::int64_t, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// Largest z-exponent, kZeroDegree for zero.
    std::int64_t z_degree() const { return terms_.empty() ? kZeroDegree : terms_.rbegin()->first; }
    std::int64_t z_low_degree() const { return terms_.empty() ? kZeroDegree : terms_.begin()->first; }
    /// x-degree (a rational number); empty for zero.
    std::optional<Rational> degree() const;
    Rational lc() const { return terms_.empty() ? Rational(0) : terms_.rbegin()->second; }
    Rational coeff_z(std::int64_t z_exponent) const;

    /// d/dx; z^k maps to (k/t) z^(k-t).
    LaurentPoly derivative() const;

    /// Same element written with root index new_t, a positive multiple of t.
    LaurentPoly with_root_index(int new_t) const;
    /// Same element over the smallest root index that can represent it.
    LaurentPoly normalized() const;
    /// Back to K[x]; requires integral nonnegative x-exponents.
    std::optional<UniPoly> to_unipoly() const;

    double evaluate(double x) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly& operator*=(const Rational& s);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
    friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    LaurentPoly pow(unsigned exponent) const;
    /// Exact quotient in the Laurent ring; throws NotDivisible.
    LaurentPoly exact_divide(const LaurentPoly& divisor) const;

private:
    void check_same_ring(const LaurentPoly& o) const;

    Ring ring_{};
    std::map<std::int64_t, Rational> terms_;
};

} // namespace newtoncomm
