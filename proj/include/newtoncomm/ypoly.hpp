#pragma once

#include "newtoncomm/errors.hpp"
#include "newtoncomm/laurent_poly.hpp"
#include "newtoncomm/rational.hpp"
#include "newtoncomm/unipoly.hpp"

#include <algorithm>
#include <concepts>
#include <utility>
#include <vector>

namespace newtoncomm {

/// Coefficient rings usable under YPoly: K[x] and K[x^(1/t), x^(-1/t)].
template <class C>
concept CoefficientRing = requires(const C& a, const C& b, const Rational& s, typename C::Ring r) {
    { C(r) };
    { a.ring() } -> std::convertible_to<typename C::Ring>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a + b } -> std::convertible_to<C>;
    { a - b } -> std::convertible_to<C>;
    { a * b } -> std::convertible_to<C>;
    { a * s } -> std::convertible_to<C>;
    { -a } -> std::convertible_to<C>;
    { a.derivative() } -> std::convertible_to<C>;
    { C::one(r) } -> std::convertible_to<C>;
};

/// Polynomial in y over a coefficient ring C; ycoeffs()[i] multiplies y^i.
///
/// With C = UniPoly this is K[x,y] grouped by powers of y, which is how every
/// computation on the commutant is organised.
template <CoefficientRing C>
class YPoly {
public:
    using Coeff = C;
    using Ring = typename C::Ring;

    YPoly() = default;
    explicit YPoly(Ring ring) : ring_(ring) {}
    /// Constant in y.
    YPoly(const C& c) : ring_(c.ring()) {
        if (!c.is_zero()) ycoeffs_.push_back(c);
    }
    YPoly(Ring ring, std::vector<C> ycoeffs) : ring_(ring), ycoeffs_(std::move(ycoeffs)) {
        for (const auto& c : ycoeffs_) check_ring(c);
        trim();
    }

    /// c * y^k.
    static YPoly monomial(const C& c, int k) {
        YPoly p(c.ring());
        if (!c.is_zero()) {
            p.ycoeffs_.assign(static_cast<std::size_t>(k) + 1, C(c.ring()));
            p.ycoeffs_.back() = c;
        }
        return p;
    }
    static YPoly y(Ring ring = {}) { return monomial(C::one(ring), 1); }
    static YPoly one(Ring ring = {}) { return YPoly(C::one(ring)); }

    Ring ring() const { return ring_; }
    bool is_zero() const { return ycoeffs_.empty(); }
    int deg_y() const { return ycoeffs_.empty() ? kDegreeNegInf : static_cast<int>(ycoeffs_.size()) - 1; }
    const std::vector<C>& ycoeffs() const { return ycoeffs_; }
    C coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(ycoeffs_.size())) return C(ring_);
        return ycoeffs_[static_cast<std::size_t>(i)];
    }
    C leading_coeff() const { return ycoeffs_.empty() ? C(ring_) : ycoeffs_.back(); }

    YPoly derivative_x() const {
        YPoly out(ring_);
        out.ycoeffs_.reserve(ycoeffs_.size());
        for (const auto& c : ycoeffs_) out.ycoeffs_.push_back(c.derivative());
        out.trim();
        return out;
    }

    YPoly derivative_y() const {
        YPoly out(ring_);
        for (std::size_t i = 1; i < ycoeffs_.size(); ++i)
            out.ycoeffs_.push_back(ycoeffs_[i] * Rational(static_cast<long>(i)));
        out.trim();
        return out;
    }

    /// Drops one power of y; throws NotDivisible if the y^0 coefficient is nonzero.
    YPoly divide_by_y() const {
        if (is_zero()) return *this;
        if (!ycoeffs_.front().is_zero()) throw NotDivisible("not divisible by y");
        YPoly out(ring_);
        out.ycoeffs_.assign(ycoeffs_.begin() + 1, ycoeffs_.end());
        return out;
    }

    YPoly& operator+=(const YPoly& o) {
        check_ring(o);
        if (o.ycoeffs_.size() > ycoeffs_.size()) ycoeffs_.resize(o.ycoeffs_.size(), C(ring_));
        for (std::size_t i = 0; i < o.ycoeffs_.size(); ++i) ycoeffs_[i] = ycoeffs_[i] + o.ycoeffs_[i];
        trim();
        return *this;
    }
    YPoly& operator-=(const YPoly& o) {
        check_ring(o);
        if (o.ycoeffs_.size() > ycoeffs_.size()) ycoeffs_.resize(o.ycoeffs_.size(), C(ring_));
        for (std::size_t i = 0; i < o.ycoeffs_.size(); ++i) ycoeffs_[i] = ycoeffs_[i] - o.ycoeffs_[i];
        trim();
        return *this;
    }
    YPoly& operator*=(const Rational& s) {
        for (auto& c : ycoeffs_) c = c * s;
        trim();
        return *this;
    }

    friend YPoly operator+(YPoly a, const YPoly& b) { return a += b; }
    friend YPoly operator-(YPoly a, const YPoly& b) { return a -= b; }
    friend YPoly operator*(YPoly a, const Rational& s) { return a *= s; }
    friend YPoly operator*(const Rational& s, YPoly a) { return a *= s; }
    friend YPoly operator*(const YPoly& a, const YPoly& b) {
        a.check_ring(b);
        YPoly out(a.ring_);
        if (a.is_zero() || b.is_zero()) return out;
        out.ycoeffs_.assign(a.ycoeffs_.size() + b.ycoeffs_.size() - 1, C(a.ring_));
        for (std::size_t i = 0; i < a.ycoeffs_.size(); ++i) {
            if (a.ycoeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.ycoeffs_.size(); ++j)
                out.ycoeffs_[i + j] = out.ycoeffs_[i + j] + a.ycoeffs_[i] * b.ycoeffs_[j];
        }
        out.trim();
        return out;
    }
    YPoly& operator*=(const YPoly& o) { return *this = *this * o; }
    YPoly operator-() const {
        YPoly r = *this;
        for (auto& c : r.ycoeffs_) c = -c;
        return r;
    }

    friend bool operator==(const YPoly& a, const YPoly& b) {
        return a.ring_ == b.ring_ && a.ycoeffs_ == b.ycoeffs_;
    }

    YPoly pow(unsigned exponent) const {
        YPoly result = one(ring_);
        YPoly base = *this;
        while (exponent > 0) {
            if (exponent & 1U) result *= base;
            exponent >>= 1U;
            if (exponent > 0) base *= base;
        }
        return result;
    }

private:
    void check_ring(const C& c) const {
        if (!(c.ring() == ring_)) throw RingMismatch("coefficient ring differs from polynomial ring");
    }
    void check_ring(const YPoly& o) const {
        if (!(o.ring_ == ring_)) throw RingMismatch("polynomials over different rings");
    }
    void trim() {
        while (!ycoeffs_.empty() && ycoeffs_.back().is_zero()) ycoeffs_.pop_back();
    }

    Ring ring_{};
    std::vector<C> ycoeffs_;
};

using BiPoly = YPoly<UniPoly>;
using LaurentBiPoly = YPoly<LaurentPoly>;

/// Total degree in x and y; kDegreeNegInf for zero.
int total_degree(const BiPoly& p);

/// x-antiderivative with every y-coefficient's constant term zero.
BiPoly integrate_dx(const BiPoly& p);
inline UniPoly integrate_dx(const UniPoly& p) { return p.integral(); }

/// Exact division in K[x,y] (multivariate long division, lex order y > x). Throws NotDivisible.
BiPoly exact_divide(const BiPoly& a, const BiPoly& b);

/// p(X, Y) for polynomials X, Y.
BiPoly compose(const BiPoly& p, const BiPoly& x_image, const BiPoly& y_image);

Rational evaluate(const BiPoly& p, const Rational& x, const Rational& y);
double evaluate(const BiPoly& p, double x, double y);
double evaluate(const LaurentBiPoly& p, double x, double y);

/// K[x,y] -> K[x^(1/t), x^(-1/t), y].
LaurentBiPoly to_laurent(const BiPoly& p, int t = 1);
LaurentBiPoly with_root_index(const LaurentBiPoly& p, int new_t);

/// Convenience constructors for K[x,y].
BiPoly bipoly_x();
BiPoly bipoly_y();

} // namespace newtoncomm
