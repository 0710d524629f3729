#pragma once

#include "newtoncomm/errors.hpp"
#include "newtoncomm/ypoly.hpp"

namespace newtoncomm {

/// K-derivation of R[y] (R = K[x] or a Laurent ring) given by its values on x and y.
///
/// Leibniz extension: D(p) = dp/dx * D(x) + dp/dy * D(y). For Laurent rings the
/// x-derivative of z^k (z = x^(1/t)) is (k/t) z^(k-t), which is the chain rule for the
/// unique extension of D to x^(1/t), so no separate action on z is stored.
template <CoefficientRing C>
struct Derivation {
    YPoly<C> dx;
    YPoly<C> dy;

    typename C::Ring ring() const { return dx.ring(); }
    bool is_zero() const { return dx.is_zero() && dy.is_zero(); }
    int deg_y() const { return std::max(dx.deg_y(), dy.deg_y()); }

    friend bool operator==(const Derivation&, const Derivation&) = default;

    friend Derivation operator+(const Derivation& a, const Derivation& b) { return {a.dx + b.dx, a.dy + b.dy}; }
    friend Derivation operator-(const Derivation& a, const Derivation& b) { return {a.dx - b.dx, a.dy - b.dy}; }
    friend Derivation operator*(const Rational& s, const Derivation& d) { return {s * d.dx, s * d.dy}; }
    /// Module action q * D.
    friend Derivation operator*(const YPoly<C>& q, const Derivation& d) { return {q * d.dx, q * d.dy}; }
};

using PlanarDerivation = Derivation<UniPoly>;
using LaurentDerivation = Derivation<LaurentPoly>;

template <CoefficientRing C>
YPoly<C> apply(const Derivation<C>& d, const YPoly<C>& p) {
    if (!(d.dx.ring() == p.ring()) || !(d.dy.ring() == p.ring()))
        throw RingMismatch("derivation and element live in different rings");
    return p.derivative_x() * d.dx + p.derivative_y() * d.dy;
}

/// [D1, D2] = D1 o D2 - D2 o D1, materialized on the generators.
template <CoefficientRing C>
Derivation<C> bracket(const Derivation<C>& d1, const Derivation<C>& d2) {
    if (!(d1.ring() == d2.ring())) throw RingMismatch("bracket of derivations over different rings");
    return {apply(d1, d2.dx) - apply(d2, d1.dx), apply(d1, d2.dy) - apply(d2, d1.dy)};
}

/// delta_f = y d/dx + f d/dy, the derivation of x'' = f(x).
PlanarDerivation newton_derivation(const UniPoly& f);

/// H = y^2 - 2 * integral(f dx), integral taken with zero constant term.
BiPoly hamiltonian(const UniPoly& f);

/// d(act_x)/dx + d(act_y)/dy.
BiPoly divergence(const PlanarDerivation& d);

LaurentDerivation to_laurent(const PlanarDerivation& d, int t = 1);

} // namespace newtoncomm
