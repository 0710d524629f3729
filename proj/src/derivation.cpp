#include "newtoncomm/derivation.hpp"

namespace newtoncomm {

PlanarDerivation newton_derivation(const UniPoly& f) { return {bipoly_y(), BiPoly(f)}; }

BiPoly hamiltonian(const UniPoly& f) {
    return BiPoly::monomial(UniPoly::one(), 2) - Rational(2) * BiPoly(f.integral());
}

BiPoly divergence(const PlanarDerivation& d) { return d.dx.derivative_x() + d.dy.derivative_y(); }

LaurentDerivation to_laurent(const PlanarDerivation& d, int t) { return {to_laurent(d.dx, t), to_laurent(d.dy, t)}; }

} // namespace newtoncomm
