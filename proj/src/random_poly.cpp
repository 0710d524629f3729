#include "newtoncomm/random_poly.hpp"

namespace newtoncomm {

int RandomPolys::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Rational RandomPolys::rational() {
    int num = 0;
    while (num == 0) num = uniform(-9, 9);
    return Rational(num, uniform(1, 4));
}

UniPoly RandomPolys::unipoly(int max_degree) {
    std::vector<Rational> c(static_cast<std::size_t>(max_degree) + 1);
    for (auto& v : c)
        if (uniform(0, 1) == 1) v = rational();
    return UniPoly(std::move(c));
}

BiPoly RandomPolys::bipoly(int max_deg_y, int max_deg_x) {
    std::vector<UniPoly> c;
    for (int i = 0; i <= max_deg_y; ++i) c.push_back(unipoly(max_deg_x));
    return BiPoly(UniPoly::Ring{}, std::move(c));
}

PlanarDerivation RandomPolys::derivation(int max_deg_y, int max_deg_x) {
    BiPoly dx = bipoly(max_deg_y, max_deg_x);
    BiPoly dy = bipoly(max_deg_y, max_deg_x);
    return {std::move(dx), std::move(dy)};
}

} // namespace newtoncomm
