#include "newtoncomm/coefficient_system.hpp"

namespace newtoncomm {

bool column_precedes(const ColumnKey& a, const ColumnKey& b) {
    if (a.unknown.index != b.unknown.index) return a.unknown.index > b.unknown.index;
    if (a.xpow != b.xpow) return a.xpow > b.xpow;
    return a.unknown.letter < b.unknown.letter;
}

PlanarDerivation assemble_derivation(const std::vector<ColumnKey>& columns, const SparseVector& solution) {
    int top = 0;
    for (const auto& [col, v] : solution) top = std::max(top, columns[static_cast<std::size_t>(col)].unknown.index);
    std::vector<std::vector<Rational>> c(static_cast<std::size_t>(top) + 1), d(static_cast<std::size_t>(top) + 1);
    for (const auto& [col, v] : solution) {
        const ColumnKey& key = columns[static_cast<std::size_t>(col)];
        auto& target = (key.unknown.letter == 'c' ? c : d)[static_cast<std::size_t>(key.unknown.index)];
        if (static_cast<int>(target.size()) <= key.xpow) target.resize(static_cast<std::size_t>(key.xpow) + 1);
        target[static_cast<std::size_t>(key.xpow)] = v;
    }
    std::vector<UniPoly> cx, dy;
    for (auto& coeffs : c) cx.emplace_back(std::move(coeffs));
    for (auto& coeffs : d) dy.emplace_back(std::move(coeffs));
    return {BiPoly(UniPoly::Ring{}, std::move(cx)), BiPoly(UniPoly::Ring{}, std::move(dy))};
}

} // namespace newtoncomm
