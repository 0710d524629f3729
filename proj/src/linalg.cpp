#include "newtoncomm/linalg.hpp"

#include <algorithm>
#include <map>

namespace newtoncomm {

void axpy(SparseVector& y, const Rational& factor, const SparseVector& x) {
    if (factor.is_zero() || x.empty()) return;
    SparseVector out;
    out.reserve(y.size() + x.size());
    auto iy = y.begin();
    auto ix = x.begin();
    while (iy != y.end() || ix != x.end()) {
        if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
            out.push_back(std::move(*iy));
            ++iy;
        } else if (iy == y.end() || ix->first < iy->first) {
            out.emplace_back(ix->first, factor * ix->second);
            ++ix;
        } else {
            Rational v = iy->second + factor * ix->second;
            if (!v.is_zero()) out.emplace_back(iy->first, std::move(v));
            ++iy;
            ++ix;
        }
    }
    y = std::move(out);
}

Rational entry(const SparseVector& v, int col) {
    auto it = std::lower_bound(v.begin(), v.end(), col, [](const auto& e, int c) { return e.first < c; });
    return (it != v.end() && it->first == col) ? it->second : Rational(0);
}

std::vector<SparseVector> rref(std::vector<SparseVector> rows) {
    // Forward pass: keep an echelon basis keyed by pivot column; each stored row
    // starts at its pivot with value 1.
    std::map<int, SparseVector> echelon;
    for (auto& row : rows) {
        while (!row.empty()) {
            auto it = echelon.find(row.front().first);
            if (it == echelon.end()) break;
            Rational factor = -row.front().second;
            axpy(row, factor, it->second);
        }
        if (row.empty()) continue;
        Rational inv = row.front().second.inverse();
        for (auto& e : row) e.second *= inv;
        int pivot = row.front().first;
        echelon.emplace(pivot, std::move(row));
    }
    // Backward pass: clear each pivot column from the rows above it.
    for (auto it = echelon.rbegin(); it != echelon.rend(); ++it) {
        const int pivot = it->first;
        const SparseVector& pivot_row = it->second;
        for (auto jt = echelon.begin(); jt->first < pivot; ++jt) {
            Rational v = entry(jt->second, pivot);
            if (!v.is_zero()) axpy(jt->second, -v, pivot_row);
        }
    }
    std::vector<SparseVector> out;
    out.reserve(echelon.size());
    for (auto& [pivot, row] : echelon) out.push_back(std::move(row));
    return out;
}

std::vector<SparseVector> nullspace(const SparseMatrix& a) {
    std::vector<SparseVector> reduced = rref(a.rows);
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols), false);
    for (const auto& row : reduced) is_pivot[static_cast<std::size_t>(row.front().first)] = true;

    std::vector<SparseVector> basis;
    for (int free = 0; free < a.cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        SparseVector v;
        for (const auto& row : reduced) {
            Rational value = entry(row, free);
            if (!value.is_zero()) v.emplace_back(row.front().first, -value);
        }
        v.emplace_back(free, Rational(1));
        std::sort(v.begin(), v.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
        basis.push_back(std::move(v));
    }
    return rref(std::move(basis));
}

} // namespace newtoncomm
