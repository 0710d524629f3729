#include "newtoncomm/commutant.hpp"

#include "newtoncomm/errors.hpp"
#include "newtoncomm/parallel.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace newtoncomm {

int default_xcap(const UniPoly& f, int max_deg_y) {
    const int n = std::max(f.degree(), 0);
    const int half = (max_deg_y + 2) / 2;  // ceil((M+1)/2)
    return half * (n + 1) + 1;
}

namespace {

std::vector<ColumnKey> ordered_columns(int max_deg_y, int xcap) {
    std::vector<ColumnKey> columns;
    for (int i = 0; i <= max_deg_y; ++i) {
        for (char letter : {'c', 'd'}) {
            for (int j = 0; j <= xcap; ++j) columns.push_back({{letter, i}, j});
        }
    }
    std::sort(columns.begin(), columns.end(), column_precedes);
    return columns;
}

void collect(std::map<RowKey, SparseVector>& rows, const BiPoly& p, int component, int col) {
    for (int i = 0; i <= p.deg_y(); ++i) {
        const UniPoly& c = p.ycoeffs()[static_cast<std::size_t>(i)];
        for (int j = 0; j <= c.degree(); ++j) {
            Rational v = c.coeff(j);
            if (!v.is_zero()) rows[RowKey{component, i, j}].emplace_back(col, std::move(v));
        }
    }
}

} // namespace

CoefficientSystem commutant_system(const UniPoly& f, int max_deg_y, int xcap) {
    CoefficientSystem sys;
    sys.columns = ordered_columns(max_deg_y, xcap);
    const PlanarDerivation delta = newton_derivation(f);
    std::map<RowKey, SparseVector> rows;
    for (std::size_t col = 0; col < sys.columns.size(); ++col) {
        const ColumnKey& key = sys.columns[col];
        BiPoly unit = BiPoly::monomial(UniPoly::monomial(1, key.xpow), key.unknown.index);
        PlanarDerivation e = key.unknown.letter == 'c' ? PlanarDerivation{unit, BiPoly{}} : PlanarDerivation{BiPoly{}, unit};
        PlanarDerivation br = bracket(delta, e);
        collect(rows, br.dx, 0, static_cast<int>(col));
        collect(rows, br.dy, 1, static_cast<int>(col));
    }
    sys.matrix.cols = static_cast<int>(sys.columns.size());
    for (auto& [key, row] : rows) {
        sys.row_keys.push_back(key);
        sys.matrix.rows.push_back(std::move(row));
    }
    return sys;
}

CommutantBasis solve_commutant(const UniPoly& f, int max_deg_y, std::optional<int> xcap) {
    if (max_deg_y < 0) throw InvalidInput("max y-degree must be nonnegative");
    const int cap = xcap.value_or(default_xcap(f, max_deg_y));
    if (cap < 0) throw InvalidInput("x-degree cap must be nonnegative");

    CoefficientSystem sys = commutant_system(f, max_deg_y, cap);

    // The bracket never mixes the two parity classes, so the matrix is block diagonal
    // and each block is solved on its own.
    std::array<std::vector<int>, 2> block_cols;
    std::vector<int> local_index(sys.columns.size());
    for (std::size_t col = 0; col < sys.columns.size(); ++col) {
        auto& cols = block_cols[static_cast<std::size_t>(parity_class(sys.columns[col].unknown) - 1)];
        local_index[col] = static_cast<int>(cols.size());
        cols.push_back(static_cast<int>(col));
    }
    std::array<SparseMatrix, 2> blocks;
    for (std::size_t b = 0; b < 2; ++b) blocks[b].cols = static_cast<int>(block_cols[b].size());
    for (const auto& row : sys.matrix.rows) {
        const int cls = parity_class(sys.columns[static_cast<std::size_t>(row.front().first)].unknown);
        SparseVector local;
        local.reserve(row.size());
        for (const auto& [col, v] : row) {
            if (parity_class(sys.columns[static_cast<std::size_t>(col)].unknown) != cls)
                throw std::logic_error("commutant system row mixes parity classes");
            local.emplace_back(local_index[static_cast<std::size_t>(col)], v);
        }
        blocks[static_cast<std::size_t>(cls - 1)].rows.push_back(std::move(local));
    }

    std::array<std::vector<SparseVector>, 2> kernels;
    parallel_for(2, [&](std::size_t b) { kernels[b] = nullspace(blocks[b]); });

    std::vector<SparseVector> merged;
    for (std::size_t b = 0; b < 2; ++b) {
        for (auto& v : kernels[b]) {
            for (auto& e : v) e.first = block_cols[b][static_cast<std::size_t>(e.first)];
            merged.push_back(std::move(v));
        }
    }
    std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) { return a.front().first < b.front().first; });

    CommutantBasis out;
    out.f = f;
    out.max_deg_y = max_deg_y;
    out.xcap = cap;
    for (const auto& v : merged) out.basis.push_back(assemble_derivation(sys.columns, v));
    return out;
}

HDecomposition decompose_in_H(const UniPoly& f, const PlanarDerivation& gamma) {
    BiPoly q;
    try {
        q = gamma.dx.divide_by_y();
    } catch (const NotDivisible&) {
        throw NotAMultiple("gamma(x) is not divisible by y");
    }
    if (q * BiPoly(f) != gamma.dy) throw NotAMultiple("gamma(y) differs from q * f with q = gamma(x) / y");

    const BiPoly h = hamiltonian(f);
    HDecomposition out;
    std::vector<BiPoly> h_powers{BiPoly::one()};
    while (!q.is_zero()) {
        const int d = q.deg_y();
        if (d % 2 != 0) throw NotAMultiple("q has odd y-degree " + std::to_string(d));
        const UniPoly& lead = q.leading_coeff();
        if (!lead.is_constant())
            throw NotAMultiple("leading y-coefficient of q depends on x (y-degree " + std::to_string(d) + ")");
        const auto s = static_cast<std::size_t>(d / 2);
        while (h_powers.size() <= s) h_powers.push_back(h_powers.back() * h);
        const Rational lambda = lead.coeff(0);
        if (out.q_coeffs.size() <= s) out.q_coeffs.resize(s + 1);
        out.q_coeffs[s] = lambda;
        q -= lambda * h_powers[s];
    }
    return out;
}

PlanarDerivation reconstruct(const UniPoly& f, const HDecomposition& q) {
    const BiPoly h = hamiltonian(f);
    BiPoly sum;
    BiPoly power = BiPoly::one();
    for (const auto& c : q.q_coeffs) {
        sum += c * power;
        power *= h;
    }
    return sum * newton_derivation(f);
}

RankOneCertificate certify_rank_one(const UniPoly& f, int max_deg_y, std::optional<int> xcap) {
    if (f.degree() < 2)
        throw HypothesisViolation("rank-one certificate needs deg f >= 2, got deg f = " +
                                  (f.is_zero() ? std::string("-inf") : std::to_string(f.degree())));
    RankOneCertificate cert;
    cert.commutant = solve_commutant(f, max_deg_y, xcap);
    const PlanarDerivation delta = newton_derivation(f);
    for (const auto& gamma : cert.commutant.basis) {
        if (!bracket(delta, gamma).is_zero()) {
            cert.counterexample = gamma;
            cert.failure = "basis element does not commute with delta_f";
            return cert;
        }
        try {
            HDecomposition q = decompose_in_H(f, gamma);
            if (reconstruct(f, q) != gamma) throw NotAMultiple("reconstruction mismatch");
            cert.decompositions.push_back(std::move(q));
        } catch (const NotAMultiple& e) {
            cert.counterexample = gamma;
            cert.failure = e.what();
            cert.decompositions.clear();
            return cert;
        }
    }
    cert.passed = true;
    return cert;
}

} // namespace newtoncomm
