#include "newtoncomm/laurent_poly.hpp"

#include "newtoncomm/errors.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace newtoncomm {

namespace {

void check_root_index(int t) {
    if (t < 1) throw InvalidInput("Laurent root index must be positive, got " + std::to_string(t));
}

} // namespace

LaurentPoly::LaurentPoly(Ring ring) : ring_(ring) { check_root_index(ring.t); }

LaurentPoly::LaurentPoly(Ring ring, const Rational& constant) : LaurentPoly(ring) {
    if (!constant.is_zero()) terms_.emplace(0, constant);
}

LaurentPoly::LaurentPoly(Ring ring, std::map<std::int64_t, Rational> terms)
    : ring_(ring), terms_(std::move(terms)) {
    check_root_index(ring.t);
    std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

LaurentPoly LaurentPoly::monomial(Ring ring, const Rational& c, std::int64_t z_exponent) {
    LaurentPoly p(ring);
    if (!c.is_zero()) p.terms_.emplace(z_exponent, c);
    return p;
}

LaurentPoly LaurentPoly::monomial_x(Ring ring, const Rational& c, const Rational& x_exponent) {
    Rational z = x_exponent * Rational(ring.t);
    if (!z.is_integer())
        throw RingMismatch("exponent " + x_exponent.to_string() + " is not a multiple of 1/" +
                           std::to_string(ring.t));
    return monomial(ring, c, z.num().get_si());
}

LaurentPoly LaurentPoly::from_unipoly(const UniPoly& p, Ring ring) {
    LaurentPoly out(ring);
    const auto& cs = p.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (!cs[i].is_zero()) out.terms_.emplace(static_cast<std::int64_t>(i) * ring.t, cs[i]);
    }
    return out;
}

std::optional<Rational> LaurentPoly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return Rational(z_degree(), ring_.t);
}

Rational LaurentPoly::coeff_z(std::int64_t z_exponent) const {
    auto it = terms_.find(z_exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPoly LaurentPoly::derivative() const {
    LaurentPoly out(ring_);
    for (const auto& [k, c] : terms_) {
        if (k == 0) continue;
        out.terms_.emplace(k - ring_.t, c * Rational(k, ring_.t));
    }
    return out;
}

LaurentPoly LaurentPoly::with_root_index(int new_t) const {
    check_root_index(new_t);
    if (new_t % ring_.t != 0)
        throw RingMismatch("root index " + std::to_string(new_t) + " is not a multiple of " +
                           std::to_string(ring_.t));
    const std::int64_t scale = new_t / ring_.t;
    LaurentPoly out(Ring{new_t});
    for (const auto& [k, c] : terms_) out.terms_.emplace(k * scale, c);
    return out;
}

LaurentPoly LaurentPoly::normalized() const {
    std::int64_t g = ring_.t;
    for (const auto& [k, c] : terms_) g = std::gcd(g, k);
    if (g <= 1) return *this;
    LaurentPoly out(Ring{static_cast<int>(ring_.t / g)});
    for (const auto& [k, c] : terms_) out.terms_.emplace(k / g, c);
    return out;
}

std::optional<UniPoly> LaurentPoly::to_unipoly() const {
    if (terms_.empty()) return UniPoly{};
    std::vector<Rational> coeffs;
    for (const auto& [k, c] : terms_) {
        if (k < 0 || k % ring_.t != 0) return std::nullopt;
        auto idx = static_cast<std::size_t>(k / ring_.t);
        if (coeffs.size() <= idx) coeffs.resize(idx + 1);
        coeffs[idx] = c;
    }
    return UniPoly(std::move(coeffs));
}

double LaurentPoly::evaluate(double x) const {
    double acc = 0.0;
    for (const auto& [k, c] : terms_)
        acc += c.to_double() * std::pow(x, static_cast<double>(k) / ring_.t);
    return acc;
}

void LaurentPoly::check_same_ring(const LaurentPoly& o) const {
    if (ring_ != o.ring_)
        throw RingMismatch("Laurent root indices differ: " + std::to_string(ring_.t) + " vs " +
                           std::to_string(o.ring_.t));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_same_ring(o);
    for (const auto& [k, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same_ring(b);
    LaurentPoly out(a.ring_);
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            auto [it, inserted] = out.terms_.try_emplace(ka + kb, ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    }
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
    LaurentPoly result = one(ring_);
    LaurentPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::exact_divide(const LaurentPoly& divisor) const {
    check_same_ring(divisor);
    if (divisor.is_zero()) throw InvalidInput("Laurent division by zero");
    if (is_zero()) return LaurentPoly(ring_);
    // Shift both operands into K[z] and divide there; units z^k are absorbed by the shifts.
    const std::int64_t shift_a = z_low_degree();
    const std::int64_t shift_b = divisor.z_low_degree();
    auto to_z_poly = [](const LaurentPoly& p, std::int64_t shift) {
        std::vector<Rational> cs(static_cast<std::size_t>(p.z_degree() - shift) + 1);
        for (const auto& [k, c] : p.terms_) cs[static_cast<std::size_t>(k - shift)] = c;
        return UniPoly(std::move(cs));
    };
    UniPoly q = to_z_poly(*this, shift_a).exact_divide(to_z_poly(divisor, shift_b));
    LaurentPoly out(ring_);
    const auto& cs = q.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (!cs[i].is_zero()) out.terms_.emplace(static_cast<std::int64_t>(i) + shift_a - shift_b, cs[i]);
    }
    return out;
}

} // namespace newtoncomm
