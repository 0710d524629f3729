#include "newtoncomm/expression.hpp"

#include "newtoncomm/errors.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace newtoncomm {

namespace {

class Parser {
public:
    Parser(std::string_view text, const RingDescriptor& ring)
        : text_(text), ring_(ring), lring_{ring.laurent ? ring.t : 1} {
        if (lring_.t < 1) throw InvalidInput("root index must be positive");
    }

    LaurentBiPoly parse() {
        LaurentBiPoly value = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool peek_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    Integer integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    LaurentBiPoly constant(const Rational& c) const { return LaurentBiPoly(LaurentPoly(lring_, c)); }

    LaurentBiPoly expr() {
        LaurentBiPoly value = term();
        for (;;) {
            if (accept('+')) {
                value += term();
            } else if (accept('-')) {
                value -= term();
            } else {
                return value;
            }
        }
    }

    LaurentBiPoly term() {
        LaurentBiPoly value = factor();
        while (accept('*')) value *= factor();
        return value;
    }

    LaurentBiPoly factor() {
        if (accept('-')) return -factor();
        skip_ws();
        const std::size_t atom_pos = pos_;
        char var = 0;
        LaurentBiPoly base = atom(var);
        if (!accept('^')) return base;
        const std::size_t exp_pos = pos_;
        Rational e = exponent();
        if (var == 'x') {
            if (!ring_.laurent && (e.sign() < 0 || !e.is_integer())) {
                pos_ = exp_pos;
                throw RingMismatch("exponent " + e.to_string() + " is outside K[x,y] (position " +
                                   std::to_string(exp_pos) + ")");
            }
            Rational z = e * Rational(lring_.t);
            if (!z.is_integer())
                throw RingMismatch("exponent " + e.to_string() + " is not a multiple of 1/" +
                                   std::to_string(lring_.t) + " (position " + std::to_string(exp_pos) + ")");
            return LaurentBiPoly(LaurentPoly::monomial(lring_, 1, z.num().get_si()));
        }
        if (!e.is_integer() || e.sign() < 0) {
            if (var == 'y')
                throw RingMismatch("y takes nonnegative integer exponents (position " + std::to_string(exp_pos) + ")");
            pos_ = atom_pos;
            fail("only x may carry a negative or fractional exponent");
        }
        if (!e.num().fits_uint_p() || e.num() > 10000) fail("exponent too large");
        return base.pow(static_cast<unsigned>(e.num().get_ui()));
    }

    LaurentBiPoly atom(char& var) {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == 'x') {
            ++pos_;
            var = 'x';
            return LaurentBiPoly(LaurentPoly::monomial(lring_, 1, lring_.t));
        }
        if (c == 'y') {
            if (!ring_.allow_y) throw RingMismatch("variable y is not allowed in K[x] (position " + std::to_string(pos_) + ")");
            ++pos_;
            var = 'y';
            return LaurentBiPoly::y(lring_);
        }
        if (c == '(') {
            ++pos_;
            LaurentBiPoly inner = expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = integer();
            if (accept('/')) {
                std::size_t den_pos = pos_;
                Integer den = integer();
                if (den == 0) {
                    pos_ = den_pos;
                    fail("zero denominator");
                }
                return constant(Rational(num, den));
            }
            return constant(Rational(num));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Rational exponent() {
        if (accept('(')) {
            bool negative = accept('-');
            Integer num = integer();
            Integer den = 1;
            if (accept('/')) {
                den = integer();
                if (den == 0) fail("zero denominator in exponent");
            }
            expect(')');
            Rational e(num, den);
            return negative ? -e : e;
        }
        bool negative = accept('-');
        if (!peek_digit()) fail("expected exponent");
        Rational e(integer());
        return negative ? -e : e;
    }

    std::string_view text_;
    RingDescriptor ring_;
    LaurentPoly::Ring lring_;
    std::size_t pos_ = 0;
};

struct Term {
    Rational coeff;
    Integer x_num;  // x-exponent as x_num / x_den
    Integer x_den;
    int y_exp;
};

std::string format_x_power(const Rational& e) {
    if (e.is_one()) return "x";
    if (e.is_integer() && e.sign() > 0) return "x^" + e.to_string();
    return "x^(" + e.to_string() + ")";
}

std::string format_terms(const std::vector<Term>& terms) {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Term& term : terms) {
        Rational c = term.coeff;
        if (first) {
            if (c.sign() < 0) out << "-";
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        c = c.abs();
        std::vector<std::string> factors;
        Rational xe(term.x_num, term.x_den);
        bool has_var = !xe.is_zero() || term.y_exp > 0;
        if (!c.is_one() || !has_var) factors.push_back(c.to_string());
        if (!xe.is_zero()) factors.push_back(format_x_power(xe));
        if (term.y_exp == 1) factors.push_back("y");
        else if (term.y_exp > 1) factors.push_back("y^" + std::to_string(term.y_exp));
        for (std::size_t i = 0; i < factors.size(); ++i) out << (i ? "*" : "") << factors[i];
    }
    return out.str();
}

void append_terms(std::vector<Term>& terms, const UniPoly& c, int y_exp) {
    for (int j = c.degree(); j >= 0; --j) {
        Rational v = c.coeff(j);
        if (!v.is_zero()) terms.push_back({v, Integer(j), Integer(1), y_exp});
    }
}

void append_terms(std::vector<Term>& terms, const LaurentPoly& c, int y_exp) {
    for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it)
        terms.push_back({it->second, Integer(static_cast<long>(it->first)), Integer(c.t()), y_exp});
}

} // namespace

LaurentBiPoly parse_expression(std::string_view text, const RingDescriptor& ring) {
    return Parser(text, ring).parse();
}

BiPoly parse_bipoly(std::string_view text) {
    LaurentBiPoly p = parse_expression(text, RingDescriptor{});
    std::vector<UniPoly> out;
    for (const auto& c : p.ycoeffs()) {
        auto u = c.to_unipoly();
        if (!u) throw RingMismatch("expression is not a polynomial in K[x,y]");
        out.push_back(*u);
    }
    return BiPoly(UniPoly::Ring{}, std::move(out));
}

UniPoly parse_unipoly(std::string_view text) {
    RingDescriptor ring;
    ring.allow_y = false;
    LaurentBiPoly p = parse_expression(text, ring);
    auto u = p.coeff(0).to_unipoly();
    if (!u) throw RingMismatch("expression is not a polynomial in K[x]");
    return *u;
}

LaurentPoly parse_laurent(std::string_view text, int t) {
    return parse_expression(text, RingDescriptor{t, true, false}).coeff(0);
}

LaurentBiPoly parse_laurent_bipoly(std::string_view text, int t) {
    return parse_expression(text, RingDescriptor{t, true, true});
}

std::string to_string(const UniPoly& p, std::string_view var) {
    std::vector<Term> terms;
    append_terms(terms, p, 0);
    std::string s = format_terms(terms);
    if (var == "x") return s;
    std::string out;
    for (char ch : s) {
        if (ch == 'x') out += var;
        else out += ch;
    }
    return out;
}

std::string to_string(const BiPoly& p) {
    std::vector<Term> terms;
    for (int i = p.deg_y(); i >= 0; --i) append_terms(terms, p.coeff(i), i);
    return format_terms(terms);
}

std::string to_string(const LaurentPoly& p) {
    std::vector<Term> terms;
    append_terms(terms, p, 0);
    return format_terms(terms);
}

std::string to_string(const LaurentBiPoly& p) {
    std::vector<Term> terms;
    for (int i = p.deg_y(); i >= 0; --i) append_terms(terms, p.coeff(i), i);
    return format_terms(terms);
}

} // namespace newtoncomm
