#pragma once

#include "newtoncomm/laurent_poly.hpp"
#include "newtoncomm/unipoly.hpp"
#include "newtoncomm/ypoly.hpp"

#include <string>
#include <string_view>

namespace newtoncomm {

/// Which ring a parsed expression must land in.
struct RingDescriptor {
    int t = 1;             ///< root index; only meaningful when laurent is set
    bool laurent = false;  ///< allow negative and fractional x-exponents
    bool allow_y = true;
};

/// Grammar (whitespace insensitive):
///
///     expr     := ['-'] term (('+' | '-') term)*
///     term     := factor ('*' factor)*
///     factor   := '-' factor | atom ['^' exponent]
///     atom     := INT ['/' INT] | 'x' | 'y' | '(' expr ')'
///     exponent := ['-'] INT | '(' ['-'] INT ['/' INT] ')'
///
/// Negative or fractional exponents are accepted only on x and only in Laurent rings;
/// a fractional exponent p/q needs p*t/q to be an integer. Errors: ParseError (with
/// position) for syntax, RingMismatch for exponents outside the requested ring.
LaurentBiPoly parse_expression(std::string_view text, const RingDescriptor& ring);

UniPoly parse_unipoly(std::string_view text);
BiPoly parse_bipoly(std::string_view text);
LaurentPoly parse_laurent(std::string_view text, int t);
LaurentBiPoly parse_laurent_bipoly(std::string_view text, int t);

/// Canonical form: terms by descending y-power, then descending x-power, explicit '*',
/// e.g. "y^2 - 4*x^3 - 10*x", "x*y^2 - x^(-1)", "3*x^(-2/3)".
std::string to_string(const UniPoly& p, std::string_view var = "x");
std::string to_string(const BiPoly& p);
std::string to_string(const LaurentPoly& p);
std::string to_string(const LaurentBiPoly& p);

} // namespace newtoncomm
