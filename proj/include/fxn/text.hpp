#ifndef FXN_TEXT_HPP
#define FXN_TEXT_HPP

#include <string>
#include <string_view>

#include "fxn/field.hpp"
#include "fxn/poly.hpp"

namespace fxn {

/*
    Text formats.

    Field:       GF(p)  or  GF(p^u; modpoly)     e.g. GF(7^2; x^2 + 1)
    Polynomial:  x^4 + 203*x^3 + 89*x^2 + 77*x + 211

    Printed polynomials list nonzero terms by decreasing degree, coefficients
    as representatives in [0, p), coefficient 1 omitted on non-constant terms.
    Extension-field coefficients outside the prime subfield print as
    (a + b*y + ...) with y the class of the modulus variable.

    The parser accepts the printed form and more: signed and unreduced
    integers, implicit multiplication, repeated terms, parentheses and ^ on
    any factor. Everything is reduced into the field on the way in.
*/

std::string to_string(const FieldSpec& spec);
std::string to_string(const FieldElement& e);
std::string to_string(const Poly& f);

/// Throws ParseError.
FieldSpec parse_field(std::string_view text);
/// Throws ParseError.
Poly parse_poly(std::string_view text, const FieldSpec& spec);

}  // namespace fxn

#endif
