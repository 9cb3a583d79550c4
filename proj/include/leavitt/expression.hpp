#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "leavitt/complex.hpp"
#include "leavitt/lpa.hpp"

namespace leavitt {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Algebra elements. Grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('.' factor)*
//   factor := number [factor] | 'e(' vertex ')' | arrow ['*'] | '(' expr ')'
// Numbers are integers or num/den. An all-digit token is always a number.
LpaElement parse_expression(std::string_view text, const Quiver& quiver, Field field);

// p*q written as ghost letters then arrows, e.g. `a1* . a2* . b2 . b1`; `e(v)` for (e_v, e_v).
std::string format_monomial(const Quiver& quiver, const AdmissiblePair& pair);
std::string format_lpa(const Quiver& quiver, const LpaElement& a);

// Complex vectors: `coeff * E(v) zeta(p ; q)` or `coeff * G(a) zeta(p ; q)`
// joined by + and -; `0` is the zero vector. The `coeff *` prefix may be omitted.
ComplexVector parse_vector(std::string_view text, const Quiver& quiver, Field field);
std::string format_basis_vector(const Quiver& quiver, const BasisVector& b);
std::string format_vector(const Quiver& quiver, const ComplexVector& v);

}  // namespace leavitt
