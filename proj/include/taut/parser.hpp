#pragma once

#include "taut/charclass.hpp"
#include "taut/tautmono.hpp"

#include <stdexcept>
#include <string>

namespace taut {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, size_t position);
    size_t position() const { return position_; }

private:
    size_t position_;
};

// Expression grammar over a declared point set:
//
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*        '/' needs a scalar divisor
//   unary  := '-' unary | power
//   power  := atom ('^' NAT)*
//   atom   := NAT | 'chi' | 'kappa(M)' | 'psi(M, P)' | 'pi(P, P, ...)' | '(' expr ')'
//   M      := char-class monomial, e.g. 1, e^2*p1
//   P      := point label, or 'star' / the declared star alias
//
// The reserved point prints and parses as "star"; star_alias adds an
// alternative name for it.
TautClass parse_expression(const std::string& text, const RingParams& params,
                           const PointSet& points, const std::string& star_alias = "");

// Standalone char-class monomial, e.g. "e^2*p1" (p_d is rewritten to e^2).
CharClassMonomial parse_charclass(const std::string& text, const RingParams& params);

}  // namespace taut
