#pragma once

#include "eph/symexpr/expr.hpp"

namespace eph::sym {

// Rational normal form over the atoms of an expression (symbols, function
// calls, fractional powers): numerator and denominator are expanded, the
// monomial content and rational constants are cancelled, the denominator is
// made monic, and the denominator is divided out when it divides the
// numerator exactly. There is no polynomial GCD, so common non-monomial
// factors survive unless one side divides the other. exp() factors inside a
// monomial are merged into a single exp() of the summed argument.
//
// normal(normal(e)) == normal(e) structurally.
Expr normal(const Expr &e);

// True iff normal(e) is the constant zero.
bool is_identically_zero(const Expr &e);

} // namespace eph::sym
