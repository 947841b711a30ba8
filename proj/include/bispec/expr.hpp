#pragma once

#include <string>
#include <string_view>

#include "bispec/ratfun.hpp"

namespace bispec {

/// Recursive-descent parser for rational-function expressions.
///
/// Grammar:
///   expr   := term { ("+"|"-") term }
///   term   := unary { ("*"|"/") unary }
///   unary  := ["-"] factor
///   factor := base ["^" integer]
///   base   := integer | integer "/" integer | "i" | "x" | "z" | "(" expr ")"
///
/// Division binds like multiplication and is left-associative. "^" takes
/// nonnegative exponents on any base; negative exponents only when the base is
/// a constant multiple of a declared factor. Divisors must be products of
/// declared factor powers and constants.
RatFun parse_expr(std::string_view text, const FactorBasisPtr& basis);

/// Canonical expression text; parse(print(v)) == v and printing is a fixed
/// point byte-for-byte.
std::string print_expr(const RatFun& v);

std::string print_poly(const BiPoly& p);
std::string print_uni(const UniPoly& p, Var v);

} // namespace bispec
