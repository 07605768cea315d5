#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wilson {

using Integer = mpz_class;

// Dense integer polynomial, constant term first. The zero polynomial is the
// empty vector; trailing zeros are never stored.
using IntPoly = std::vector<Integer>;

void trim(IntPoly& f);
int degree(const IntPoly& f);  // -1 for the zero polynomial

IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_pow(const IntPoly& a, unsigned exponent);

/// Division by a monic divisor. Returns nullopt if the remainder is nonzero.
std::optional<IntPoly> exact_div_monic(const IntPoly& a, const IntPoly& monic);

/// Remainder of `a` modulo the monic polynomial `monic`.
IntPoly rem_monic(const IntPoly& a, const IntPoly& monic);

IntPoly derivative(const IntPoly& f);

/// Determinant by Bareiss fraction-free elimination.
Integer determinant(std::vector<std::vector<Integer>> m);

/// Res(f, g) as the Sylvester determinant.
Integer resultant(const IntPoly& f, const IntPoly& g);

Integer discriminant_monic(const IntPoly& f);

/// A nontrivial monic factor of the monic polynomial `f`, or nullopt if `f`
/// is irreducible over Q.
std::optional<IntPoly> find_rational_factor(const IntPoly& f);

/// Parses "c0,c1,...,cd" (constant term first) or a human form such as
/// "x^3 - 2x + 1". Throws Error{ParseError}.
IntPoly parse_polynomial(std::string_view text);

std::string format_polynomial(const IntPoly& f, std::string_view var = "x");
std::string format_coefficients(std::span<const Integer> coeffs);

}  // namespace wilson
