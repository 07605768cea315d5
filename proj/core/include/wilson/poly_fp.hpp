#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wilson/poly_zz.hpp"

namespace wilson::fp {

// Polynomials over the prime field F_p, constant term first, trimmed.
// Coefficients are always in [0, p). p must be below 2^63.
using Poly = std::vector<std::uint64_t>;

struct Field {
  std::uint64_t p;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;
};

void trim(Poly& f);
int degree(const Poly& f);

Poly reduce(const IntPoly& f, const Field& F);
IntPoly lift(const Poly& f);            // coefficients in [0, p)
IntPoly lift_symmetric(const Poly& f, std::uint64_t p);  // in (-p/2, p/2]

Poly add(const Poly& a, const Poly& b, const Field& F);
Poly sub(const Poly& a, const Poly& b, const Field& F);
Poly mul(const Poly& a, const Poly& b, const Field& F);
Poly monic(const Poly& a, const Field& F);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, const Field& F);
Poly rem(const Poly& a, const Poly& b, const Field& F);
Poly gcd(Poly a, Poly b, const Field& F);  // monic, or empty if both zero
Poly derivative(const Poly& f, const Field& F);

/// base^e mod `modulus`, exponent given as an arbitrary-precision integer.
Poly powmod(const Poly& base, const Integer& e, const Poly& modulus,
            const Field& F);

/// Strict ordering used for every factor list: degree first, then the
/// coefficient tuple read from the constant term upward.
bool factor_less(const Poly& a, const Poly& b);

struct Factor {
  Poly poly;  // monic irreducible
  int multiplicity;
};

/// Complete factorization of a nonzero polynomial into monic irreducibles,
/// sorted by factor_less. The leading coefficient is dropped.
///
/// Square-free decomposition, then distinct-degree factorization, then
/// equal-degree splitting. Equal-degree pieces with p^k < 10^4 are split by
/// exhaustive monic divisor search; larger ones by random binomial powering
/// with a fixed seed, so results are reproducible.
std::vector<Factor> factor(const Poly& f, const Field& F);

bool is_irreducible(const Poly& f, const Field& F);

}  // namespace wilson::fp
