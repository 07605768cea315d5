#pragma once

#include <climits>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wilson/lattice.hpp"
#include "wilson/order.hpp"
#include "wilson/poly_fp.hpp"

namespace wilson {

/// A prime ideal P = (p, g(theta)) of Z[theta] above the rational prime p,
/// read off from the factor g of f mod p (Kummer-Dedekind).
struct PrimeIdealData {
  std::uint64_t rational_prime = 0;
  fp::Poly gen_poly;  // monic irreducible factor of f mod p
  int ram_index = 0;  // e_P
  int res_degree = 0; // f_P = deg gen_poly
  int index = 0;      // position among the primes above p

  bool is_even() const { return rational_prime == 2; }
  /// |o/P| = p^f
  Integer norm() const;
  /// gen_poly with coefficients lifted to [0, p)
  IntPoly gen_lift() const;
  std::string label() const;  // "p@i"

  friend bool operator==(const PrimeIdealData&, const PrimeIdealData&) = default;
};

struct IdealFactor {
  PrimeIdealData prime;
  int exponent = 0;  // v_P(a) >= 1

  friend bool operator==(const IdealFactor&, const IdealFactor&) = default;
};

/// An ideal as a formal product of distinct prime powers, ordered by
/// (rational prime, index). No factors means the unit ideal.
struct FactoredIdeal {
  std::vector<IdealFactor> factors;

  bool is_unit_ideal() const { return factors.empty(); }
  Integer norm() const;
  std::string label() const;  // "2^3; 5^1@1"

  friend bool operator==(const FactoredIdeal&, const FactoredIdeal&) = default;
};

inline constexpr int kInfiniteValuation = INT_MAX;
inline constexpr std::uint64_t kDefaultNormCap = 1'000'000'000'000ULL;

bool is_prime(const Integer& n);

/// Dedekind's criterion: Z[theta] is p-maximal iff, writing f = prod g_i^e_i
/// mod p and F = (f - prod g_i^e_i) / p, no g_i with e_i >= 2 divides F mod p.
bool dedekind_maximal(const NumberFieldOrder& o, std::uint64_t p);

/// Primes of Z[theta] above p, sorted by (degree, coefficients from the
/// constant term up). Throws NotPrime or NonMaximalOrder.
std::vector<PrimeIdealData> factor_prime(const NumberFieldOrder& o, std::uint64_t p);

/// HNF of the lattice P^n, generated by p^i g(theta)^(n-i) theta^j.
IntMatrix prime_power_lattice(const NumberFieldOrder& o, const PrimeIdealData& P, int n);

/// HNF of the principal ideal (a).
IntMatrix principal_lattice(const NumberFieldOrder& o, const OrderElement& a);

/// HNF of the product of two ideals given by HNF bases.
IntMatrix ideal_product_lattice(const NumberFieldOrder& o, const IntMatrix& a, const IntMatrix& b);

/// HNF of the ideal described by a factorization; the unit ideal gives Z^d.
IntMatrix factored_ideal_lattice(const NumberFieldOrder& o, const FactoredIdeal& a);

/// Largest k with a in P^k, or kInfiniteValuation for a = 0.
int valuation(const NumberFieldOrder& o, const PrimeIdealData& P, const OrderElement& a);

/// Prime factorization of the principal ideal (a).
/// Throws ZeroElement, NonMaximalOrder or NormTooLarge.
FactoredIdeal factor_element(const NumberFieldOrder& o, const OrderElement& a,
                             std::uint64_t norm_cap = kDefaultNormCap);

/// Parses "p^m[@i](; p^m[@i])*" ("1" is the unit ideal).
/// Throws ParseError, NoSuchPrimeIndex or NonMaximalOrder.
FactoredIdeal parse_ideal(const NumberFieldOrder& o, std::string_view text);

/// Rational primes up to `bound` (inclusive), by sieve.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

}  // namespace wilson
