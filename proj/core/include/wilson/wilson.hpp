#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "wilson/order.hpp"
#include "wilson/prime_factor.hpp"
#include "wilson/residue_ring.hpp"

namespace wilson {

/// d2(G) = dim_F2 of the 2-torsion of G, where known exactly; otherwise only
/// the bound d2 > 1.
struct D2Class {
  enum class Kind { Exact, MoreThanOne };

  Kind kind = Kind::Exact;
  int value = 0;  // only meaningful for Exact

  static D2Class exact(int k) { return {Kind::Exact, k}; }
  static D2Class more_than_one() { return {Kind::MoreThanOne, 0}; }

  bool is_exact(int k) const { return kind == Kind::Exact && value == k; }
  /// Census-side agreement: Exact(k) needs d2 == k, MoreThanOne needs d2 >= 2.
  bool admits(int d2) const { return kind == Kind::Exact ? d2 == value : d2 >= 2; }

  friend bool operator==(const D2Class&, const D2Class&) = default;
};

/// d2 is additive over direct products.
D2Class operator+(D2Class a, D2Class b);

/// Z/n_1 x ... x Z/n_k with every n_i >= 2.
struct AbelianGroupSpec {
  std::vector<int> cyclic_orders;
};

int d2(const AbelianGroupSpec& G);

/// Sum of all elements of G in closed form: zero unless exactly one cyclic
/// order is even, in which case it is n_i / 2 in that coordinate.
std::vector<int> group_sum(const AbelianGroupSpec& G);

/// d2 of (o/p^n)^x for a prime p with ramification e and residue degree f.
/// Exact where the value is determined (odd p; n = 1 or 2; f = 1 with n = 3
/// and e > 1; e = f = 1; n > 2e), MoreThanOne otherwise.
D2Class d2_local(std::uint64_t p, int e, int f, int n);

enum class Order2Symbol { MinusOne, OnePlusPi, OnePlusPiSquared };

std::string_view symbol_name(Order2Symbol s);

/// The unique order-2 element of (o/p^n)^x when d2 = 1.
/// Throws NotUniqueTorsion when d2_local is not Exact(1).
Order2Symbol order2_local(std::uint64_t p, int e, int f, int n);

/// The symbol as an element of o, for a given uniformizer pi.
OrderElement symbol_element(const NumberFieldOrder& o, Order2Symbol s, const OrderElement& pi);

/// An element of P \ P^2: g(theta) when that works, otherwise g(theta) + p.
/// Throws NonMaximalOrder or UniformizerNotFound.
OrderElement uniformizer(const NumberFieldOrder& o, const PrimeIdealData& P);

struct WilsonProduct {
  enum class Kind { One, MinusOne, OnePlusPi, OnePlusPiSquared };

  Kind kind = Kind::One;
  std::optional<PrimeIdealData> prime;      // set for the 1 + pi cases
  std::optional<ResidueElement> witness;    // canonical class in o/a
  D2Class d2 = D2Class::exact(0);           // of (o/a)^x

  std::string_view class_name() const;      // one | minus_one | one_plus_pi | one_plus_pi_sq
};

/// Product of all elements of (o/a)^x from the factorization of a alone.
/// Never enumerates. The witness is evaluated when |o/a| <= witness_cap.
/// Throws NonMaximalOrder.
WilsonProduct classify_global(const NumberFieldOrder& o, const FactoredIdeal& a,
                              std::uint64_t witness_cap = kDefaultEnumerationCap);

/// Concrete class of the symbolic product in R = o/a. `pi` overrides the
/// default uniformizer for the 1 + pi cases.
ResidueElement evaluate_witness(const ResidueRing& R, const WilsonProduct& w,
                                const std::optional<OrderElement>& pi = std::nullopt);

/// Gauss's rule for (Z/A)^x, decided directly from the shape of A:
/// -1 for A = 4, p^m, 2 p^m (p odd); +1 otherwise (A = 2 included).
int classify_gauss(std::uint64_t A);

}  // namespace wilson
