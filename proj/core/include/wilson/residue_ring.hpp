#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "wilson/order.hpp"
#include "wilson/prime_factor.hpp"

namespace wilson {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;
// Coordinates are kept below the ring size; this keeps every intermediate
// product inside 64 bits.
inline constexpr std::uint64_t kMaxRingSize = std::uint64_t{1} << 30;

/// Canonical representative of a class in o/a: coordinate i lies in
/// [0, diag_i). Unused trailing slots (beyond the degree) stay zero.
struct ResidueElement {
  std::array<std::int64_t, kMaxDegree> coeffs{};

  friend bool operator==(const ResidueElement&, const ResidueElement&) = default;
  friend auto operator<=>(const ResidueElement&, const ResidueElement&) = default;
};

namespace detail {

// Division by a fixed m < 2^32 through a precomputed reciprocal.
struct Divisor {
  std::uint64_t m = 1;
  std::uint64_t inv = ~std::uint64_t{0};  // floor((2^64 - 1) / m)

  Divisor() = default;
  explicit Divisor(std::uint64_t modulus) : m(modulus), inv(~std::uint64_t{0} / modulus) {}

  std::uint64_t quot(std::uint64_t x) const {
    std::uint64_t q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * inv) >> 64);
    std::uint64_t r = x - q * m;
    while (r >= m) {  // at most twice
      r -= m;
      ++q;
    }
    return q;
  }
  std::uint64_t mod(std::uint64_t x) const {
    std::uint64_t r = x - static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * inv) >> 64) * m;
    while (r >= m) r -= m;
    return r;
  }
};

// Row HNF with machine-word entries, same shape as hermite_normal_form.
struct SmallLattice {
  int dim = 0;
  std::int64_t index = 1;  // product of pivots; index * Z^d is in the lattice
  std::array<std::array<std::int64_t, kMaxDegree>, kMaxDegree> rows{};
  Divisor index_div;
  std::array<Divisor, kMaxDegree> pivot_div{};

  static SmallLattice from(const IntMatrix& hnf);
  void reduce(std::array<std::int64_t, kMaxDegree>& v) const;
  bool contains(std::array<std::int64_t, kMaxDegree> v) const;

  template <int D>
  void reduce_fixed(std::array<std::int64_t, kMaxDegree>& v) const;
};

// A prime P above p as the common kernel of f linear forms on F_p^d:
// x lies in P iff every form vanishes on x mod p.
struct PrimeForms {
  Divisor p;
  int count = 0;
  std::array<std::array<std::uint64_t, kMaxDegree>, kMaxDegree> forms{};

  static PrimeForms from(const IntMatrix& hnf, std::uint64_t p, int dim);
  bool contains(const std::array<std::int64_t, kMaxDegree>& v, int dim) const;
};

struct UnitWalker;

}  // namespace detail

/// Membership test for a fixed ideal containing the modulus, applied to
/// canonical representatives.
class IdealMembership {
 public:
  explicit IdealMembership(detail::SmallLattice lattice) : lattice_(lattice) {}
  bool contains(const ResidueElement& x) const { return lattice_.contains(x.coeffs); }

 private:
  detail::SmallLattice lattice_;
};

/// The finite ring o/a as the lattice quotient Z^d / L(a).
class ResidueRing {
 public:
  const NumberFieldOrder& order() const { return order_; }
  const FactoredIdeal& modulus() const { return modulus_; }
  int degree() const { return order_.degree(); }
  const IntMatrix& lattice_basis() const { return basis_; }
  std::span<const std::int64_t> diag() const { return {diag_.data(), static_cast<std::size_t>(degree())}; }
  std::uint64_t size() const { return size_; }
  /// prod p^((m-1) f) (p^f - 1) over the factors.
  std::uint64_t unit_count_formula() const;
  bool is_prime_power() const { return modulus_.factors.size() == 1; }

  ResidueElement zero() const { return {}; }
  ResidueElement one() const { return one_; }
  ResidueElement from_integer(std::int64_t n) const;
  ResidueElement reduce(const OrderElement& a) const;
  OrderElement lift(const ResidueElement& x) const;

  /// The index-th class in mixed-radix order over diag (0 <= index < size()).
  ResidueElement element_at(std::uint64_t index) const;
  std::uint64_t index_of(const ResidueElement& x) const;
  /// Advances x to the next class in mixed-radix order; false after the last.
  bool next(ResidueElement& x) const;

  ResidueElement add(const ResidueElement& a, const ResidueElement& b) const;
  ResidueElement sub(const ResidueElement& a, const ResidueElement& b) const;
  ResidueElement neg(const ResidueElement& a) const;
  ResidueElement mul(const ResidueElement& a, const ResidueElement& b) const;
  ResidueElement pow(ResidueElement a, std::uint64_t e) const;

  /// Outside every prime divisor of the modulus.
  bool is_unit(const ResidueElement& x) const;
  /// Membership in P^level for the factor at `factor_index`; requires
  /// 1 <= level <= that factor's exponent so that the test is well defined.
  IdealMembership prime_power_membership(std::size_t factor_index, int level) const;

 private:
  friend ResidueRing build_residue_ring(const NumberFieldOrder&, const FactoredIdeal&, std::uint64_t);
  ResidueRing(NumberFieldOrder o, FactoredIdeal a) : order_(std::move(o)), modulus_(std::move(a)) {}
  friend struct detail::UnitWalker;
  ResidueElement canonical(std::array<std::int64_t, kMaxDegree> v) const;
  bool in_range(const ResidueElement& x) const;
  template <int D>
  ResidueElement mul_fixed(const ResidueElement& a, const ResidueElement& b) const;

  NumberFieldOrder order_;
  FactoredIdeal modulus_;
  IntMatrix basis_;
  detail::SmallLattice lattice_;
  std::array<std::int64_t, kMaxDegree> diag_{};
  std::uint64_t size_ = 1;
  std::int64_t exponent_ = 1;  // an integer in a; coordinates are reduced modulo it
  detail::Divisor exponent_div_;
  std::vector<detail::PrimeForms> prime_forms_;
  // theta^k mod (f, exponent_) for d <= k <= 2d - 2
  std::vector<std::array<std::int64_t, kMaxDegree>> theta_powers_;
  ResidueElement one_;
};

/// HNF basis of P^n; its determinant is p^(n f).
IntMatrix ideal_lattice(const NumberFieldOrder& o, const PrimeIdealData& P, int n);

/// Throws RingTooLarge when |o/a| exceeds `cap` (or the hard limit 2^30).
ResidueRing build_residue_ring(const NumberFieldOrder& o, const FactoredIdeal& a,
                               std::uint64_t cap = kDefaultEnumerationCap);

std::vector<ResidueElement> units(const ResidueRing& R);

/// Product of all units by enumeration.
ResidueElement unit_product(const ResidueRing& R);

struct Order2Census {
  std::uint64_t solutions = 0;     // units with x^2 = 1, including 1
  std::uint64_t order2_count = 0;  // solutions - 1 = 2^d2 - 1
  std::vector<ResidueElement> elements;  // the order-2 elements
  int d2 = 0;
};

/// Throws NotAPowerOfTwo if the number of square roots of 1 is not a power
/// of two (which would indicate an arithmetic error).
Order2Census order2_census(const ResidueRing& R);

/// Image of U_j in (o/p^n)^x: units congruent to 1 modulo p^j.
/// Throws CompositeModulus or JOutOfRange.
std::vector<ResidueElement> principal_units(const ResidueRing& R, int j);

/// Elements of the subgroup generated by `gens`, by closure.
std::vector<ResidueElement> generated_subgroup(const ResidueRing& R, std::span<const ResidueElement> gens);

/// Product of all elements of the subgroup generated by `gens`.
/// Throws NotAUnit.
ResidueElement subgroup_product(const ResidueRing& R, std::span<const ResidueElement> gens);

/// Multiplicative order of a unit.
std::uint64_t element_order(const ResidueRing& R, const ResidueElement& x);

/// o/p^m for each factor p^m of the modulus, in factor order.
std::vector<ResidueRing> crt_components(const ResidueRing& R, std::uint64_t cap = kMaxRingSize);

}  // namespace wilson
