#pragma once

#include <span>
#include <vector>

#include "wilson/poly_zz.hpp"

namespace wilson {

inline constexpr int kMaxDegree = 8;

/// Element of Z[theta], stored as its coordinates in the power basis
/// 1, theta, ..., theta^(d-1).
struct OrderElement {
  std::vector<Integer> coeffs;

  bool is_zero() const;
  friend bool operator==(const OrderElement&, const OrderElement&) = default;
};

/// The monogenic order Z[theta] = Z[x]/(f) for a monic irreducible f.
/// Construct through make_order; immutable afterwards.
class NumberFieldOrder {
 public:
  const IntPoly& defining_poly() const { return poly_; }
  int degree() const { return static_cast<int>(poly_.size()) - 1; }

  OrderElement zero() const;
  OrderElement one() const;
  OrderElement from_integer(const Integer& n) const;
  OrderElement theta() const;
  /// Evaluates a polynomial at theta.
  OrderElement evaluate(const IntPoly& g) const;
  OrderElement element(std::span<const Integer> coeffs) const;

  friend bool operator==(const NumberFieldOrder& a, const NumberFieldOrder& b) {
    return a.poly_ == b.poly_;
  }

 private:
  explicit NumberFieldOrder(IntPoly poly) : poly_(std::move(poly)) {}
  friend NumberFieldOrder make_order(std::span<const Integer> coeffs);

  IntPoly poly_;
};

/// Validates monic, degree in [1, kMaxDegree], irreducible over Q.
/// Throws Error with NotMonic, DegreeZero, DegreeTooLarge or Reducible.
NumberFieldOrder make_order(std::span<const Integer> coeffs);
NumberFieldOrder make_order(std::string_view poly_text);

OrderElement add(const NumberFieldOrder& o, const OrderElement& a, const OrderElement& b);
OrderElement sub(const NumberFieldOrder& o, const OrderElement& a, const OrderElement& b);
OrderElement neg(const NumberFieldOrder& o, const OrderElement& a);
OrderElement mul(const NumberFieldOrder& o, const OrderElement& a, const OrderElement& b);
OrderElement pow(const NumberFieldOrder& o, const OrderElement& a, unsigned exponent);

/// Absolute norm |N(a)| = |Res(f, a(x))|.
Integer norm(const NumberFieldOrder& o, const OrderElement& a);

/// Matrix of multiplication by `a` on the power basis; row j is a * theta^j.
std::vector<std::vector<Integer>> multiplication_matrix(const NumberFieldOrder& o,
                                                        const OrderElement& a);

}  // namespace wilson
