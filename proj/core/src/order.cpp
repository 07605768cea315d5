#include "wilson/order.hpp"

#include <string>

#include "wilson/error.hpp"

namespace wilson {

namespace {

void check_degree(const NumberFieldOrder& o, const OrderElement& a) {
  if (static_cast<int>(a.coeffs.size()) != o.degree())
    throw Error(ErrorCode::DegreeMismatch,
                "element has " + std::to_string(a.coeffs.size()) + " coordinates, order has degree " +
                    std::to_string(o.degree()));
}

OrderElement from_poly(const NumberFieldOrder& o, IntPoly g) {
  g = rem_monic(g, o.defining_poly());
  g.resize(static_cast<std::size_t>(o.degree()));
  return OrderElement{std::move(g)};
}

IntPoly as_poly(const OrderElement& a) {
  IntPoly g = a.coeffs;
  trim(g);
  return g;
}

}  // namespace

bool OrderElement::is_zero() const {
  for (const auto& c : coeffs)
    if (c != 0) return false;
  return true;
}

OrderElement NumberFieldOrder::zero() const {
  return OrderElement{std::vector<Integer>(static_cast<std::size_t>(degree()))};
}

OrderElement NumberFieldOrder::one() const { return from_integer(1); }

OrderElement NumberFieldOrder::from_integer(const Integer& n) const {
  OrderElement r = zero();
  r.coeffs[0] = n;
  return r;
}

OrderElement NumberFieldOrder::theta() const { return evaluate(IntPoly{0, 1}); }

OrderElement NumberFieldOrder::evaluate(const IntPoly& g) const { return from_poly(*this, g); }

OrderElement NumberFieldOrder::element(std::span<const Integer> coeffs) const {
  OrderElement r{std::vector<Integer>(coeffs.begin(), coeffs.end())};
  check_degree(*this, r);
  return r;
}

NumberFieldOrder make_order(std::span<const Integer> coeffs) {
  IntPoly f(coeffs.begin(), coeffs.end());
  trim(f);
  if (f.empty()) throw Error(ErrorCode::DegreeZero, "defining polynomial is zero");
  if (degree(f) == 0) throw Error(ErrorCode::DegreeZero, "defining polynomial is constant");
  if (f.back() != 1)
    throw Error(ErrorCode::NotMonic, "defining polynomial " + format_polynomial(f) + " is not monic");
  if (degree(f) > kMaxDegree)
    throw Error(ErrorCode::DegreeTooLarge,
                "degree " + std::to_string(degree(f)) + " exceeds the supported bound " +
                    std::to_string(kMaxDegree));
  if (auto g = find_rational_factor(f))
    throw Error(ErrorCode::Reducible,
                format_polynomial(f) + " is reducible: divisible by " + format_polynomial(*g));
  return NumberFieldOrder(std::move(f));
}

NumberFieldOrder make_order(std::string_view poly_text) {
  const IntPoly f = parse_polynomial(poly_text);
  return make_order(std::span<const Integer>(f));
}

OrderElement add(const NumberFieldOrder& o, const OrderElement& a, const OrderElement& b) {
  check_degree(o, a);
  check_degree(o, b);
  OrderElement r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

OrderElement sub(const NumberFieldOrder& o, const OrderElement& a, const OrderElement& b) {
  check_degree(o, a);
  check_degree(o, b);
  OrderElement r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
  return r;
}

OrderElement neg(const NumberFieldOrder& o, const OrderElement& a) {
  check_degree(o, a);
  OrderElement r = a;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

OrderElement mul(const NumberFieldOrder& o, const OrderElement& a, const OrderElement& b) {
  check_degree(o, a);
  check_degree(o, b);
  return from_poly(o, poly_mul(as_poly(a), as_poly(b)));
}

OrderElement pow(const NumberFieldOrder& o, const OrderElement& a, unsigned exponent) {
  OrderElement r = o.one();
  OrderElement base = a;
  while (exponent) {
    if (exponent & 1u) r = mul(o, r, base);
    exponent >>= 1;
    if (exponent) base = mul(o, base, base);
  }
  return r;
}

Integer norm(const NumberFieldOrder& o, const OrderElement& a) {
  check_degree(o, a);
  const IntPoly g = as_poly(a);
  if (g.empty()) return 0;
  return abs(resultant(o.defining_poly(), g));
}

std::vector<std::vector<Integer>> multiplication_matrix(const NumberFieldOrder& o,
                                                        const OrderElement& a) {
  std::vector<std::vector<Integer>> rows;
  OrderElement cur = a;
  const OrderElement theta = o.theta();
  for (int j = 0; j < o.degree(); ++j) {
    rows.push_back(cur.coeffs);
    cur = mul(o, cur, theta);
  }
  return rows;
}

}  // namespace wilson
