#include "wilson/wilson.hpp"

#include "wilson/error.hpp"

namespace wilson {

D2Class operator+(D2Class a, D2Class b) {
  if (a.kind == D2Class::Kind::MoreThanOne || b.kind == D2Class::Kind::MoreThanOne)
    return D2Class::more_than_one();
  return D2Class::exact(a.value + b.value);
}

namespace {

void validate(const AbelianGroupSpec& G) {
  for (int n : G.cyclic_orders)
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "cyclic orders must be at least 2");
}

}  // namespace

int d2(const AbelianGroupSpec& G) {
  validate(G);
  int k = 0;
  for (int n : G.cyclic_orders) k += n % 2 == 0;
  return k;
}

std::vector<int> group_sum(const AbelianGroupSpec& G) {
  std::vector<int> s(G.cyclic_orders.size(), 0);
  if (d2(G) != 1) return s;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (G.cyclic_orders[i] % 2 == 0) s[i] = G.cyclic_orders[i] / 2;
  return s;
}

D2Class d2_local(std::uint64_t p, int e, int f, int n) {
  if (e < 1 || f < 1 || n < 1)
    throw Error(ErrorCode::InvalidArgument, "e, f and n must be positive");
  if (p != 2) return D2Class::exact(1);
  if (n == 1) return D2Class::exact(0);
  // (o/p^2)^x = (o/p)^x x U_1/U_2, and U_1/U_2 is the additive group of o/p.
  if (n == 2) return D2Class::exact(f);
  if (n == 3 && f == 1 && e > 1) return D2Class::exact(1);
  if (e == 1 && f == 1) return D2Class::exact(2);
  if (n > 2 * e) return D2Class::exact(1 + e * f);
  return D2Class::more_than_one();
}

std::string_view symbol_name(Order2Symbol s) {
  switch (s) {
    case Order2Symbol::MinusOne: return "-1";
    case Order2Symbol::OnePlusPi: return "1+pi";
    case Order2Symbol::OnePlusPiSquared: return "1+pi^2";
  }
  return "?";
}

Order2Symbol order2_local(std::uint64_t p, int e, int f, int n) {
  if (!d2_local(p, e, f, n).is_exact(1))
    throw Error(ErrorCode::NotUniqueTorsion, "(o/p^" + std::to_string(n) + ")^x with p=" +
                                                 std::to_string(p) + ", e=" + std::to_string(e) +
                                                 ", f=" + std::to_string(f) +
                                                 " does not have a unique element of order 2");
  if (p != 2) return Order2Symbol::MinusOne;
  if (n == 2) return Order2Symbol::OnePlusPi;
  return Order2Symbol::OnePlusPiSquared;
}

OrderElement symbol_element(const NumberFieldOrder& o, Order2Symbol s, const OrderElement& pi) {
  switch (s) {
    case Order2Symbol::MinusOne: return o.from_integer(-1);
    case Order2Symbol::OnePlusPi: return add(o, o.one(), pi);
    case Order2Symbol::OnePlusPiSquared: return add(o, o.one(), mul(o, pi, pi));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown symbol");
}

OrderElement uniformizer(const NumberFieldOrder& o, const PrimeIdealData& P) {
  if (!dedekind_maximal(o, P.rational_prime))
    throw Error(ErrorCode::NonMaximalOrder, "order is not " + std::to_string(P.rational_prime) + "-maximal");
  OrderElement pi = o.evaluate(P.gen_lift());
  if (valuation(o, P, pi) == 1) return pi;
  // g(theta) lies in P; if it lies in P^2 then p does not, and the sum has
  // valuation exactly 1.
  pi = add(o, pi, o.from_integer(static_cast<unsigned long>(P.rational_prime)));
  if (valuation(o, P, pi) == 1) return pi;
  throw Error(ErrorCode::UniformizerNotFound, "no uniformizer found for " + P.label());
}

std::string_view WilsonProduct::class_name() const {
  switch (kind) {
    case Kind::One: return "one";
    case Kind::MinusOne: return "minus_one";
    case Kind::OnePlusPi: return "one_plus_pi";
    case Kind::OnePlusPiSquared: return "one_plus_pi_sq";
  }
  return "?";
}

WilsonProduct classify_global(const NumberFieldOrder& o, const FactoredIdeal& a, std::uint64_t witness_cap) {
  for (const auto& [P, m] : a.factors)
    if (!dedekind_maximal(o, P.rational_prime))
      throw Error(ErrorCode::NonMaximalOrder,
                  "order is not " + std::to_string(P.rational_prime) + "-maximal");

  // d2 of (o/a)^x is the sum over the CRT factors; it equals 1 only when one
  // factor contributes 1 and all others 0.
  WilsonProduct w;
  const IdealFactor* torsion_factor = nullptr;
  for (const auto& factor : a.factors) {
    const D2Class local = d2_local(factor.prime.rational_prime, factor.prime.ram_index,
                                   factor.prime.res_degree, factor.exponent);
    if (local.is_exact(1)) torsion_factor = &factor;
    w.d2 = w.d2 + local;
  }

  if (w.d2.is_exact(1)) {
    const auto& [P, m] = *torsion_factor;
    switch (order2_local(P.rational_prime, P.ram_index, P.res_degree, m)) {
      case Order2Symbol::MinusOne:
        w.kind = WilsonProduct::Kind::MinusOne;
        break;
      case Order2Symbol::OnePlusPi:
        w.kind = WilsonProduct::Kind::OnePlusPi;
        w.prime = P;
        break;
      case Order2Symbol::OnePlusPiSquared:
        w.kind = WilsonProduct::Kind::OnePlusPiSquared;
        w.prime = P;
        break;
    }
  }

  if (a.norm() <= Integer(static_cast<unsigned long>(std::min(witness_cap, kMaxRingSize))))
    w.witness = evaluate_witness(build_residue_ring(o, a, witness_cap), w);
  return w;
}

ResidueElement evaluate_witness(const ResidueRing& R, const WilsonProduct& w,
                                const std::optional<OrderElement>& pi) {
  const NumberFieldOrder& o = R.order();
  switch (w.kind) {
    case WilsonProduct::Kind::One:
      return R.one();
    case WilsonProduct::Kind::MinusOne:
      // -1 is the order-2 element at the odd prime and equals 1 modulo every
      // even prime dividing a exactly once.
      return R.neg(R.one());
    case WilsonProduct::Kind::OnePlusPi:
    case WilsonProduct::Kind::OnePlusPiSquared:
      break;
  }
  if (!w.prime) throw Error(ErrorCode::InvalidArgument, "1 + pi class without a prime");
  const PrimeIdealData& P = *w.prime;
  const OrderElement local = symbol_element(
      o, w.kind == WilsonProduct::Kind::OnePlusPi ? Order2Symbol::OnePlusPi : Order2Symbol::OnePlusPiSquared,
      pi ? *pi : uniformizer(o, P));

  // The witness is local at P^m and 1 at the other factors: with 1 = x + y,
  // x in P^m and y in the cofactor ideal, take x + y * local.
  FactoredIdeal rest;
  int m = 0;
  for (const auto& f : R.modulus().factors) {
    if (f.prime == P)
      m = f.exponent;
    else
      rest.factors.push_back(f);
  }
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "prime " + P.label() + " does not divide the modulus");
  if (rest.is_unit_ideal()) return R.reduce(local);

  const auto [x, y] = split_sum(prime_power_lattice(o, P, m), factored_ideal_lattice(o, rest),
                                o.one().coeffs);
  return R.reduce(add(o, OrderElement{x}, mul(o, OrderElement{y}, local)));
}

int classify_gauss(std::uint64_t A) {
  if (A < 2) throw Error(ErrorCode::InvalidArgument, "classify_gauss needs A >= 2");
  if (A == 4) return -1;
  std::uint64_t odd = A % 2 == 0 ? A / 2 : A;
  if (odd % 2 == 0) return 1;  // 8 | A or A = 4k with k > 1
  if (odd == 1) return 1;      // A = 2
  std::uint64_t p = 3;
  while (p * p <= odd && odd % p != 0) p += 2;
  if (p * p > odd) p = odd;
  while (odd % p == 0) odd /= p;
  return odd == 1 ? -1 : 1;
}

}  // namespace wilson
