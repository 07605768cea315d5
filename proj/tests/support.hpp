#pragma once

// Shared fixtures and brute-force oracles for the test suites. The oracles
// here deliberately avoid the library code paths they are used to check.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wilson/order.hpp"
#include "wilson/poly_fp.hpp"
#include "wilson/prime_factor.hpp"
#include "wilson/residue_ring.hpp"

namespace wilson::testing {

struct CatalogField {
  std::string name;
  std::string poly;
};

// Fields used throughout the suites. Each order is maximal at every prime
// the tests touch.
inline const std::vector<CatalogField>& catalog() {
  static const std::vector<CatalogField> fields = {
      {"Q(i)", "x^2+1"},              // 2 ramified, e = 2, f = 1
      {"Q(sqrt2)", "x^2-2"},          // 2 ramified, e = 2, f = 1
      {"Q(sqrt-3)", "x^2+x+1"},       // 2 inert, f = 2
      {"Q(sqrt5)", "x^2-x-1"},        // 2 inert, f = 2
      {"Q(zeta8)", "x^4+1"},          // 2 totally ramified, e = 4
  };
  return fields;
}

// Extra orders for global checks: Z itself and a field where 2 splits.
inline const std::vector<CatalogField>& extended_catalog() {
  static const std::vector<CatalogField> fields = [] {
    std::vector<CatalogField> f = catalog();
    f.push_back({"Q", "x"});
    f.push_back({"Q(sqrt-7)", "x^2-x+2"});
    return f;
  }();
  return fields;
}

/// Brute-force irreducibility over F_p: no monic divisor of degree
/// 1..deg/2 among all p^k candidates.
inline bool irreducible_by_search(const fp::Poly& f, const fp::Field& F) {
  const int d = fp::degree(f);
  if (d <= 0) return false;
  for (int k = 1; 2 * k <= d; ++k) {
    fp::Poly cand(static_cast<std::size_t>(k) + 1, 0);
    cand[k] = 1;
    while (true) {
      if (fp::rem(f, cand, F).empty()) return false;
      int j = 0;
      while (j < k && ++cand[j] == F.p) cand[j++] = 0;
      if (j == k) break;
    }
  }
  return true;
}

/// Unit test by exhaustive inverse search, O(N^2); only for small rings.
inline bool has_inverse(const ResidueRing& R, const ResidueElement& x) {
  ResidueElement y = R.zero();
  do {
    if (R.mul(x, y) == R.one()) return true;
  } while (R.next(y));
  return false;
}

/// Characteristic polynomial of an integer matrix (Faddeev-LeVerrier over Q),
/// returned as c_0 = 1, c_1, ..., c_d with det(xI - M) = sum c_k x^(d-k).
inline std::vector<mpq_class> characteristic_poly(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  using Mat = std::vector<std::vector<mpq_class>>;
  Mat A(n, std::vector<mpq_class>(n)), Mk(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A[i][j] = m[i][j];
  std::vector<mpq_class> c(n + 1);
  c[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{k-1} I, c_k = -tr(A M_k) / k
    Mat next(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        mpq_class s = 0;
        if (k > 1)
          for (std::size_t l = 0; l < n; ++l) s += A[i][l] * Mk[l][j];
        if (i == j) s += c[k - 1];
        next[i][j] = s;
      }
    Mk = next;
    mpq_class tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += A[i][l] * Mk[l][i];
    c[k] = -tr / static_cast<long>(k);
  }
  return c;
}

/// p-maximality by brute force: Z[theta] is p-maximal iff no a/p with
/// a in Z[theta] \ pZ[theta] is integral, i.e. iff no nonzero a with
/// coordinates in [0, p) has characteristic polynomial coefficients c_k
/// divisible by p^k.
inline bool p_maximal_by_search(const NumberFieldOrder& o, std::uint64_t p) {
  const int d = o.degree();
  std::vector<Integer> coords(static_cast<std::size_t>(d), 0);
  const Integer P(static_cast<unsigned long>(p));
  while (true) {
    int j = 0;
    while (j < d && (coords[j] += 1) == P) coords[j++] = 0;
    if (j == d) return true;
    const auto c = characteristic_poly(multiplication_matrix(o, o.element(coords)));
    bool integral = true;
    Integer pk = 1;
    for (std::size_t k = 1; k < c.size() && integral; ++k) {
      pk *= P;
      mpq_class q = c[k] / pk;
      integral = q.get_den() == 1;
    }
    if (integral) return false;
  }
}

/// Prediction from the statement of the global theorem, read directly off
/// the factorization (no d2 bookkeeping): returns "one", "minus_one",
/// "one_plus_pi" or "one_plus_pi_sq".
inline std::string direct_rule(const FactoredIdeal& a) {
  int odd = 0;
  bool evens_below_two = true;
  bool all_even = !a.factors.empty();
  int deep = 0;
  const IdealFactor* deep_factor = nullptr;
  for (const auto& f : a.factors) {
    if (f.prime.is_even()) {
      if (f.exponent >= 2) evens_below_two = false;
      if (f.exponent > 1) {
        ++deep;
        deep_factor = &f;
      }
    } else {
      ++odd;
      all_even = false;
    }
  }
  if (odd == 1 && evens_below_two) return "minus_one";
  if (all_even && deep == 1) {
    const auto& f = *deep_factor;
    if (f.exponent == 2 && f.prime.res_degree == 1) return "one_plus_pi";
    if (f.exponent == 3 && f.prime.res_degree == 1 && f.prime.ram_index > 1) return "one_plus_pi_sq";
  }
  return "one";
}

/// Sum of all elements of Z/n_1 x ... x Z/n_k by enumeration.
inline std::vector<int> enumerated_group_sum(const std::vector<int>& orders) {
  std::vector<long> sum(orders.size(), 0);
  std::vector<int> x(orders.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < x.size(); ++i) sum[i] += x[i];
    std::size_t j = 0;
    while (j < x.size() && ++x[j] == orders[j]) x[j++] = 0;
    if (j == x.size()) break;
  }
  std::vector<int> out(orders.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(sum[i] % orders[i]);
  return out;
}

}  // namespace wilson::testing
