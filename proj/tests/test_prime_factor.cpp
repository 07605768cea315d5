#include <random>

#include "doctest.h"
#include "support.hpp"
#include "wilson/error.hpp"
#include "wilson/prime_factor.hpp"
#include "wilson/serialize.hpp"

using namespace wilson;

namespace {

OrderElement E(const NumberFieldOrder& o, std::initializer_list<long> cs) {
  std::vector<Integer> v;
  for (long c : cs) v.emplace_back(c);
  return o.element(v);
}

OrderElement random_nonzero(const NumberFieldOrder& o, std::mt19937_64& rng) {
  std::vector<Integer> v(static_cast<std::size_t>(o.degree()));
  do {
    for (auto& c : v) c = static_cast<long>(rng() % 21) - 10;
  } while (o.element(v).is_zero());
  return o.element(v);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("factor_prime examples") {
  const auto o = make_order("x^2+1");
  auto at2 = factor_prime(o, 2);
  REQUIRE(at2.size() == 1);
  CHECK(at2[0].gen_poly == fp::Poly{1, 1});
  CHECK(at2[0].ram_index == 2);
  CHECK(at2[0].res_degree == 1);
  CHECK(at2[0].is_even());

  auto at5 = factor_prime(o, 5);
  REQUIRE(at5.size() == 2);
  CHECK(at5[0].gen_poly == fp::Poly{2, 1});
  CHECK(at5[1].gen_poly == fp::Poly{3, 1});
  CHECK(at5[0].index == 0);
  CHECK(at5[1].index == 1);
  for (const auto& P : at5) CHECK((P.ram_index == 1 && P.res_degree == 1));

  auto at3 = factor_prime(o, 3);
  REQUIRE(at3.size() == 1);
  CHECK(at3[0].gen_poly == fp::Poly{1, 0, 1});
  CHECK(at3[0].ram_index == 1);
  CHECK(at3[0].res_degree == 2);
  CHECK(at3[0].norm() == 9);

  CHECK(code_of([&] { factor_prime(o, 4); }) == ErrorCode::NotPrime);
  CHECK(code_of([&] { factor_prime(make_order("x^2+3"), 2); }) == ErrorCode::NonMaximalOrder);
}

TEST_CASE("dedekind_maximal examples") {
  CHECK(dedekind_maximal(make_order("x^2+1"), 2));
  CHECK_FALSE(dedekind_maximal(make_order("x^2+3"), 2));
  CHECK(dedekind_maximal(make_order("x^2-2"), 3));
  CHECK_FALSE(dedekind_maximal(make_order("x^2-5"), 2));
  CHECK_FALSE(dedekind_maximal(make_order("x^2+4x+20"), 2));
  CHECK(code_of([] { dedekind_maximal(make_order("x^2+1"), 9); }) == ErrorCode::NotPrime);
}

TEST_CASE("dedekind criterion agrees with a brute-force integrality search") {
  const char* polys[] = {"x^2+1", "x^2+3", "x^2-5", "x^2-2", "x^2+x+1", "x^2-x-1", "x^2-12",
                         "x^2+7", "x^2-x+2", "x^3-2", "x^3+3", "x^3-x-1", "x^2+18", "x^3-10"};
  for (const char* poly : polys) {
    const auto o = make_order(poly);
    for (std::uint64_t p : {2, 3, 5, 7}) {
      CAPTURE(poly);
      CAPTURE(p);
      CHECK(dedekind_maximal(o, p) == testing::p_maximal_by_search(o, p));
    }
  }
}

TEST_CASE("fundamental identity sum e f = d over the catalog") {
  for (const auto& field : testing::extended_catalog()) {
    const auto o = make_order(field.poly);
    for (auto p : primes_up_to(50)) {
      if (!dedekind_maximal(o, p)) continue;
      int total = 0;
      for (const auto& P : factor_prime(o, p)) {
        total += P.ram_index * P.res_degree;
        CHECK(fp::is_irreducible(P.gen_poly, fp::Field{p}));
        CHECK(P.res_degree == fp::degree(P.gen_poly));
      }
      CAPTURE(field.name);
      CAPTURE(p);
      CHECK(total == o.degree());
    }
  }
}

TEST_CASE("factor_prime is deterministic") {
  const auto o = make_order("x^4+1");
  for (auto p : primes_up_to(50)) {
    const auto a = factor_prime(o, p);
    const auto b = factor_prime(make_order("1,0,0,0,1"), p);
    CHECK(a == b);
  }
}

TEST_CASE("valuation examples") {
  const auto o = make_order("x^2+1");
  const auto P2 = factor_prime(o, 2)[0];
  CHECK(valuation(o, P2, o.one()) == 0);
  CHECK(valuation(o, P2, o.from_integer(2)) == 2);
  CHECK(valuation(o, P2, E(o, {1, 1})) == 1);
  CHECK(valuation(o, P2, o.zero()) == kInfiniteValuation);
  CHECK(valuation(o, P2, o.from_integer(16)) == 8);
  const auto P5 = factor_prime(o, 5);
  // 2 + i lies in exactly one of the primes above 5
  CHECK(valuation(o, P5[0], E(o, {2, 1})) + valuation(o, P5[1], E(o, {2, 1})) == 1);
}

TEST_CASE("valuation is additive") {
  std::mt19937_64 rng(17);
  for (const auto& field : testing::extended_catalog()) {
    const auto o = make_order(field.poly);
    std::vector<PrimeIdealData> primes;
    for (std::uint64_t p : {2, 3, 5, 7})
      if (dedekind_maximal(o, p))
        for (auto& P : factor_prime(o, p)) primes.push_back(P);
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = random_nonzero(o, rng), b = random_nonzero(o, rng);
      const auto ab = mul(o, a, b);
      for (const auto& P : primes) {
        CAPTURE(field.name);
        CAPTURE(P.label());
        CHECK(valuation(o, P, ab) == valuation(o, P, a) + valuation(o, P, b));
      }
    }
  }
}

TEST_CASE("factor_element examples") {
  const auto o = make_order("x^2+1");
  auto f = factor_element(o, E(o, {1, 1}));
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].prime.rational_prime == 2);
  CHECK(f.factors[0].exponent == 1);

  f = factor_element(o, o.from_integer(2));
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].exponent == 2);

  CHECK(factor_element(o, o.one()).is_unit_ideal());
  CHECK(factor_element(o, E(o, {0, -1})).is_unit_ideal());
  CHECK(code_of([&] { factor_element(o, o.zero()); }) == ErrorCode::ZeroElement);
  CHECK(code_of([&] { factor_element(make_order("x^2+3"), E(make_order("x^2+3"), {1, 1})); }) ==
        ErrorCode::NonMaximalOrder);
  CHECK(code_of([&] { factor_element(o, o.from_integer(1000003), 1000); }) == ErrorCode::NormTooLarge);
}

TEST_CASE("factor_element reconstructs the norm") {
  std::mt19937_64 rng(23);
  for (const auto& field : testing::catalog()) {
    const auto o = make_order(field.poly);
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = random_nonzero(o, rng);
      // only elements whose norm avoids non-maximal primes; the catalog is maximal everywhere
      const auto fa = factor_element(o, a);
      CAPTURE(field.name);
      CHECK(fa.norm() == norm(o, a));
      for (const auto& [P, m] : fa.factors) CHECK(valuation(o, P, a) == m);
      CHECK(lattice_index(factored_ideal_lattice(o, fa)) == norm(o, a));
      CHECK(factored_ideal_lattice(o, fa) == principal_lattice(o, a));
    }
  }
}

TEST_CASE("parse_ideal examples") {
  const auto o = make_order("x^2+1");
  auto a = parse_ideal(o, "2^3");
  REQUIRE(a.factors.size() == 1);
  CHECK(a.factors[0].prime.gen_poly == fp::Poly{1, 1});
  CHECK(a.factors[0].exponent == 3);
  CHECK(a.norm() == 8);

  a = parse_ideal(o, "5^1@1");
  REQUIRE(a.factors.size() == 1);
  CHECK(a.factors[0].prime.index == 1);
  CHECK(a.factors[0].prime.gen_poly == fp::Poly{3, 1});

  a = parse_ideal(o, " 5^2@1 ; 2^1 ; 3^1 ");
  REQUIRE(a.factors.size() == 3);
  CHECK(a.factors[0].prime.rational_prime == 2);
  CHECK(a.factors[1].prime.rational_prime == 3);
  CHECK(a.factors[2].prime.rational_prime == 5);
  CHECK(a.norm() == 2 * 9 * 25);
  CHECK(a.label() == "2^1@0; 3^1@0; 5^2@1");

  CHECK(parse_ideal(o, "1").is_unit_ideal());
  CHECK(code_of([&] { parse_ideal(o, "4^1"); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_ideal(o, "2^0"); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_ideal(o, "2^1; 2^2"); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_ideal(o, "2^"); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_ideal(o, "five"); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_ideal(o, "2^1@1"); }) == ErrorCode::NoSuchPrimeIndex);
  CHECK(code_of([&] { parse_ideal(make_order("x^2+3"), "2^1"); }) == ErrorCode::NonMaximalOrder);
}

TEST_CASE("prime power lattices have index p^(n f)") {
  for (const auto& field : testing::catalog()) {
    const auto o = make_order(field.poly);
    for (std::uint64_t p : {2, 3, 5}) {
      for (const auto& P : factor_prime(o, p))
        for (int n = 1; n <= 5; ++n) {
          Integer expect;
          mpz_ui_pow_ui(expect.get_mpz_t(), p, static_cast<unsigned long>(n * P.res_degree));
          CHECK(lattice_index(prime_power_lattice(o, P, n)) == expect);
        }
    }
  }
}

TEST_CASE("factorization JSON shape") {
  const auto o = make_order("x^2+1");
  const auto j = to_json(parse_ideal(o, "2^3; 5^1@1"));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(j[0]["prime"] == 2);
  CHECK(j[0]["gen"] == nlohmann::json::array({1, 1}));
  CHECK(j[0]["e"] == 2);
  CHECK(j[0]["f"] == 1);
  CHECK(j[0]["m"] == 3);
  CHECK(j[1]["gen"] == nlohmann::json::array({3, 1}));
}

TEST_CASE("sieve") {
  CHECK(primes_up_to(13) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13});
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(1000).size() == 168);
  CHECK(is_prime(Integer("2305843009213693951")));
  CHECK_FALSE(is_prime(Integer(1)));
}
