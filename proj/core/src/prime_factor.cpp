#include "wilson/prime_factor.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "wilson/error.hpp"

namespace wilson {

Integer PrimeIdealData::norm() const {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), rational_prime, static_cast<unsigned long>(res_degree));
  return r;
}

IntPoly PrimeIdealData::gen_lift() const { return fp::lift(gen_poly); }

std::string PrimeIdealData::label() const {
  return std::to_string(rational_prime) + "@" + std::to_string(index);
}

Integer FactoredIdeal::norm() const {
  Integer r = 1;
  for (const auto& [P, m] : factors) {
    Integer t;
    mpz_pow_ui(t.get_mpz_t(), P.norm().get_mpz_t(), static_cast<unsigned long>(m));
    r *= t;
  }
  return r;
}

std::string FactoredIdeal::label() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& [P, m] = factors[i];
    os << (i ? "; " : "") << P.rational_prime << "^" << m << "@" << P.index;
  }
  return os.str();
}

bool is_prime(const Integer& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(Integer(static_cast<unsigned long>(p))))
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

}  // namespace

bool dedekind_maximal(const NumberFieldOrder& o, std::uint64_t p) {
  require_prime(p);
  const fp::Field F{p};
  const IntPoly& f = o.defining_poly();
  const auto factors = fp::factor(fp::reduce(f, F), F);

  IntPoly h{1};
  for (const auto& [g, e] : factors) h = poly_mul(h, poly_pow(fp::lift(g), static_cast<unsigned>(e)));
  IntPoly diff = poly_sub(f, h);
  const Integer P(static_cast<unsigned long>(p));
  for (auto& c : diff) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), P.get_mpz_t());
  const fp::Poly reduced = fp::reduce(diff, F);

  for (const auto& [g, e] : factors) {
    if (e < 2) continue;
    if (fp::degree(fp::gcd(reduced, g, F)) > 0) return false;
  }
  return true;
}

std::vector<PrimeIdealData> factor_prime(const NumberFieldOrder& o, std::uint64_t p) {
  require_prime(p);
  if (!dedekind_maximal(o, p))
    throw Error(ErrorCode::NonMaximalOrder,
                "Z[theta] for " + format_polynomial(o.defining_poly()) + " is not " +
                    std::to_string(p) + "-maximal");
  const fp::Field F{p};
  std::vector<PrimeIdealData> out;
  for (const auto& [g, e] : fp::factor(fp::reduce(o.defining_poly(), F), F)) {
    PrimeIdealData P;
    P.rational_prime = p;
    P.gen_poly = g;
    P.ram_index = e;
    P.res_degree = fp::degree(g);
    P.index = static_cast<int>(out.size());
    out.push_back(std::move(P));
  }
  return out;
}

IntMatrix prime_power_lattice(const NumberFieldOrder& o, const PrimeIdealData& P, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "prime power exponent must be positive");
  const std::size_t d = static_cast<std::size_t>(o.degree());
  Integer pn;
  mpz_ui_pow_ui(pn.get_mpz_t(), P.rational_prime, static_cast<unsigned long>(n));
  const Integer p(static_cast<unsigned long>(P.rational_prime));

  auto reduce = [&](OrderElement& x) {
    for (auto& c : x.coeffs) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), pn.get_mpz_t());
  };
  const OrderElement g = o.evaluate(P.gen_lift());
  const OrderElement theta = o.theta();

  // g_pow[k] = g^k mod p^n
  std::vector<OrderElement> g_pow{o.one()};
  for (int k = 1; k <= n; ++k) {
    OrderElement next = mul(o, g_pow.back(), g);
    reduce(next);
    g_pow.push_back(std::move(next));
  }
  IntMatrix gens;
  Integer pi = 1;
  for (int i = 0; i <= n; ++i, pi *= p) {
    OrderElement base = g_pow[static_cast<std::size_t>(n - i)];
    for (auto& c : base.coeffs) c *= pi;
    for (std::size_t j = 0; j < d; ++j) {
      reduce(base);
      gens.push_back(base.coeffs);
      base = mul(o, base, theta);
    }
  }
  return hermite_normal_form(std::move(gens), d, pn);
}

IntMatrix principal_lattice(const NumberFieldOrder& o, const OrderElement& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroElement, "the zero ideal has no lattice of full rank");
  return hermite_normal_form(multiplication_matrix(o, a), static_cast<std::size_t>(o.degree()));
}

IntMatrix ideal_product_lattice(const NumberFieldOrder& o, const IntMatrix& a, const IntMatrix& b) {
  IntMatrix gens;
  for (const auto& x : a)
    for (const auto& y : b) gens.push_back(mul(o, OrderElement{x}, OrderElement{y}).coeffs);
  const Integer multiple = lattice_index(a) * lattice_index(b);
  return hermite_normal_form(std::move(gens), static_cast<std::size_t>(o.degree()), multiple);
}

IntMatrix factored_ideal_lattice(const NumberFieldOrder& o, const FactoredIdeal& a) {
  IntMatrix acc = multiplication_matrix(o, o.one());
  for (const auto& [P, m] : a.factors) {
    const IntMatrix pm = prime_power_lattice(o, P, m);
    acc = ideal_product_lattice(o, acc, pm);
  }
  return acc;
}

int valuation(const NumberFieldOrder& o, const PrimeIdealData& P, const OrderElement& a) {
  if (a.is_zero()) return kInfiniteValuation;
  Integer n = norm(o, a);
  const Integer p(static_cast<unsigned long>(P.rational_prime));
  int vp = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    ++vp;
  }
  const int bound = vp / P.res_degree;
  for (int k = 1; k <= bound; ++k)
    if (!lattice_contains(prime_power_lattice(o, P, k), a.coeffs)) return k - 1;
  return bound;
}

FactoredIdeal factor_element(const NumberFieldOrder& o, const OrderElement& a, std::uint64_t norm_cap) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroElement, "cannot factor the zero element");
  const Integer n = norm(o, a);
  if (n > Integer(static_cast<unsigned long>(norm_cap)))
    throw Error(ErrorCode::NormTooLarge,
                "norm " + n.get_str() + " exceeds the trial-division cap " + std::to_string(norm_cap));

  std::uint64_t rest = n.get_ui();
  std::vector<std::uint64_t> primes;
  for (std::uint64_t q = 2; q * q <= rest; ++q) {
    if (rest % q != 0) continue;
    primes.push_back(q);
    while (rest % q == 0) rest /= q;
  }
  if (rest > 1) primes.push_back(rest);

  FactoredIdeal out;
  for (std::uint64_t p : primes)
    for (const auto& P : factor_prime(o, p)) {
      const int m = valuation(o, P, a);
      if (m > 0) out.factors.push_back({P, m});
    }
  if (out.norm() != n)
    throw Error(ErrorCode::InvalidArgument,
                "factorization of " + format_coefficients(a.coeffs) + " does not reconstruct its norm");
  return out;
}

namespace {

[[noreturn]] void ideal_parse_fail(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::ParseError, "cannot parse ideal '" + std::string(text) + "': " + why);
}

std::uint64_t parse_u64(std::string_view s, std::string_view text) {
  if (s.empty() || s.size() > 18) ideal_parse_fail(text, "bad number '" + std::string(s) + "'");
  std::uint64_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      ideal_parse_fail(text, "bad number '" + std::string(s) + "'");
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

}  // namespace

FactoredIdeal parse_ideal(const NumberFieldOrder& o, std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  FactoredIdeal out;
  if (compact == "1") return out;
  if (compact.empty()) ideal_parse_fail(text, "empty input");

  std::size_t start = 0;
  while (true) {
    const auto semi = compact.find(';', start);
    const std::string term = compact.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
    const auto caret = term.find('^');
    if (caret == std::string::npos) ideal_parse_fail(text, "expected p^m in '" + term + "'");
    const auto at = term.find('@', caret);
    const std::uint64_t p = parse_u64(std::string_view(term).substr(0, caret), text);
    const std::uint64_t m = parse_u64(
        std::string_view(term).substr(caret + 1, at == std::string::npos ? std::string::npos : at - caret - 1), text);
    const std::uint64_t idx =
        at == std::string::npos ? 0 : parse_u64(std::string_view(term).substr(at + 1), text);
    if (!is_prime(Integer(static_cast<unsigned long>(p))))
      ideal_parse_fail(text, std::to_string(p) + " is not prime");
    if (m < 1 || m > 64) ideal_parse_fail(text, "exponent must be in 1..64");

    const auto primes = factor_prime(o, p);
    if (idx >= primes.size())
      throw Error(ErrorCode::NoSuchPrimeIndex, "there are " + std::to_string(primes.size()) +
                                                   " primes above " + std::to_string(p) + ", index " +
                                                   std::to_string(idx) + " requested");
    for (const auto& f : out.factors)
      if (f.prime == primes[idx]) ideal_parse_fail(text, "prime " + f.prime.label() + " repeated");
    out.factors.push_back({primes[idx], static_cast<int>(m)});

    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const IdealFactor& a, const IdealFactor& b) {
    return std::pair(a.prime.rational_prime, a.prime.index) < std::pair(b.prime.rational_prime, b.prime.index);
  });
  return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace wilson
