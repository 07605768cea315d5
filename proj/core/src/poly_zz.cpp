#include "wilson/poly_zz.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "wilson/error.hpp"
#include "wilson/poly_fp.hpp"

namespace wilson {

void trim(IntPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const IntPoly& f) { return static_cast<int>(f.size()) - 1; }

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

IntPoly poly_pow(const IntPoly& a, unsigned exponent) {
  IntPoly r{1};
  IntPoly base = a;
  while (exponent) {
    if (exponent & 1u) r = poly_mul(r, base);
    exponent >>= 1;
    if (exponent) base = poly_mul(base, base);
  }
  return r;
}

namespace {

// Quotient and remainder by a monic divisor.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& m) {
  if (m.empty() || m.back() != 1)
    throw Error(ErrorCode::InvalidArgument, "divisor must be monic");
  if (a.size() < m.size()) return {{}, a};
  IntPoly r = a;
  IntPoly q(a.size() - m.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const Integer c = r[k + m.size() - 1];
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < m.size(); ++j) r[k + j] -= c * m[j];
  }
  trim(q);
  trim(r);
  return {q, r};
}

}  // namespace

std::optional<IntPoly> exact_div_monic(const IntPoly& a, const IntPoly& monic) {
  auto [q, r] = divmod_monic(a, monic);
  if (!r.empty()) return std::nullopt;
  return q;
}

IntPoly rem_monic(const IntPoly& a, const IntPoly& monic) { return divmod_monic(a, monic).second; }

IntPoly derivative(const IntPoly& f) {
  if (f.size() <= 1) return {};
  IntPoly r(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = f[i] * static_cast<unsigned long>(i);
  trim(r);
  return r;
}

Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer resultant(const IntPoly& f, const IntPoly& g) {
  const int m = degree(f), n = degree(g);
  if (m < 0 || n < 0) return 0;
  if (m == 0 && n == 0) return 1;
  if (m == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), f[0].get_mpz_t(), static_cast<unsigned long>(n));
    return r;
  }
  if (n == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), g[0].get_mpz_t(), static_cast<unsigned long>(m));
    return r;
  }
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size));
  // Rows hold coefficients from the leading term down.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = f[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = g[n - j];
  return determinant(std::move(s));
}

Integer discriminant_monic(const IntPoly& f) {
  const int d = degree(f);
  Integer r = resultant(f, derivative(f));
  if ((d * (d - 1) / 2) % 2 != 0) r = -r;
  return r;
}

namespace {

using RatPoly = std::vector<mpq_class>;

void trim_q(RatPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

RatPoly rem_q(RatPoly a, const RatPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const mpq_class c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    trim_q(a);
  }
  return a;
}

// Monic gcd over Q; integral when both inputs are monic integral (Gauss).
IntPoly gcd_over_q(const IntPoly& f, const IntPoly& g) {
  RatPoly a(f.begin(), f.end()), b(g.begin(), g.end());
  trim_q(a);
  trim_q(b);
  while (!b.empty()) {
    RatPoly r = rem_q(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  IntPoly out;
  for (const auto& c : a) {
    mpq_class v = c / a.back();
    if (v.get_den() != 1) throw Error(ErrorCode::InvalidArgument, "non-integral gcd");
    out.push_back(v.get_num());
  }
  return out;
}

Integer isqrt_ceil(const Integer& v) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  if (r * r < v) r += 1;
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::optional<IntPoly> rational_root_factor(const IntPoly& f) {
  if (f[0] == 0) return IntPoly{0, 1};
  Integer c = abs(f[0]);
  if (c > 1000000) return std::nullopt;  // the modular search handles it
  const long limit = c.get_si();
  for (long t = 1; t <= limit; ++t) {
    if (limit % t != 0) continue;
    for (long root : {t, -t}) {
      Integer acc = 0;
      for (std::size_t i = f.size(); i-- > 0;) acc = acc * root + f[i];
      if (acc == 0) return IntPoly{Integer(-root), 1};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<IntPoly> find_rational_factor(const IntPoly& f) {
  const int d = degree(f);
  if (d < 1 || f.back() != 1)
    throw Error(ErrorCode::InvalidArgument, "find_rational_factor expects a monic polynomial");
  if (d == 1) return std::nullopt;
  if (auto r = rational_root_factor(f)) return r;
  // Without a linear factor a cubic or quadratic is irreducible, provided the
  // root search above was exhaustive.
  if (d <= 3 && abs(f[0]) <= 1000000) return std::nullopt;

  const Integer disc = discriminant_monic(f);
  if (disc == 0) return gcd_over_q(f, derivative(f));

  // Any monic integer factor of degree <= d has coefficients bounded by
  // C(d, d/2) * ||f||_2, so it is recovered exactly as the symmetric lift of a
  // product of modular factors once p > 2 * bound.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  const Integer bound = binomial(static_cast<unsigned>(d), static_cast<unsigned>(d / 2)) * isqrt_ceil(norm2);
  Integer p = 2 * bound + 1;
  if (p < (Integer(1) << 30)) p = Integer(1) << 30;
  while (true) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    if (mpz_divisible_p(disc.get_mpz_t(), p.get_mpz_t()) == 0) break;
  }
  if (p >= (Integer(1) << 62))
    throw Error(ErrorCode::InvalidArgument, "coefficients too large for the irreducibility test");

  const fp::Field F{p.get_ui()};
  const auto factors = fp::factor(fp::reduce(f, F), F);
  const std::size_t k = factors.size();
  if (k <= 1) return std::nullopt;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << k); ++mask) {
    int deg = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) deg += fp::degree(factors[i].poly);
    if (2 * deg > d) continue;
    fp::Poly prod{1};
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) prod = fp::mul(prod, factors[i].poly, F);
    IntPoly cand = fp::lift_symmetric(prod, F.p);
    if (exact_div_monic(f, cand)) return cand;
  }
  return std::nullopt;
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::ParseError, "cannot parse polynomial '" + std::string(text) + "': " + why);
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) parse_fail(whole, "empty coefficient");
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) parse_fail(whole, "missing digits");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) parse_fail(whole, "bad digit in '" + std::string(s) + "'");
  Integer v;
  v.set_str(std::string(s[0] == '+' ? s.substr(1) : s), 10);
  return v;
}

IntPoly parse_human(std::string_view text, const std::string& compact) {
  IntPoly out;
  std::size_t pos = 0;
  if (compact.empty()) parse_fail(text, "empty input");
  while (pos < compact.size()) {
    std::size_t end = pos + 1;
    while (end < compact.size() && compact[end] != '+' && compact[end] != '-') ++end;
    std::string term = compact.substr(pos, end - pos);
    pos = end;

    Integer coef = 1;
    std::size_t exp = 0;
    const auto x = term.find('x');
    if (x == std::string::npos) {
      coef = parse_integer(term, text);
    } else {
      std::string head = term.substr(0, x);
      if (!head.empty() && head.back() == '*') head.pop_back();
      if (head.empty() || head == "+") coef = 1;
      else if (head == "-") coef = -1;
      else coef = parse_integer(head, text);
      std::string tail = term.substr(x + 1);
      if (tail.empty()) {
        exp = 1;
      } else {
        if (tail[0] != '^' || tail.size() < 2) parse_fail(text, "expected '^' after x");
        const Integer e = parse_integer(tail.substr(1), text);
        if (e < 0 || e > 64) parse_fail(text, "exponent out of range");
        exp = e.get_ui();
      }
    }
    if (out.size() <= exp) out.resize(exp + 1);
    out[exp] += coef;
  }
  trim(out);
  return out;
}

}  // namespace

IntPoly parse_polynomial(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  if (compact.find('x') != std::string::npos) return parse_human(text, compact);

  IntPoly out;
  std::size_t start = 0;
  while (true) {
    const auto comma = compact.find(',', start);
    out.push_back(parse_integer(std::string_view(compact).substr(start, comma - start), text));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  trim(out);
  return out;
}

std::string format_polynomial(const IntPoly& f, std::string_view var) {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    const Integer& c = f[i];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::string format_coefficients(std::span<const Integer> coeffs) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i];
  os << ")";
  return os.str();
}

}  // namespace wilson
