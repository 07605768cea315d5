#include "wilson/poly_fp.hpp"

#include <algorithm>
#include <random>

#include "wilson/error.hpp"

namespace wilson::fp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 Field::add(u64 a, u64 b) const {
  u64 s = a + b;
  return (s >= p || s < a) ? s - p : s;
}

u64 Field::sub(u64 a, u64 b) const { return a >= b ? a - b : a + (p - b); }

u64 Field::mul(u64 a, u64 b) const {
  return static_cast<u64>(static_cast<u128>(a) * b % p);
}

u64 Field::pow(u64 a, u64 e) const {
  u64 r = 1 % p;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 Field::inv(u64 a) const {
  if (a % p == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero in F_p");
  return pow(a, p - 2);
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly reduce(const IntPoly& f, const Field& F) {
  Poly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = mpz_fdiv_ui(f[i].get_mpz_t(), F.p);
  trim(r);
  return r;
}

IntPoly lift(const Poly& f) {
  IntPoly r;
  r.reserve(f.size());
  for (u64 c : f) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

IntPoly lift_symmetric(const Poly& f, u64 p) {
  IntPoly r;
  r.reserve(f.size());
  const Integer P(static_cast<unsigned long>(p));
  for (u64 c : f) {
    Integer v(static_cast<unsigned long>(c));
    if (2 * v > P) v -= P;
    r.push_back(v);
  }
  wilson::trim(r);
  return r;
}

Poly add(const Poly& a, const Poly& b, const Field& F) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, const Field& F) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, const Field& F) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

Poly monic(const Poly& a, const Field& F) {
  if (a.empty()) return a;
  const u64 inv = F.inv(a.back());
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], inv);
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, const Field& F) {
  if (b.empty()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly r = a;
  Poly q(a.size() - b.size() + 1, 0);
  const u64 lead_inv = F.inv(b.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    const u64 c = F.mul(r[k + b.size() - 1], lead_inv);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[k + j] = F.sub(r[k + j], F.mul(c, b[j]));
  }
  trim(q);
  trim(r);
  return {q, r};
}

Poly rem(const Poly& a, const Poly& b, const Field& F) { return divmod(a, b, F).second; }

Poly gcd(Poly a, Poly b, const Field& F) {
  while (!b.empty()) {
    Poly r = rem(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, F);
}

Poly derivative(const Poly& f, const Field& F) {
  if (f.size() <= 1) return {};
  Poly r(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = F.mul(f[i], i % F.p);
  trim(r);
  return r;
}

Poly powmod(const Poly& base, const Integer& e, const Poly& modulus, const Field& F) {
  Poly result{1 % F.p};
  trim(result);
  if (e == 0) return rem(result, modulus, F);
  Poly b = rem(base, modulus, F);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, F), modulus, F);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, F), modulus, F);
  }
  return result;
}

bool factor_less(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

// Monic square-free pieces (piece, multiplicity). Pieces are pairwise coprime.
std::vector<Factor> squarefree(const Poly& f, const Field& F) {
  std::vector<Factor> out;
  Poly c = gcd(f, derivative(f, F), F);
  Poly w = divmod(f, c, F).first;
  int i = 1;
  while (degree(w) > 0) {
    Poly y = gcd(w, c, F);
    Poly z = divmod(w, y, F).first;
    if (degree(z) > 0) out.push_back({monic(z, F), i});
    ++i;
    w = std::move(y);
    c = divmod(c, w, F).first;
  }
  if (degree(c) > 0) {
    // c is a polynomial in x^p; over F_p its p-th root just drops the stride.
    Poly root;
    for (std::size_t k = 0; k < c.size(); k += F.p) root.push_back(c[k]);
    trim(root);
    for (Factor& g : squarefree(monic(root, F), F)) {
      g.multiplicity *= static_cast<int>(F.p);
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<std::pair<Poly, int>> distinct_degree(Poly f, const Field& F) {
  std::vector<std::pair<Poly, int>> out;
  const Poly x{0, 1 % F.p};
  Poly h = x;
  const Integer p(static_cast<unsigned long>(F.p));
  for (int i = 1; degree(f) >= 2 * i; ++i) {
    h = powmod(h, p, f, F);
    Poly g = gcd(f, sub(h, x, F), F);
    if (degree(g) > 0) {
      out.emplace_back(g, i);
      f = divmod(f, g, F).first;
      h = rem(h, f, F);
    }
  }
  if (degree(f) > 0) out.emplace_back(monic(f, F), degree(f));
  return out;
}

void split_exhaustive(const Poly& g, int k, const Field& F, std::vector<Poly>& out) {
  // Every monic degree-k divisor of a product of distinct degree-k
  // irreducibles is one of them.
  Poly cand(static_cast<std::size_t>(k) + 1, 0);
  cand[k] = 1;
  const std::size_t want = static_cast<std::size_t>(degree(g) / k);
  while (true) {
    if (rem(g, cand, F).empty()) {
      out.push_back(cand);
      if (out.size() == want) return;
    }
    int j = 0;
    while (j < k && ++cand[j] == F.p) cand[j++] = 0;
    if (j == k) return;
  }
}

void split_random(const Poly& g, int k, const Field& F, std::mt19937_64& rng,
                  std::vector<Poly>& out) {
  if (degree(g) == k) {
    out.push_back(g);
    return;
  }
  std::uniform_int_distribution<u64> coef(0, F.p - 1);
  Integer pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), F.p, static_cast<unsigned long>(k));
  while (true) {
    Poly r(static_cast<std::size_t>(degree(g)));
    for (auto& c : r) c = coef(rng);
    trim(r);
    if (degree(r) <= 0) continue;
    Poly h;
    if (F.p == 2) {
      // Trace map r + r^2 + ... + r^(2^(k-1)).
      Poly t = r;
      h = r;
      for (int i = 1; i < k; ++i) {
        t = rem(mul(t, t, F), g, F);
        h = add(h, t, F);
      }
    } else {
      h = sub(powmod(r, (pk - 1) / 2, g, F), Poly{1}, F);
    }
    Poly d = gcd(g, h, F);
    if (degree(d) > 0 && degree(d) < degree(g)) {
      split_random(d, k, F, rng, out);
      split_random(divmod(g, d, F).first, k, F, rng, out);
      return;
    }
  }
}

std::vector<Poly> equal_degree(const Poly& g, int k, const Field& F, std::mt19937_64& rng) {
  std::vector<Poly> out;
  if (degree(g) == k) {
    out.push_back(g);
    return out;
  }
  long double size = 1;
  for (int i = 0; i < k; ++i) size *= static_cast<long double>(F.p);
  if (size < 1e4L)
    split_exhaustive(g, k, F, out);
  else
    split_random(g, k, F, rng, out);
  return out;
}

}  // namespace

std::vector<Factor> factor(const Poly& f, const Field& F) {
  if (f.empty()) throw Error(ErrorCode::InvalidArgument, "cannot factor the zero polynomial");
  std::vector<Factor> out;
  if (degree(f) == 0) return out;
  std::mt19937_64 rng(0x5eed5eedULL ^ F.p);
  for (const Factor& piece : squarefree(monic(f, F), F))
    for (const auto& [g, k] : distinct_degree(piece.poly, F))
      for (Poly& irr : equal_degree(g, k, F, rng))
        out.push_back({std::move(irr), piece.multiplicity});
  std::sort(out.begin(), out.end(),
            [](const Factor& a, const Factor& b) { return factor_less(a.poly, b.poly); });
  return out;
}

bool is_irreducible(const Poly& f, const Field& F) {
  if (degree(f) <= 0) return false;
  const auto fs = factor(f, F);
  return fs.size() == 1 && fs[0].multiplicity == 1;
}

}  // namespace wilson::fp
