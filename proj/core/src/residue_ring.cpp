#include "wilson/residue_ring.hpp"

#include <algorithm>
#include <unordered_set>

#include "wilson/error.hpp"
#include "wilson/poly_fp.hpp"

namespace wilson {

namespace detail {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

SmallLattice SmallLattice::from(const IntMatrix& hnf) {
  SmallLattice L;
  L.dim = static_cast<int>(hnf.size());
  Integer index = 1;
  for (std::size_t i = 0; i < hnf.size(); ++i) {
    index *= hnf[i][i];
    for (std::size_t j = 0; j < hnf.size(); ++j) {
      if (!hnf[i][j].fits_slong_p())
        throw Error(ErrorCode::RingTooLarge, "lattice entries exceed machine words");
      L.rows[i][j] = hnf[i][j].get_si();
    }
  }
  if (index > Integer(static_cast<unsigned long>(kMaxRingSize)))
    throw Error(ErrorCode::RingTooLarge, "lattice index " + index.get_str() + " exceeds 2^30");
  L.index = index.get_si();
  L.index_div = Divisor(static_cast<std::uint64_t>(L.index));
  for (int i = 0; i < L.dim; ++i) L.pivot_div[i] = Divisor(static_cast<std::uint64_t>(L.rows[i][i]));
  return L;
}

template <int D>
void SmallLattice::reduce_fixed(std::array<std::int64_t, kMaxDegree>& v) const {
  // index * Z^d lies in the lattice, so coordinates may be taken modulo it at
  // any point. With every coordinate in [0, index) the products q * rows[i][j]
  // stay below index^2 <= 2^60.
  const auto M = static_cast<std::uint64_t>(index);
  for (int i = 0; i < D; ++i)
    if (v[i] < 0 || v[i] >= index) v[i] = floor_mod(v[i], index);
  for (int i = 0; i < D; ++i) {
    const std::uint64_t q = rows[i][i] == 1 ? static_cast<std::uint64_t>(v[i])
                                            : pivot_div[i].quot(static_cast<std::uint64_t>(v[i]));
    if (q == 0) continue;
    v[i] -= static_cast<std::int64_t>(q) * rows[i][i];
    for (int j = i + 1; j < D; ++j) {
      if (rows[i][j] == 0) continue;
      const std::uint64_t t = static_cast<std::uint64_t>(v[j]) + M * M - q * static_cast<std::uint64_t>(rows[i][j]);
      v[j] = static_cast<std::int64_t>(index_div.mod(t));
    }
  }
}

void SmallLattice::reduce(std::array<std::int64_t, kMaxDegree>& v) const {
  switch (dim) {
    case 1: return reduce_fixed<1>(v);
    case 2: return reduce_fixed<2>(v);
    case 3: return reduce_fixed<3>(v);
    case 4: return reduce_fixed<4>(v);
    case 5: return reduce_fixed<5>(v);
    case 6: return reduce_fixed<6>(v);
    case 7: return reduce_fixed<7>(v);
    default: return reduce_fixed<8>(v);
  }
}

bool SmallLattice::contains(std::array<std::int64_t, kMaxDegree> v) const {
  reduce(v);
  for (int i = 0; i < dim; ++i)
    if (v[i] != 0) return false;
  return true;
}

PrimeForms PrimeForms::from(const IntMatrix& hnf, std::uint64_t p, int dim) {
  // Row-reduce the generators of P/pZ^d over F_p; the null space of that
  // matrix is the annihilator of P/pZ^d.
  const fp::Field F{p};
  std::vector<std::vector<std::uint64_t>> a;
  for (const auto& row : hnf) {
    std::vector<std::uint64_t> r(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) r[j] = mpz_fdiv_ui(row[j].get_mpz_t(), p);
    a.push_back(std::move(r));
  }
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int col = 0; col < dim && rank < a.size(); ++col) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][col] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    const std::uint64_t inv = F.inv(a[rank][col]);
    for (auto& x : a[rank]) x = F.mul(x, inv);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const std::uint64_t c = a[r][col];
      for (int j = 0; j < dim; ++j) a[r][j] = F.sub(a[r][j], F.mul(c, a[rank][j]));
    }
    pivot_col.push_back(col);
    ++rank;
  }
  PrimeForms out;
  out.p = Divisor(p);
  for (int free = 0; free < dim; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    auto& c = out.forms[static_cast<std::size_t>(out.count++)];
    c[free] = 1;
    for (std::size_t r = 0; r < rank; ++r) c[pivot_col[r]] = F.sub(0, a[r][free]);
  }
  return out;
}

bool PrimeForms::contains(const std::array<std::int64_t, kMaxDegree>& v, int dim) const {
  for (int k = 0; k < count; ++k) {
    std::uint64_t s = 0;
    for (int j = 0; j < dim; ++j) s = p.mod(s + forms[k][j] * p.mod(static_cast<std::uint64_t>(v[j])));
    if (s != 0) return false;
  }
  return true;
}

// Walks the classes of o/a in mixed-radix order and calls fn on every unit.
// The value of each prime form is carried along the odometer: advancing at
// position i adds c_i - sum_{j<i} c_j (h_j - 1).
struct UnitWalker {
  template <class Fn>
  static void run(const ResidueRing& R, Fn&& fn) {
    const int d = R.degree();
    struct Track {
      const PrimeForms* P;
      std::array<std::array<std::uint64_t, kMaxDegree>, kMaxDegree> step{};  // [form][position]
      std::array<std::uint64_t, kMaxDegree> value{};
    };
    std::vector<Track> tracks;
    for (const auto& P : R.prime_forms_) {
      Track t{&P, {}, {}};
      const std::uint64_t p = P.p.m;
      for (int k = 0; k < P.count; ++k) {
        std::uint64_t wrap = 0;  // sum_{j<i} c_j (h_j - 1) mod p
        for (int i = 0; i < d; ++i) {
          t.step[k][i] = (P.forms[k][i] + p - wrap) % p;
          const std::uint64_t h1 = static_cast<std::uint64_t>(R.diag_[i] - 1) % p;
          wrap = (wrap + static_cast<std::uint64_t>((static_cast<unsigned __int128>(P.forms[k][i]) * h1) % p)) % p;
        }
      }
      tracks.push_back(t);
    }
    auto is_unit = [&] {
      for (const auto& t : tracks) {
        bool inside = true;
        for (int k = 0; k < t.P->count && inside; ++k) inside = t.value[k] == 0;
        if (inside) return false;
      }
      return true;
    };
    ResidueElement x = R.zero();
    while (true) {
      if (is_unit()) fn(x);
      int i = 0;
      while (i < d && x.coeffs[i] + 1 == R.diag_[i]) x.coeffs[i++] = 0;
      if (i == d) return;
      ++x.coeffs[i];
      for (auto& t : tracks) {
        const std::uint64_t p = t.P->p.m;
        for (int k = 0; k < t.P->count; ++k) {
          t.value[k] += t.step[k][i];
          if (t.value[k] >= p) t.value[k] -= p;
        }
      }
    }
  }
};

}  // namespace detail

IntMatrix ideal_lattice(const NumberFieldOrder& o, const PrimeIdealData& P, int n) {
  return prime_power_lattice(o, P, n);
}

ResidueRing build_residue_ring(const NumberFieldOrder& o, const FactoredIdeal& a, std::uint64_t cap) {
  const Integer n = a.norm();
  const std::uint64_t limit = std::min(cap, kMaxRingSize);
  if (n > Integer(static_cast<unsigned long>(limit)))
    throw Error(ErrorCode::RingTooLarge,
                "|o/a| = " + n.get_str() + " exceeds the enumeration cap " + std::to_string(limit));

  ResidueRing R(o, a);
  const int d = o.degree();
  R.basis_ = factored_ideal_lattice(o, a);
  if (lattice_index(R.basis_) != n)
    throw Error(ErrorCode::InvalidArgument, "lattice index " + lattice_index(R.basis_).get_str() +
                                                " disagrees with the ideal norm " + n.get_str());
  R.lattice_ = detail::SmallLattice::from(R.basis_);
  for (int i = 0; i < d; ++i) R.diag_[i] = R.lattice_.rows[i][i];
  R.size_ = n.get_ui();
  R.exponent_ = static_cast<std::int64_t>(R.size_);

  R.exponent_div_ = detail::Divisor(R.size_);
  for (const auto& [P, m] : a.factors)
    R.prime_forms_.push_back(detail::PrimeForms::from(prime_power_lattice(o, P, 1), P.rational_prime, d));

  const Integer M(static_cast<unsigned long>(R.size_));
  for (int k = d; k <= 2 * d - 2; ++k) {
    OrderElement t = pow(o, o.theta(), static_cast<unsigned>(k));
    std::array<std::int64_t, kMaxDegree> row{};
    for (int i = 0; i < d; ++i) row[i] = static_cast<std::int64_t>(mpz_fdiv_ui(t.coeffs[i].get_mpz_t(), M.get_ui()));
    R.theta_powers_.push_back(row);
  }
  R.one_ = R.from_integer(1);
  return R;
}

std::uint64_t ResidueRing::unit_count_formula() const {
  std::uint64_t r = 1;
  for (const auto& [P, m] : modulus_.factors) {
    const std::uint64_t q = P.norm().get_ui();
    std::uint64_t t = q - 1;
    for (int i = 1; i < m; ++i) t *= q;
    r *= t;
  }
  return r;
}

ResidueElement ResidueRing::canonical(std::array<std::int64_t, kMaxDegree> v) const {
  lattice_.reduce(v);
  ResidueElement x;
  x.coeffs = v;
  return x;
}

ResidueElement ResidueRing::from_integer(std::int64_t n) const {
  std::array<std::int64_t, kMaxDegree> v{};
  v[0] = n;
  return canonical(v);
}

ResidueElement ResidueRing::reduce(const OrderElement& a) const {
  if (static_cast<int>(a.coeffs.size()) != degree())
    throw Error(ErrorCode::DegreeMismatch, "element degree does not match the ring");
  std::array<std::int64_t, kMaxDegree> v{};
  for (int i = 0; i < degree(); ++i)
    v[i] = static_cast<std::int64_t>(mpz_fdiv_ui(a.coeffs[i].get_mpz_t(), static_cast<unsigned long>(exponent_)));
  return canonical(v);
}

OrderElement ResidueRing::lift(const ResidueElement& x) const {
  OrderElement a = order_.zero();
  for (int i = 0; i < degree(); ++i) a.coeffs[i] = static_cast<long>(x.coeffs[i]);
  return a;
}

ResidueElement ResidueRing::element_at(std::uint64_t index) const {
  ResidueElement x;
  for (int i = 0; i < degree(); ++i) {
    const auto h = static_cast<std::uint64_t>(diag_[i]);
    x.coeffs[i] = static_cast<std::int64_t>(index % h);
    index /= h;
  }
  return x;
}

std::uint64_t ResidueRing::index_of(const ResidueElement& x) const {
  std::uint64_t index = 0;
  for (int i = degree(); i-- > 0;) index = index * static_cast<std::uint64_t>(diag_[i]) + static_cast<std::uint64_t>(x.coeffs[i]);
  return index;
}

bool ResidueRing::next(ResidueElement& x) const {
  for (int i = 0; i < degree(); ++i) {
    if (++x.coeffs[i] < diag_[i]) return true;
    x.coeffs[i] = 0;
  }
  return false;
}

ResidueElement ResidueRing::add(const ResidueElement& a, const ResidueElement& b) const {
  std::array<std::int64_t, kMaxDegree> v{};
  for (int i = 0; i < degree(); ++i) v[i] = a.coeffs[i] + b.coeffs[i];
  return canonical(v);
}

ResidueElement ResidueRing::sub(const ResidueElement& a, const ResidueElement& b) const {
  std::array<std::int64_t, kMaxDegree> v{};
  for (int i = 0; i < degree(); ++i) v[i] = a.coeffs[i] - b.coeffs[i];
  return canonical(v);
}

ResidueElement ResidueRing::neg(const ResidueElement& a) const { return sub(zero(), a); }

bool ResidueRing::in_range(const ResidueElement& x) const {
  for (int i = 0; i < degree(); ++i)
    if (x.coeffs[i] < 0 || x.coeffs[i] >= exponent_) return false;
  return true;
}

template <int D>
ResidueElement ResidueRing::mul_fixed(const ResidueElement& a, const ResidueElement& b) const {
  // Coordinates lie in [0, M) with M <= 2^30: the convolution is below
  // D M^2 <= 2^63 and folding adds at most (D - 1) M^2 more.
  std::uint64_t conv[2 * D - 1] = {};
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j)
      conv[i + j] += static_cast<std::uint64_t>(a.coeffs[i]) * static_cast<std::uint64_t>(b.coeffs[j]);
  for (int k = D; k <= 2 * D - 2; ++k) {
    const std::uint64_t c = exponent_div_.mod(conv[k]);
    const auto& t = theta_powers_[static_cast<std::size_t>(k - D)];
    for (int i = 0; i < D; ++i) conv[i] += c * static_cast<std::uint64_t>(t[i]);
  }
  ResidueElement x;
  for (int i = 0; i < D; ++i) x.coeffs[i] = static_cast<std::int64_t>(exponent_div_.mod(conv[i]));
  lattice_.reduce_fixed<D>(x.coeffs);
  return x;
}

ResidueElement ResidueRing::mul(const ResidueElement& a, const ResidueElement& b) const {
  if (!in_range(a) || !in_range(b)) return mul(canonical(a.coeffs), canonical(b.coeffs));
  switch (degree()) {
    case 1: return mul_fixed<1>(a, b);
    case 2: return mul_fixed<2>(a, b);
    case 3: return mul_fixed<3>(a, b);
    case 4: return mul_fixed<4>(a, b);
    case 5: return mul_fixed<5>(a, b);
    case 6: return mul_fixed<6>(a, b);
    case 7: return mul_fixed<7>(a, b);
    default: return mul_fixed<8>(a, b);
  }
}

ResidueElement ResidueRing::pow(ResidueElement a, std::uint64_t e) const {
  ResidueElement r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return r;
}

bool ResidueRing::is_unit(const ResidueElement& x) const {
  for (const auto& P : prime_forms_)
    if (P.contains(x.coeffs, degree())) return false;
  return true;
}

IdealMembership ResidueRing::prime_power_membership(std::size_t factor_index, int level) const {
  if (factor_index >= modulus_.factors.size())
    throw Error(ErrorCode::InvalidArgument, "no such factor of the modulus");
  const auto& [P, m] = modulus_.factors[factor_index];
  if (level < 1 || level > m)
    throw Error(ErrorCode::JOutOfRange,
                "level " + std::to_string(level) + " outside 1.." + std::to_string(m));
  return IdealMembership(detail::SmallLattice::from(prime_power_lattice(order_, P, level)));
}

std::vector<ResidueElement> units(const ResidueRing& R) {
  std::vector<ResidueElement> out;
  detail::UnitWalker::run(R, [&](const ResidueElement& x) { out.push_back(x); });
  return out;
}

ResidueElement unit_product(const ResidueRing& R) {
  ResidueElement acc = R.one();
  detail::UnitWalker::run(R, [&](const ResidueElement& x) { acc = R.mul(acc, x); });
  return acc;
}

Order2Census order2_census(const ResidueRing& R) {
  Order2Census c;
  const ResidueElement one = R.one();
  detail::UnitWalker::run(R, [&](const ResidueElement& x) {
    if (R.mul(x, x) != one) return;
    ++c.solutions;
    if (x != one) c.elements.push_back(x);
  });
  if (c.solutions == 0 || (c.solutions & (c.solutions - 1)) != 0)
    throw Error(ErrorCode::NotAPowerOfTwo,
                std::to_string(c.solutions) + " square roots of 1 in (o/a)^x is not a power of two");
  c.order2_count = c.solutions - 1;
  while ((std::uint64_t{1} << c.d2) < c.solutions) ++c.d2;
  return c;
}

std::vector<ResidueElement> principal_units(const ResidueRing& R, int j) {
  if (!R.is_prime_power())
    throw Error(ErrorCode::CompositeModulus, "principal units need a prime-power modulus, got " +
                                                 R.modulus().label());
  const IdealMembership level = R.prime_power_membership(0, j);
  const ResidueElement one = R.one();
  std::vector<ResidueElement> out;
  ResidueElement x = R.zero();
  do {
    if (level.contains(R.sub(x, one))) out.push_back(x);
  } while (R.next(x));
  return out;
}

std::vector<ResidueElement> generated_subgroup(const ResidueRing& R, std::span<const ResidueElement> gens) {
  std::vector<ResidueElement> group{R.one()};
  std::unordered_set<std::uint64_t> seen{R.index_of(R.one())};
  for (const auto& g : gens) {
    if (!R.is_unit(g)) throw Error(ErrorCode::NotAUnit, "subgroup generator is not a unit");
    // H<g> = union of the cosets H g^i for i below the order of g modulo H.
    std::vector<ResidueElement> coset_reps;
    ResidueElement power = g;
    while (!seen.contains(R.index_of(power))) {
      coset_reps.push_back(power);
      power = R.mul(power, g);
    }
    const std::size_t base = group.size();
    for (const auto& rep : coset_reps)
      for (std::size_t h = 0; h < base; ++h) {
        const ResidueElement y = R.mul(group[h], rep);
        if (seen.insert(R.index_of(y)).second) group.push_back(y);
      }
  }
  return group;
}

ResidueElement subgroup_product(const ResidueRing& R, std::span<const ResidueElement> gens) {
  ResidueElement acc = R.one();
  for (const auto& h : generated_subgroup(R, gens)) acc = R.mul(acc, h);
  return acc;
}

std::uint64_t element_order(const ResidueRing& R, const ResidueElement& x) {
  if (!R.is_unit(x)) throw Error(ErrorCode::NotAUnit, "order of a non-unit");
  std::uint64_t k = 1;
  for (ResidueElement y = x; y != R.one(); y = R.mul(y, x)) ++k;
  return k;
}

std::vector<ResidueRing> crt_components(const ResidueRing& R, std::uint64_t cap) {
  std::vector<ResidueRing> out;
  for (const auto& f : R.modulus().factors)
    out.push_back(build_residue_ring(R.order(), FactoredIdeal{{f}}, cap));
  return out;
}

}  // namespace wilson
