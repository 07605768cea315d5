#include "wilson/lattice.hpp"

#include "wilson/error.hpp"

namespace wilson {

namespace {

// Row echelon form over Z on the first `pivot_cols` columns using unimodular
// row operations applied to whole rows. Returns the number of pivot rows;
// pivots are positive and sit at (i, i) for i < rank when the lattice is full
// rank on those columns.
std::size_t echelon(IntMatrix& m, std::size_t pivot_cols) {
  std::size_t row = 0;
  Integer g, s, t, a, b;
  for (std::size_t col = 0; col < pivot_cols && row < m.size(); ++col) {
    for (std::size_t r = row + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      if (m[row][col] == 0) {
        std::swap(m[row], m[r]);
        continue;
      }
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m[row][col].get_mpz_t(),
                 m[r][col].get_mpz_t());
      mpz_divexact(a.get_mpz_t(), m[row][col].get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), m[r][col].get_mpz_t(), g.get_mpz_t());
      // [s t; -b a] has determinant s*a + t*b = 1.
      for (std::size_t j = col; j < m[row].size(); ++j) {
        Integer x = m[row][j], y = m[r][j];
        m[row][j] = s * x + t * y;
        m[r][j] = a * y - b * x;
      }
    }
    if (m[row][col] == 0) continue;
    if (m[row][col] < 0)
      for (auto& v : m[row]) v = -v;
    ++row;
  }
  return row;
}

// Reduces entries above each pivot into [0, pivot).
void reduce_above(IntMatrix& m, std::size_t n) {
  Integer q;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < i; ++r) {
      mpz_fdiv_q(q.get_mpz_t(), m[r][i].get_mpz_t(), m[i][i].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = i; j < m[r].size(); ++j) m[r][j] -= q * m[i][j];
    }
  }
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows, std::size_t n, const Integer& multiple) {
  for (auto& r : rows) {
    if (r.size() != n) throw Error(ErrorCode::InvalidArgument, "lattice generator has wrong length");
    if (multiple != 0)
      for (auto& v : r) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), multiple.get_mpz_t());
  }
  if (multiple != 0)
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n);
      e[i] = abs(multiple);
      rows.push_back(std::move(e));
    }
  const std::size_t rank = echelon(rows, n);
  bool full = rank == n;
  for (std::size_t i = 0; full && i < n; ++i) full = rows[i][i] != 0;
  if (!full) throw Error(ErrorCode::InvalidArgument, "generators do not span a full-rank lattice");
  rows.resize(n);
  reduce_above(rows, n);
  return rows;
}

void reduce_mod_hnf(const IntMatrix& hnf, IntVector& v) {
  Integer q;
  for (std::size_t i = 0; i < hnf.size(); ++i) {
    mpz_fdiv_q(q.get_mpz_t(), v[i].get_mpz_t(), hnf[i][i].get_mpz_t());
    if (q == 0) continue;
    for (std::size_t j = i; j < v.size(); ++j) v[j] -= q * hnf[i][j];
  }
}

bool lattice_contains(const IntMatrix& hnf, IntVector v) {
  reduce_mod_hnf(hnf, v);
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

Integer lattice_index(const IntMatrix& hnf) {
  Integer r = 1;
  for (std::size_t i = 0; i < hnf.size(); ++i) r *= hnf[i][i];
  return r;
}

std::pair<IntVector, IntVector> split_sum(const IntMatrix& a, const IntMatrix& b,
                                          const IntVector& target) {
  const std::size_t n = target.size();
  const std::size_t k = a.size() + b.size();
  // Each row is [generator | unit vector recording which generator it came from].
  IntMatrix m;
  for (std::size_t i = 0; i < k; ++i) {
    IntVector row(n + k);
    const IntVector& gen = i < a.size() ? a[i] : b[i - a.size()];
    for (std::size_t j = 0; j < n; ++j) row[j] = gen[j];
    row[n + i] = 1;
    m.push_back(std::move(row));
  }
  const std::size_t rank = echelon(m, n);

  // Back-substitute target against the echelon rows.
  IntVector rest = target;
  IntVector coef(k);
  std::size_t r = 0;
  Integer q;
  for (std::size_t col = 0; col < n; ++col) {
    if (r < rank && m[r][col] != 0) {
      if (mpz_divisible_p(rest[col].get_mpz_t(), m[r][col].get_mpz_t()) == 0) break;
      mpz_divexact(q.get_mpz_t(), rest[col].get_mpz_t(), m[r][col].get_mpz_t());
      for (std::size_t j = col; j < n; ++j) rest[j] -= q * m[r][j];
      for (std::size_t j = 0; j < k; ++j) coef[j] += q * m[r][n + j];
      ++r;
    }
    if (rest[col] != 0) break;
  }
  for (const auto& c : rest)
    if (c != 0) throw Error(ErrorCode::InvalidArgument, "target is not in the sum of the lattices");

  IntVector x(n), y(n);
  for (std::size_t i = 0; i < k; ++i) {
    if (coef[i] == 0) continue;
    IntVector& out = i < a.size() ? x : y;
    const IntVector& gen = i < a.size() ? a[i] : b[i - a.size()];
    for (std::size_t j = 0; j < n; ++j) out[j] += coef[i] * gen[j];
  }
  return {x, y};
}

}  // namespace wilson
