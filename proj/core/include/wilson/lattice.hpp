#pragma once

#include <utility>
#include <vector>

#include "wilson/poly_zz.hpp"

namespace wilson {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

/// Hermite normal form of the full-rank lattice spanned by `rows` in Z^n.
///
/// The result is n x n and upper triangular in row form: row i is zero left of
/// column i, has a positive pivot h_i in column i, and every entry above a
/// pivot h_j is reduced into [0, h_j). Two generating sets give the same
/// matrix iff they span the same lattice.
///
/// When `multiple` is nonzero it must be an integer with multiple * Z^n inside
/// the lattice; generators are then reduced modulo it to bound growth.
IntMatrix hermite_normal_form(IntMatrix rows, std::size_t n, const Integer& multiple = 0);

/// Canonical representative of v modulo the lattice: afterwards
/// 0 <= v[i] < h_i for every i.
void reduce_mod_hnf(const IntMatrix& hnf, IntVector& v);

bool lattice_contains(const IntMatrix& hnf, IntVector v);

/// Index [Z^n : L], the product of the pivots.
Integer lattice_index(const IntMatrix& hnf);

/// Writes `target` as x + y with x in span(a) and y in span(b). Requires
/// target to lie in span(a) + span(b); throws InvalidArgument otherwise.
std::pair<IntVector, IntVector> split_sum(const IntMatrix& a, const IntMatrix& b,
                                          const IntVector& target);

}  // namespace wilson
