#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "carnot/matrix.hpp"

namespace carnot {

bool is_antisymmetric(const RatMatrix& a);

/// Writes an antisymmetric A exactly as sum_i (u_i w_i^T - w_i u_i^T) with
/// rank(A)/2 pairs, by symplectic elimination over the rationals. The pivot
/// is the lexicographically first nonzero entry above the diagonal, so the
/// decomposition is reproducible. Rejects non-antisymmetric input.
std::vector<std::pair<RatVec, RatVec>> skew_decompose(const RatMatrix& a);

/// Exact Pfaffian. Zero for odd size; rejects non-antisymmetric input.
Rat pfaffian(const RatMatrix& a);

/// Pfaffian of the principal submatrix on the given (strictly increasing)
/// index set.
Rat pfaffian_of_subset(const RatMatrix& a, const std::vector<std::size_t>& idx);

/// True iff every principal Pfaffian of the given even order vanishes.
/// For antisymmetric matrices this holds exactly when rank(A) < order.
bool principal_pfaffians_vanish(const RatMatrix& a, std::size_t order);

/// Largest even order with a nonvanishing principal Pfaffian (0 for A = 0).
/// Equals rank(A) for antisymmetric A; the agreement of the two routes is a
/// test target, so this function never calls rank().
std::size_t pfaffian_rank(const RatMatrix& a);

}  // namespace carnot
