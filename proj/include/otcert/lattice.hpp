#ifndef OTCERT_LATTICE_HPP
#define OTCERT_LATTICE_HPP

// Exact LLL reduction over the integers, used to propose integer relations
// among logarithms of units.

#include <vector>

#include "otcert/interval.hpp"

namespace otcert {

using IntegerVector = std::vector<Integer>;
using IntegerMatrix = std::vector<IntegerVector>;

/// LLL-reduces the rows of `basis` with parameter delta (1/4 < delta < 1).
/// Rows must be linearly independent. Arithmetic is exact.
IntegerMatrix lll_reduce(IntegerMatrix basis, const Rational& delta = Rational(3, 4));

Integer squared_norm(const IntegerVector& v);

/// Short integer vectors a with sum_k a[k] * columns[k] close to zero.
///
/// `rows[r][k]` are real approximations (midpoints) of a linear form in k;
/// the embedding [I | round(2^scale_bits * rows^T)] is reduced and the
/// coefficient parts of rows whose tail is below 2^(scale_bits / 2) are
/// returned, shortest first. Candidates only; callers verify exactly.
std::vector<std::vector<long>> integer_relation_candidates(const std::vector<std::vector<BigFloat>>& rows,
                                                           std::size_t unknowns, long scale_bits);

}  // namespace otcert

#endif
