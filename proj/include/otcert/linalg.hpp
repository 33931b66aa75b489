#ifndef OTCERT_LINALG_HPP
#define OTCERT_LINALG_HPP

// Small dense exact linear algebra over Q (row-major vectors of rows).

#include <optional>
#include <vector>

#include "otcert/interval.hpp"

namespace otcert {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Incrementally maintained row-echelon basis of a subspace of Q^n.
/// Rows are kept fully reduced, so the basis is canonical for the subspace.
class EchelonBasis {
   public:
    explicit EchelonBasis(std::size_t dimension) : dim_(dimension) {}

    std::size_t dimension() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    const RationalMatrix& rows() const noexcept { return rows_; }

    /// v minus its projection along the pivots; zero iff v is in the span.
    RationalVector reduce(RationalVector v) const;
    bool contains(const RationalVector& v) const;
    /// Adds v; returns false when v was already in the span.
    bool insert(const RationalVector& v);

    friend bool operator==(const EchelonBasis& a, const EchelonBasis& b) { return a.rows_ == b.rows_; }

   private:
    std::size_t dim_;
    RationalMatrix rows_;
    std::vector<std::size_t> pivots_;
};

/// Coefficients c with sum_k c[k] * columns[k] == target, if solvable.
std::optional<RationalVector> solve_in_span(const std::vector<RationalVector>& columns, const RationalVector& target);

/// Exact determinant by Gaussian elimination.
Rational determinant(RationalMatrix m);

}  // namespace otcert

#endif
