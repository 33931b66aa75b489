#include "otcert/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace otcert {

RationalVector EchelonBasis::reduce(RationalVector v) const {
    if (v.size() != dim_) throw std::invalid_argument("vector length does not match basis dimension");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational c = v[pivots_[r]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j)
            if (rows_[r][j] != 0) v[j] -= c * rows_[r][j];
    }
    return v;
}

bool EchelonBasis::contains(const RationalVector& v) const {
    RationalVector r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

bool EchelonBasis::insert(const RationalVector& v) {
    RationalVector r = reduce(v);
    auto it = std::find_if(r.begin(), r.end(), [](const Rational& x) { return x != 0; });
    if (it == r.end()) return false;
    const std::size_t pivot = static_cast<std::size_t>(it - r.begin());
    const Rational inv = Rational(1) / r[pivot];
    for (auto& x : r) x *= inv;
    // Clear the new pivot column from the existing rows.
    for (auto& row : rows_) {
        const Rational c = row[pivot];
        if (c == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) row[j] -= c * r[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    const auto idx = pos - pivots_.begin();
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + idx, std::move(r));
    return true;
}

std::optional<RationalVector> solve_in_span(const std::vector<RationalVector>& columns, const RationalVector& target) {
    const std::size_t k = columns.size();
    const std::size_t n = target.size();
    // Augmented system [columns | target], eliminate over rows of length k + 1.
    RationalMatrix a(n, RationalVector(k + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) a[i][j] = columns[j][i];
        a[i][k] = target[i];
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < n; ++col) {
        std::size_t sel = row;
        while (sel < n && a[sel][col] == 0) ++sel;
        if (sel == n) continue;
        std::swap(a[sel], a[row]);
        const Rational inv = Rational(1) / a[row][col];
        for (auto& x : a[row]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || a[i][col] == 0) continue;
            const Rational c = a[i][col];
            for (std::size_t j = col; j <= k; ++j) a[i][j] -= c * a[row][j];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < n; ++i)
        if (a[i][k] != 0) return std::nullopt;
    RationalVector sol(k);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) sol[pivot_cols[r]] = a[r][k];
    return sol;
}

Rational determinant(RationalMatrix m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m[sel][col] == 0) ++sel;
        if (sel == n) return 0;
        if (sel != col) {
            std::swap(m[sel], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            const Rational c = m[i][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[i][j] -= c * m[col][j];
        }
    }
    return det;
}

}  // namespace otcert
