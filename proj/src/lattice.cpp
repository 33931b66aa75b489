#include "otcert/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace otcert {

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<Rational> to_rational(const IntegerVector& v) { return {v.begin(), v.end()}; }

Integer round_rational(const Rational& q) {
    // floor(q + 1/2)
    Rational shifted = q + Rational(1, 2);
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    return out;
}

}  // namespace

Integer squared_norm(const IntegerVector& v) {
    Integer s = 0;
    for (const auto& x : v) s += x * x;
    return s;
}

IntegerMatrix lll_reduce(IntegerMatrix b, const Rational& delta) {
    const std::size_t n = b.size();
    if (n <= 1) return b;
    const std::size_t dim = b[0].size();
    std::vector<std::vector<Rational>> star(n);
    std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
    std::vector<Rational> norms(n);

    auto gram_schmidt = [&]() {
        for (std::size_t i = 0; i < n; ++i) {
            star[i] = to_rational(b[i]);
            for (std::size_t j = 0; j < i; ++j) {
                mu[i][j] = dot(to_rational(b[i]), star[j]) / norms[j];
                for (std::size_t c = 0; c < dim; ++c) star[i][c] -= mu[i][j] * star[j][c];
            }
            norms[i] = dot(star[i], star[i]);
            if (norms[i] == 0) throw std::invalid_argument("lll_reduce: rows are linearly dependent");
        }
    };

    gram_schmidt();
    std::size_t k = 1;
    while (k < n) {
        for (std::size_t j = k; j-- > 0;) {
            Integer q = round_rational(mu[k][j]);
            if (q == 0) continue;
            for (std::size_t c = 0; c < dim; ++c) b[k][c] -= q * b[j][c];
            for (std::size_t l = 0; l < j; ++l) mu[k][l] -= Rational(q) * mu[j][l];
            mu[k][j] -= Rational(q);
        }
        if (norms[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norms[k - 1]) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            gram_schmidt();
            k = std::max<std::size_t>(k - 1, 1);
        }
    }
    return b;
}

std::vector<std::vector<long>> integer_relation_candidates(const std::vector<std::vector<BigFloat>>& rows,
                                                           std::size_t unknowns, long scale_bits) {
    const std::size_t m = rows.size();
    IntegerMatrix basis(unknowns, IntegerVector(unknowns + m));
    for (std::size_t k = 0; k < unknowns; ++k) {
        basis[k][k] = 1;
        for (std::size_t r = 0; r < m; ++r) {
            BigFloat scaled(rows[r][k].precision() + 64);
            mpfr_mul_2si(scaled.get(), rows[r][k].get(), scale_bits, MPFR_RNDN);
            mpfr_get_z(basis[k][unknowns + r].get_mpz_t(), scaled.get(), MPFR_RNDN);
        }
    }
    IntegerMatrix reduced = lll_reduce(std::move(basis));
    std::sort(reduced.begin(), reduced.end(),
              [](const IntegerVector& a, const IntegerVector& b) { return squared_norm(a) < squared_norm(b); });

    Integer limit;
    mpz_ui_pow_ui(limit.get_mpz_t(), 2, static_cast<unsigned long>(scale_bits / 2));
    std::vector<std::vector<long>> out;
    for (const auto& row : reduced) {
        bool small_tail = true;
        for (std::size_t r = 0; r < m && small_tail; ++r) small_tail = abs(row[unknowns + r]) < limit;
        bool fits = true;
        for (std::size_t k = 0; k < unknowns && fits; ++k) fits = row[k].fits_slong_p();
        if (!small_tail || !fits) continue;
        std::vector<long> coeffs;
        for (std::size_t k = 0; k < unknowns; ++k) coeffs.push_back(row[k].get_si());
        if (std::any_of(coeffs.begin(), coeffs.end(), [](long c) { return c != 0; })) out.push_back(std::move(coeffs));
    }
    return out;
}

}  // namespace otcert
