#ifndef OTCERT_POLY_HPP
#define OTCERT_POLY_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "otcert/interval.hpp"

namespace otcert {

/// Univariate polynomial over Q, coefficients stored constant term first.
/// Always canonical: no trailing zeros, every coefficient reduced.
class RationalPoly {
   public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coefficients);
    RationalPoly(std::initializer_list<long> coefficients);

    static RationalPoly constant(const Rational& c);
    static RationalPoly monomial(const Rational& c, std::size_t k);
    static RationalPoly x() { return monomial(1, 1); }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    /// Zero beyond the degree.
    Rational coeff(std::size_t i) const;
    const Rational& leading() const;
    std::span<const Rational> coefficients() const noexcept { return coeffs_; }

    bool is_monic() const;
    bool has_integer_coefficients() const;

    Rational operator()(const Rational& x) const;
    Interval operator()(const Interval& x) const;
    ComplexInterval operator()(const ComplexInterval& z) const;
    /// Sign of p(x), exact.
    int sign_at(const Rational& x) const;

    RationalPoly derivative() const;
    RationalPoly monic() const;
    /// p(q(X)).
    RationalPoly compose(const RationalPoly& q) const;

    RationalPoly& operator+=(const RationalPoly& o);
    RationalPoly& operator-=(const RationalPoly& o);
    RationalPoly& operator*=(const RationalPoly& o);
    RationalPoly& operator*=(const Rational& c);

    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) { return a *= b; }
    friend RationalPoly operator*(RationalPoly a, const Rational& c) { return a *= c; }
    friend RationalPoly operator-(RationalPoly a) { return a *= Rational(-1); }
    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Human form, highest degree first, e.g. "X^3 - 2".
    std::string to_string(const std::string& var = "X") const;

   private:
    void normalize();
    std::vector<Rational> coeffs_;
};

struct DivMod {
    RationalPoly quotient;
    RationalPoly remainder;
};

/// Throws std::domain_error when the divisor is zero.
DivMod divmod(const RationalPoly& p, const RationalPoly& q);
RationalPoly operator/(const RationalPoly& p, const RationalPoly& q);
RationalPoly operator%(const RationalPoly& p, const RationalPoly& q);

/// Monic gcd; gcd(0, 0) = 0.
RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);

struct ExtendedGcd {
    RationalPoly g;  // monic
    RationalPoly s;
    RationalPoly t;  // s*a + t*b == g
};
ExtendedGcd extended_gcd(const RationalPoly& a, const RationalPoly& b);

/// f / gcd(f, f'), made monic.
RationalPoly squarefree_part(const RationalPoly& f);
/// Cauchy bound 1 + max|a_i| / |a_n|; every complex root has modulus below it.
Rational cauchy_bound(const RationalPoly& f);

// ---------------------------------------------------------------- real roots

/// Sturm sequence of the squarefree part of f. Throws on the zero polynomial.
std::vector<RationalPoly> sturm_chain(const RationalPoly& f);
int sign_variations(std::span<const RationalPoly> chain, const Rational& x);
/// Number of distinct real roots in (a, b].
int count_real_roots(std::span<const RationalPoly> chain, const Rational& a, const Rational& b);

/// Open interval (lo, hi) holding exactly one real root of the polynomial it
/// was produced for; the polynomial is nonzero with opposite signs at lo, hi.
struct IsolatingInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    /// One bisection step; f must be the (squarefree) polynomial isolated.
    IsolatingInterval bisect(const RationalPoly& f) const;
    /// Bisect until width <= 2^-bits.
    IsolatingInterval refine(const RationalPoly& f, long bits) const;
    Interval enclosure(mpfr_prec_t precision) const { return Interval::from_rationals(lo, hi, precision); }
};

/// Real roots of f in increasing order. Works on the squarefree part.
std::vector<IsolatingInterval> isolate_real_roots(const RationalPoly& f);

// ------------------------------------------------------------- complex roots

struct ComplexRoot {
    BigFloat re;
    BigFloat im;
    /// Certified: the disk of this radius around (re, im) holds exactly one root.
    BigFloat radius;

    ComplexInterval enclosure() const { return ComplexInterval::ball(re, im, radius); }
};

struct ComplexRootsFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// All n roots of a squarefree f via Aberth-Ehrlich iteration, each with an
/// a-posteriori inclusion radius below 2^(-precision_bits/2). Roots are
/// returned real ones first (increasing), then conjugate pairs ordered by
/// increasing argument of the upper member, each followed by its conjugate.
/// Throws std::invalid_argument if f is not squarefree or precision < 64, and
/// ComplexRootsFailure when certification fails within the iteration budget.
std::vector<ComplexRoot> complex_roots(const RationalPoly& f, long precision_bits);

// ----------------------------------------------------------- irreducibility

enum class Irreducibility { Irreducible, Reducible, Unknown };

struct IrreducibilityStatus {
    Irreducibility status = Irreducibility::Unknown;
    /// Nontrivial exact factor when Reducible.
    std::optional<RationalPoly> factor;
    /// How the verdict was reached, e.g. "eisenstein p=2".
    std::string evidence;
};

/// Sound but incomplete test for monic integer polynomials: Eisenstein (with
/// small shifts), rational roots, and distinct-degree patterns modulo the
/// first ten primes for which f stays squarefree.
IrreducibilityStatus irreducibility_status(const RationalPoly& f);

const char* to_string(Irreducibility s);

}  // namespace otcert

#endif
