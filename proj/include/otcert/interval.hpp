#ifndef OTCERT_INTERVAL_HPP
#define OTCERT_INTERVAL_HPP

// Outward-rounded real and rectangular complex interval arithmetic on top of
// MPFR. Every enclosure produced here contains the exact real result.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace otcert {

using Rational = mpq_class;
using Integer = mpz_class;

/// RAII owner of an mpfr_t with a fixed precision.
class BigFloat {
   public:
    explicit BigFloat(mpfr_prec_t precision = 64);
    BigFloat(mpfr_prec_t precision, double value);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    mpfr_ptr get() noexcept { return value_; }
    mpfr_srcptr get() const noexcept { return value_; }
    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /// Decimal rendering with `digits` significant digits.
    std::string to_string(int digits = 30) const;
    int sign() const { return mpfr_sgn(value_); }
    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    /// floor(log2|x|) for nonzero x; a very negative value for zero.
    long exponent2() const;

   private:
    mpfr_t value_;
};

/// Closed real interval [lo, hi] with MPFR endpoints.
class Interval {
   public:
    explicit Interval(mpfr_prec_t precision = 64);
    Interval(BigFloat lo, BigFloat hi);

    static Interval point(const BigFloat& x);
    static Interval from_rational(const Rational& q, mpfr_prec_t precision);
    static Interval from_rationals(const Rational& lo, const Rational& hi, mpfr_prec_t precision);
    static Interval from_int(long v, mpfr_prec_t precision);

    const BigFloat& lo() const noexcept { return lo_; }
    const BigFloat& hi() const noexcept { return hi_; }
    mpfr_prec_t precision() const noexcept { return lo_.precision(); }

    bool contains_zero() const;
    bool certainly_positive() const { return lo_.sign() > 0; }
    bool certainly_negative() const { return hi_.sign() < 0; }
    bool contains(const Interval& other) const;
    bool overlaps(const Interval& other) const;

    /// Upper bound on hi - lo.
    BigFloat width() const;
    /// Upper bound on half the width.
    BigFloat radius() const;
    BigFloat mid() const;
    double mid_double() const { return mid().to_double(); }
    /// Bound e with radius <= 2^e (e is floor of log2 of an upper bound).
    long radius_exponent2() const;

    /// Enclosure of |x| for every x in the interval.
    Interval abs() const;
    /// Upper bound on max |x|.
    BigFloat mag() const;
    Interval square() const;
    Interval sqrt() const;
    Interval log() const;

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    /// Throws std::domain_error if b contains zero.
    friend Interval operator/(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a);

    static Interval hull(const Interval& a, const Interval& b);
    std::string to_string(int digits = 20) const;

   private:
    BigFloat lo_;
    BigFloat hi_;
};

/// Rectangular complex interval re + i*im.
struct ComplexInterval {
    Interval re;
    Interval im;

    ComplexInterval() = default;
    ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
    static ComplexInterval real(Interval r);
    /// Box of half-side `radius` around (re, im).
    static ComplexInterval ball(const BigFloat& re, const BigFloat& im, const BigFloat& radius);

    ComplexInterval conj() const { return {re, -im}; }
    /// Enclosure of |z|^2.
    Interval norm() const;
    Interval abs() const { return norm().sqrt(); }
    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    bool overlaps(const ComplexInterval& other) const { return re.overlaps(other.re) && im.overlaps(other.im); }
    /// Upper bound on the distance from the center to any corner.
    BigFloat radius() const;
    ComplexInterval midpoint() const;

    friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
    friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
    friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
    friend ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b);
    friend ComplexInterval operator-(const ComplexInterval& a) { return {-a.re, -a.im}; }
};

/// Exact dyadic 2^e as a BigFloat.
BigFloat pow2(long e, mpfr_prec_t precision);

}  // namespace otcert

#endif
