#include "otcert/interval.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace otcert {

BigFloat::BigFloat(mpfr_prec_t precision) {
    mpfr_init2(value_, precision);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(mpfr_prec_t precision, double value) {
    mpfr_init2(value_, precision);
    mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other) mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_string(int digits) const {
    char* buffer = nullptr;
    mpfr_asprintf(&buffer, "%.*Rg", digits, value_);
    std::string out(buffer);
    mpfr_free_str(buffer);
    return out;
}

long BigFloat::exponent2() const {
    if (mpfr_zero_p(value_)) return LONG_MIN / 4;
    return static_cast<long>(mpfr_get_exp(value_)) - 1;
}

BigFloat pow2(long e, mpfr_prec_t precision) {
    BigFloat out(precision);
    mpfr_set_ui_2exp(out.get(), 1, e, MPFR_RNDN);
    return out;
}

namespace {

mpfr_prec_t max_prec(const Interval& a, const Interval& b) { return std::max(a.precision(), b.precision()); }

BigFloat min_of(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.get(), b.get()) ? a : b; }
BigFloat max_of(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.get(), b.get()) ? a : b; }

}  // namespace

Interval::Interval(mpfr_prec_t precision) : lo_(precision), hi_(precision) {}

Interval::Interval(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (mpfr_nan_p(lo_.get()) || mpfr_nan_p(hi_.get())) throw std::domain_error("interval endpoint is NaN");
    if (mpfr_greater_p(lo_.get(), hi_.get())) throw std::logic_error("interval with lo > hi");
}

Interval Interval::point(const BigFloat& x) { return Interval(x, x); }

Interval Interval::from_rational(const Rational& q, mpfr_prec_t precision) {
    return from_rationals(q, q, precision);
}

Interval Interval::from_rationals(const Rational& lo, const Rational& hi, mpfr_prec_t precision) {
    BigFloat l(precision), h(precision);
    mpfr_set_q(l.get(), lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(h.get(), hi.get_mpq_t(), MPFR_RNDU);
    return Interval(std::move(l), std::move(h));
}

Interval Interval::from_int(long v, mpfr_prec_t precision) {
    BigFloat x(precision);
    mpfr_set_si(x.get(), v, MPFR_RNDN);
    return point(x);
}

bool Interval::contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

bool Interval::contains(const Interval& other) const {
    return mpfr_lessequal_p(lo_.get(), other.lo_.get()) && mpfr_greaterequal_p(hi_.get(), other.hi_.get());
}

bool Interval::overlaps(const Interval& other) const {
    return mpfr_lessequal_p(lo_.get(), other.hi_.get()) && mpfr_lessequal_p(other.lo_.get(), hi_.get());
}

BigFloat Interval::width() const {
    BigFloat w(precision());
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    return w;
}

BigFloat Interval::radius() const {
    BigFloat r = width();
    mpfr_div_2ui(r.get(), r.get(), 1, MPFR_RNDU);
    return r;
}

BigFloat Interval::mid() const {
    BigFloat m(precision() + 1);
    mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
    mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
    return m;
}

long Interval::radius_exponent2() const {
    BigFloat r = radius();
    if (r.is_zero()) return LONG_MIN / 4;
    return r.exponent2() + 1;
}

Interval Interval::abs() const {
    if (lo_.sign() >= 0) return *this;
    if (hi_.sign() <= 0) return -*this;
    BigFloat zero(precision());
    BigFloat top(precision());
    mpfr_neg(top.get(), lo_.get(), MPFR_RNDU);
    return Interval(zero, max_of(top, hi_));
}

BigFloat Interval::mag() const { return abs().hi(); }

Interval Interval::square() const {
    Interval a = abs();
    BigFloat l(precision()), h(precision());
    mpfr_sqr(l.get(), a.lo_.get(), MPFR_RNDD);
    mpfr_sqr(h.get(), a.hi_.get(), MPFR_RNDU);
    return Interval(std::move(l), std::move(h));
}

Interval Interval::sqrt() const {
    if (hi_.sign() < 0) throw std::domain_error("sqrt of negative interval");
    BigFloat l(precision()), h(precision());
    if (lo_.sign() > 0) mpfr_sqrt(l.get(), lo_.get(), MPFR_RNDD);
    mpfr_sqrt(h.get(), hi_.get(), MPFR_RNDU);
    return Interval(std::move(l), std::move(h));
}

Interval Interval::log() const {
    if (lo_.sign() <= 0) throw std::domain_error("log of interval not bounded away from zero");
    BigFloat l(precision()), h(precision());
    mpfr_log(l.get(), lo_.get(), MPFR_RNDD);
    mpfr_log(h.get(), hi_.get(), MPFR_RNDU);
    return Interval(std::move(l), std::move(h));
}

Interval operator+(const Interval& a, const Interval& b) {
    mpfr_prec_t p = max_prec(a, b);
    BigFloat l(p), h(p);
    mpfr_add(l.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_add(h.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    return Interval(std::move(l), std::move(h));
}

Interval operator-(const Interval& a, const Interval& b) {
    mpfr_prec_t p = max_prec(a, b);
    BigFloat l(p), h(p);
    mpfr_sub(l.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
    mpfr_sub(h.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
    return Interval(std::move(l), std::move(h));
}

Interval operator-(const Interval& a) {
    BigFloat l(a.precision()), h(a.precision());
    mpfr_neg(l.get(), a.hi_.get(), MPFR_RNDD);
    mpfr_neg(h.get(), a.lo_.get(), MPFR_RNDU);
    return Interval(std::move(l), std::move(h));
}

Interval operator*(const Interval& a, const Interval& b) {
    mpfr_prec_t p = max_prec(a, b);
    const mpfr_srcptr xs[2] = {a.lo_.get(), a.hi_.get()};
    const mpfr_srcptr ys[2] = {b.lo_.get(), b.hi_.get()};
    BigFloat lo(p), hi(p), t(p);
    bool first = true;
    for (auto x : xs) {
        for (auto y : ys) {
            mpfr_mul(t.get(), x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t.get(), lo.get())) mpfr_set(lo.get(), t.get(), MPFR_RNDN);
            mpfr_mul(t.get(), x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t.get(), hi.get())) mpfr_set(hi.get(), t.get(), MPFR_RNDN);
            first = false;
        }
    }
    return Interval(std::move(lo), std::move(hi));
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
    mpfr_prec_t p = max_prec(a, b);
    BigFloat l(p), h(p);
    mpfr_ui_div(l.get(), 1, b.hi_.get(), MPFR_RNDD);
    mpfr_ui_div(h.get(), 1, b.lo_.get(), MPFR_RNDU);
    return a * Interval(std::move(l), std::move(h));
}

Interval Interval::hull(const Interval& a, const Interval& b) {
    return Interval(min_of(a.lo_, b.lo_), max_of(a.hi_, b.hi_));
}

std::string Interval::to_string(int digits) const {
    return "[" + lo_.to_string(digits) + ", " + hi_.to_string(digits) + "]";
}

ComplexInterval ComplexInterval::real(Interval r) {
    Interval zero(r.precision());
    return {std::move(r), std::move(zero)};
}

ComplexInterval ComplexInterval::ball(const BigFloat& re, const BigFloat& im, const BigFloat& radius) {
    auto widen = [&](const BigFloat& c) {
        mpfr_prec_t p = std::max(c.precision(), radius.precision());
        BigFloat l(p), h(p);
        mpfr_sub(l.get(), c.get(), radius.get(), MPFR_RNDD);
        mpfr_add(h.get(), c.get(), radius.get(), MPFR_RNDU);
        return Interval(std::move(l), std::move(h));
    };
    return {widen(re), widen(im)};
}

Interval ComplexInterval::norm() const { return re.square() + im.square(); }

BigFloat ComplexInterval::radius() const {
    BigFloat a = re.radius();
    BigFloat b = im.radius();
    BigFloat out(std::max(a.precision(), b.precision()));
    mpfr_add(out.get(), a.get(), b.get(), MPFR_RNDU);
    return out;
}

ComplexInterval ComplexInterval::midpoint() const { return {Interval::point(re.mid()), Interval::point(im.mid())}; }

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) { return {a.re + b.re, a.im + b.im}; }

ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) { return {a.re - b.re, a.im - b.im}; }

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
    Interval n = b.norm();
    ComplexInterval num = a * b.conj();
    return {num.re / n, num.im / n};
}

}  // namespace otcert
