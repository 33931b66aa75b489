#include "otcert/poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>

namespace otcert {

RationalPoly::RationalPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

RationalPoly::RationalPoly(std::initializer_list<long> coefficients) {
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients) coeffs_.emplace_back(c);
    normalize();
}

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly(std::vector<Rational>{c}); }

RationalPoly RationalPoly::monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return RationalPoly(std::move(v));
}

void RationalPoly::normalize() {
    for (auto& c : coeffs_) c.canonicalize();
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& RationalPoly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

bool RationalPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

bool RationalPoly::has_integer_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

Rational RationalPoly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Interval RationalPoly::operator()(const Interval& x) const {
    mpfr_prec_t p = x.precision();
    Interval acc(p);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Interval::from_rational(*it, p);
    return acc;
}

ComplexInterval RationalPoly::operator()(const ComplexInterval& z) const {
    mpfr_prec_t p = std::max(z.re.precision(), z.im.precision());
    ComplexInterval acc = ComplexInterval::real(Interval(p));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z;
        acc.re = acc.re + Interval::from_rational(*it, p);
    }
    return acc;
}

int RationalPoly::sign_at(const Rational& x) const { return sgn((*this)(x)); }

RationalPoly RationalPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::monic() const {
    if (is_zero()) return {};
    RationalPoly out = *this;
    out *= Rational(1) / leading();
    return out;
}

RationalPoly RationalPoly::compose(const RationalPoly& q) const {
    RationalPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + constant(*it);
    return acc;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    normalize();
    return *this;
}

std::string RationalPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = (mag == 1);
        if (!unit || k == 0) os << mag.get_str();
        if (k >= 1) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

DivMod divmod(const RationalPoly& p, const RationalPoly& q) {
    if (q.is_zero()) throw std::domain_error("polynomial division by zero");
    int dq = q.degree();
    std::vector<Rational> rem(p.coefficients().begin(), p.coefficients().end());
    if (p.degree() < dq) return {RationalPoly{}, p};
    std::vector<Rational> quot(static_cast<std::size_t>(p.degree() - dq + 1));
    Rational inv_lead = Rational(1) / q.leading();
    for (int k = p.degree(); k >= dq; --k) {
        Rational c = rem[static_cast<std::size_t>(k)] * inv_lead;
        c.canonicalize();
        quot[static_cast<std::size_t>(k - dq)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dq; ++j) rem[static_cast<std::size_t>(k - dq + j)] -= c * q.coeff(static_cast<std::size_t>(j));
    }
    rem.resize(static_cast<std::size_t>(dq));
    return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly operator/(const RationalPoly& p, const RationalPoly& q) { return divmod(p, q).quotient; }
RationalPoly operator%(const RationalPoly& p, const RationalPoly& q) { return divmod(p, q).remainder; }

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly x = a, y = b;
    while (!y.is_zero()) {
        RationalPoly r = x % y;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

ExtendedGcd extended_gcd(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly r0 = a, r1 = b;
    RationalPoly s0 = RationalPoly::constant(1), s1;
    RationalPoly t0, t1 = RationalPoly::constant(1);
    while (!r1.is_zero()) {
        DivMod qr = divmod(r0, r1);
        RationalPoly s2 = s0 - qr.quotient * s1;
        RationalPoly t2 = t0 - qr.quotient * t1;
        r0 = std::move(r1);
        r1 = std::move(qr.remainder);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {};
    Rational scale = Rational(1) / r0.leading();
    return {r0 * scale, s0 * scale, t0 * scale};
}

RationalPoly squarefree_part(const RationalPoly& f) {
    if (f.degree() <= 0) return f.monic();
    return (f / gcd(f, f.derivative())).monic();
}

Rational cauchy_bound(const RationalPoly& f) {
    Rational m = 0;
    for (int i = 0; i < f.degree(); ++i) m = std::max(m, Rational(abs(f.coeff(static_cast<std::size_t>(i)))));
    return 1 + m / abs(f.leading());
}

// ---------------------------------------------------------------- real roots

std::vector<RationalPoly> sturm_chain(const RationalPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
    std::vector<RationalPoly> chain{squarefree_part(f)};
    chain.push_back(chain[0].derivative());
    while (!chain.back().is_zero()) {
        const auto n = chain.size();
        chain.push_back(-(chain[n - 2] % chain[n - 1]));
    }
    chain.pop_back();
    return chain;
}

int sign_variations(std::span<const RationalPoly> chain, const Rational& x) {
    int variations = 0, last = 0;
    for (const auto& p : chain) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

int count_real_roots(std::span<const RationalPoly> chain, const Rational& a, const Rational& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

IsolatingInterval IsolatingInterval::bisect(const RationalPoly& f) const {
    Rational mid = (lo + hi) / 2;
    int sm = f.sign_at(mid);
    if (sm == 0) {
        Rational quarter = (hi - lo) / 4;
        return {mid - quarter, mid + quarter};
    }
    return (f.sign_at(lo) != sm) ? IsolatingInterval{lo, mid} : IsolatingInterval{mid, hi};
}

IsolatingInterval IsolatingInterval::refine(const RationalPoly& f, long bits) const {
    IsolatingInterval cur = *this;
    Rational target(1);
    if (bits >= 0)
        mpq_div_2exp(target.get_mpq_t(), target.get_mpq_t(), static_cast<mp_bitcnt_t>(bits));
    else
        mpq_mul_2exp(target.get_mpq_t(), target.get_mpq_t(), static_cast<mp_bitcnt_t>(-bits));
    while (cur.width() > target) cur = cur.bisect(f);
    return cur;
}

namespace {

void isolate_range(const RationalPoly& f, const std::vector<RationalPoly>& chain, const Rational& a, const Rational& b,
                   int count, std::vector<IsolatingInterval>& out) {
    if (count == 0) return;
    if (count == 1) {
        out.push_back({a, b});
        return;
    }
    Rational mid = (a + b) / 2;
    if (f.sign_at(mid) == 0) {
        Rational delta = (b - a) / 4;
        while (count_real_roots(chain, mid - delta, mid + delta) != 1 || f.sign_at(mid - delta) == 0 ||
               f.sign_at(mid + delta) == 0)
            delta /= 2;
        Rational left = mid - delta, right = mid + delta;
        isolate_range(f, chain, a, left, count_real_roots(chain, a, left), out);
        out.push_back({left, right});
        isolate_range(f, chain, right, b, count_real_roots(chain, right, b), out);
        return;
    }
    int left_count = count_real_roots(chain, a, mid);
    isolate_range(f, chain, a, mid, left_count, out);
    isolate_range(f, chain, mid, b, count - left_count, out);
}

}  // namespace

std::vector<IsolatingInterval> isolate_real_roots(const RationalPoly& f) {
    std::vector<RationalPoly> chain = sturm_chain(f);
    const RationalPoly& g = chain.front();
    std::vector<IsolatingInterval> out;
    if (g.degree() <= 0) return out;
    Rational bound = cauchy_bound(g);
    isolate_range(g, chain, -bound, bound, count_real_roots(chain, -bound, bound), out);
    return out;
}

// ------------------------------------------------------------- complex roots

namespace {

ComplexInterval point(const BigFloat& re, const BigFloat& im) { return {Interval::point(re), Interval::point(im)}; }

ComplexInterval horner_point(const std::vector<ComplexInterval>& coeffs, const ComplexInterval& z) {
    ComplexInterval acc = coeffs.back();
    for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) acc = (acc * z + *it).midpoint();
    return acc;
}

struct AberthState {
    std::vector<BigFloat> re;
    std::vector<BigFloat> im;
};

// Returns true when every correction dropped below 2^-(prec - 8) relative.
bool aberth_iterate(const RationalPoly& f, AberthState& st, mpfr_prec_t prec, int max_iterations) {
    const int n = f.degree();
    std::vector<ComplexInterval> fc, dc;
    for (int i = 0; i <= n; ++i) fc.push_back(ComplexInterval::real(Interval::point(Interval::from_rational(f.coeff(static_cast<std::size_t>(i)), prec).mid())));
    RationalPoly df = f.derivative();
    for (int i = 0; i < n; ++i) dc.push_back(ComplexInterval::real(Interval::point(Interval::from_rational(df.coeff(static_cast<std::size_t>(i)), prec).mid())));
    const Interval one = Interval::from_int(1, prec);

    for (int iter = 0; iter < max_iterations; ++iter) {
        bool converged = true;
        for (int i = 0; i < n; ++i) {
            ComplexInterval z = point(st.re[i], st.im[i]);
            ComplexInterval fv = horner_point(fc, z);
            if (fv.re.lo().is_zero() && fv.im.lo().is_zero()) continue;
            ComplexInterval dv = horner_point(dc, z);
            ComplexInterval w;
            try {
                ComplexInterval newton = (fv / dv).midpoint();
                ComplexInterval sum = ComplexInterval::real(Interval(prec));
                for (int j = 0; j < n; ++j) {
                    if (j == i) continue;
                    ComplexInterval diff = (z - point(st.re[j], st.im[j])).midpoint();
                    sum = (sum + ComplexInterval::real(one) / diff).midpoint();
                }
                ComplexInterval denom = (ComplexInterval::real(one) - newton * sum).midpoint();
                w = (newton / denom).midpoint();
            } catch (const std::domain_error&) {
                // Coincident iterates or a critical point: nudge and keep going.
                BigFloat eps = pow2(-static_cast<long>(prec) / 4, prec);
                mpfr_add(st.re[i].get(), st.re[i].get(), eps.get(), MPFR_RNDN);
                mpfr_add(st.im[i].get(), st.im[i].get(), eps.get(), MPFR_RNDN);
                converged = false;
                continue;
            }
            mpfr_sub(st.re[i].get(), st.re[i].get(), w.re.lo().get(), MPFR_RNDN);
            mpfr_sub(st.im[i].get(), st.im[i].get(), w.im.lo().get(), MPFR_RNDN);
            // |w| relative to max(1, |z|)
            long ew = std::max(w.re.lo().exponent2(), w.im.lo().exponent2());
            long ez = std::max({0L, st.re[i].exponent2(), st.im[i].exponent2()});
            if (ew - ez > -static_cast<long>(prec) + 8) converged = false;
        }
        if (converged) return true;
    }
    return false;
}

struct Certification {
    bool ok = false;
    std::vector<BigFloat> radii;
    std::string reason;
};

Certification certify_roots(const RationalPoly& f, const AberthState& st, mpfr_prec_t prec, long precision_bits) {
    const int n = f.degree();
    Certification cert;
    Interval lead = Interval::from_rational(abs(f.leading()), prec);
    Interval deg = Interval::from_int(n, prec);
    for (int i = 0; i < n; ++i) {
        ComplexInterval z = point(st.re[i], st.im[i]);
        Interval num = deg * f(z).abs();
        Interval den = lead;
        for (int j = 0; j < n; ++j)
            if (j != i) den = den * (z - point(st.re[j], st.im[j])).abs();
        if (den.contains_zero()) {
            cert.reason = "coincident root approximations";
            return cert;
        }
        cert.radii.push_back((num / den).hi());
    }
    BigFloat limit = pow2(-precision_bits / 2, prec);
    for (int i = 0; i < n; ++i) {
        if (!mpfr_less_p(cert.radii[i].get(), limit.get())) {
            cert.reason = "inclusion radius above 2^(-precision/2)";
            return cert;
        }
        for (int j = i + 1; j < n; ++j) {
            Interval dist = (point(st.re[i], st.im[i]) - point(st.re[j], st.im[j])).abs();
            BigFloat rsum(prec);
            mpfr_add(rsum.get(), cert.radii[i].get(), cert.radii[j].get(), MPFR_RNDU);
            if (!mpfr_greater_p(dist.lo().get(), rsum.get())) {
                cert.reason = "inclusion disks overlap";
                return cert;
            }
        }
    }
    cert.ok = true;
    return cert;
}

}  // namespace

std::vector<ComplexRoot> complex_roots(const RationalPoly& f, long precision_bits) {
    if (precision_bits < 64) throw std::invalid_argument("complex_roots needs precision_bits >= 64");
    if (f.degree() < 1) throw std::invalid_argument("complex_roots of a constant polynomial");
    if (gcd(f, f.derivative()).degree() > 0) throw std::invalid_argument("complex_roots needs a squarefree polynomial");
    const int n = f.degree();
    const int s = static_cast<int>(isolate_real_roots(f).size());

    mpfr_prec_t prec = precision_bits + 64;
    AberthState st;
    {
        // Initial guesses on a circle of radius |a0/an|^(1/n), rotated off the axes.
        double a0 = std::abs(f.coeff(0).get_d()), an = std::abs(f.leading().get_d());
        double r = (a0 > 0) ? std::pow(a0 / an, 1.0 / n) : 1.0;
        if (!(r > 0) || !std::isfinite(r)) r = 1.0;
        for (int k = 0; k < n; ++k) {
            double angle = 2.0 * M_PI * k / n + 0.4;
            st.re.emplace_back(prec, r * std::cos(angle));
            st.im.emplace_back(prec, r * std::sin(angle));
        }
    }
    std::string last_reason = "did not converge";
    for (int attempt = 0; attempt < 4; ++attempt, prec *= 2) {
        for (auto& x : st.re) mpfr_prec_round(x.get(), prec, MPFR_RNDN);
        for (auto& x : st.im) mpfr_prec_round(x.get(), prec, MPFR_RNDN);
        bool converged = aberth_iterate(f, st, prec, 200 + 4 * static_cast<int>(prec));
        if (!converged) {
            last_reason = "Aberth iteration stagnated at " + std::to_string(prec) + " bits";
            continue;
        }
        Certification cert = certify_roots(f, st, prec, precision_bits);
        if (!cert.ok) {
            last_reason = cert.reason + " at " + std::to_string(prec) + " bits";
            continue;
        }
        std::vector<ComplexRoot> reals, uppers;
        for (int i = 0; i < n; ++i) {
            BigFloat abs_im(prec);
            mpfr_abs(abs_im.get(), st.im[i].get(), MPFR_RNDN);
            if (mpfr_lessequal_p(abs_im.get(), cert.radii[i].get())) {
                reals.push_back({st.re[i], BigFloat(prec), cert.radii[i]});
            } else if (st.im[i].sign() > 0) {
                uppers.push_back({st.re[i], st.im[i], cert.radii[i]});
            }
        }
        if (static_cast<int>(reals.size()) != s || static_cast<int>(uppers.size()) * 2 != n - s) {
            last_reason = "real/complex classification mismatch at " + std::to_string(prec) + " bits";
            continue;
        }
        std::sort(reals.begin(), reals.end(),
                  [](const ComplexRoot& a, const ComplexRoot& b) { return mpfr_less_p(a.re.get(), b.re.get()); });
        auto arg = [prec](const ComplexRoot& r) {
            BigFloat a(prec);
            mpfr_atan2(a.get(), r.im.get(), r.re.get(), MPFR_RNDN);
            return a;
        };
        std::sort(uppers.begin(), uppers.end(), [&](const ComplexRoot& a, const ComplexRoot& b) {
            BigFloat x = arg(a), y = arg(b);
            if (!mpfr_equal_p(x.get(), y.get())) return mpfr_less_p(x.get(), y.get());
            return mpfr_less_p(a.im.get(), b.im.get());
        });
        std::vector<ComplexRoot> out = std::move(reals);
        for (auto& u : uppers) {
            ComplexRoot c = u;
            mpfr_neg(c.im.get(), c.im.get(), MPFR_RNDN);
            out.push_back(std::move(u));
            out.push_back(std::move(c));
        }
        return out;
    }
    throw ComplexRootsFailure("complex root certification failed: " + last_reason);
}

// ----------------------------------------------------------- irreducibility

const char* to_string(Irreducibility s) {
    switch (s) {
        case Irreducibility::Irreducible: return "irreducible";
        case Irreducibility::Reducible: return "reducible";
        case Irreducibility::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

using ModPoly = std::vector<std::int64_t>;  // constant first, trimmed

void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t result = 1, base = ((a % p) + p) % p, e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, std::int64_t p) {
    trim(a);
    std::int64_t inv = inv_mod(b.back(), p);
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        std::int64_t c = a.back() * inv % p;
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] = ((a[shift + j] - c * b[j]) % p + p) % p;
        trim(a);
    }
    return a;
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b, const ModPoly& m, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return mod_rem(std::move(out), m, p);
}

ModPoly mod_gcd(ModPoly a, ModPoly b, std::int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        ModPoly r = mod_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        std::int64_t inv = inv_mod(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

ModPoly mod_div(ModPoly a, const ModPoly& b, std::int64_t p) {
    std::int64_t inv = inv_mod(b.back(), p);
    ModPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (a.size() >= b.size()) {
        std::int64_t c = a.back() * inv % p;
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = ((a[shift + j] - c * b[j]) % p + p) % p;
        trim(a);
    }
    trim(q);
    return q;
}

// Degrees of the irreducible factors of a squarefree monic g over F_p.
std::vector<int> distinct_degree_pattern(ModPoly g, std::int64_t p) {
    std::vector<int> degrees;
    ModPoly h{0, 1};
    for (int d = 1; 2 * d <= static_cast<int>(g.size()) - 1; ++d) {
        // h <- h^p mod g
        ModPoly acc{1}, base = mod_rem(h, g, p);
        for (std::int64_t e = p; e > 0; e >>= 1) {
            if (e & 1) acc = mod_mul(acc, base, g, p);
            base = mod_mul(base, base, g, p);
        }
        h = acc;
        ModPoly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] - 1 + p) % p;
        trim(diff);
        ModPoly fac = mod_gcd(g, diff, p);
        if (fac.size() > 1) {
            int deg = static_cast<int>(fac.size()) - 1;
            for (int k = 0; k < deg / d; ++k) degrees.push_back(d);
            g = mod_div(g, fac, p);
            h = mod_rem(h, g, p);
        }
    }
    if (g.size() > 1) degrees.push_back(static_cast<int>(g.size()) - 1);
    return degrees;
}

std::vector<Integer> small_prime_factors(Integer v, unsigned long limit) {
    std::vector<Integer> primes;
    v = abs(v);
    for (unsigned long d = 2; d <= limit && d * d <= v; ++d) {
        if (mpz_divisible_ui_p(v.get_mpz_t(), d)) {
            primes.emplace_back(d);
            while (mpz_divisible_ui_p(v.get_mpz_t(), d)) v /= d;
        }
    }
    if (v > 1 && v <= Integer(limit) * Integer(limit)) primes.push_back(v);
    return primes;
}

bool eisenstein(const RationalPoly& g, const Integer& p) {
    const int n = g.degree();
    for (int i = 0; i < n; ++i)
        if (!mpz_divisible_p(g.coeff(static_cast<std::size_t>(i)).get_num_mpz_t(), p.get_mpz_t())) return false;
    Integer p2 = p * p;
    return !mpz_divisible_p(g.coeff(0).get_num_mpz_t(), p2.get_mpz_t());
}

}  // namespace

IrreducibilityStatus irreducibility_status(const RationalPoly& f) {
    IrreducibilityStatus out;
    const int n = f.degree();
    if (n < 1 || !f.is_monic() || !f.has_integer_coefficients()) {
        out.evidence = "not a monic integer polynomial of positive degree";
        return out;
    }
    if (n == 1) return {Irreducibility::Irreducible, std::nullopt, "degree 1"};

    RationalPoly g = gcd(f, f.derivative());
    if (g.degree() > 0) return {Irreducibility::Reducible, g, "repeated factor gcd(f, f')"};
    if (f.coeff(0) == 0) return {Irreducibility::Reducible, RationalPoly::x(), "zero constant term"};

    // Integer roots divide the constant term.
    bool all_roots_excluded = false;
    Integer a0 = abs(f.coeff(0).get_num());
    if (a0 <= Integer("1000000000000")) {
        all_roots_excluded = true;
        for (Integer d = 1; d * d <= a0; ++d) {
            if (a0 % d != 0) continue;
            for (const Integer& cand : {d, Integer(a0 / d)}) {
                for (int sign : {1, -1}) {
                    Rational r(cand * sign);
                    if (f(r) == 0) return {Irreducibility::Reducible, RationalPoly({-r, Rational(1)}), "rational root " + r.get_str()};
                }
            }
        }
    }
    if (all_roots_excluded && n <= 3) return {Irreducibility::Irreducible, std::nullopt, "no rational root, degree <= 3"};

    for (long shift : {0L, 1L, -1L, 2L, -2L}) {
        RationalPoly h = f.compose(RationalPoly({Rational(shift), Rational(1)}));
        if (h.coeff(0) == 0) continue;
        for (const Integer& p : small_prime_factors(h.coeff(0).get_num(), 1000000)) {
            if (eisenstein(h, p))
                return {Irreducibility::Irreducible, std::nullopt,
                        "eisenstein p=" + p.get_str() + (shift ? " after X -> X + " + std::to_string(shift) : "")};
        }
    }

    // Distinct-degree patterns: Q-factor degrees must be subset sums mod every good prime.
    std::set<int> possible;
    for (int d = 1; d < n; ++d) possible.insert(d);
    int used = 0;
    for (std::int64_t p = 2; used < 10 && p < 2000; ++p) {
        bool prime = true;
        for (std::int64_t q = 2; q * q <= p; ++q)
            if (p % q == 0) prime = false;
        if (!prime) continue;
        ModPoly fp, dp;
        for (int i = 0; i <= n; ++i) {
            Integer c = f.coeff(static_cast<std::size_t>(i)).get_num() % Integer(p);
            if (c < 0) c += p;
            fp.push_back(c.get_si());
        }
        trim(fp);
        for (std::size_t i = 1; i < fp.size(); ++i) dp.push_back(fp[i] * static_cast<std::int64_t>(i) % p);
        trim(dp);
        if (dp.empty() || mod_gcd(fp, dp, p).size() > 1) continue;
        ++used;
        std::vector<int> pattern = distinct_degree_pattern(fp, p);
        if (pattern.size() == 1) return {Irreducibility::Irreducible, std::nullopt, "irreducible mod " + std::to_string(p)};
        std::set<int> sums{0};
        for (int d : pattern) {
            std::set<int> next = sums;
            for (int x : sums) next.insert(x + d);
            sums = std::move(next);
        }
        std::set<int> kept;
        for (int d : possible)
            if (sums.count(d)) kept.insert(d);
        possible = std::move(kept);
        if (possible.empty())
            return {Irreducibility::Irreducible, std::nullopt, "degree patterns modulo " + std::to_string(used) + " primes"};
    }
    out.evidence = "undecided after eisenstein, rational roots and " + std::to_string(used) + " mod-p patterns";
    return out;
}

}  // namespace otcert
