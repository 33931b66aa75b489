// Acceptance suite: one PASS/FAIL line per criterion, with wall time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "otcert/action.hpp"
#include "otcert/certifier.hpp"
#include "otcert/cli.hpp"
#include "test_support.hpp"

using namespace otcert;
using namespace otcert::testing;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

// 2^(1/6) + shift, at `bits` bits, then log and scale.
BigFloat oracle_log(unsigned root, long shift, unsigned scale, long bits) {
    BigFloat two(bits), x(bits);
    mpfr_set_ui(two.get(), 2, MPFR_RNDN);
    mpfr_rootn_ui(x.get(), two.get(), root, MPFR_RNDN);
    mpfr_add_si(x.get(), x.get(), shift, MPFR_RNDN);
    mpfr_log(x.get(), x.get(), MPFR_RNDN);
    mpfr_mul_ui(x.get(), x.get(), scale, MPFR_RNDN);
    return x;
}

// Largest distance from the oracle to a point of the enclosure.
bool within(const Interval& x, const BigFloat& oracle, long bits) {
    BigFloat d(oracle.precision()), e(oracle.precision());
    mpfr_sub(d.get(), x.lo().get(), oracle.get(), MPFR_RNDU);
    mpfr_abs(d.get(), d.get(), MPFR_RNDU);
    mpfr_sub(e.get(), x.hi().get(), oracle.get(), MPFR_RNDU);
    mpfr_abs(e.get(), e.get(), MPFR_RNDU);
    if (mpfr_cmp(e.get(), d.get()) > 0) mpfr_swap(d.get(), e.get());
    return mpfr_cmp(d.get(), pow2(-bits, 64).get()) <= 0;
}

FieldElement evaluate(const RationalPoly& p, const FieldElement& x) {
    const NumberField& k = x.field();
    FieldElement r = k.zero();
    auto c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) r = r * x + k.from_rational(c[i]);
    return r;
}

FieldElement unit_word(const OTDatum& d, std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> e(-bound, bound);
    FieldElement u = d.field().one();
    for (const auto& g : d.generators()) u = u * g.pow(e(rng));
    return u;
}

// --------------------------------------------------------------- criteria

Outcome signatures() {
    Outcome o;
    o.require(signature(cubic()) == Signature{1, 1}, "signature(X^3 - 2) != (1, 1)");
    o.require(signature(sextic()) == Signature{2, 2}, "signature(X^6 - 2) != (2, 2)");
    return o;
}

Outcome example32_matrix() {
    Outcome o;
    OTDatum d = ot6_datum();
    const AdmissibilityEvidence& ev = d.admissibility();
    o.require(ev.precision_bits == 192, "expected a 192-bit verdict, got " + std::to_string(ev.precision_bits));
    const long bits = 400;
    // Rows: the real places 2^(1/6) and -2^(1/6); columns u1 = theta^2 - 1, u2 = (theta - 1)^2.
    const BigFloat u1 = oracle_log(3, -1, 1, bits);
    const BigFloat u2_pos = oracle_log(6, -1, 2, bits);
    const BigFloat u2_neg = oracle_log(6, 1, 2, bits);
    o.require(ev.matrix.size() == 2 && ev.matrix[0].size() == 2, "matrix is not 2 x 2");
    if (!o.ok) return o;
    o.require(within(ev.matrix[0][0], u1, 120), "entry (1,1) off the oracle");
    o.require(within(ev.matrix[1][0], u1, 120), "entry (2,1) off the oracle");
    o.require(within(ev.matrix[0][1], u2_pos, 120), "entry (1,2) off the oracle");
    o.require(within(ev.matrix[1][1], u2_neg, 120), "entry (2,2) off the oracle");
    // Frozen oracle values.
    o.require(near(ev.matrix[0][0].mid_double(), -1.3473773483293841, 1e-14), "u1 log");
    o.require(near(ev.matrix[0][1].mid_double(), -4.19990821343541018, 1e-14), "u2 log at 2^(1/6)");
    o.require(near(ev.matrix[1][1].mid_double(), 1.50515351677664198, 1e-14), "u2 log at -2^(1/6)");
    o.require(ev.certified_nonzero && ev.status == AdmissibilityStatus::Pass, "determinant not certified nonzero");
    o.require(ev.determinant.certainly_negative() && near(ev.determinant.mid_double(), -7.686870946108563, 1e-12),
              "determinant value");
    std::ostringstream s;
    s << "det " << ev.determinant.mid().to_string(12) << ", radius 2^" << ev.determinant.radius_exponent2();
    if (o.ok) o.detail = s.str();
    return o;
}

Outcome unit_validation() {
    Outcome o;
    NumberField k3 = cubic(), k6 = sextic();
    FieldElement t3 = k3.generator() - k3.one();
    FieldElement t6 = k6.generator() - k6.one();
    EmbeddingSet e3(k3), e6(k6);
    o.require(is_unit(t3).unit && is_unit(t3).in_order, "theta - 1 in X^3 - 2 is not a unit");
    o.require(is_totally_positive(e3, t3), "theta - 1 in X^3 - 2 not totally positive");
    o.require(is_unit(t6 * t6).unit && is_unit(t6 * t6).in_order, "(theta - 1)^2 in X^6 - 2 is not a unit");
    o.require(is_totally_positive(e6, t6 * t6), "(theta - 1)^2 in X^6 - 2 not totally positive");
    o.require(is_unit(t6).unit, "theta - 1 in X^6 - 2 is not a unit");
    o.require(!is_totally_positive(e6, t6), "theta - 1 in X^6 - 2 reported totally positive");
    return o;
}

Outcome certification() {
    Outcome o;
    cli::Options opt;
    cli::RunResult inoue = cli::run("certify", *cli::builtin_example("inoue"), opt);
    o.require(inoue.report["status"] == "CertifiedNoSubvarieties", "inoue: " + inoue.report["status"].dump());
    o.require(inoue.report["certificate"]["prime_degree_shortcut"] == true, "inoue: no prime-degree shortcut");
    o.require(inoue.exit_code == cli::kCertified, "inoue exit code");
    cli::RunResult ot6 = cli::run("certify", *cli::builtin_example("ot6"), opt);
    o.require(ot6.report["status"] == "HypothesisRefuted", "ot6: " + ot6.report["status"].dump());
    o.require(ot6.exit_code == cli::kRefuted, "ot6 exit code");
    if (!o.ok) return o;
    const auto& w = ot6.report["certificate"]["witness"];
    o.require(w["unit"] == "t^2 - 1", "ot6 witness is " + w["unit"].dump());
    o.require(w["degree"] == 3, "ot6 witness degree");
    o.require(w["minimal_polynomial"] == "X^3 + 3*X^2 + 3*X - 1", "ot6 witness minimal polynomial");
    // Exact cross-check of the minimal polynomial.
    NumberField k = sextic();
    FieldElement u1 = ot6_units(k)[0];
    RationalPoly mp = u1.minimal_polynomial();
    o.require(mp == (RationalPoly{-1, 3, 3, 1}) && evaluate(mp, u1).is_zero(), "minimal polynomial of u1");
    return o;
}

Outcome subfield_discovery() {
    Outcome o;
    OTDatum d = ot6_datum();
    auto subs = subfield_candidates(d.field(), 1);
    std::multiset<int> deg;
    for (const auto& s : subs) deg.insert(s.degree);
    o.require(deg.count(2) >= 1 && deg.count(3) >= 1, "subfields of degree 2 and 3 not both found");
    bool witnessed = false;
    for (const auto& s : subs) {
        if (s.degree != 3) continue;
        IntersectionResult r = unit_subfield_intersection(d, s, 10);
        witnessed = witnessed || (r.kind == IntersectionResult::Kind::Witness && r.witness->exponents == std::vector<long>{1, 0});
    }
    o.require(witnessed, "no witness (1, 0) for the cubic subfield");
    return o;
}

Outcome properties() {
    Outcome o;
    const int kCases = 1000;
    std::mt19937_64 rng(20261016);
    std::vector<NumberField> fields{cubic(), sextic(), cyclotomic8(), quintic(),
                                    NumberField(RationalPoly{1, 0, -10, 0, 1})};

    for (int i = 0; i < kCases && o.ok; ++i) {
        const NumberField& k = fields[i % fields.size()];
        FieldElement a = random_element(k, rng, 4), b = random_element(k, rng, 4);
        o.require((a * b).norm() == a.norm() * b.norm(), "norm multiplicativity, case " + std::to_string(i));
    }
    for (int i = 0; i < kCases && o.ok; ++i) {
        const NumberField& k = fields[i % fields.size()];
        FieldElement a = random_element(k, rng, 3);
        // Every third case lives in a smaller subalgebra.
        if (i % 3 == 0) a = evaluate(RationalPoly(std::vector<Rational>{a.coords()[0], a.coords()[1]}), k.generator().pow(2));
        RationalPoly mp = a.minimal_polynomial();
        o.require(k.degree() % mp.degree() == 0, "minpoly degree does not divide n, case " + std::to_string(i));
        o.require(evaluate(mp, a).is_zero(), "minpoly does not annihilate, case " + std::to_string(i));
    }
    for (int i = 0; i < kCases && o.ok; ++i) {
        const NumberField& k = fields[i % fields.size()];
        FieldElement a = random_nonzero(k, rng, 4);
        o.require((a * a.inverse()).is_one(), "alpha * alpha^-1 != 1, case " + std::to_string(i));
    }
    std::vector<OTDatum> data{inoue_datum(), ot6_datum(), make_datum(quintic(), {quintic().generator()})};
    const BigFloat tiny = pow2(-150, 64);
    for (int i = 0; i < kCases && o.ok; ++i) {
        const OTDatum& d = data[i % data.size()];
        FieldElement u = unit_word(d, rng, 3);
        auto logs = d.embeddings().log_vector(u);
        Interval sum = Interval::from_int(0, d.embeddings().precision_bits());
        for (const auto& x : logs) sum = sum + x;
        o.require(sum.contains_zero() && mpfr_cmp(sum.mag().get(), tiny.get()) <= 0,
                  "unit log-sum not within 2^-150, case " + std::to_string(i));
    }
    for (int i = 0; i < kCases && o.ok; ++i) {
        const OTDatum& d = data[i % data.size()];
        FieldElement xi = unit_word(d, rng, 2);
        FieldElement zeta = random_element(d.field(), rng, 5, false);
        GroupElement r = GroupElement::scaling(xi);
        GroupElement lhs = compose(compose(r, GroupElement::translation(zeta)), invert(r));
        o.require(lhs == GroupElement::translation(xi * zeta), "R T R^-1 != T, case " + std::to_string(i));
    }
    const OTDatum& ot6 = data[1];
    const FieldElement u1 = ot6.generators()[0];
    for (int i = 0; i < kCases && o.ok; ++i) {
        std::uniform_int_distribution<long> e(1, 3);
        long m = e(rng) * (rng() % 2 ? 1 : -1);
        FieldElement u = u1.pow(m);
        FieldElement a = random_element(ot6.field(), rng, 5, false);
        CandidateSubvariety w = flat_subspace_witness(ot6, u, a);
        o.require(w.identity_verified, "witness identity not verified, case " + std::to_string(i));
        auto su = ot6.embeddings().coordinates(u), sa = ot6.embeddings().coordinates(a);
        for (std::size_t j = 0; j < su.size(); ++j)
            o.require((su[j] * w.fixed_point[j] + sa[j]).overlaps(w.fixed_point[j]),
                      "c_j != sigma_j(u) c_j + sigma_j(a), case " + std::to_string(i));
    }
    if (o.ok) o.detail = "6 properties x " + std::to_string(kCases) + " cases";
    return o;
}

Outcome injectivity() {
    Outcome o;
    InjectivityReport r = example32_injectivity(inoue_datum(), ot6_datum(), 100, 3, 1);
    InjectivityReport again = example32_injectivity(inoue_datum(), ot6_datum(), 100, 3, 1);
    o.require(r.false_identifications == 0, std::to_string(r.false_identifications) + " false identifications");
    o.require(r.constructed_pairs > 0 && r.constructed_identified == r.constructed_pairs,
              "constructed pairs identified " + std::to_string(r.constructed_identified) + "/" +
                  std::to_string(r.constructed_pairs));
    o.require(r.mechanism_holds, "sigma_1(u) != sigma_2(u) for an identifying element");
    o.require(r.identity_pair_identified, "p = p' not identified");
    o.require(r.passed(), "report did not pass");
    o.require(again.false_identifications == r.false_identifications &&
                  again.equivalent_random_pairs == r.equivalent_random_pairs &&
                  again.constructed_identified == r.constructed_identified,
              "not reproducible for a fixed seed");
    if (o.ok)
        o.detail = std::to_string(r.samples) + " samples, " + std::to_string(r.words_large) + " words, seed 1";
    return o;
}

Outcome admissibility_invariance() {
    Outcome o;
    NumberField k = sextic();
    auto u = ot6_units(k);
    auto verdict = [&](std::vector<FieldElement> g) {
        DatumConfig cfg;
        cfg.convention = ot6_convention();
        DatumValidation v = make_ot_datum(k, std::move(g), cfg);
        return v.admissibility ? v.admissibility->status : AdmissibilityStatus::Fail;
    };
    const AdmissibilityStatus base = verdict(u);
    o.require(base == AdmissibilityStatus::Pass, "base datum does not pass");
    o.require(verdict({u[1], u[0]}) == base, "reordering changed the verdict");
    std::vector<FieldElement> g = u;
    std::mt19937_64 rng(8);
    for (int step = 0; step < 12 && o.ok; ++step) {
        const int kk = static_cast<int>(rng() % 2), m = 1 - kk;
        const long e = rng() % 2 ? 1 : -1;
        g[kk] = g[kk] * g[m].pow(e);
        o.require(verdict(g) == base, "row operation " + std::to_string(step) + " changed the verdict");
        o.require(verdict({g[1], g[0]}) == base, "reordering after step " + std::to_string(step));
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char* name;
        double budget_s;
        std::function<Outcome()> body;
    };
    const std::vector<Criterion> criteria{
        {1, "signatures of X^3 - 2 and X^6 - 2", 1, signatures},
        {2, "Example 3.2 admissibility matrix against the oracle", 5, example32_matrix},
        {3, "unit validation", 1, unit_validation},
        {4, "certify inoue and ot6 end to end", 10, certification},
        {5, "subfield discovery and unit intersection", 30, subfield_discovery},
        {6, "property suites", 60, properties},
        {7, "injectivity spot check", 60, injectivity},
        {8, "admissibility invariance", 10, admissibility_invariance},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.body();
        } catch (const std::exception& e) {
            out.ok = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (out.ok && secs > c.budget_s) {
            out.ok = false;
            out.detail = "over the " + std::to_string(c.budget_s) + " s budget";
        }
        failures += out.ok ? 0 : 1;
        std::printf("criterion %d: %s (%.3f s) %s%s%s\n", c.number, out.ok ? "PASS" : "FAIL", secs, c.name,
                    out.detail.empty() ? "" : ": ", out.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
