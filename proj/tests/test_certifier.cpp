#include <gtest/gtest.h>

#include <set>

#include "otcert/certifier.hpp"
#include "otcert/lattice.hpp"
#include "test_support.hpp"

using namespace otcert;
using namespace otcert::testing;

namespace {

OTDatum quintic_datum() {
    NumberField k = quintic();
    return make_datum(k, {k.generator()});
}

// Both generators primitive; u1 = v1 / v2 lies in the cubic subfield.
OTDatum mixed_datum() {
    NumberField k = sextic();
    auto u = ot6_units(k);
    return make_datum(k, {u[0] * u[1], u[1]}, ot6_convention());
}

// u2 and u1 * (1 + theta^3)^2: no nontrivial product lies in a proper subfield.
OTDatum generic_datum() {
    NumberField k = sextic();
    auto u = ot6_units(k);
    FieldElement eps = k.one() + k.generator().pow(3);
    return make_datum(k, {u[1], u[0] * eps * eps}, ot6_convention());
}

std::multiset<int> degrees(const std::vector<SubfieldCandidate>& c) {
    std::multiset<int> out;
    for (const auto& x : c) out.insert(x.degree);
    return out;
}

}  // namespace

TEST(Lattice, ReducesKnownBasis) {
    IntegerMatrix b{{1, 1, 1}, {-1, 0, 2}, {3, 5, 6}};
    IntegerMatrix r = lll_reduce(b);
    // Same lattice: determinant preserved up to sign, first vector short.
    RationalMatrix bq, rq;
    for (const auto& row : b) bq.emplace_back(row.begin(), row.end());
    for (const auto& row : r) rq.emplace_back(row.begin(), row.end());
    EXPECT_EQ(abs(determinant(bq)), abs(determinant(rq)));
    EXPECT_LE(squared_norm(r[0]), 2);
}

TEST(Lattice, FindsIntegerRelation) {
    // 3 * log 2 - log 8 = 0 among (log 2, log 8, log 3).
    std::vector<BigFloat> row;
    for (unsigned v : {2U, 8U, 3U}) {
        BigFloat x(200);
        mpfr_set_ui(x.get(), v, MPFR_RNDN);
        mpfr_log(x.get(), x.get(), MPFR_RNDN);
        row.push_back(std::move(x));
    }
    auto rel = integer_relation_candidates({row}, 3, 96);
    ASSERT_FALSE(rel.empty());
    std::vector<long> r = rel[0];
    if (r[0] < 0)
        for (auto& x : r) x = -x;
    EXPECT_EQ(r, (std::vector<long>{3, -1, 0}));
}

TEST(PrimeShortcut, FiresExactlyForPrimeDegree) {
    EXPECT_TRUE(prime_degree_shortcut(inoue_datum()).has_value());
    EXPECT_TRUE(prime_degree_shortcut(quintic_datum()).has_value());
    EXPECT_FALSE(prime_degree_shortcut(ot6_datum()).has_value());
    for (long n = 0; n < 50; ++n) {
        bool naive = n >= 2;
        for (long d = 2; d < n; ++d) naive = naive && (n % d != 0);
        EXPECT_EQ(is_prime(n), naive) << n;
    }
}

TEST(GeneratorPrimitivity, Example32) {
    auto reports = generator_primitivity(ot6_datum());
    ASSERT_EQ(reports.size(), 2u);
    EXPECT_FALSE(reports[0].primitive);
    EXPECT_EQ(reports[0].minimal_polynomial, (RationalPoly{-1, 3, 3, 1}));
    EXPECT_TRUE(reports[1].primitive);
    for (const auto& r : generator_primitivity(quintic_datum())) EXPECT_TRUE(r.primitive);
}

TEST(SubfieldCandidates, Examples) {
    auto six = subfield_candidates(sextic(), 1);
    EXPECT_EQ(degrees(six), (std::multiset<int>{2, 3}));
    NumberField k = sextic();
    FieldElement t = k.generator();
    for (const auto& c : six) {
        if (c.degree == 3) EXPECT_TRUE(c.contains(t * t));
        if (c.degree == 2) EXPECT_TRUE(c.contains(t * t * t));
    }
    EXPECT_TRUE(subfield_candidates(cubic(), 3).empty());
    EXPECT_TRUE(subfield_candidates(quintic(), 2).empty());
    EXPECT_EQ(degrees(subfield_candidates(cyclotomic8(), 2)), (std::multiset<int>{2, 2, 2}));
    // Height 0 still sees the powers of theta.
    EXPECT_EQ(degrees(subfield_candidates(sextic(), 0)), (std::multiset<int>{2, 3}));
}

TEST(SubfieldCandidates, HintsAreUsed) {
    NumberField k = cyclotomic8();
    FieldElement t = k.generator();
    auto c = subfield_candidates(k, 0, {t + t * t * t});
    EXPECT_EQ(c.size(), 2u);
    EXPECT_EQ(c[0].origin, "hint");
}

TEST(UnitSubfieldIntersection, Example32CubicSubfield) {
    OTDatum d = ot6_datum();
    for (const auto& sf : subfield_candidates(d.field(), 1)) {
        IntersectionResult r = unit_subfield_intersection(d, sf, 10);
        if (sf.degree == 3) {
            ASSERT_EQ(r.kind, IntersectionResult::Kind::Witness);
            EXPECT_EQ(r.witness->exponents, (std::vector<long>{1, 0}));
            EXPECT_EQ(r.witness->minimal_polynomial.degree(), 3);
        } else {
            EXPECT_EQ(r.kind, IntersectionResult::Kind::TrivialUpToBound);
        }
    }
}

TEST(UnitSubfieldIntersection, LatticeFindsHiddenRelation) {
    OTDatum d = mixed_datum();
    for (const auto& r : generator_primitivity(d)) EXPECT_TRUE(r.primitive);
    for (const auto& sf : subfield_candidates(d.field(), 1)) {
        if (sf.degree != 3) continue;
        IntersectionResult r = unit_subfield_intersection(d, sf, 0);
        ASSERT_EQ(r.kind, IntersectionResult::Kind::Witness);
        EXPECT_TRUE(r.lattice_used);
        EXPECT_EQ(r.witness->exponents, (std::vector<long>{1, -1}));
        EXPECT_EQ(r.witness->unit, ot6_units(d.field())[0]);
    }
}

TEST(Certify, PaperExamples) {
    Certificate inoue = certify(inoue_datum());
    EXPECT_EQ(inoue.status, CertificateStatus::CertifiedNoSubvarieties);
    EXPECT_TRUE(inoue.prime_degree_shortcut);

    Certificate ot6 = certify(ot6_datum());
    ASSERT_EQ(ot6.status, CertificateStatus::HypothesisRefuted);
    ASSERT_TRUE(ot6.witness.has_value());
    EXPECT_EQ(ot6.witness->unit, ot6_units(sextic())[0]);
    EXPECT_EQ(ot6.witness->minimal_polynomial.degree(), 3);
    EXPECT_EQ(ot6.simple_type, SimpleType::Simple);

    EXPECT_EQ(certify(quintic_datum()).status, CertificateStatus::CertifiedNoSubvarieties);
}

TEST(Certify, HeuristicWhenNothingFound) {
    OTDatum d = generic_datum();
    for (const auto& r : generator_primitivity(d)) EXPECT_TRUE(r.primitive);
    CertifierConfig cfg;
    cfg.height_bound = 1;
    Certificate c = certify(d, cfg);
    EXPECT_EQ(c.status, CertificateStatus::HeuristicallyCertified);
    EXPECT_EQ(c.intersections.size(), 2u);
    for (const auto& r : c.intersections) EXPECT_EQ(r.kind, IntersectionResult::Kind::TrivialUpToBound);
    EXPECT_FALSE(c.notes.empty());
}

TEST(Certify, MonotoneInExponentBound) {
    OTDatum d = mixed_datum();
    bool found = false;
    for (long b = 0; b <= 4; ++b) {
        CertifierConfig cfg;
        cfg.exponent_bound = b;
        cfg.height_bound = 1;
        const bool refuted = certify(d, cfg).status == CertificateStatus::HypothesisRefuted;
        if (found) EXPECT_TRUE(refuted) << b;
        found = found || refuted;
    }
    EXPECT_TRUE(found);
}

TEST(Certify, SimpleTypeFromGeneratedSubfield) {
    // u2 alone generates K, so no proper subfield contains U.
    Certificate c = certify(ot6_datum());
    EXPECT_EQ(c.generated_subfield_degree, 6);
    EXPECT_EQ(subalgebra_degree({ot6_units(sextic())[0]}), 3);
}

TEST(CertifiedClusters, AcceptsOnlyBalancedPartitions) {
    auto pt = [](double x) { return ComplexInterval::real(Interval::from_rational(Rational(x), 64)); };
    auto ok = certified_clusters({pt(1), pt(2), pt(1), pt(2)}, 2);
    ASSERT_TRUE(ok.has_value());
    EXPECT_EQ(*ok, (std::vector<std::vector<int>>{{0, 2}, {1, 3}}));
    EXPECT_FALSE(certified_clusters({pt(1), pt(1), pt(1), pt(2)}, 2).has_value());
    EXPECT_FALSE(certified_clusters({pt(1), pt(2), pt(3)}, 2).has_value());
}

TEST(FlatSubspaceWitness, Example32) {
    OTDatum d = ot6_datum();
    const NumberField& k = d.field();
    FieldElement u1 = d.generators()[0];
    CandidateSubvariety w = flat_subspace_witness(d, u1, k.zero());
    EXPECT_EQ(w.coincidence_partition, (std::vector<std::vector<int>>{{0, 1}, {2, 3}}));
    EXPECT_EQ(w.free_coordinates, (std::vector<int>{0, 2}));
    EXPECT_EQ(w.fixed_coordinates, (std::vector<int>{1, 3}));
    EXPECT_TRUE(w.identity_verified);
    for (const auto& c : w.fixed_point) EXPECT_TRUE(c.contains_zero());

    for (long e : {2L, 3L, -1L}) {
        CandidateSubvariety p = flat_subspace_witness(d, u1.pow(e), k.zero());
        EXPECT_EQ(p.coincidence_partition, w.coincidence_partition) << e;
    }
    CandidateSubvariety shifted = flat_subspace_witness(d, u1, k.generator() * k.generator());
    EXPECT_TRUE(shifted.identity_verified);
    EXPECT_FALSE(shifted.fixed_point[0].contains_zero());

    EXPECT_THROW(flat_subspace_witness(d, d.generators()[1], k.zero()), std::invalid_argument);
    EXPECT_THROW(flat_subspace_witness(d, k.one(), k.zero()), NoFixedPoint);
}

TEST(FlatSubspaceWitness, StandardConventionSplitsComplexPlaces) {
    NumberField k = sextic();
    OTDatum d = make_datum(k, ot6_units(k));
    CandidateSubvariety w = flat_subspace_witness(d, d.generators()[0], k.zero());
    // With the default orientation tau_1(u1) and tau_2(u1) are conjugate, not equal.
    EXPECT_EQ(w.coincidence_partition, (std::vector<std::vector<int>>{{0, 1}, {2}, {3}}));
}

TEST(FlatSubspaceWitness, FixedPointIdentityProperty) {
    OTDatum d = ot6_datum();
    std::mt19937_64 rng(77);
    FieldElement u1 = d.generators()[0];
    for (int i = 0; i < 25; ++i) {
        FieldElement a = random_element(d.field(), rng, 5, false);
        long e = 1 + static_cast<long>(rng() % 3);
        CandidateSubvariety w = flat_subspace_witness(d, u1.pow(e), a);
        EXPECT_TRUE(w.identity_verified);
    }
}
