#include <gtest/gtest.h>

#include <cmath>

#include "otcert/action.hpp"
#include "test_support.hpp"

using namespace otcert;
using namespace otcert::testing;

namespace {

ComplexInterval cpt(double re, double im) {
    return {Interval::point(BigFloat(192, re)), Interval::point(BigFloat(192, im))};
}

GroupElement random_group_element(const OTDatum& d, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> e(-2, 2);
    FieldElement u = d.field().one();
    for (const auto& g : d.generators()) u *= g.pow(e(rng));
    return {u, random_element(d.field(), rng, 4, false)};
}

}  // namespace

TEST(GroupLaw, AssociativeWithIdentityAndInverse) {
    OTDatum d = ot6_datum();
    std::mt19937_64 rng(1);
    GroupElement id = GroupElement::identity(d.field());
    for (int i = 0; i < 40; ++i) {
        GroupElement g = random_group_element(d, rng), h = random_group_element(d, rng),
                     k = random_group_element(d, rng);
        EXPECT_EQ(compose(compose(g, h), k), compose(g, compose(h, k)));
        EXPECT_EQ(compose(g, id), g);
        EXPECT_EQ(compose(id, g), g);
        EXPECT_EQ(compose(g, invert(g)), id);
        EXPECT_EQ(compose(invert(g), g), id);
    }
}

TEST(GroupLaw, ConjugationScalesTranslations) {
    OTDatum d = ot6_datum();
    std::mt19937_64 rng(2);
    for (int i = 0; i < 40; ++i) {
        GroupElement r = GroupElement::scaling(random_group_element(d, rng).u);
        FieldElement zeta = random_element(d.field(), rng, 4, false);
        GroupElement lhs = compose(compose(r, GroupElement::translation(zeta)), invert(r));
        EXPECT_EQ(lhs, GroupElement::translation(r.u * zeta));
        FieldElement xi = random_element(d.field(), rng, 4, false);
        EXPECT_EQ(compose(GroupElement::translation(zeta), GroupElement::translation(xi)),
                  GroupElement::translation(zeta + xi));
    }
}

TEST(Maps, TranslationExamples) {
    OTDatum d = inoue_datum();
    const auto& e = d.embeddings();
    AffineMap zero = translation_map(e, d.field().zero());
    Point p{cpt(0.5, 1.5), cpt(-1, 2)};
    Point q = apply_map(zero, p);
    for (std::size_t j = 0; j < p.size(); ++j) EXPECT_TRUE(q[j].overlaps(p[j]));

    AffineMap one = translation_map(e, d.field().one());
    for (const auto& t : one.translation) EXPECT_NEAR(t.re.mid_double(), 1.0, 1e-30);

    AffineMap theta = translation_map(e, d.field().generator());
    const double r = std::cbrt(2.0);
    EXPECT_NEAR(theta.translation[0].re.mid_double(), r, 1e-15);
    EXPECT_NEAR(theta.translation[1].re.mid_double(), r * std::cos(2 * M_PI / 3), 1e-15);
    EXPECT_NEAR(theta.translation[1].im.mid_double(), r * std::sin(2 * M_PI / 3), 1e-15);
    EXPECT_THROW(translation_map(e, d.field().generator() * Rational(1, 2)), std::invalid_argument);
}

TEST(Maps, UnitExamples) {
    OTDatum d = ot6_datum();
    const auto& e = d.embeddings();
    AffineMap id = unit_map(e, d.field().one());
    for (const auto& x : id.diagonal) EXPECT_NEAR(x.re.mid_double(), 1.0, 1e-30);
    AffineMap r2 = unit_map(e, d.generators()[1]);
    EXPECT_NEAR(r2.diagonal[0].re.mid_double(), 0.014996953276127202, 1e-16);
    EXPECT_NEAR(r2.diagonal[1].re.mid_double(), 4.504845146513619, 1e-14);
    for (const auto& x : r2.translation) EXPECT_TRUE(x.contains_zero());
    EXPECT_THROW(unit_map(e, d.field().generator() - d.field().one()), std::invalid_argument);
    EXPECT_THROW(unit_map(e, d.field().from_rational(2)), std::invalid_argument);
}

TEST(Apply, PreservesUpperHalfPlanes) {
    OTDatum d = ot6_datum();
    const auto& e = d.embeddings();
    Point p{cpt(0.3, 0.7), cpt(-0.2, 1.1), cpt(1, 1), cpt(-2, 0.5)};
    AffineMap r = unit_map(e, d.generators()[1]);
    Point q = apply_map(r, p);
    for (int k = 0; k < 2; ++k)
        EXPECT_NEAR(q[k].im.mid_double(), r.diagonal[k].re.mid_double() * p[k].im.mid_double(), 1e-15);
    AffineMap t = translation_map(e, d.field().generator());
    Point s = apply_map(t, p);
    for (int k = 0; k < 2; ++k) EXPECT_TRUE(s[k].im.overlaps(p[k].im));
    Point bad{cpt(0, -1), cpt(0, 1), cpt(0, 0), cpt(0, 0)};
    EXPECT_THROW(apply_map(t, bad), DomainError);
}

TEST(Apply, CompositionMatchesSequentialApplication) {
    OTDatum d = ot6_datum();
    std::mt19937_64 rng(4);
    Point p{cpt(0.3, 0.7), cpt(-0.2, 1.1), cpt(1, 1), cpt(-2, 0.5)};
    for (int i = 0; i < 30; ++i) {
        GroupElement g = random_group_element(d, rng), h = random_group_element(d, rng);
        Point lhs = apply_map(affine_map(d.embeddings(), compose(g, h)), p);
        Point rhs = apply_map(affine_map(d.embeddings(), g), apply_map(affine_map(d.embeddings(), h), p));
        for (std::size_t j = 0; j < p.size(); ++j) EXPECT_TRUE(lhs[j].overlaps(rhs[j]));
    }
}

TEST(Orbit, Examples) {
    OTDatum d = inoue_datum();
    Point p{cpt(0, 1), cpt(0, 0)};
    OrbitSample zero = orbit_sample(d, p, {0, 1000});
    EXPECT_EQ(zero.points.size(), 1u);
    EXPECT_FALSE(zero.min_distance.has_value());

    OrbitSample two = orbit_sample(d, p, {2, 1000});
    // 8 generators: 1 + 8 + 8 * 7 reduced words, commuting translations collapse.
    EXPECT_EQ(static_cast<long>(two.points.size()) + two.duplicate_words, 65);
    ASSERT_TRUE(two.min_distance.has_value());
    EXPECT_GT(*two.min_distance, 0.0);
    EXPECT_GT(two.duplicate_words, 0);
    EXPECT_THROW(orbit_sample(d, p, {6, 1000}), std::length_error);
}

TEST(Injectivity, SmallRun) {
    InjectivityReport r = example32_injectivity(inoue_datum(), ot6_datum(), 10, 2, 42);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.false_identifications, 0);
    EXPECT_EQ(r.constructed_identified, 10);
    EXPECT_TRUE(r.identity_pair_identified);
    InjectivityReport again = example32_injectivity(inoue_datum(), ot6_datum(), 10, 2, 42);
    EXPECT_EQ(again.equivalent_random_pairs, r.equivalent_random_pairs);
}
