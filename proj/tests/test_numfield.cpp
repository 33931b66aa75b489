#include <gtest/gtest.h>

#include "otcert/numfield.hpp"
#include "test_support.hpp"

using namespace otcert;
using namespace otcert::testing;

TEST(NumberField, RejectsBadPolynomials) {
    EXPECT_THROW(NumberField(RationalPoly{-1, 0, 1}), InvalidField);
    EXPECT_THROW(NumberField(RationalPoly{-2, 0, 2}), InvalidField);
    EXPECT_THROW(NumberField(RationalPoly{-2, 1}), InvalidField);
    EXPECT_EQ(cubic().degree(), 3);
}

TEST(FieldArith, ReductionModF) {
    NumberField k = cubic();
    FieldElement t = k.generator();
    EXPECT_EQ(t * t * t, k.from_rational(2));
    EXPECT_EQ((t - k.one()) * (t * t + t + k.one()), k.one());
    FieldElement a = k.element({3, -1, 4});
    EXPECT_EQ(a + k.zero(), a);
    EXPECT_THROW(a + sextic().one(), FieldMismatch);
}

TEST(FieldArith, Inverse) {
    NumberField k = cubic();
    FieldElement t = k.generator();
    EXPECT_EQ(t.inverse(), k.element({Rational(0), Rational(0), Rational(1, 2)}));
    EXPECT_EQ(k.one().inverse(), k.one());
    EXPECT_EQ((t - k.one()).inverse(), k.element({1, 1, 1}));
    EXPECT_THROW(k.zero().inverse(), std::domain_error);
    EXPECT_EQ(t.pow(-3), k.from_rational(Rational(1, 2)));
}

TEST(FieldArith, NormAndTrace) {
    NumberField k3 = cubic(), k6 = sextic();
    EXPECT_EQ(k3.generator().norm(), 2);
    EXPECT_EQ((k3.generator() - k3.one()).norm(), 1);
    EXPECT_EQ((k6.generator() - k6.one()).norm(), -1);
    EXPECT_EQ(k3.generator().trace(), 0);
    EXPECT_EQ(k3.from_rational(5).trace(), 15);
}

TEST(MinimalPolynomial, Examples) {
    NumberField k6 = sextic();
    FieldElement t = k6.generator();
    EXPECT_EQ(t.minimal_polynomial(), k6.polynomial());
    EXPECT_EQ((t * t).minimal_polynomial(), (RationalPoly{-2, 0, 0, 1}));
    EXPECT_EQ(k6.from_rational(7).minimal_polynomial(), (RationalPoly{-7, 1}));
    EXPECT_TRUE(t.is_primitive());
    EXPECT_FALSE((t * t).is_primitive());
    FieldElement u2 = (t - k6.one()) * (t - k6.one());
    EXPECT_TRUE(u2.is_primitive());
}

TEST(MinimalPolynomial, Integrality) {
    NumberField k3 = cubic();
    FieldElement t = k3.generator();
    EXPECT_FALSE((t * Rational(1, 2)).is_algebraic_integer());
    EXPECT_EQ((t * Rational(1, 2)).minimal_polynomial(), RationalPoly({Rational(-1, 4), 0, 0, 1}));
    EXPECT_TRUE((t - k3.one()).is_algebraic_integer());
    EXPECT_EQ((t - k3.one()).minimal_polynomial(), (RationalPoly{-1, 3, 3, 1}));
    EXPECT_TRUE(k3.one().is_algebraic_integer());
}

TEST(Subalgebra, Degrees) {
    NumberField k6 = sextic();
    FieldElement t = k6.generator();
    EXPECT_EQ(subalgebra_degree({t}), 6);
    EXPECT_EQ(subalgebra_degree({t * t}), 3);
    EXPECT_EQ(subalgebra_degree({t * t, t * t * t}), 6);
    EXPECT_EQ(subalgebra_degree({t * t * t}), 2);
    EXPECT_EQ(subalgebra_degree({k6.from_rational(3)}), 1);
}

TEST(NumberFieldProperties, NormTraceInverseMinpoly) {
    std::mt19937_64 rng(2024);
    const std::vector<NumberField> fields{cubic(), sextic(), cyclotomic8(), quintic()};
    for (int i = 0; i < 400; ++i) {
        const NumberField& k = fields[static_cast<std::size_t>(i) % fields.size()];
        FieldElement a = random_nonzero(k, rng, 4), b = random_nonzero(k, rng, 4);
        EXPECT_EQ((a * b).norm(), a.norm() * b.norm());
        EXPECT_EQ((a + b).trace(), a.trace() + b.trace());
        EXPECT_TRUE((a * a.inverse()).is_one());
        RationalPoly mp = a.minimal_polynomial();
        EXPECT_EQ(k.degree() % mp.degree(), 0);
        // Evaluate mp at a inside K.
        FieldElement acc = k.zero();
        for (int d = mp.degree(); d >= 0; --d) acc = acc * a + k.from_rational(mp.coeff(static_cast<std::size_t>(d)));
        EXPECT_TRUE(acc.is_zero());
        EXPECT_EQ(subalgebra_degree({a}), mp.degree());
    }
}
