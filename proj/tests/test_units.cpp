#include <gtest/gtest.h>

#include "otcert/units.hpp"
#include "test_support.hpp"

using namespace otcert;
using namespace otcert::testing;

namespace {

struct Example32 {
    NumberField k = sextic();
    FieldElement u1 = k.generator() * k.generator() - k.one();
    FieldElement u2 = (k.generator() - k.one()) * (k.generator() - k.one());
    PlaceConvention convention{{1, 0}, {false, true}};
    EmbeddingSet embeddings{k, 192, convention};
};

AdmissibilityStatus verdict(const Example32& ex, std::vector<FieldElement> gens) {
    return admissibility_check(ex.embeddings, gens).status;
}

}  // namespace

TEST(IsUnit, Examples) {
    NumberField k3 = cubic(), k6 = sextic();
    UnitEvidence a = is_unit(k3.generator() - k3.one());
    EXPECT_TRUE(a.unit);
    EXPECT_TRUE(a.in_order);
    EXPECT_EQ(a.norm, 1);
    EXPECT_FALSE(is_unit(k3.from_rational(2)).unit);
    EXPECT_EQ(is_unit(k3.from_rational(2)).norm, 8);
    FieldElement t = k6.generator();
    EXPECT_TRUE(is_unit((t - k6.one()) * (t - k6.one())).unit);
    EXPECT_FALSE(is_unit(t * Rational(1, 2)).unit);
    EXPECT_FALSE(is_unit(k6.zero()).unit);
}

TEST(TotalPositivity, Examples) {
    NumberField k3 = cubic(), k6 = sextic();
    EXPECT_TRUE(is_totally_positive(EmbeddingSet(k3), k3.generator() - k3.one()));
    EmbeddingSet e6(k6);
    FieldElement w = k6.generator() - k6.one();
    EXPECT_FALSE(is_totally_positive(e6, w));
    EXPECT_TRUE(is_totally_positive(e6, w * w));
}

TEST(Admissibility, Example32Matrix) {
    Example32 ex;
    AdmissibilityEvidence ev = admissibility_check(ex.embeddings, std::vector<FieldElement>{ex.u1, ex.u2});
    EXPECT_EQ(ev.status, AdmissibilityStatus::Pass);
    EXPECT_TRUE(ev.certified_nonzero);
    ASSERT_EQ(ev.matrix.size(), 2u);
    // matrix[i][k] = log sigma_i(u_k).
    EXPECT_NEAR(ev.matrix[0][0].mid_double(), -1.3473773483293841, 1e-14);
    EXPECT_NEAR(ev.matrix[1][0].mid_double(), -1.3473773483293841, 1e-14);
    EXPECT_NEAR(ev.matrix[0][1].mid_double(), -4.1999082134354102, 1e-14);
    EXPECT_NEAR(ev.matrix[1][1].mid_double(), 1.5051535167766420, 1e-14);
    // log(2^(1/3) - 1) * (1.50515... + 4.19990...)
    EXPECT_NEAR(ev.determinant.mid_double(), -7.686870946108563, 1e-12);
    EXPECT_GT(ev.condition_number, 1.0);
}

TEST(Admissibility, InoueAndSingular) {
    NumberField k3 = cubic();
    EmbeddingSet e3(k3);
    FieldElement u = k3.generator() - k3.one();
    AdmissibilityEvidence ev = admissibility_check(e3, std::vector<FieldElement>{u});
    EXPECT_EQ(ev.status, AdmissibilityStatus::Pass);
    EXPECT_NEAR(ev.determinant.mid_double(), -1.3473773483293841, 1e-14);

    Example32 ex;
    EXPECT_EQ(verdict(ex, {ex.u2, ex.u2}), AdmissibilityStatus::Fail);
    EXPECT_EQ(verdict(ex, {ex.u1, ex.u1 * ex.u1}), AdmissibilityStatus::Fail);
    EXPECT_THROW(admissibility_check(ex.embeddings, std::vector<FieldElement>{ex.u1}), std::invalid_argument);
}

TEST(Admissibility, InvarianceUnderRowOperations) {
    Example32 ex;
    EXPECT_EQ(verdict(ex, {ex.u2, ex.u1}), AdmissibilityStatus::Pass);
    EXPECT_EQ(verdict(ex, {ex.u1.inverse(), ex.u2}), AdmissibilityStatus::Pass);
    EXPECT_EQ(verdict(ex, {ex.u1 * ex.u2, ex.u2}), AdmissibilityStatus::Pass);
    EXPECT_EQ(verdict(ex, {ex.u1, ex.u2 * ex.u1.pow(3)}), AdmissibilityStatus::Pass);
    EXPECT_EQ(verdict(ex, {ex.u1, ex.u2.inverse() * ex.u1}), AdmissibilityStatus::Pass);
}

TEST(IntervalDeterminant, MatchesExactForRationalMatrices) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-6, 6);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
        RationalMatrix exact(n, RationalVector(n));
        std::vector<std::vector<Interval>> m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                exact[i][j] = c(rng);
                m[i].push_back(Interval::from_rational(exact[i][j], 128));
            }
        EXPECT_TRUE(interval_determinant(m).contains(Interval::from_rational(determinant(exact), 128)));
    }
}

TEST(MakeDatum, PaperExamples) {
    NumberField k3 = cubic();
    DatumValidation inoue = make_ot_datum(k3, {k3.generator() - k3.one()});
    ASSERT_TRUE(inoue.ok()) << (inoue.issues.empty() ? "" : inoue.issues[0].message);
    EXPECT_EQ(inoue.datum->signature(), (Signature{1, 1}));

    Example32 ex;
    DatumConfig cfg;
    cfg.convention = ex.convention;
    DatumValidation ot6 = make_ot_datum(ex.k, {ex.u1, ex.u2}, cfg);
    ASSERT_TRUE(ot6.ok());
    EXPECT_EQ(ot6.datum->signature(), (Signature{2, 2}));
    EXPECT_EQ(ot6.datum->admissibility().status, AdmissibilityStatus::Pass);
    // Same verdict with the default place order.
    EXPECT_TRUE(make_ot_datum(ex.k, {ex.u1, ex.u2}).ok());
}

TEST(MakeDatum, Rejections) {
    NumberField real_quadratic(RationalPoly{-3, 0, 1});
    FieldElement fu = real_quadratic.element({2, 1});
    DatumValidation r = make_ot_datum(real_quadratic, {fu});
    EXPECT_FALSE(r.ok());
    ASSERT_FALSE(r.issues.empty());
    EXPECT_EQ(r.issues[0].kind, DatumIssueKind::NoComplexPlace);

    NumberField gauss(RationalPoly{1, 0, 1});
    EXPECT_EQ(make_ot_datum(gauss, {}).issues.at(0).kind, DatumIssueKind::NoRealPlace);

    NumberField k6 = sextic();
    FieldElement w = k6.generator() - k6.one();
    auto issues = make_ot_datum(k6, {w, k6.from_rational(2)}).issues;
    auto has = [&](DatumIssueKind kind, int gen) {
        for (const auto& i : issues)
            if (i.kind == kind && i.generator == gen) return true;
        return false;
    };
    EXPECT_TRUE(has(DatumIssueKind::NotTotallyPositive, 0));
    EXPECT_TRUE(has(DatumIssueKind::NotUnit, 1));

    EXPECT_EQ(make_ot_datum(k6, {w * w}).issues.at(0).kind, DatumIssueKind::WrongGeneratorCount);
    NumberField k3 = cubic();
    EXPECT_EQ(make_ot_datum(k3, {k3.one()}).issues.at(0).kind, DatumIssueKind::Torsion);
    Example32 ex;
    EXPECT_EQ(make_ot_datum(ex.k, {ex.u2, ex.u2}).issues.at(0).kind, DatumIssueKind::AdmissibilityFailed);
}

TEST(UnitProperties, AcceptedUnitsHaveZeroLogSum) {
    Example32 ex;
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> e(-3, 3);
    for (int i = 0; i < 40; ++i) {
        FieldElement u = ex.u1.pow(e(rng)) * ex.u2.pow(e(rng));
        ASSERT_TRUE(is_unit(u).unit);
        EXPECT_TRUE(is_totally_positive(ex.embeddings, u));
        auto logs = ex.embeddings.log_vector(u);
        Interval sum = logs[0];
        for (std::size_t j = 1; j < logs.size(); ++j) sum = sum + logs[j];
        EXPECT_TRUE(sum.contains_zero());
    }
}
