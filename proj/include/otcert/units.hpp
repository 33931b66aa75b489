#ifndef OTCERT_UNITS_HPP
#define OTCERT_UNITS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "otcert/embeddings.hpp"

namespace otcert {

struct UnitEvidence {
    bool unit = false;
    bool algebraic_integer = false;
    Rational norm;
    bool inverse_integral = false;
    /// Both the element and its inverse have integer power-basis coordinates,
    /// i.e. it is a unit of the order Z[theta] itself.
    bool in_order = false;
    std::string reason;
};

/// Unit test: algebraic integer, |norm| = 1 and an integral inverse.
UnitEvidence is_unit(const FieldElement& alpha);

/// sign_real(u, i) == +1 for every real place.
bool is_totally_positive(const EmbeddingSet& embeddings, const FieldElement& u);

enum class AdmissibilityStatus { Pass, Fail, Indeterminate };
const char* to_string(AdmissibilityStatus s);

struct AdmissibilityConfig {
    long precision_bits = kDefaultPrecisionBits;
    /// Precision doubles up to this cap while the verdict is Indeterminate.
    long max_precision_bits = 1024;
    /// A determinant enclosure that contains zero and has radius at most this
    /// is reported as singular (Fail); a wider one is Indeterminate.
    double tolerance = 1e-30;
};

struct AdmissibilityEvidence {
    AdmissibilityStatus status = AdmissibilityStatus::Indeterminate;
    /// matrix[i][k] = log sigma_i(u_k), i over real places, k over generators.
    std::vector<std::vector<Interval>> matrix;
    Interval determinant;
    bool certified_nonzero = false;
    /// Frobenius condition number of the midpoint matrix; +inf when singular.
    double condition_number = 0;
    long precision_bits = 0;
    double tolerance = 0;
    std::string detail;
};

/// Rank test on the real-place block of the logarithmic embedding.
/// Requires generators.size() == s.
AdmissibilityEvidence admissibility_check(const EmbeddingSet& embeddings, std::span<const FieldElement> generators,
                                          const AdmissibilityConfig& config = {});

/// Interval determinant by expansion over column subsets (exact enclosure,
/// no pivot division).
Interval interval_determinant(const std::vector<std::vector<Interval>>& m);

enum class DatumIssueKind {
    NoRealPlace,
    NoComplexPlace,
    WrongGeneratorCount,
    NotUnit,
    NotInOrder,
    Torsion,
    NotTotallyPositive,
    AdmissibilityFailed,
    AdmissibilityIndeterminate,
};
const char* to_string(DatumIssueKind k);

struct DatumIssue {
    DatumIssueKind kind;
    /// Generator index (0-based) or -1 when not generator-specific.
    int generator = -1;
    std::string message;
};

struct GeneratorReport {
    FieldElement element;
    UnitEvidence unit;
    /// Signs of the real embeddings (empty when not evaluated).
    std::vector<int> real_signs;
    bool totally_positive = false;
    int minimal_polynomial_degree = 0;
};

struct DatumConfig {
    long precision_bits = kDefaultPrecisionBits;
    long max_precision_bits = 1024;
    double tolerance = 1e-30;
    std::optional<PlaceConvention> convention;
};

struct DatumValidation;
DatumValidation make_ot_datum(const NumberField& field, std::vector<FieldElement> generators, const DatumConfig& config);

/// Validated OT data (K, U) with H = Z[theta]. Only make_ot_datum builds these.
class OTDatum {
   public:
    const NumberField& field() const noexcept { return embeddings_.field(); }
    Signature signature() const noexcept { return embeddings_.signature(); }
    const EmbeddingSet& embeddings() const noexcept { return embeddings_; }
    const std::vector<FieldElement>& generators() const noexcept { return generators_; }
    const AdmissibilityEvidence& admissibility() const noexcept { return admissibility_; }
    const std::vector<GeneratorReport>& generator_reports() const noexcept { return reports_; }
    static constexpr const char* order_descriptor() { return "Z[theta]"; }

   private:
    friend DatumValidation make_ot_datum(const NumberField&, std::vector<FieldElement>, const DatumConfig&);
    OTDatum(EmbeddingSet e, std::vector<FieldElement> g, AdmissibilityEvidence a, std::vector<GeneratorReport> r)
        : embeddings_(std::move(e)), generators_(std::move(g)), admissibility_(std::move(a)), reports_(std::move(r)) {}
    EmbeddingSet embeddings_;
    std::vector<FieldElement> generators_;
    AdmissibilityEvidence admissibility_;
    std::vector<GeneratorReport> reports_;
};

struct DatumValidation {
    std::optional<OTDatum> datum;
    Signature signature;
    std::vector<GeneratorReport> generators;
    std::optional<AdmissibilityEvidence> admissibility;
    /// Every failed condition, in pipeline order.
    std::vector<DatumIssue> issues;

    bool ok() const noexcept { return datum.has_value(); }
};

/// Runs the whole validation pipeline and never throws on invalid data.
DatumValidation make_ot_datum(const NumberField& field, std::vector<FieldElement> generators,
                              const DatumConfig& config = DatumConfig{});

}  // namespace otcert

#endif
