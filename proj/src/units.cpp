#include "otcert/units.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace otcert {

const char* to_string(AdmissibilityStatus s) {
    switch (s) {
        case AdmissibilityStatus::Pass: return "pass";
        case AdmissibilityStatus::Fail: return "fail";
        case AdmissibilityStatus::Indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

const char* to_string(DatumIssueKind k) {
    switch (k) {
        case DatumIssueKind::NoRealPlace: return "no_real_place";
        case DatumIssueKind::NoComplexPlace: return "no_complex_place";
        case DatumIssueKind::WrongGeneratorCount: return "wrong_generator_count";
        case DatumIssueKind::NotUnit: return "not_unit";
        case DatumIssueKind::NotInOrder: return "not_in_order";
        case DatumIssueKind::Torsion: return "torsion";
        case DatumIssueKind::NotTotallyPositive: return "not_totally_positive";
        case DatumIssueKind::AdmissibilityFailed: return "admissibility_failed";
        case DatumIssueKind::AdmissibilityIndeterminate: return "admissibility_indeterminate";
    }
    return "unknown";
}

UnitEvidence is_unit(const FieldElement& alpha) {
    UnitEvidence ev;
    if (alpha.is_zero()) {
        ev.reason = "zero";
        return ev;
    }
    ev.norm = alpha.norm();
    ev.algebraic_integer = alpha.is_algebraic_integer();
    if (!ev.algebraic_integer) {
        ev.reason = "not an algebraic integer";
        return ev;
    }
    if (abs(ev.norm) != 1) {
        ev.reason = "norm " + ev.norm.get_str() + " is not +-1";
        return ev;
    }
    FieldElement inv = alpha.inverse();
    ev.inverse_integral = inv.is_algebraic_integer();
    if (!ev.inverse_integral) {
        ev.reason = "inverse is not an algebraic integer";
        return ev;
    }
    ev.unit = true;
    ev.in_order = alpha.has_integer_coords() && inv.has_integer_coords();
    ev.reason = ev.in_order ? "unit of Z[theta]" : "unit, but not of Z[theta]";
    return ev;
}

bool is_totally_positive(const EmbeddingSet& embeddings, const FieldElement& u) {
    for (int i = 0; i < embeddings.signature().s; ++i)
        if (embeddings.sign_real(u, i) != 1) return false;
    return true;
}

Interval interval_determinant(const std::vector<std::vector<Interval>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return Interval::from_int(1, 64);
    const mpfr_prec_t prec = m[0][0].precision();
    // minors[mask] = determinant of rows 0..popcount(mask)-1 restricted to the
    // columns in mask.
    std::vector<Interval> minors(std::size_t{1} << n, Interval(prec));
    minors[0] = Interval::from_int(1, prec);
    for (std::size_t mask = 1; mask < minors.size(); ++mask) {
        const int row = __builtin_popcountll(mask) - 1;
        Interval acc(prec);
        for (std::size_t col = 0; col < n; ++col) {
            if (!(mask & (std::size_t{1} << col))) continue;
            const std::size_t rest = mask & ~(std::size_t{1} << col);
            // Sign from the position of col among the columns still in mask.
            const int above = __builtin_popcountll(rest & ~((std::size_t{1} << col) - 1));
            Interval term = m[static_cast<std::size_t>(row)][col] * minors[rest];
            acc = (above % 2 == 0) ? acc + term : acc - term;
        }
        minors[mask] = acc;
    }
    return minors.back();
}

namespace {

double frobenius_condition(const std::vector<std::vector<Interval>>& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<double>> a(n, std::vector<double>(2 * n, 0.0));
    double norm_a = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = m[i][j].mid_double();
            norm_a += a[i][j] * a[i][j];
        }
        a[i][n + i] = 1.0;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (a[piv][col] == 0.0) return std::numeric_limits<double>::infinity();
        std::swap(a[piv], a[col]);
        const double inv = 1.0 / a[col][col];
        for (auto& x : a[col]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double c = a[r][col];
            for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= c * a[col][j];
        }
    }
    double norm_inv = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) norm_inv += a[i][n + j] * a[i][n + j];
    return std::sqrt(norm_a) * std::sqrt(norm_inv);
}

}  // namespace

AdmissibilityEvidence admissibility_check(const EmbeddingSet& embeddings, std::span<const FieldElement> generators,
                                          const AdmissibilityConfig& config) {
    const int s = embeddings.signature().s;
    if (static_cast<int>(generators.size()) != s)
        throw std::invalid_argument("admissibility_check needs exactly s = " + std::to_string(s) + " generators");
    AdmissibilityEvidence ev;
    ev.tolerance = config.tolerance;
    EmbeddingSet emb = embeddings.precision_bits() == config.precision_bits ? embeddings
                                                                             : embeddings.at_precision(config.precision_bits);
    for (long prec = config.precision_bits;; prec *= 2) {
        if (prec != emb.precision_bits()) emb = emb.at_precision(prec);
        ev.precision_bits = prec;
        ev.matrix.assign(static_cast<std::size_t>(s), {});
        for (const auto& u : generators) {
            std::vector<Interval> logs = emb.log_vector(u);
            for (int i = 0; i < s; ++i) ev.matrix[static_cast<std::size_t>(i)].push_back(logs[static_cast<std::size_t>(i)]);
        }
        ev.determinant = interval_determinant(ev.matrix);
        ev.certified_nonzero = !ev.determinant.contains_zero();
        if (ev.certified_nonzero) {
            ev.status = AdmissibilityStatus::Pass;
            ev.detail = "determinant enclosure excludes zero";
            break;
        }
        if (ev.determinant.radius().to_double() <= config.tolerance) {
            ev.status = AdmissibilityStatus::Fail;
            ev.detail = "determinant enclosure contains zero with radius within tolerance (singular)";
            break;
        }
        if (prec * 2 > config.max_precision_bits) {
            ev.status = AdmissibilityStatus::Indeterminate;
            ev.detail = "determinant undecided at the precision cap";
            break;
        }
    }
    ev.condition_number = frobenius_condition(ev.matrix);
    return ev;
}

DatumValidation make_ot_datum(const NumberField& field, std::vector<FieldElement> generators, const DatumConfig& config) {
    DatumValidation out;
    EmbeddingSet emb(field, config.precision_bits);
    out.signature = emb.signature();
    const Signature sig = out.signature;
    if (config.convention) emb = emb.with_convention(*config.convention);

    if (sig.s == 0) out.issues.push_back({DatumIssueKind::NoRealPlace, -1, "field has no real embedding (s = 0)"});
    if (sig.t == 0) out.issues.push_back({DatumIssueKind::NoComplexPlace, -1, "field has no complex embedding (t = 0)"});
    if (static_cast<int>(generators.size()) != sig.s)
        out.issues.push_back({DatumIssueKind::WrongGeneratorCount, -1,
                              "expected s = " + std::to_string(sig.s) + " generators, got " + std::to_string(generators.size())});

    bool generators_ok = true;
    for (std::size_t k = 0; k < generators.size(); ++k) {
        const FieldElement& u = generators[k];
        const int idx = static_cast<int>(k);
        if (!(u.field() == field)) throw FieldMismatch();
        GeneratorReport rep{u, is_unit(u), {}, false, u.minimal_polynomial().degree()};
        if (u.is_one() || (-u).is_one()) {
            out.issues.push_back({DatumIssueKind::Torsion, idx, "generator is a root of unity (+-1)"});
            generators_ok = false;
        } else if (!rep.unit.unit) {
            out.issues.push_back({DatumIssueKind::NotUnit, idx, rep.unit.reason});
            generators_ok = false;
        } else if (!rep.unit.in_order) {
            out.issues.push_back({DatumIssueKind::NotInOrder, idx, "unit does not preserve Z[theta]"});
            generators_ok = false;
        }
        if (rep.unit.unit) {
            for (int i = 0; i < sig.s; ++i) rep.real_signs.push_back(emb.sign_real(u, i));
            rep.totally_positive = sig.s > 0 && std::all_of(rep.real_signs.begin(), rep.real_signs.end(), [](int x) { return x == 1; });
            if (sig.s > 0 && !rep.totally_positive) {
                out.issues.push_back({DatumIssueKind::NotTotallyPositive, idx, "negative at some real embedding"});
                generators_ok = false;
            }
        }
        out.generators.push_back(std::move(rep));
    }

    if (out.issues.empty() && generators_ok) {
        AdmissibilityEvidence ev =
            admissibility_check(emb, generators, {config.precision_bits, config.max_precision_bits, config.tolerance});
        if (ev.status == AdmissibilityStatus::Fail)
            out.issues.push_back({DatumIssueKind::AdmissibilityFailed, -1, ev.detail});
        else if (ev.status == AdmissibilityStatus::Indeterminate)
            out.issues.push_back({DatumIssueKind::AdmissibilityIndeterminate, -1, ev.detail});
        out.admissibility = ev;
    }
    if (out.issues.empty())
        out.datum = OTDatum(emb, std::move(generators), *out.admissibility, out.generators);
    return out;
}

}  // namespace otcert
