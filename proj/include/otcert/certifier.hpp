#ifndef OTCERT_CERTIFIER_HPP
#define OTCERT_CERTIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "otcert/units.hpp"

namespace otcert {

enum class CertificateStatus { CertifiedNoSubvarieties, HypothesisRefuted, HeuristicallyCertified };
const char* to_string(CertificateStatus s);

struct CertifierConfig {
    long exponent_bound = 10;
    long height_bound = 3;
    long precision_bits = kDefaultPrecisionBits;
    /// Extra subfield generators supplied by the user.
    std::vector<FieldElement> subfield_hints;
};

/// A proper subfield Q(beta) of K found by enumeration or supplied as a hint.
struct SubfieldCandidate {
    FieldElement generator;
    RationalPoly minimal_polynomial;
    int degree = 0;
    /// Canonical Q-basis of the subfield inside K.
    EchelonBasis basis;
    std::string origin;

    bool contains(const FieldElement& x) const { return basis.contains(x.coords()); }
};

struct PrimitivityReport {
    int generator = 0;
    FieldElement element;
    RationalPoly minimal_polynomial;
    bool primitive = false;
};

/// An exactly verified element of U \ {1} that is not primitive.
struct Witness {
    FieldElement unit;
    /// unit = prod u_k^exponents[k].
    std::vector<long> exponents;
    RationalPoly minimal_polynomial;
    std::string source;
};

struct IntersectionResult {
    enum class Kind { TrivialUpToBound, Witness };
    Kind kind = Kind::TrivialUpToBound;
    int subfield_degree = 0;
    long exponent_bound = 0;
    std::optional<Witness> witness;
    bool lattice_used = false;
    long lattice_candidates = 0;
    long scanned = 0;
    std::vector<std::string> warnings;
};

enum class SimpleType { Simple, NotSimple };

struct Certificate {
    CertificateStatus status = CertificateStatus::HeuristicallyCertified;
    std::string evidence;
    bool prime_degree_shortcut = false;
    std::optional<Witness> witness;
    std::vector<PrimitivityReport> primitivity;
    std::vector<SubfieldCandidate> subfields;
    std::vector<IntersectionResult> intersections;
    /// Exact: simple iff the generators generate K.
    SimpleType simple_type = SimpleType::Simple;
    int generated_subfield_degree = 0;
    long exponent_bound = 0;
    long height_bound = 0;
    long precision_bits = 0;
    std::vector<std::string> notes;
};

bool is_prime(long n);

std::optional<Certificate> prime_degree_shortcut(const OTDatum& datum);

std::vector<PrimitivityReport> generator_primitivity(const OTDatum& datum);

/// Proper subfields Q(beta), 1 < [Q(beta):Q] < n, found among elements of
/// Z[theta] with coordinates in [-height_bound, height_bound], the powers of
/// theta, and the hints. Possibly incomplete.
std::vector<SubfieldCandidate> subfield_candidates(const NumberField& field, long height_bound,
                                                   const std::vector<FieldElement>& hints = {});

/// Searches for a nonzero exponent vector with prod u_k^a_k inside `subfield`.
IntersectionResult unit_subfield_intersection(const OTDatum& datum, const SubfieldCandidate& subfield,
                                              long exponent_bound, long precision_bits = kDefaultPrecisionBits);

Certificate certify(const OTDatum& datum, const CertifierConfig& config = {});

struct NoFixedPoint : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Affine subspace P0 + span(block directions) of H^s x C^t invariant under (u, a).
struct CandidateSubvariety {
    FieldElement unit;
    FieldElement translation;
    /// Blocks of coordinate indices (0..s+t-1) on which u takes equal values.
    std::vector<std::vector<int>> coincidence_partition;
    /// One representative per block; these coordinates stay free.
    std::vector<int> free_coordinates;
    /// P0: c_j = sigma_j(a) / (1 - sigma_j(u)) for every coordinate.
    std::vector<ComplexInterval> fixed_point;
    /// Coordinates outside the free set: z_j - c_j = z_rep - c_rep.
    std::vector<int> fixed_coordinates;
    /// One direction per block: the sum of its unit vectors.
    std::vector<std::vector<int>> directions;
    /// c_j == sigma_j(u) c_j + sigma_j(a) holds within the enclosures.
    bool identity_verified = false;
};

/// Throws std::invalid_argument when u is primitive and NoFixedPoint when u = 1.
CandidateSubvariety flat_subspace_witness(const OTDatum& datum, const FieldElement& u, const FieldElement& a);

/// Partition of indices 0..values.size()-1 by overlapping enclosures,
/// accepted only when it has `blocks` blocks of equal size.
std::optional<std::vector<std::vector<int>>> certified_clusters(const std::vector<ComplexInterval>& values,
                                                                int blocks);

}  // namespace otcert

#endif
