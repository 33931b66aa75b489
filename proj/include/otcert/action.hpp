#ifndef OTCERT_ACTION_HPP
#define OTCERT_ACTION_HPP

// The group U x| H acting on H^s x C^t by affine maps.
//
// Coordinates: (y_1, ..., y_s) on the upper half-planes first, then
// (x_1, ..., x_t). (u, a) acts by z_j -> sigma_j(u) z_j + sigma_j(a), and the
// group law is (u, a)(u', a') = (u u', a + u a').

#include <cstdint>
#include <optional>
#include <vector>

#include "otcert/units.hpp"

namespace otcert {

struct GroupElement {
    FieldElement u;
    FieldElement a;

    static GroupElement identity(const NumberField& k) { return {k.one(), k.zero()}; }
    static GroupElement translation(const FieldElement& a) { return {a.field().one(), a}; }
    static GroupElement scaling(const FieldElement& u) { return {u, u.field().zero()}; }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement compose(const GroupElement& g, const GroupElement& h);
GroupElement invert(const GroupElement& g);

using Point = std::vector<ComplexInterval>;

struct AffineMap {
    std::vector<ComplexInterval> diagonal;
    std::vector<ComplexInterval> translation;
    GroupElement element;
    int s = 0;
};

/// Any element of U x| H as a map; no validation.
AffineMap affine_map(const EmbeddingSet& embeddings, const GroupElement& g);
/// Translation by zeta; throws std::invalid_argument unless zeta is in Z[theta].
AffineMap translation_map(const EmbeddingSet& embeddings, const FieldElement& zeta);
/// Scaling by xi; throws std::invalid_argument unless xi is a totally positive unit of Z[theta].
AffineMap unit_map(const EmbeddingSet& embeddings, const FieldElement& xi);

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Image of p; throws DomainError unless Im p_k > 0 for k < s (and checks the same for the image).
Point apply_map(const AffineMap& map, const Point& p);

/// Componentwise overlap after widening every enclosure by 2^-bits.
bool points_close(const Point& p, const Point& q, long bits);

struct OrbitSample {
    std::vector<Point> points;
    std::vector<GroupElement> elements;
    /// Words that produced an element already seen.
    long duplicate_words = 0;
    /// Minimum Euclidean distance between distinct points; unset below two points.
    std::optional<double> min_distance;
};

struct OrbitConfig {
    int max_word_length = 2;
    /// Refuse when the number of reduced words would exceed this.
    long max_words = 20000;
};

/// Images of p under all reduced words of length <= max_word_length over the
/// unit generators, the translations by 1, theta, ..., theta^(n-1), and inverses.
OrbitSample orbit_sample(const OTDatum& datum, const Point& p, const OrbitConfig& config = {});

/// Generators (with inverses interleaved: g0, g0^-1, g1, g1^-1, ...) used by orbit_sample.
std::vector<GroupElement> word_generators(const OTDatum& datum);
/// Distinct elements given by reduced words of length <= length.
std::vector<GroupElement> group_ball(const OTDatum& datum, int length, long max_words = 200000,
                                     long* duplicate_words = nullptr);

struct InjectivityReport {
    long samples = 0;
    int word_bound = 0;
    std::uint64_t seed = 0;
    /// Random pairs that some small word of the smaller group identifies (skipped).
    long equivalent_random_pairs = 0;
    long false_identifications = 0;
    long constructed_pairs = 0;
    long constructed_identified = 0;
    /// Every identifying element of the larger group met sigma_1(u) = sigma_2(u) and sigma_1(a) = sigma_2(a).
    bool mechanism_holds = true;
    bool identity_pair_identified = false;
    long words_small = 0;
    long words_large = 0;

    bool passed() const {
        return false_identifications == 0 && constructed_identified == constructed_pairs && mechanism_holds &&
               identity_pair_identified;
    }
};

/// The Inoue datum (X^3 - 2, theta - 1) and its image inside the degree-6
/// datum via theta -> theta^2, checked on random point pairs (w, z) mapped
/// to (w, w, z, z).
InjectivityReport example32_injectivity(const OTDatum& small, const OTDatum& large, long samples, int word_bound,
                                        std::uint64_t seed);

}  // namespace otcert

#endif
