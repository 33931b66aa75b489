#include "otcert/action.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <random>

namespace otcert {

GroupElement compose(const GroupElement& g, const GroupElement& h) { return {g.u * h.u, g.a + g.u * h.a}; }

GroupElement invert(const GroupElement& g) {
    FieldElement v = g.u.inverse();
    return {v, -(v * g.a)};
}

AffineMap affine_map(const EmbeddingSet& embeddings, const GroupElement& g) {
    return {embeddings.coordinates(g.u), embeddings.coordinates(g.a), g, embeddings.signature().s};
}

AffineMap translation_map(const EmbeddingSet& embeddings, const FieldElement& zeta) {
    if (!zeta.has_integer_coords()) throw std::invalid_argument("translation " + zeta.to_string() + " is not in Z[theta]");
    return affine_map(embeddings, GroupElement::translation(zeta));
}

AffineMap unit_map(const EmbeddingSet& embeddings, const FieldElement& xi) {
    UnitEvidence ev = is_unit(xi);
    if (!ev.in_order) throw std::invalid_argument(xi.to_string() + " is not a unit of Z[theta]");
    if (!is_totally_positive(embeddings, xi)) throw std::invalid_argument(xi.to_string() + " is not totally positive");
    return affine_map(embeddings, GroupElement::scaling(xi));
}

namespace {

void check_domain(const Point& p, int s, const char* what) {
    for (int k = 0; k < s; ++k)
        if (!p[static_cast<std::size_t>(k)].im.certainly_positive())
            throw DomainError(std::string(what) + ": coordinate " + std::to_string(k) +
                              " is not certainly in the upper half-plane");
}

std::vector<Rational> key_of(const GroupElement& g) {
    std::vector<Rational> key = g.u.coords();
    key.insert(key.end(), g.a.coords().begin(), g.a.coords().end());
    return key;
}

using DoublePoint = std::vector<std::complex<double>>;

struct DoubleMap {
    std::vector<std::complex<double>> diagonal, translation;
};

DoubleMap approximate(const AffineMap& m) {
    DoubleMap d;
    for (std::size_t j = 0; j < m.diagonal.size(); ++j) {
        d.diagonal.emplace_back(m.diagonal[j].re.mid_double(), m.diagonal[j].im.mid_double());
        d.translation.emplace_back(m.translation[j].re.mid_double(), m.translation[j].im.mid_double());
    }
    return d;
}

DoublePoint apply_double(const DoubleMap& m, const DoublePoint& p) {
    DoublePoint out(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) out[j] = m.diagonal[j] * p[j] + m.translation[j];
    return out;
}

double euclidean(const DoublePoint& p, const DoublePoint& q) {
    double s = 0;
    for (std::size_t j = 0; j < p.size(); ++j) s += std::norm(p[j] - q[j]);
    return std::sqrt(s);
}

DoublePoint approximate(const Point& p) {
    DoublePoint out;
    for (const auto& z : p) out.emplace_back(z.re.mid_double(), z.im.mid_double());
    return out;
}

ComplexInterval exact_complex(std::complex<double> z, long prec) {
    BigFloat re(prec, z.real()), im(prec, z.imag());
    return {Interval::point(re), Interval::point(im)};
}

// Uniform double in [lo, hi) from 53 random bits; independent of the library's distributions.
double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Point apply_map(const AffineMap& map, const Point& p) {
    if (p.size() != map.diagonal.size()) throw std::invalid_argument("point has the wrong number of coordinates");
    check_domain(p, map.s, "apply");
    Point out;
    out.reserve(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) out.push_back(map.diagonal[j] * p[j] + map.translation[j]);
    check_domain(out, map.s, "apply (image)");
    return out;
}

bool points_close(const Point& p, const Point& q, long bits) {
    if (p.size() != q.size()) return false;
    const BigFloat eps = pow2(-bits, 64);
    const BigFloat zero(64);
    for (std::size_t j = 0; j < p.size(); ++j) {
        ComplexInterval widened = p[j] + ComplexInterval::ball(zero, zero, eps);
        if (!widened.overlaps(q[j])) return false;
    }
    return true;
}

std::vector<GroupElement> word_generators(const OTDatum& datum) {
    std::vector<GroupElement> gens;
    for (const auto& u : datum.generators()) {
        gens.push_back(GroupElement::scaling(u));
        gens.push_back(invert(gens.back()));
    }
    FieldElement power = datum.field().one();
    for (int i = 0; i < datum.field().degree(); ++i) {
        gens.push_back(GroupElement::translation(power));
        gens.push_back(invert(gens.back()));
        power *= datum.field().generator();
    }
    return gens;
}

std::vector<GroupElement> group_ball(const OTDatum& datum, int length, long max_words, long* duplicate_words) {
    const auto gens = word_generators(datum);
    const long g = static_cast<long>(gens.size());
    // 1 + g + g(g-1) + ... reduced words.
    long total = 1, layer = g;
    for (int k = 1; k <= length; ++k) {
        total += layer;
        if (total > max_words) throw std::length_error("word enumeration exceeds " + std::to_string(max_words) + " words");
        layer *= g - 1;
    }
    std::map<std::vector<Rational>, std::size_t> seen;
    std::vector<GroupElement> out{GroupElement::identity(datum.field())};
    seen.emplace(key_of(out[0]), 0);
    long duplicates = 0;
    struct Word {
        GroupElement element;
        std::size_t last;
    };
    std::vector<Word> frontier;
    for (std::size_t i = 0; i < gens.size(); ++i) frontier.push_back({gens[i], i});
    for (int k = 1; k <= length; ++k) {
        std::vector<Word> next;
        for (auto& w : frontier) {
            if (seen.emplace(key_of(w.element), out.size()).second)
                out.push_back(w.element);
            else
                ++duplicates;
            if (k == length) continue;
            for (std::size_t i = 0; i < gens.size(); ++i)
                if (i != (w.last ^ 1U)) next.push_back({compose(w.element, gens[i]), i});
        }
        frontier = std::move(next);
    }
    if (duplicate_words) *duplicate_words = duplicates;
    return out;
}

OrbitSample orbit_sample(const OTDatum& datum, const Point& p, const OrbitConfig& config) {
    if (config.max_word_length < 0) throw std::invalid_argument("negative word length");
    OrbitSample out;
    out.elements = group_ball(datum, config.max_word_length, config.max_words, &out.duplicate_words);
    std::vector<DoublePoint> approx;
    for (const auto& g : out.elements) {
        out.points.push_back(apply_map(affine_map(datum.embeddings(), g), p));
        approx.push_back(approximate(out.points.back()));
    }
    for (std::size_t i = 0; i < approx.size(); ++i)
        for (std::size_t j = i + 1; j < approx.size(); ++j) {
            const double d = euclidean(approx[i], approx[j]);
            if (!out.min_distance || d < *out.min_distance) out.min_distance = d;
        }
    return out;
}

InjectivityReport example32_injectivity(const OTDatum& small, const OTDatum& large, long samples, int word_bound,
                                        std::uint64_t seed) {
    const NumberField& kl = small.field();
    const NumberField& kk = large.field();
    if (small.signature() != Signature{1, 1} || large.signature() != Signature{2, 2} || 2 * kl.degree() != kk.degree())
        throw std::invalid_argument("example32_injectivity expects the cubic Inoue datum and the sextic datum");
    const FieldElement image_of_theta = kk.generator() * kk.generator();
    if (!(image_of_theta.minimal_polynomial() == kl.polynomial()))
        throw std::invalid_argument("theta -> theta^2 does not embed the small field into the large one");

    auto embed = [&](const FieldElement& x) {
        FieldElement out = kk.zero(), power = kk.one();
        for (const auto& c : x.coords()) {
            out += power * c;
            power *= image_of_theta;
        }
        return out;
    };
    auto embed_element = [&](const GroupElement& g) { return GroupElement{embed(g.u), embed(g.a)}; };
    EchelonBasis image_basis = subalgebra_basis(kk, {image_of_theta});

    const long prec = large.embeddings().precision_bits();
    const long match_bits = prec / 2;
    InjectivityReport rep;
    rep.samples = samples;
    rep.word_bound = word_bound;
    rep.seed = seed;

    const auto ball_small = group_ball(small, word_bound);
    const auto ball_large = group_ball(large, word_bound);
    rep.words_small = static_cast<long>(ball_small.size());
    rep.words_large = static_cast<long>(ball_large.size());
    std::vector<AffineMap> maps_small, maps_large;
    std::vector<DoubleMap> fast_small, fast_large;
    for (const auto& g : ball_small) {
        maps_small.push_back(affine_map(small.embeddings(), g));
        fast_small.push_back(approximate(maps_small.back()));
    }
    for (const auto& g : ball_large) {
        maps_large.push_back(affine_map(large.embeddings(), g));
        fast_large.push_back(approximate(maps_large.back()));
    }

    auto include = [](const Point& p) { return Point{p[0], p[0], p[1], p[1]}; };
    // Indices of maps sending p to q: a double pre-filter, then enclosures.
    auto identifying = [&](const std::vector<AffineMap>& maps, const std::vector<DoubleMap>& fast, const Point& p,
                           const Point& q) {
        std::vector<std::size_t> hits;
        const DoublePoint pd = approximate(p), qd = approximate(q);
        for (std::size_t i = 0; i < maps.size(); ++i) {
            if (euclidean(apply_double(fast[i], pd), qd) > 1e-6 * (1 + euclidean(qd, DoublePoint(qd.size())))) continue;
            if (points_close(apply_map(maps[i], p), q, match_bits)) hits.push_back(i);
        }
        return hits;
    };
    // sigma_1(x) = sigma_2(x) numerically and x in the image of the small field.
    auto agrees_on_real_places = [&](const FieldElement& x) {
        const auto& e = large.embeddings();
        return e.eval_real(x, 0).overlaps(e.eval_real(x, 1)) && image_basis.contains(x.coords());
    };
    auto check_mechanism = [&](std::size_t i) {
        const GroupElement& g = ball_large[i];
        if (!agrees_on_real_places(g.u) || !agrees_on_real_places(g.a)) rep.mechanism_holds = false;
    };

    std::mt19937_64 rng(seed);
    auto random_point = [&]() {
        std::complex<double> w(uniform(rng, -2, 2), uniform(rng, 0.25, 2));
        std::complex<double> z(uniform(rng, -2, 2), uniform(rng, -2, 2));
        return Point{exact_complex(w, prec), exact_complex(z, prec)};
    };

    for (long k = 0; k < samples; ++k) {
        // Random pair.
        Point p = random_point(), q = random_point();
        if (!identifying(maps_small, fast_small, p, q).empty()) {
            ++rep.equivalent_random_pairs;
        } else {
            auto hits = identifying(maps_large, fast_large, include(p), include(q));
            rep.false_identifications += static_cast<long>(hits.size());
        }
        // Constructed equivalent pair q = gamma(p) with gamma from the small group.
        const std::size_t pick = 1 + static_cast<std::size_t>(rng() % (ball_small.size() - 1));
        Point r = apply_map(maps_small[pick], p);
        ++rep.constructed_pairs;
        AffineMap lifted = affine_map(large.embeddings(), embed_element(ball_small[pick]));
        const bool direct = points_close(apply_map(lifted, include(p)), include(r), match_bits);
        auto hits = identifying(maps_large, fast_large, include(p), include(r));
        if (direct && !hits.empty()) ++rep.constructed_identified;
        if (!agrees_on_real_places(lifted.element.u) || !agrees_on_real_places(lifted.element.a))
            rep.mechanism_holds = false;
        for (std::size_t i : hits) check_mechanism(i);
    }

    Point p = random_point();
    auto self = identifying(maps_large, fast_large, include(p), include(p));
    rep.identity_pair_identified = std::find(self.begin(), self.end(), std::size_t{0}) != self.end();
    for (std::size_t i : self) check_mechanism(i);
    return rep;
}

}  // namespace otcert
