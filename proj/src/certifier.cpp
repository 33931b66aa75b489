#include "otcert/certifier.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "otcert/lattice.hpp"

namespace otcert {

const char* to_string(CertificateStatus s) {
    switch (s) {
        case CertificateStatus::CertifiedNoSubvarieties: return "CertifiedNoSubvarieties";
        case CertificateStatus::HypothesisRefuted: return "HypothesisRefuted";
        case CertificateStatus::HeuristicallyCertified: return "HeuristicallyCertified";
    }
    return "?";
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<Certificate> prime_degree_shortcut(const OTDatum& datum) {
    const int n = datum.field().degree();
    if (!is_prime(n)) return std::nullopt;
    Certificate c;
    c.status = CertificateStatus::CertifiedNoSubvarieties;
    c.prime_degree_shortcut = true;
    c.evidence = "degree " + std::to_string(n) +
                 " is prime: the only proper subfield is Q, and a torsion-free group of totally positive units "
                 "meets Q only in 1, so every u != 1 is primitive";
    return c;
}

std::vector<PrimitivityReport> generator_primitivity(const OTDatum& datum) {
    std::vector<PrimitivityReport> out;
    int k = 0;
    for (const auto& g : datum.generators()) {
        RationalPoly mp = g.minimal_polynomial();
        const bool primitive = mp.degree() == datum.field().degree();
        out.push_back({k++, g, std::move(mp), primitive});
    }
    return out;
}

std::optional<std::vector<std::vector<int>>> certified_clusters(const std::vector<ComplexInterval>& values,
                                                                int blocks) {
    const std::size_t n = values.size();
    if (blocks <= 0 || n % static_cast<std::size_t>(blocks) != 0) return std::nullopt;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (values[i].overlaps(values[j])) parent[find(i)] = find(j);
    std::map<std::size_t, std::vector<int>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(static_cast<int>(i));
    if (groups.size() != static_cast<std::size_t>(blocks)) return std::nullopt;
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) {
        if (members.size() != n / static_cast<std::size_t>(blocks)) return std::nullopt;
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

constexpr long kMaxSubfieldElements = 250000;

bool try_add_subfield(const NumberField& field, const FieldElement& beta, const std::string& origin,
                      std::vector<SubfieldCandidate>& found) {
    if (beta.is_rational()) return false;
    for (const auto& c : found)
        if (c.contains(beta) && c.degree == beta.minimal_polynomial().degree()) return false;
    RationalPoly mp = beta.minimal_polynomial();
    const int m = mp.degree();
    if (m <= 1 || m >= field.degree()) return false;
    EchelonBasis basis = subalgebra_basis(field, {beta});
    for (const auto& c : found)
        if (c.basis == basis) return false;
    found.push_back({beta, std::move(mp), m, std::move(basis), origin});
    return true;
}

// Next vector in [-h, h]^len in lexicographic order; false after the last.
bool advance(std::vector<long>& v, long h) {
    for (std::size_t i = v.size(); i-- > 0;) {
        if (v[i] < h) {
            ++v[i];
            return true;
        }
        v[i] = -h;
    }
    return false;
}

FieldElement unit_product(const std::vector<FieldElement>& gens, const std::vector<long>& exps) {
    FieldElement x = gens.front().field().one();
    for (std::size_t k = 0; k < gens.size(); ++k)
        if (exps[k] != 0) x *= gens[k].pow(exps[k]);
    return x;
}

std::vector<long> normalized(std::vector<long> a) {
    auto it = std::find_if(a.begin(), a.end(), [](long x) { return x != 0; });
    if (it != a.end() && *it < 0)
        for (auto& x : a) x = -x;
    return a;
}

}  // namespace

std::vector<SubfieldCandidate> subfield_candidates(const NumberField& field, long height_bound,
                                                   const std::vector<FieldElement>& hints) {
    std::vector<SubfieldCandidate> found;
    const int n = field.degree();
    if (is_prime(n)) return found;
    for (const auto& h : hints) try_add_subfield(field, h, "hint", found);
    const FieldElement theta = field.generator();
    FieldElement p = theta;
    for (int k = 2; k < n; ++k) {
        p *= theta;
        try_add_subfield(field, p, "power", found);
    }
    if (height_bound >= 1) {
        // Constant coordinate 0 and first nonzero coordinate positive: the
        // subfield is unchanged by adding rationals or negating.
        std::vector<long> v(static_cast<std::size_t>(n - 1), -height_bound);
        long visited = 0;
        do {
            auto it = std::find_if(v.begin(), v.end(), [](long x) { return x != 0; });
            if (it == v.end() || *it < 0) continue;
            if (++visited > kMaxSubfieldElements) break;
            std::vector<Rational> coords{Rational(0)};
            for (long x : v) coords.emplace_back(x);
            try_add_subfield(field, field.element(std::move(coords)), "height search", found);
        } while (advance(v, height_bound));
    }
    std::stable_sort(found.begin(), found.end(),
                     [](const SubfieldCandidate& a, const SubfieldCandidate& b) { return a.degree < b.degree; });
    return found;
}

IntersectionResult unit_subfield_intersection(const OTDatum& datum, const SubfieldCandidate& subfield,
                                              long exponent_bound, long precision_bits) {
    const int n = datum.field().degree();
    if (subfield.degree >= n) throw std::invalid_argument("unit_subfield_intersection: subfield is not proper");
    const auto& gens = datum.generators();
    const std::size_t s = gens.size();
    IntersectionResult result;
    result.subfield_degree = subfield.degree;
    result.exponent_bound = exponent_bound;

    auto accept = [&](const std::vector<long>& a, const char* source) {
        FieldElement x = unit_product(gens, a);
        if (x.is_one() || !subfield.contains(x)) return false;
        RationalPoly mp = x.minimal_polynomial();
        result.kind = IntersectionResult::Kind::Witness;
        result.witness = Witness{std::move(x), a, std::move(mp), source};
        return true;
    };

    // Layer 1: units of the subfield have equal absolute values at embeddings
    // that agree on the subfield; look for integer relations among the
    // corresponding log differences.
    EmbeddingSet emb = datum.embeddings().precision_bits() == precision_bits
                           ? datum.embeddings()
                           : datum.embeddings().at_precision(precision_bits);
    auto clusters = certified_clusters(emb.eval_all(subfield.generator), subfield.degree);
    if (!clusters) {
        result.warnings.push_back("conjugates of the subfield generator not separated at " +
                                  std::to_string(precision_bits) + " bits; lattice step skipped");
    } else {
        std::vector<std::vector<Interval>> logs;
        for (const auto& g : gens) {
            std::vector<Interval> row;
            for (const auto& z : emb.eval_all(g)) row.push_back(z.norm().log() / Interval::from_int(2, 64));
            logs.push_back(std::move(row));
        }
        std::vector<std::vector<BigFloat>> rows;
        long worst_radius = LONG_MIN / 4;
        for (const auto& block : *clusters) {
            for (std::size_t j = 1; j < block.size(); ++j) {
                std::vector<BigFloat> row;
                for (std::size_t k = 0; k < s; ++k) {
                    Interval d = logs[k][static_cast<std::size_t>(block[0])] - logs[k][static_cast<std::size_t>(block[j])];
                    worst_radius = std::max(worst_radius, d.radius_exponent2());
                    row.push_back(d.mid());
                }
                rows.push_back(std::move(row));
            }
        }
        const long scale = precision_bits / 2;
        if (worst_radius + scale > -8) {
            result.warnings.push_back("log differences too coarse for the lattice step; exhaustive scan only");
        } else {
            auto candidates = integer_relation_candidates(rows, s, scale);
            result.lattice_used = true;
            result.lattice_candidates = static_cast<long>(candidates.size());
            for (const auto& a : candidates)
                if (accept(normalized(a), "lattice")) return result;
        }
    }

    // Layer 2: exhaustive scan by increasing max-norm, one of each +-a.
    for (long r = 1; r <= exponent_bound; ++r) {
        std::vector<long> a(s, -r);
        do {
            long mx = 0;
            for (long x : a) mx = std::max(mx, std::labs(x));
            if (mx != r) continue;
            auto it = std::find_if(a.begin(), a.end(), [](long x) { return x != 0; });
            if (*it < 0) continue;
            ++result.scanned;
            if (accept(a, "exhaustive scan")) return result;
        } while (advance(a, r));
    }
    return result;
}

Certificate certify(const OTDatum& datum, const CertifierConfig& config) {
    const int n = datum.field().degree();
    Certificate c;
    if (auto shortcut = prime_degree_shortcut(datum)) c = std::move(*shortcut);
    c.exponent_bound = config.exponent_bound;
    c.height_bound = config.height_bound;
    c.precision_bits = config.precision_bits;
    c.primitivity = generator_primitivity(datum);
    c.generated_subfield_degree = subalgebra_degree(datum.generators());
    c.simple_type = c.generated_subfield_degree == n ? SimpleType::Simple : SimpleType::NotSimple;
    if (c.prime_degree_shortcut) return c;

    auto refute = [&](Witness w) {
        c.status = CertificateStatus::HypothesisRefuted;
        c.evidence = "u = " + w.unit.to_string() + " lies in U \\ {1} and has minimal polynomial of degree " +
                     std::to_string(w.minimal_polynomial.degree()) + " < " + std::to_string(n);
        c.witness = std::move(w);
        if (datum.signature().t == 1)
            c.notes.push_back(
                "single complex place: the hypothesis fails, but such manifolds are known to have no proper "
                "subvarieties, so this refutation does not produce one");
    };

    for (const auto& p : c.primitivity) {
        if (p.primitive) continue;
        std::vector<long> exps(datum.generators().size(), 0);
        exps[static_cast<std::size_t>(p.generator)] = 1;
        refute(Witness{p.element, exps, p.minimal_polynomial, "generator"});
        return c;
    }

    c.subfields = subfield_candidates(datum.field(), config.height_bound, config.subfield_hints);
    for (const auto& sf : c.subfields) {
        IntersectionResult r = unit_subfield_intersection(datum, sf, config.exponent_bound, config.precision_bits);
        std::optional<Witness> w = r.witness;
        c.intersections.push_back(std::move(r));
        if (w) {
            refute(std::move(*w));
            return c;
        }
    }
    c.status = CertificateStatus::HeuristicallyCertified;
    c.evidence = "all generators primitive; no element of U \\ {1} found in " + std::to_string(c.subfields.size()) +
                 " candidate subfield(s) with exponents up to " + std::to_string(config.exponent_bound);
    c.notes.push_back("subfield list comes from a bounded search (height " + std::to_string(config.height_bound) +
                      ") and may be incomplete");
    return c;
}

CandidateSubvariety flat_subspace_witness(const OTDatum& datum, const FieldElement& u, const FieldElement& a) {
    if (!(u.field() == datum.field()) || !(a.field() == datum.field())) throw FieldMismatch();
    if (u.is_one()) throw NoFixedPoint("u = 1 fixes every point; no fixed point P0 is defined");
    const int n = datum.field().degree();
    const int m = u.minimal_polynomial().degree();
    if (m == n) throw std::invalid_argument("u is primitive: all embeddings are distinct, no coincidence");

    EmbeddingSet emb = datum.embeddings();
    std::optional<std::vector<std::vector<int>>> clusters;
    for (int attempt = 0; attempt < 4; ++attempt) {
        clusters = certified_clusters(emb.eval_all(u), m);
        if (clusters) break;
        emb = emb.at_precision(emb.precision_bits() * 2);
    }
    if (!clusters) throw std::runtime_error("could not separate the conjugates of u");

    const Signature sig = datum.signature();
    const int coords = sig.s + sig.t;
    std::vector<int> label(static_cast<std::size_t>(n));
    for (std::size_t b = 0; b < clusters->size(); ++b)
        for (int i : (*clusters)[b]) label[static_cast<std::size_t>(i)] = static_cast<int>(b);

    CandidateSubvariety out{u, a, {}, {}, {}, {}, {}, false};
    std::map<int, std::size_t> block_of_label;
    for (int j = 0; j < coords; ++j) {
        const int l = label[static_cast<std::size_t>(j)];
        auto [it, inserted] = block_of_label.try_emplace(l, out.coincidence_partition.size());
        if (inserted) out.coincidence_partition.emplace_back();
        out.coincidence_partition[it->second].push_back(j);
    }
    for (const auto& block : out.coincidence_partition) {
        out.free_coordinates.push_back(block.front());
        out.directions.push_back(block);
        for (std::size_t k = 1; k < block.size(); ++k) out.fixed_coordinates.push_back(block[k]);
    }
    std::sort(out.fixed_coordinates.begin(), out.fixed_coordinates.end());

    for (int attempt = 0; attempt < 4; ++attempt) {
        auto vu = emb.coordinates(u);
        auto va = emb.coordinates(a);
        const ComplexInterval one = ComplexInterval::real(Interval::from_int(1, emb.precision_bits()));
        out.fixed_point.clear();
        bool ok = true;
        for (int j = 0; j < coords && ok; ++j) {
            const ComplexInterval denom = one - vu[static_cast<std::size_t>(j)];
            if (denom.contains_zero()) {
                ok = false;
                break;
            }
            out.fixed_point.push_back(va[static_cast<std::size_t>(j)] / denom);
        }
        if (ok) {
            out.identity_verified = true;
            for (int j = 0; j < coords; ++j) {
                const auto& cj = out.fixed_point[static_cast<std::size_t>(j)];
                ComplexInterval image = vu[static_cast<std::size_t>(j)] * cj + va[static_cast<std::size_t>(j)];
                out.identity_verified = out.identity_verified && image.overlaps(cj);
            }
            return out;
        }
        emb = emb.at_precision(emb.precision_bits() * 2);
    }
    throw std::runtime_error("1 - sigma_j(u) not separated from zero");
}

}  // namespace otcert
