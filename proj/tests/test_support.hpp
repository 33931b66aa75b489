#ifndef OTCERT_TEST_SUPPORT_HPP
#define OTCERT_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "otcert/units.hpp"

namespace otcert::testing {

inline NumberField cubic() { return NumberField(RationalPoly{-2, 0, 0, 1}); }
inline NumberField sextic() { return NumberField(RationalPoly{-2, 0, 0, 0, 0, 0, 1}); }
inline NumberField cyclotomic8() { return NumberField(RationalPoly{1, 0, 0, 0, 1}); }
inline NumberField quintic() { return NumberField(RationalPoly{-1, -1, 0, 0, 0, 1}); }

inline FieldElement random_element(const NumberField& k, std::mt19937_64& rng, int bound, bool allow_fractions = true) {
    std::uniform_int_distribution<int> coef(-bound, bound);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<Rational> c;
    for (int i = 0; i < k.degree(); ++i) c.emplace_back(coef(rng), allow_fractions ? den(rng) : 1);
    return k.element(std::move(c));
}

inline FieldElement random_nonzero(const NumberField& k, std::mt19937_64& rng, int bound) {
    for (;;) {
        FieldElement e = random_element(k, rng, bound);
        if (!e.is_zero()) return e;
    }
}

/// Example 3.2 generators: theta^2 - 1 and (theta - 1)^2 in X^6 - 2.
inline std::vector<FieldElement> ot6_units(const NumberField& k) {
    FieldElement t = k.generator();
    return {t * t - k.one(), (t - k.one()) * (t - k.one())};
}

inline PlaceConvention ot6_convention() { return PlaceConvention{{1, 0}, {false, true}}; }

inline OTDatum make_datum(const NumberField& k, std::vector<FieldElement> gens,
                          std::optional<PlaceConvention> conv = std::nullopt) {
    DatumConfig cfg;
    cfg.convention = std::move(conv);
    DatumValidation v = make_ot_datum(k, std::move(gens), cfg);
    if (!v.ok()) throw std::runtime_error("test datum rejected: " + v.issues.at(0).message);
    return *v.datum;
}

inline OTDatum inoue_datum() {
    NumberField k = cubic();
    return make_datum(k, {k.generator() - k.one()});
}

inline OTDatum ot6_datum() {
    NumberField k = sextic();
    return make_datum(k, ot6_units(k), ot6_convention());
}

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace otcert::testing

#endif
