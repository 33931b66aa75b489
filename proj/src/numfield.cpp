#include "otcert/numfield.hpp"

#include <algorithm>

namespace otcert {

NumberField::NumberField(RationalPoly f) {
    if (f.degree() < 2) throw InvalidField("defining polynomial must have degree >= 2");
    if (!f.is_monic() || !f.has_integer_coefficients())
        throw InvalidField("defining polynomial must be monic with integer coefficients: " + f.to_string());
    auto data = std::make_shared<Data>();
    data->irreducibility = irreducibility_status(f);
    if (data->irreducibility.status == Irreducibility::Reducible)
        throw InvalidField("defining polynomial " + f.to_string() + " is reducible (" + data->irreducibility.evidence + ")");
    data->n = f.degree();
    const auto n = static_cast<std::size_t>(data->n);
    // theta^n = -(a_0 + ... + a_{n-1} theta^{n-1}); higher powers by shifting.
    RationalVector cur(n);
    for (std::size_t i = 0; i < n; ++i) cur[i] = -f.coeff(i);
    data->reduction.push_back(cur);
    for (std::size_t k = 1; k + 1 < n; ++k) {
        RationalVector next(n);
        const Rational top = cur[n - 1];
        for (std::size_t i = n - 1; i > 0; --i) next[i] = cur[i - 1];
        for (std::size_t i = 0; i < n; ++i) next[i] += top * data->reduction[0][i];
        data->reduction.push_back(next);
        cur = std::move(next);
    }
    data->f = std::move(f);
    data_ = std::move(data);
}

FieldElement NumberField::element(std::vector<Rational> coords) const { return FieldElement(*this, std::move(coords)); }

FieldElement NumberField::element(std::initializer_list<long> coords) const {
    std::vector<Rational> v;
    for (long c : coords) v.emplace_back(c);
    return element(std::move(v));
}

FieldElement NumberField::from_rational(const Rational& q) const {
    std::vector<Rational> v(static_cast<std::size_t>(degree()));
    v[0] = q;
    return element(std::move(v));
}

FieldElement NumberField::from_polynomial(const RationalPoly& p) const {
    RationalPoly r = p % polynomial();
    std::vector<Rational> v(static_cast<std::size_t>(degree()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = r.coeff(i);
    return element(std::move(v));
}

FieldElement NumberField::zero() const { return from_rational(0); }
FieldElement NumberField::one() const { return from_rational(1); }

FieldElement NumberField::generator() const {
    std::vector<Rational> v(static_cast<std::size_t>(degree()));
    v[1] = 1;
    return element(std::move(v));
}

FieldElement::FieldElement(NumberField field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (coords_.size() != static_cast<std::size_t>(field_.degree()))
        throw std::invalid_argument("element needs exactly " + std::to_string(field_.degree()) + " coordinates, got " +
                                    std::to_string(coords_.size()));
    for (auto& c : coords_) c.canonicalize();
}

void FieldElement::check_same_field(const FieldElement& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch();
}

bool FieldElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_rational() const {
    return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_one() const { return is_rational() && coords_[0] == 1; }

bool FieldElement::has_integer_coords() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    check_same_field(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    check_same_field(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    check_same_field(o);
    const std::size_t n = coords_.size();
    std::vector<Rational> wide(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (coords_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (o.coords_[j] != 0) wide[i + j] += coords_[i] * o.coords_[j];
    }
    const auto& red = field_.data_->reduction;
    for (std::size_t i = 0; i < n; ++i) coords_[i] = wide[i];
    for (std::size_t k = n; k < 2 * n - 1; ++k) {
        if (wide[k] == 0) continue;
        for (std::size_t i = 0; i < n; ++i) coords_[i] += wide[k] * red[k - n][i];
    }
    return *this;
}

FieldElement& FieldElement::operator*=(const Rational& c) {
    for (auto& x : coords_) x *= c;
    return *this;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    ExtendedGcd eg = extended_gcd(as_polynomial(), field_.polynomial());
    if (eg.g.degree() > 0) throw ReducibleField(eg.g);
    return field_.from_polynomial(eg.s);
}

FieldElement FieldElement::pow(long k) const {
    FieldElement base = (k < 0) ? inverse() : *this;
    unsigned long e = (k < 0) ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    FieldElement result = field_.one();
    while (e > 0) {
        if (e & 1UL) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

RationalMatrix FieldElement::multiplication_matrix() const {
    const std::size_t n = coords_.size();
    RationalMatrix m(n, RationalVector(n));
    FieldElement col = *this;
    const FieldElement theta = field_.generator();
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col.coords_[i];
        if (j + 1 < n) col *= theta;
    }
    return m;
}

Rational FieldElement::norm() const { return determinant(multiplication_matrix()); }

Rational FieldElement::trace() const {
    RationalMatrix m = multiplication_matrix();
    Rational t = 0;
    for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

RationalPoly FieldElement::minimal_polynomial() const {
    const std::size_t n = coords_.size();
    EchelonBasis span(n);
    std::vector<RationalVector> powers;
    FieldElement p = field_.one();
    while (true) {
        if (!span.contains(p.coords_)) {
            span.insert(p.coords_);
            powers.push_back(p.coords_);
            p *= *this;
            continue;
        }
        auto c = solve_in_span(powers, p.coords_);
        std::vector<Rational> mp(powers.size() + 1);
        for (std::size_t k = 0; k < powers.size(); ++k) mp[k] = -(*c)[k];
        mp[powers.size()] = 1;
        return RationalPoly(std::move(mp));
    }
}

EchelonBasis subalgebra_basis(const NumberField& field, const std::vector<FieldElement>& elements) {
    const auto n = static_cast<std::size_t>(field.degree());
    EchelonBasis basis(n);
    std::vector<FieldElement> members{field.one()};
    basis.insert(field.one().coords());
    // Close span{1} under multiplication by each generator; new members are
    // products of old members with a generator, so n rounds suffice.
    for (std::size_t idx = 0; idx < members.size() && basis.rank() < n; ++idx) {
        for (const auto& g : elements) {
            FieldElement prod = members[idx] * g;
            if (basis.insert(prod.coords())) members.push_back(std::move(prod));
        }
    }
    return basis;
}

int subalgebra_degree(const std::vector<FieldElement>& elements) {
    if (elements.empty()) throw std::invalid_argument("subalgebra_degree needs at least one element");
    return static_cast<int>(subalgebra_basis(elements.front().field(), elements).rank());
}

}  // namespace otcert
